#include "sino/freqlists.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sino/error.hpp"

namespace sino {

namespace {

bool ranks_before(const FrequencyEntry& a, const FrequencyEntry& b) {
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  return a.codepoint < b.codepoint;
}

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

FrequencyList::FrequencyList(std::vector<FrequencyEntry> entries, std::uint64_t source_size)
    : entries_(std::move(entries)), source_size_(source_size) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (!(e.frequency > 0.0) || !std::isfinite(e.frequency)) {
      throw InputError("frequency list: nonpositive frequency for " + format_codepoint(e.codepoint));
    }
    if (i > 0 && entries_[i - 1].frequency < e.frequency) {
      throw InputError("frequency list: entries not sorted by nonincreasing frequency at position " +
                       std::to_string(i));
    }
    if (!index_.emplace(e.codepoint, i).second) {
      throw InputError("frequency list: duplicate codepoint " + format_codepoint(e.codepoint));
    }
  }
}

double FrequencyList::frequency(Codepoint cp) const {
  auto it = index_.find(cp);
  return it == index_.end() ? 0.0 : entries_[it->second].frequency;
}

std::size_t FrequencyList::rank_of(Codepoint cp) const {
  auto it = index_.find(cp);
  if (it == index_.end()) throw NotFoundError("codepoint " + format_codepoint(cp) + " not in frequency list");
  return it->second;
}

std::set<Codepoint> FrequencyList::char_set() const { return head_char_set(entries_.size()); }

std::set<Codepoint> FrequencyList::head_char_set(std::size_t n) const {
  std::set<Codepoint> out;
  const std::size_t limit = std::min(n, entries_.size());
  for (std::size_t i = 0; i < limit; ++i) out.insert(entries_[i].codepoint);
  return out;
}

FrequencyList from_counts(const std::map<Codepoint, std::uint64_t>& counts) {
  if (counts.empty()) throw InputError("from_counts: empty count table");
  std::uint64_t total = 0;
  for (const auto& [cp, count] : counts) {
    if (count == 0) throw InputError("from_counts: zero count for " + format_codepoint(cp));
    total += count;
  }
  std::vector<std::pair<Codepoint, std::uint64_t>> sorted(counts.begin(), counts.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<FrequencyEntry> entries;
  entries.reserve(sorted.size());
  for (const auto& [cp, count] : sorted) {
    entries.push_back({cp, static_cast<double>(count) / static_cast<double>(total)});
  }
  return FrequencyList(std::move(entries), total);
}

std::set<Codepoint> comchar(const FrequencyList& a, const FrequencyList& b, std::size_t n) {
  if (n == 0) throw InputError("comchar: N must be at least 1");
  std::set<Codepoint> out;
  for (Codepoint cp : a.head_char_set(n)) {
    if (b.contains(cp)) out.insert(cp);
  }
  for (Codepoint cp : b.head_char_set(n)) {
    if (a.contains(cp)) out.insert(cp);
  }
  return out;
}

double comcov(const FrequencyList& a, const FrequencyList& b, std::size_t n) {
  return static_cast<double>(comchar(a, b, n).size()) / static_cast<double>(n);
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InputError("spearman: length mismatch");
  const std::size_t n = x.size();
  if (n < 2) return 0.0;
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double mean = (static_cast<double>(n) + 1.0) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = rx[i] - mean;
    const double dy = ry[i] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

ListDistance list_distance(const FrequencyList& a, const FrequencyList& b, std::size_t n,
                           const DistanceOptions& options) {
  if (n == 0) throw InputError("distance_dN: N must be at least 1");
  const auto common = comchar(a, b, n);
  ListDistance result;
  result.common = common.size();
  result.comcov = static_cast<double>(common.size()) / static_cast<double>(n);
  if (common.empty()) {
    result.distance = 1.0;
    return result;
  }
  if (common.size() == 1) {
    result.rho = options.singleton_rho;
  } else {
    // Ranks are taken by frequency inside each list so ties share a rank.
    std::vector<double> fa, fb;
    fa.reserve(common.size());
    fb.reserve(common.size());
    for (Codepoint cp : common) {
      fa.push_back(-a.frequency(cp));
      fb.push_back(-b.frequency(cp));
    }
    result.rho = spearman(fa, fb);
  }
  result.distance = 1.0 - result.comcov * (result.rho + 1.0) / 2.0;
  result.out_of_unit_range = result.distance < 0.0 || result.distance > 1.0;
  return result;
}

double distance_dN(const FrequencyList& a, const FrequencyList& b, std::size_t n, const DistanceOptions& options) {
  return list_distance(a, b, n, options).distance;
}

DistanceMatrix distance_matrix(std::span<const NamedFrequencyList> lists, std::size_t n,
                               const DistanceOptions& options) {
  if (lists.size() < 2) throw InputError("distance_matrix: at least two lists required");
  DistanceMatrix m(lists.size(), std::vector<double>(lists.size(), 0.0));
  for (std::size_t i = 0; i < lists.size(); ++i) {
    for (std::size_t j = i + 1; j < lists.size(); ++j) {
      const double d = distance_dN(lists[i].list, lists[j].list, n, options);
      m[i][j] = d;
      m[j][i] = d;
    }
  }
  return m;
}

FrequencyList aggregate_ufl(std::span<const NamedFrequencyList> lists, const UflOptions& options) {
  if (lists.empty()) throw InputError("aggregate_ufl: no frequency lists");
  std::set<Codepoint> all;
  std::uint64_t source_size = 0;
  for (const auto& named : lists) {
    for (const auto& e : named.list.entries()) all.insert(e.codepoint);
    source_size += named.list.source_size();
  }
  const double universe = static_cast<double>(all.size());
  std::map<Codepoint, double> freq;
  for (const auto& named : lists) {
    const double weight = static_cast<double>(named.list.size()) / universe;
    for (const auto& e : named.list.entries()) freq[e.codepoint] += e.frequency * weight;
  }
  double total = 0.0;
  for (const auto& [cp, f] : freq) total += f;
  std::vector<FrequencyEntry> entries;
  entries.reserve(freq.size());
  for (const auto& [cp, f] : freq) {
    entries.push_back({cp, options.renormalize && total > 0.0 ? f / total : f});
  }
  std::stable_sort(entries.begin(), entries.end(), ranks_before);
  return FrequencyList(std::move(entries), source_size);
}

double weighted_coverage(const FrequencyList& list, const std::set<Codepoint>& charset) {
  if (list.empty()) throw InputError("weighted_coverage: empty frequency list");
  double covered = 0.0, total = 0.0;
  for (const auto& e : list.entries()) {
    total += e.frequency;
    if (charset.contains(e.codepoint)) covered += e.frequency;
  }
  return covered / total;
}

}  // namespace sino
