#include "sino/charstore.hpp"

#include <algorithm>
#include <numeric>

#include "sino/error.hpp"

namespace sino {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const std::size_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

void validate_reading(const Reading& reading) {
  const std::size_t n = reading.syllables.size();
  if (n == 0) throw InputError("reading has no syllables");
  if (reading.language == Language::mandarin && n != 1) {
    throw InputError("Mandarin reading must have exactly one syllable, got " + std::to_string(n));
  }
  if (reading.language == Language::japanese_kun && n > kMaxKunSyllables) {
    throw InputError("Kun reading has " + std::to_string(n) + " syllables (max 12)");
  }
}

Sinograph& CharStore::add(Codepoint cp) {
  auto [it, inserted] = chars_.try_emplace(cp);
  if (inserted) it->second.codepoint = cp;
  return it->second;
}

void CharStore::add_reading(Codepoint cp, Reading reading) {
  validate_reading(reading);
  auto& readings = add(cp).readings;
  if (std::find(readings.begin(), readings.end(), reading) == readings.end()) readings.push_back(std::move(reading));
}

void CharStore::set_radical(Codepoint cp, int radical) {
  if (radical < 1 || radical > 214) {
    throw InputError("radical index out of range 1..214 for " + format_codepoint(cp));
  }
  add(cp).kangxi_radical = radical;
}

void CharStore::set_stroke_count(Codepoint cp, std::size_t count) { add(cp).stroke_count = count; }

const Sinograph& CharStore::at(Codepoint cp) const {
  auto it = chars_.find(cp);
  if (it == chars_.end()) throw NotFoundError("unknown codepoint " + format_codepoint(cp));
  return it->second;
}

std::vector<const Reading*> CharStore::readings(Codepoint cp, Language lang) const {
  std::vector<const Reading*> out;
  auto it = chars_.find(cp);
  if (it == chars_.end()) return out;
  for (const auto& r : it->second.readings) {
    if (r.language == lang) out.push_back(&r);
  }
  return out;
}

bool CharStore::has_reading(Codepoint cp, Language lang) const { return !readings(cp, lang).empty(); }

std::optional<int> CharStore::radical(Codepoint cp) const {
  auto it = chars_.find(cp);
  if (it == chars_.end()) return std::nullopt;
  return it->second.kangxi_radical;
}

std::set<Codepoint> CharStore::codepoints() const {
  std::set<Codepoint> out;
  for (const auto& [cp, _] : chars_) out.insert(cp);
  return out;
}

AllographPartition::AllographPartition(std::vector<AllographClass> classes) : classes_(std::move(classes)) {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    const auto& c = classes_[i];
    if (c.id != i) throw InputError("allograph class id " + std::to_string(c.id) + " at position " + std::to_string(i));
    if (c.members.empty()) throw InputError("allograph class " + std::to_string(c.id) + " is empty");
    for (Codepoint cp : c.members) {
      if (!index_.emplace(cp, c.id).second) {
        throw InputError("codepoint " + format_codepoint(cp) + " belongs to more than one class");
      }
    }
  }
}

ClassId AllographPartition::class_of(Codepoint cp) const {
  auto it = index_.find(cp);
  if (it == index_.end()) throw NotFoundError("codepoint " + format_codepoint(cp) + " has no allographic class");
  return it->second;
}

const AllographClass& AllographPartition::get(ClassId id) const {
  if (id >= classes_.size()) throw NotFoundError("unknown class id " + std::to_string(id));
  return classes_[id];
}

AllographPartition build_allograph_classes(std::span<const VariantPair> variant_pairs,
                                           const std::set<Codepoint>& chars, const FrequencyList* frequencies) {
  std::vector<Codepoint> ordered(chars.begin(), chars.end());
  std::unordered_map<Codepoint, std::size_t> slot;
  slot.reserve(ordered.size());
  for (std::size_t i = 0; i < ordered.size(); ++i) slot.emplace(ordered[i], i);

  DisjointSets sets(ordered.size());
  for (const auto& [a, b] : variant_pairs) {
    auto ia = slot.find(a);
    auto ib = slot.find(b);
    if (ia == slot.end() || ib == slot.end()) {
      throw InputError("variant pair (" + format_codepoint(a) + ", " + format_codepoint(b) +
                       ") references a codepoint outside the character set");
    }
    sets.unite(ia->second, ib->second);
  }

  // `ordered` is ascending, so the first time a root is seen is at its smallest member.
  std::unordered_map<std::size_t, ClassId> root_to_id;
  std::vector<AllographClass> classes;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const std::size_t root = sets.find(i);
    auto [it, inserted] = root_to_id.try_emplace(root, static_cast<ClassId>(classes.size()));
    if (inserted) classes.push_back(AllographClass{it->second, {}, 0});
    classes[it->second].members.push_back(ordered[i]);
  }
  for (auto& c : classes) {
    c.representative = c.members.front();
    if (frequencies == nullptr) continue;
    double best = frequencies->frequency(c.representative);
    for (Codepoint cp : c.members) {
      const double f = frequencies->frequency(cp);
      if (f > best) {
        best = f;
        c.representative = cp;
      }
    }
  }
  return AllographPartition(std::move(classes));
}

ClassStatistics class_statistics(std::span<const AllographClass> classes) {
  if (classes.empty()) throw InputError("class_statistics: empty class set");
  ClassStatistics stats;
  stats.count = classes.size();
  std::size_t singletons = 0, characters = 0;
  for (const auto& c : classes) {
    characters += c.members.size();
    if (c.members.size() == 1) ++singletons;
    stats.max_size = std::max(stats.max_size, c.members.size());
  }
  stats.singleton_fraction = static_cast<double>(singletons) / static_cast<double>(stats.count);
  stats.mean_size = static_cast<double>(characters) / static_cast<double>(stats.count);
  return stats;
}

}  // namespace sino
