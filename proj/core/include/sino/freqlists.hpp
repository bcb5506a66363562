#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sino/types.hpp"

namespace sino {

struct FrequencyEntry {
  Codepoint codepoint;
  double frequency;

  bool operator==(const FrequencyEntry&) const = default;
};

// Character frequency list sorted by nonincreasing frequency. Ties are kept in
// ascending codepoint order so every list has one canonical layout.
class FrequencyList {
 public:
  FrequencyList() = default;
  // Validates positivity, distinctness and ordering; throws InputError.
  FrequencyList(std::vector<FrequencyEntry> entries, std::uint64_t source_size);

  const std::vector<FrequencyEntry>& entries() const noexcept { return entries_; }
  std::uint64_t source_size() const noexcept { return source_size_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  // 0 for characters not in the list.
  double frequency(Codepoint cp) const;
  bool contains(Codepoint cp) const { return index_.contains(cp); }
  // 0-based position in the ranking.
  std::size_t rank_of(Codepoint cp) const;

  std::set<Codepoint> char_set() const;
  // Characters of the first n entries.
  std::set<Codepoint> head_char_set(std::size_t n) const;

  bool operator==(const FrequencyList& other) const {
    return entries_ == other.entries_ && source_size_ == other.source_size_;
  }

 private:
  std::vector<FrequencyEntry> entries_;
  std::uint64_t source_size_ = 0;
  std::unordered_map<Codepoint, std::size_t> index_;
};

struct NamedFrequencyList {
  std::string name;
  FrequencyList list;
};

// frequency = count / total; order: descending count, then ascending codepoint.
FrequencyList from_counts(const std::map<Codepoint, std::uint64_t>& counts);

std::set<Codepoint> comchar(const FrequencyList& a, const FrequencyList& b, std::size_t n);
double comcov(const FrequencyList& a, const FrequencyList& b, std::size_t n);

// Spearman rank correlation; tied values receive their average rank. Returns 0
// when either side has zero rank variance (fewer than two distinct values).
double spearman(std::span<const double> x, std::span<const double> y);

struct DistanceOptions {
  // Value used for rho when the common set has exactly one character.
  double singleton_rho = 0.0;
};

struct ListDistance {
  double distance = 1.0;
  double comcov = 0.0;
  double rho = 0.0;
  std::size_t common = 0;
  // d outside [0, 1]; possible because comcov may exceed 1. Reported, never clamped.
  bool out_of_unit_range = false;
};

ListDistance list_distance(const FrequencyList& a, const FrequencyList& b, std::size_t n,
                           const DistanceOptions& options = {});
double distance_dN(const FrequencyList& a, const FrequencyList& b, std::size_t n,
                   const DistanceOptions& options = {});

using DistanceMatrix = std::vector<std::vector<double>>;
DistanceMatrix distance_matrix(std::span<const NamedFrequencyList> lists, std::size_t n,
                               const DistanceOptions& options = {});

struct UflOptions {
  // The aggregation weights #char(X)/#char(UFL) do not sum to one in general;
  // this rescales the result into a probability distribution.
  bool renormalize = false;
};

FrequencyList aggregate_ufl(std::span<const NamedFrequencyList> lists, const UflOptions& options = {});

double weighted_coverage(const FrequencyList& list, const std::set<Codepoint>& charset);

}  // namespace sino
