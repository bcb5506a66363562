#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sino/freqlists.hpp"
#include "sino/types.hpp"

namespace sino {

struct Reading {
  Language language = Language::mandarin;
  std::vector<std::string> syllables;

  bool operator==(const Reading&) const = default;
};

inline constexpr std::size_t kMaxKunSyllables = 12;

// Throws InputError when the syllable count is invalid for the language.
void validate_reading(const Reading& reading);

struct Sinograph {
  Codepoint codepoint = 0;
  std::vector<Reading> readings;
  std::optional<int> kangxi_radical;
  std::size_t stroke_count = 0;
};

// Characters with their readings and radicals. Filled by the loaders, then
// only read; concurrent const access is safe.
class CharStore {
 public:
  // Idempotent.
  Sinograph& add(Codepoint cp);
  void add_reading(Codepoint cp, Reading reading);
  void set_radical(Codepoint cp, int radical);
  void set_stroke_count(Codepoint cp, std::size_t count);

  bool contains(Codepoint cp) const { return chars_.contains(cp); }
  const Sinograph& at(Codepoint cp) const;
  std::size_t size() const noexcept { return chars_.size(); }

  std::vector<const Reading*> readings(Codepoint cp, Language lang) const;
  bool has_reading(Codepoint cp, Language lang) const;
  std::optional<int> radical(Codepoint cp) const;
  std::set<Codepoint> codepoints() const;

 private:
  std::map<Codepoint, Sinograph> chars_;
};

struct AllographClass {
  ClassId id = 0;
  std::vector<Codepoint> members;  // ascending
  Codepoint representative = 0;

  bool operator==(const AllographClass&) const = default;
};

using VariantPair = std::pair<Codepoint, Codepoint>;

// Partition of a character set into allographic classes, with a codepoint index.
class AllographPartition {
 public:
  AllographPartition() = default;
  // Class ids must equal their positions; members must be disjoint.
  explicit AllographPartition(std::vector<AllographClass> classes);

  ClassId class_of(Codepoint cp) const;
  bool contains(Codepoint cp) const { return index_.contains(cp); }
  const AllographClass& get(ClassId id) const;
  const std::vector<AllographClass>& classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return classes_.size(); }
  std::size_t character_count() const noexcept { return index_.size(); }

  bool operator==(const AllographPartition& other) const { return classes_ == other.classes_; }

 private:
  std::vector<AllographClass> classes_;
  std::unordered_map<Codepoint, ClassId> index_;
};

// Connected components of the variant relation. Ids ascend with each class's
// smallest member. The representative is the member with the highest frequency
// in `frequencies` (lowest codepoint on ties or when no list is given).
AllographPartition build_allograph_classes(std::span<const VariantPair> variant_pairs,
                                           const std::set<Codepoint>& chars,
                                           const FrequencyList* frequencies = nullptr);

struct ClassStatistics {
  std::size_t count = 0;
  double singleton_fraction = 0.0;
  std::size_t max_size = 0;
  double mean_size = 0.0;
};

ClassStatistics class_statistics(std::span<const AllographClass> classes);

}  // namespace sino
