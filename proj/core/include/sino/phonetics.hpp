#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sino/charstore.hpp"
#include "sino/graphcore.hpp"
#include "sino/types.hpp"

namespace sino {

// Seven articulatory features of a syllable, each on a [0, 1] scale:
// consonant place, voicing, manner, palatalization; vowel frontness, height, rounding.
struct SyllableFeatures {
  std::array<double, 7> values{};

  bool operator==(const SyllableFeatures&) const = default;
};

inline constexpr std::array<double, 7> kFeatureWeights = {4.0, 1.0, 4.0, 1.0, 5.0, 1.0, 1.0};

// Weighted Euclidean distance.
double syllable_distance(const SyllableFeatures& a, const SyllableFeatures& b);

// Largest possible syllable_distance for features confined to [0, 1].
double max_segmental_distance();

struct ConsonantFeatures {
  double place = 0.0;
  double voicing = 0.0;
  double manner = 0.0;
  double palatalization = 0.0;
};

struct VowelFeatures {
  double frontness = 0.0;
  double height = 0.0;
  double rounding = 0.0;
};

// Feature values per phoneme symbol. The empty consonant symbol is the
// feature set of a syllable without onset.
struct PhonemeTable {
  std::map<std::string, ConsonantFeatures, std::less<>> consonants;
  std::map<std::string, VowelFeatures, std::less<>> vowels;

  static PhonemeTable japanese_default();
  static PhonemeTable mandarin_default();
};

// Splits romanized Japanese into morae: "nin" -> {"ni", "n"}, "kitte" ->
// {"ki", "q", "te"}. Moraic n is "n", a geminate consonant is "q".
std::vector<std::string> split_morae(std::string_view romaji);

class SyllableMetric {
 public:
  virtual ~SyllableMetric() = default;
  virtual double distance(std::string_view a, std::string_view b) const = 0;
  // Throws InputError when the token is not a syllable of this metric.
  virtual void validate(std::string_view syllable) const = 0;
};

// Japanese mora distance over the seven-feature space.
class MoraFeatureMetric : public SyllableMetric {
 public:
  explicit MoraFeatureMetric(PhonemeTable table = PhonemeTable::japanese_default());

  SyllableFeatures features(std::string_view mora) const;
  double distance(std::string_view a, std::string_view b) const override;
  void validate(std::string_view syllable) const override { (void)features(syllable); }

 private:
  PhonemeTable table_;
};

struct PinyinSyllable {
  std::string initial;  // empty for zero-initial syllables
  std::string vowels;   // medial + nucleus letters, 'v' for u-umlaut
  std::string coda;     // "", "n", "ng" or "r"
  int tone = 5;         // 1..5, 5 = neutral

  bool operator==(const PinyinSyllable&) const = default;
};

// Numbered pinyin such as "ren2", "lv4", "nu:3". Throws InputError.
PinyinSyllable parse_pinyin(std::string_view syllable);

// Default Mandarin distance: seven-feature distance between (initial, mean
// vowel features of the final), plus a fixed penalty of 0.1 * max segmental
// distance for a coda mismatch and another for a tone mismatch.
class PinyinMetric : public SyllableMetric {
 public:
  explicit PinyinMetric(PhonemeTable table = PhonemeTable::mandarin_default());

  SyllableFeatures features(const PinyinSyllable& syllable) const;
  double distance(std::string_view a, std::string_view b) const override;
  void validate(std::string_view syllable) const override { (void)features(parse_pinyin(syllable)); }

  static constexpr double kTonePenaltyFraction = 0.1;
  static constexpr double kCodaPenaltyFraction = 0.1;

 private:
  PhonemeTable table_;
};

// Per-language syllable metrics; the Mandarin one can be swapped.
class PhoneticModel {
 public:
  PhoneticModel();
  PhoneticModel(PhonemeTable japanese, PhonemeTable mandarin);

  void set_metric(Language lang, std::shared_ptr<const SyllableMetric> metric);
  const SyllableMetric& metric(Language lang) const;
  void validate(const Reading& reading) const;

 private:
  std::array<std::shared_ptr<const SyllableMetric>, kLanguageCount> metrics_;
};

const PhoneticModel& default_phonetic_model();

// Equal lengths: mean per-position syllable distance. Otherwise the minimum of
// that mean over every window of the longer reading with the shorter length.
double reading_distance(const Reading& a, const Reading& b, const PhoneticModel& model = default_phonetic_model());

// Minimum reading distance over member pairs; std::nullopt when either class
// has no reading in the language.
std::optional<double> class_distance(const AllographClass& a, const AllographClass& b, Language lang,
                                     const CharStore& store, const PhoneticModel& model = default_phonetic_model());

std::string phoneticity_norm_key(Language lang);

// Fills d_min for every edge of a class graph (UNKNOWN when a side lacks readings).
void annotate_distances(InclusionGraph& g, const AllographPartition& classes, const CharStore& store, Language lang,
                        const PhoneticModel& model = default_phonetic_model());

// phi = 1 - d_min / D with D the largest finite d_min (phi = 1 everywhere when
// D = 0). Records D in the graph metadata and returns it. Throws DataError
// when no edge has a finite distance.
double normalize_phoneticity(InclusionGraph& g, Language lang);

// annotate_distances followed by normalize_phoneticity.
double phoneticity(InclusionGraph& g, const AllographPartition& classes, const CharStore& store, Language lang,
                   const PhoneticModel& model = default_phonetic_model());

// Repeatedly steps to the subcharacter with the smallest defined phi.
std::vector<NodeId> least_phonetic_chain(const InclusionGraph& g, NodeId start, Language lang);

struct Histogram {
  double lower = 0.0;
  double upper = 1.0;
  std::vector<std::size_t> counts;

  double bin_width() const { return (upper - lower) / static_cast<double>(counts.size()); }
};

// Equal-width bins over [0, 1]; phi = 1 lands in the last bin. Throws DataError
// when no edge has a defined phi.
Histogram phoneticity_histogram(const InclusionGraph& g, Language lang, std::size_t bins);

}  // namespace sino
