#include "sino/phonetics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "sino/error.hpp"

namespace sino {

namespace {

// Place: bilabial 0, labiodental .1, alveolar .3, postalveolar .45,
// retroflex/alveolo-palatal .5, palatal .6, velar .8, uvular .9, glottal 1.
// Manner: stop 0, affricate .2, fricative .4, nasal .6, liquid .8, approximant 1.
constexpr double kBilabial = 0.0, kLabiodental = 0.1, kAlveolar = 0.3, kPostalveolar = 0.45, kRetroflex = 0.5,
                 kPalatal = 0.6, kVelar = 0.8, kUvular = 0.9, kGlottal = 1.0;
constexpr double kStop = 0.0, kAffricate = 0.2, kFricative = 0.4, kNasal = 0.6, kLiquid = 0.8, kApproximant = 1.0;

std::string lowercase(std::string_view text) {
  std::string out(text);
  for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

bool is_vowel(char ch) { return ch == 'a' || ch == 'i' || ch == 'u' || ch == 'e' || ch == 'o'; }

SyllableFeatures combine(const ConsonantFeatures& c, const VowelFeatures& v) {
  return SyllableFeatures{{c.place, c.voicing, c.manner, c.palatalization, v.frontness, v.height, v.rounding}};
}

double mean_window_distance(const std::vector<std::string>& shorter, const std::vector<std::string>& longer,
                            std::size_t offset, const SyllableMetric& metric) {
  double sum = 0.0;
  for (std::size_t i = 0; i < shorter.size(); ++i) sum += metric.distance(shorter[i], longer[offset + i]);
  return sum / static_cast<double>(shorter.size());
}

}  // namespace

double syllable_distance(const SyllableFeatures& a, const SyllableFeatures& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double d = kFeatureWeights[i] * (a.values[i] - b.values[i]);
    sum += d * d;
  }
  return std::sqrt(sum);
}

double max_segmental_distance() {
  double sum = 0.0;
  for (double w : kFeatureWeights) sum += w * w;
  return std::sqrt(sum);
}

PhonemeTable PhonemeTable::japanese_default() {
  PhonemeTable t;
  t.consonants = {
      {"", {kGlottal, 1, kApproximant, 0}},
      {"k", {kVelar, 0, kStop, 0}},        {"g", {kVelar, 1, kStop, 0}},
      {"s", {kAlveolar, 0, kFricative, 0}}, {"z", {kAlveolar, 1, kAffricate, 0}},
      {"sh", {kPostalveolar, 0, kFricative, 1}}, {"j", {kPostalveolar, 1, kAffricate, 1}},
      {"t", {kAlveolar, 0, kStop, 0}},     {"d", {kAlveolar, 1, kStop, 0}},
      {"ch", {kPostalveolar, 0, kAffricate, 1}}, {"ts", {kAlveolar, 0, kAffricate, 0}},
      {"n", {kAlveolar, 1, kNasal, 0}},    {"h", {kGlottal, 0, kFricative, 0}},
      {"f", {kLabiodental, 0, kFricative, 0}}, {"v", {kLabiodental, 1, kFricative, 0}},
      {"b", {kBilabial, 1, kStop, 0}},     {"p", {kBilabial, 0, kStop, 0}},
      {"m", {kBilabial, 1, kNasal, 0}},    {"y", {kPalatal, 1, kApproximant, 1}},
      {"r", {kAlveolar, 1, kLiquid, 0}},   {"w", {0.4, 1, kApproximant, 0}},
      {"ky", {kVelar, 0, kStop, 1}},       {"gy", {kVelar, 1, kStop, 1}},
      {"ny", {kAlveolar, 1, kNasal, 1}},   {"hy", {kGlottal, 0, kFricative, 1}},
      {"by", {kBilabial, 1, kStop, 1}},    {"py", {kBilabial, 0, kStop, 1}},
      {"my", {kBilabial, 1, kNasal, 1}},   {"ry", {kAlveolar, 1, kLiquid, 1}},
      {"sy", {kPostalveolar, 0, kFricative, 1}}, {"jy", {kPostalveolar, 1, kAffricate, 1}},
      {"zy", {kPostalveolar, 1, kAffricate, 1}}, {"ty", {kPostalveolar, 0, kAffricate, 1}},
      {"dy", {kAlveolar, 1, kStop, 1}},
      // Moraic nasal and geminate closure.
      {"N", {kUvular, 1, kNasal, 0}},      {"Q", {kGlottal, 0, kStop, 0}},
  };
  t.vowels = {
      {"i", {0.0, 1.0, 0.0}}, {"e", {0.0, 0.5, 0.0}}, {"a", {0.5, 0.0, 0.0}},
      {"o", {1.0, 0.5, 1.0}}, {"u", {1.0, 1.0, 1.0}}, {"@", {0.5, 0.5, 0.0}},
  };
  return t;
}

PhonemeTable PhonemeTable::mandarin_default() {
  // Aspiration contrasts (b/p, d/t, g/k, ...) use the voicing axis.
  PhonemeTable t;
  t.consonants = {
      {"", {kGlottal, 1, kApproximant, 0}},
      {"b", {kBilabial, 1, kStop, 0}},      {"p", {kBilabial, 0, kStop, 0}},
      {"m", {kBilabial, 1, kNasal, 0}},     {"f", {kLabiodental, 0, kFricative, 0}},
      {"d", {kAlveolar, 1, kStop, 0}},      {"t", {kAlveolar, 0, kStop, 0}},
      {"n", {kAlveolar, 1, kNasal, 0}},     {"l", {kAlveolar, 1, kLiquid, 0}},
      {"g", {kVelar, 1, kStop, 0}},         {"k", {kVelar, 0, kStop, 0}},
      {"h", {kVelar, 0, kFricative, 0}},
      {"j", {kPalatal - 0.1, 1, kAffricate, 1}}, {"q", {kPalatal - 0.1, 0, kAffricate, 1}},
      {"x", {kPalatal - 0.1, 0, kFricative, 1}},
      {"zh", {kRetroflex, 1, kAffricate, 0}}, {"ch", {kRetroflex, 0, kAffricate, 0}},
      {"sh", {kRetroflex, 0, kFricative, 0}}, {"r", {kRetroflex, 1, kLiquid, 0}},
      {"z", {kAlveolar, 1, kAffricate, 0}},  {"c", {kAlveolar, 0, kAffricate, 0}},
      {"s", {kAlveolar, 0, kFricative, 0}},
  };
  t.vowels = {
      {"i", {0.0, 1.0, 0.0}}, {"v", {0.0, 1.0, 1.0}}, {"u", {1.0, 1.0, 1.0}},
      {"e", {0.5, 0.5, 0.0}}, {"o", {1.0, 0.5, 1.0}}, {"a", {0.5, 0.0, 0.0}},
  };
  return t;
}

std::vector<std::string> split_morae(std::string_view romaji) {
  const std::string s = lowercase(romaji);
  std::vector<std::string> morae;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw InputError("cannot split '" + std::string(romaji) + "' into morae: " + why);
  };
  while (i < s.size()) {
    const char ch = s[i];
    if (ch == '\'' || ch == '-') {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(ch))) fail("unexpected character");
    if (is_vowel(ch)) {
      morae.emplace_back(1, ch);
      ++i;
      continue;
    }
    if (ch == 'n') {
      const bool at_end = i + 1 == s.size();
      const char next = at_end ? '\0' : s[i + 1];
      if (at_end || next == '\'' || (!is_vowel(next) && next != 'y')) {
        morae.emplace_back("n");
        ++i;
        continue;
      }
    }
    if (i + 1 < s.size() && s[i + 1] == ch && ch != 'n') {
      morae.emplace_back("q");
      ++i;
      continue;
    }
    if (ch == 't' && s.compare(i + 1, 2, "ch") == 0) {
      morae.emplace_back("q");
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j])) && !is_vowel(s[j])) ++j;
    if (j == s.size() || !is_vowel(s[j])) fail("consonant without vowel");
    morae.push_back(s.substr(i, j - i + 1));
    i = j + 1;
  }
  if (morae.empty()) fail("empty reading");
  return morae;
}

MoraFeatureMetric::MoraFeatureMetric(PhonemeTable table) : table_(std::move(table)) {}

SyllableFeatures MoraFeatureMetric::features(std::string_view mora) const {
  auto lookup = [&](std::string_view consonant, std::string_view vowel) {
    auto c = table_.consonants.find(consonant);
    auto v = table_.vowels.find(vowel);
    if (c == table_.consonants.end() || v == table_.vowels.end()) {
      throw InputError("unknown mora '" + std::string(mora) + "'");
    }
    return combine(c->second, v->second);
  };
  if (mora == "n") return lookup("N", "@");
  if (mora == "q") return lookup("Q", "@");
  if (mora.empty()) throw InputError("empty mora");
  return lookup(mora.substr(0, mora.size() - 1), mora.substr(mora.size() - 1));
}

double MoraFeatureMetric::distance(std::string_view a, std::string_view b) const {
  return syllable_distance(features(a), features(b));
}

PinyinSyllable parse_pinyin(std::string_view syllable) {
  std::string s = lowercase(syllable);
  auto fail = [&](const std::string& why) {
    throw InputError("cannot parse pinyin '" + std::string(syllable) + "': " + why);
  };
  PinyinSyllable out;
  if (!s.empty() && std::isdigit(static_cast<unsigned char>(s.back()))) {
    out.tone = s.back() - '0';
    if (out.tone < 1 || out.tone > 5) fail("tone digit must be 1..5");
    s.pop_back();
  }
  for (std::size_t pos; (pos = s.find("u:")) != std::string::npos;) s.replace(pos, 2, "v");
  for (std::size_t pos; (pos = s.find("\xC3\xBC")) != std::string::npos;) s.replace(pos, 2, "v");
  if (s.empty()) fail("empty syllable");

  std::string rest;
  if (s.starts_with("zh") || s.starts_with("ch") || s.starts_with("sh")) {
    out.initial = s.substr(0, 2);
    rest = s.substr(2);
  } else if (s[0] == 'y') {
    rest = s.substr(1);
    if (rest.starts_with("u")) {
      rest[0] = 'v';
    } else if (!rest.starts_with("i")) {
      rest.insert(rest.begin(), 'i');
    }
  } else if (s[0] == 'w') {
    rest = s.substr(1);
    if (!rest.starts_with("u")) rest.insert(rest.begin(), 'u');
  } else if (std::string_view("bpmfdtnlgkhjqxrzcs").find(s[0]) != std::string_view::npos) {
    out.initial = s.substr(0, 1);
    rest = s.substr(1);
  } else {
    rest = s;
  }
  if ((out.initial == "j" || out.initial == "q" || out.initial == "x") && rest.starts_with("u")) rest[0] = 'v';

  if (rest.ends_with("ng")) {
    out.coda = "ng";
    rest.resize(rest.size() - 2);
  } else if (rest.ends_with("n")) {
    out.coda = "n";
    rest.pop_back();
  } else if (rest == "er") {
    out.coda = "r";
    rest = "e";
  }
  // Abbreviated finals: iu = iou, ui = uei, un = uen.
  if (!out.initial.empty()) {
    if (rest == "iu") rest = "iou";
    if (rest == "ui") rest = "uei";
    if (rest == "u" && out.coda == "n") rest = "ue";
  }
  if (rest.empty()) fail("no vowel");
  for (char ch : rest) {
    if (std::string_view("aeiouv").find(ch) == std::string_view::npos) fail("unexpected letter in final");
  }
  out.vowels = rest;
  return out;
}

PinyinMetric::PinyinMetric(PhonemeTable table) : table_(std::move(table)) {}

SyllableFeatures PinyinMetric::features(const PinyinSyllable& syllable) const {
  auto c = table_.consonants.find(syllable.initial);
  if (c == table_.consonants.end()) throw InputError("unknown pinyin initial '" + syllable.initial + "'");
  VowelFeatures mean;
  for (char ch : syllable.vowels) {
    auto v = table_.vowels.find(std::string_view(&ch, 1));
    if (v == table_.vowels.end()) throw InputError(std::string("unknown pinyin vowel '") + ch + "'");
    mean.frontness += v->second.frontness;
    mean.height += v->second.height;
    mean.rounding += v->second.rounding;
  }
  const double n = static_cast<double>(syllable.vowels.size());
  mean.frontness /= n;
  mean.height /= n;
  mean.rounding /= n;
  return combine(c->second, mean);
}

double PinyinMetric::distance(std::string_view a, std::string_view b) const {
  const auto pa = parse_pinyin(a);
  const auto pb = parse_pinyin(b);
  double d = syllable_distance(features(pa), features(pb));
  if (pa.coda != pb.coda) d += kCodaPenaltyFraction * max_segmental_distance();
  if (pa.tone != pb.tone) d += kTonePenaltyFraction * max_segmental_distance();
  return d;
}

PhoneticModel::PhoneticModel() : PhoneticModel(PhonemeTable::japanese_default(), PhonemeTable::mandarin_default()) {}

PhoneticModel::PhoneticModel(PhonemeTable japanese, PhonemeTable mandarin) {
  auto mora = std::make_shared<MoraFeatureMetric>(std::move(japanese));
  metrics_[index_of(Language::mandarin)] = std::make_shared<PinyinMetric>(std::move(mandarin));
  metrics_[index_of(Language::japanese_on)] = mora;
  metrics_[index_of(Language::japanese_kun)] = mora;
}

void PhoneticModel::set_metric(Language lang, std::shared_ptr<const SyllableMetric> metric) {
  if (!metric) throw InputError("null syllable metric");
  metrics_[index_of(lang)] = std::move(metric);
}

const SyllableMetric& PhoneticModel::metric(Language lang) const { return *metrics_[index_of(lang)]; }

void PhoneticModel::validate(const Reading& reading) const {
  validate_reading(reading);
  for (const auto& s : reading.syllables) metric(reading.language).validate(s);
}

const PhoneticModel& default_phonetic_model() {
  static const PhoneticModel model;
  return model;
}

double reading_distance(const Reading& a, const Reading& b, const PhoneticModel& model) {
  if (a.language != b.language) throw InputError("reading_distance: language mismatch");
  if (a.syllables.empty() || b.syllables.empty()) throw InputError("reading_distance: empty reading");
  const auto& metric = model.metric(a.language);
  const auto& shorter = a.syllables.size() <= b.syllables.size() ? a.syllables : b.syllables;
  const auto& longer = a.syllables.size() <= b.syllables.size() ? b.syllables : a.syllables;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t offset = 0; offset + shorter.size() <= longer.size(); ++offset) {
    best = std::min(best, mean_window_distance(shorter, longer, offset, metric));
  }
  return best;
}

std::optional<double> class_distance(const AllographClass& a, const AllographClass& b, Language lang,
                                     const CharStore& store, const PhoneticModel& model) {
  std::vector<const Reading*> ra, rb;
  for (Codepoint cp : a.members) {
    for (const Reading* r : store.readings(cp, lang)) ra.push_back(r);
  }
  for (Codepoint cp : b.members) {
    for (const Reading* r : store.readings(cp, lang)) rb.push_back(r);
  }
  if (ra.empty() || rb.empty()) return std::nullopt;
  double best = std::numeric_limits<double>::infinity();
  for (const Reading* x : ra) {
    for (const Reading* y : rb) best = std::min(best, reading_distance(*x, *y, model));
  }
  return best;
}

std::string phoneticity_norm_key(Language lang) {
  return "phoneticity." + std::string(to_string(lang)) + ".max_distance";
}

void annotate_distances(InclusionGraph& g, const AllographPartition& classes, const CharStore& store, Language lang,
                        const PhoneticModel& model) {
  for (const Edge& e : g.edge_list()) {
    auto& attrs = g.attributes(e);
    attrs.distance[index_of(lang)] = class_distance(classes.get(e.sub), classes.get(e.super), lang, store, model);
    attrs.phoneticity[index_of(lang)].reset();
  }
}

double normalize_phoneticity(InclusionGraph& g, Language lang) {
  const std::size_t li = index_of(lang);
  std::optional<double> max_distance;
  for (const auto& [e, attrs] : g.edges()) {
    if (attrs.distance[li]) max_distance = std::max(max_distance.value_or(0.0), *attrs.distance[li]);
  }
  if (!max_distance) {
    throw DataError("phoneticity: no edge has a finite " + std::string(to_string(lang)) + " distance");
  }
  const double d_max = *max_distance;
  for (const Edge& e : g.edge_list()) {
    auto& attrs = g.attributes(e);
    if (!attrs.distance[li]) {
      attrs.phoneticity[li].reset();
    } else {
      attrs.phoneticity[li] = d_max > 0.0 ? 1.0 - *attrs.distance[li] / d_max : 1.0;
    }
  }
  g.metadata()[phoneticity_norm_key(lang)] = format_double(d_max);
  return d_max;
}

double phoneticity(InclusionGraph& g, const AllographPartition& classes, const CharStore& store, Language lang,
                   const PhoneticModel& model) {
  annotate_distances(g, classes, store, lang, model);
  return normalize_phoneticity(g, lang);
}

std::vector<NodeId> least_phonetic_chain(const InclusionGraph& g, NodeId start, Language lang) {
  const std::size_t li = index_of(lang);
  return greedy_chain(
      g, start, [li](const Edge&, const EdgeAttributes& a) { return a.phoneticity[li]; }, ChainObjective::minimize);
}

Histogram phoneticity_histogram(const InclusionGraph& g, Language lang, std::size_t bins) {
  if (bins == 0) throw InputError("phoneticity_histogram: bin count must be positive");
  const std::size_t li = index_of(lang);
  Histogram h;
  h.counts.assign(bins, 0);
  std::size_t defined = 0;
  for (const auto& [e, attrs] : g.edges()) {
    if (!attrs.phoneticity[li]) continue;
    ++defined;
    const double phi = std::clamp(*attrs.phoneticity[li], 0.0, 1.0);
    const auto bin = std::min(bins - 1, static_cast<std::size_t>(phi * static_cast<double>(bins)));
    ++h.counts[bin];
  }
  if (defined == 0) throw DataError("phoneticity_histogram: no edge has a defined phi");
  return h;
}

}  // namespace sino
