#include "sinograph_app/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sino/error.hpp"
#include "sino/formats.hpp"
#include "sino/utf8.hpp"

namespace sinograph_app {

namespace {

// Distribution helpers written out so the output does not depend on the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double between(double lo, double hi) { return lo + (hi - lo) * unit(); }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

constexpr std::array kStrokeCodes = {"h", "s", "p", "n", "d", "t", "hz", "sz", "hg", "st", "sg", "pd"};
constexpr std::array kMandarinBases = {"ba",  "ma",   "fang", "zhong", "shui", "ren",  "kou", "mu",   "lin",
                                       "jia", "qing", "xin",  "hua",   "long", "yu",   "tian", "di",  "shan",
                                       "he",  "huo",  "jin",  "shi",   "wen",  "zi",   "cao", "li",   "gong",
                                       "guang", "ming", "yue", "dao",  "xiang", "chen", "gu",  "lv",  "an"};
constexpr std::array kOnReadings = {"ha",  "ma",  "hou", "chuu", "sui", "jin",  "kou", "moku", "rin",
                                    "ka",  "sei", "shin", "ka",  "ryuu", "gyo", "ten",  "chi", "san",
                                    "ka",  "ka",  "kin", "shi",  "bun", "ji",   "sou",  "ri",  "kou",
                                    "kou", "mei", "getsu", "tou", "kyou", "chin", "ko",  "ryo", "an"};
constexpr std::array kKana = {"ka", "mi", "to", "ri", "na", "sa", "ho", "yu", "ne", "ko", "ta", "mo"};
constexpr std::array kTopics = {"water", "wood", "fire", "metal", "earth", "stone", "cloud", "grain"};

struct Glyph {
  sino::Codepoint cp = 0;
  std::vector<sino::Stroke> strokes;
  std::optional<std::size_t> semantic;  // component indices
  std::optional<std::size_t> phonetic;
  std::optional<std::size_t> topic;
  std::size_t base = 0;  // Mandarin base syllable index
  int tone = 1;
  int radical = 1;
  bool known = true;
  std::string kun;
};

std::vector<sino::Stroke> place(const std::vector<sino::Stroke>& strokes, double scale, double dx, double dy) {
  auto out = strokes;
  for (auto& s : out) {
    for (auto& p : s.skeleton) p = {p.x * scale + dx, p.y * scale + dy};
  }
  return out;
}

sino::Stroke random_stroke(Rng& rng) {
  sino::Stroke s;
  s.type = *sino::parse_stroke_type(kStrokeCodes[rng.below(kStrokeCodes.size())]);
  sino::Point a{}, b{};
  do {
    a = {std::round(rng.between(5, 95)), std::round(rng.between(5, 95))};
    b = {std::round(rng.between(5, 95)), std::round(rng.between(5, 95))};
  } while (std::hypot(a.x - b.x, a.y - b.y) < 15.0);
  s.skeleton = {a, b};
  return s;
}

template <typename T>
void write_file(const std::filesystem::path& path, T&& writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sino::InputError("cannot write '" + path.string() + "'");
  writer(out);
  if (!out) throw sino::InputError("write failed for '" + path.string() + "'");
}

}  // namespace

SyntheticSummary generate_synthetic(const std::filesystem::path& dir, const SyntheticOptions& options) {
  if (options.primitives < 8 || options.compounds == 0 || options.categories < 2 ||
      options.categories > kTopics.size()) {
    throw sino::InputError("gen-synthetic: need at least 8 primitives, 1 compound and 2..8 categories");
  }
  std::filesystem::create_directories(dir);
  Rng rng(options.seed);
  std::vector<Glyph> glyphs;
  sino::Codepoint next_cp = 0x4E00;

  constexpr std::size_t kSingleStroke = 3;
  const std::size_t topical_primitives = std::min(options.primitives - kSingleStroke, 4 * options.categories);
  for (std::size_t i = 0; i < options.primitives; ++i) {
    Glyph g;
    g.cp = next_cp++;
    const std::size_t n = i < kSingleStroke ? 1 : 2 + rng.below(3);
    for (std::size_t k = 0; k < n; ++k) g.strokes.push_back(random_stroke(rng));
    if (i < kSingleStroke) g.strokes.front().type = *sino::parse_stroke_type(i == 0 ? "hxwg" : i == 1 ? "szwg" : "hzzzg");
    if (i >= kSingleStroke && i < kSingleStroke + topical_primitives) g.topic = (i - kSingleStroke) % options.categories;
    g.base = rng.below(kMandarinBases.size());
    g.tone = 1 + static_cast<int>(rng.below(4));
    g.radical = 1 + static_cast<int>(i % 214);
    glyphs.push_back(std::move(g));
  }

  std::set<std::pair<std::size_t, std::size_t>> used;
  auto compose = [&](std::size_t sem, std::size_t pho) {
    Glyph g;
    g.cp = next_cp++;
    g.strokes = place(glyphs[sem].strokes, 0.5, 0, 25);
    auto right = place(glyphs[pho].strokes, 0.5, 50, 25);
    g.strokes.insert(g.strokes.end(), right.begin(), right.end());
    g.semantic = sem;
    g.phonetic = pho;
    g.topic = glyphs[sem].topic;
    g.radical = glyphs[sem].radical;
    if (rng.chance(0.6)) {
      g.base = glyphs[pho].base;
      g.tone = rng.chance(0.5) ? glyphs[pho].tone : 1 + static_cast<int>(rng.below(4));
    } else {
      g.base = rng.below(kMandarinBases.size());
      g.tone = 1 + static_cast<int>(rng.below(4));
    }
    glyphs.push_back(std::move(g));
  };

  const std::size_t first_compound = glyphs.size();
  for (std::size_t made = 0; made < options.compounds;) {
    const std::size_t sem = kSingleStroke + rng.below(options.primitives - kSingleStroke);
    const std::size_t pho = rng.below(options.primitives);
    if (sem == pho || !used.emplace(sem, pho).second) continue;
    compose(sem, pho);
    ++made;
  }
  const std::size_t first_deep = glyphs.size();
  for (std::size_t made = 0; made < options.deep_compounds;) {
    const std::size_t sem = kSingleStroke + rng.below(options.primitives - kSingleStroke);
    const std::size_t pho = first_compound + rng.below(options.compounds);
    if (!used.emplace(sem, pho).second) continue;
    compose(sem, pho);
    ++made;
  }
  // The tail of the deep compounds has neither readings nor meanings; radicals stay.
  const std::size_t unknown = std::min<std::size_t>(15, options.deep_compounds);
  for (std::size_t i = glyphs.size() - unknown; i < glyphs.size(); ++i) glyphs[i].known = false;

  std::vector<sino::VariantPair> variants;
  const std::size_t variant_count = std::min(options.variant_pairs, options.compounds);
  for (std::size_t k = 0; k < variant_count; ++k) {
    const std::size_t original = first_compound + (k * 7) % options.compounds;
    Glyph g = glyphs[original];
    g.cp = next_cp++;
    const auto& sem = glyphs[*g.semantic].strokes;
    const auto& pho = glyphs[*g.phonetic].strokes;
    g.strokes = place(pho, 0.5, 0, 25);
    auto right = place(sem, 0.5, 50, 25);
    g.strokes.insert(g.strokes.end(), right.begin(), right.end());
    variants.emplace_back(glyphs[original].cp, g.cp);
    glyphs.push_back(std::move(g));
  }

  for (auto& g : glyphs) {
    if (!g.known || !rng.chance(0.5)) continue;
    const std::size_t morae = 2 + rng.below(2);
    for (std::size_t k = 0; k < morae; ++k) g.kun += kKana[rng.below(kKana.size())];
  }

  sino::io::StrokeTable strokes;
  std::vector<std::pair<sino::Codepoint, sino::Reading>> readings;
  std::vector<std::pair<sino::Codepoint, int>> radicals;
  for (const auto& g : glyphs) {
    strokes[g.cp] = g.strokes;
    radicals.emplace_back(g.cp, g.radical);
    if (!g.known) continue;
    readings.push_back({g.cp, {sino::Language::mandarin, {kMandarinBases[g.base] + std::to_string(g.tone)}}});
    readings.push_back({g.cp, {sino::Language::japanese_on, sino::split_morae(kOnReadings[g.base])}});
    if (!g.kun.empty()) readings.push_back({g.cp, {sino::Language::japanese_kun, sino::split_morae(g.kun)}});
  }

  sino::SynsetStore store;
  sino::io::Glosses glosses;
  std::map<std::size_t, std::string> synset_of;
  for (std::size_t t = 0; t < options.categories; ++t) store.add_synset({std::string("topic.") + kTopics[t], {kTopics[t]}});
  std::map<std::size_t, std::size_t> topic_counter;
  for (std::size_t i = 0; i < glyphs.size(); ++i) {
    const auto& g = glyphs[i];
    if (!g.known || !g.topic) continue;
    if (i >= first_deep + options.deep_compounds) continue;  // variants share the original's synset
    const std::string word = std::string(kTopics[*g.topic]) + "_" + std::to_string(++topic_counter[*g.topic]);
    const std::string id = "syn." + sino::format_codepoint(g.cp);
    store.add_synset({id, {sino::utf8::encode(g.cp), word}});
    glosses[g.cp].push_back(word);
    synset_of[i] = id;
  }
  for (std::size_t i = 0; i < glyphs.size(); ++i) {
    const auto& g = glyphs[i];
    auto own = synset_of.find(i);
    if (own == synset_of.end()) continue;
    if (!g.semantic) {
      store.add_relation({std::string("topic.") + kTopics[*g.topic], "hyponym", own->second});
      continue;
    }
    if (auto sem = synset_of.find(*g.semantic); sem != synset_of.end() && rng.chance(0.7)) {
      store.add_relation({sem->second, "hyponym", own->second});
    }
    if (auto pho = synset_of.find(*g.phonetic); pho != synset_of.end() && rng.chance(0.3)) {
      store.add_relation({pho->second, "similar", own->second});
    }
  }

  // Corpus: topical compounds of the document's category mixed with Zipf filler.
  std::vector<std::vector<sino::Codepoint>> topical(options.categories);
  for (std::size_t i = first_compound; i < glyphs.size(); ++i) {
    if (glyphs[i].topic) topical[*glyphs[i].topic].push_back(glyphs[i].cp);
  }
  std::vector<sino::Codepoint> filler;
  for (const auto& g : glyphs) filler.push_back(g.cp);
  for (std::size_t i = filler.size(); i > 1; --i) std::swap(filler[i - 1], filler[rng.below(i)]);
  std::vector<double> cumulative;
  double total = 0.0;
  for (std::size_t r = 0; r < filler.size(); ++r) cumulative.push_back(total += 1.0 / static_cast<double>(r + 1));

  std::vector<sino::Document> corpus;
  std::map<sino::Codepoint, std::uint64_t> counts;
  for (std::size_t d = 0; d < options.documents; ++d) {
    const std::size_t category = d % options.categories;
    sino::Document doc{kTopics[category], {}};
    const std::size_t length = 30 + rng.below(31);
    for (std::size_t k = 0; k < length; ++k) {
      sino::Codepoint cp = 0;
      if (!topical[category].empty() && rng.chance(0.25)) {
        cp = topical[category][rng.below(topical[category].size())];
      } else {
        const double u = rng.unit() * total;
        const auto r = static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) -
                                                cumulative.begin());
        cp = filler[std::min(r, filler.size() - 1)];
      }
      doc.text.push_back(cp);
      ++counts[cp];
    }
    corpus.push_back(std::move(doc));
  }

  write_file(dir / "strokes.tsv", [&](std::ostream& o) { sino::io::write_strokes(o, strokes); });
  write_file(dir / "variants.tsv", [&](std::ostream& o) { sino::io::write_variants(o, variants); });
  write_file(dir / "readings.tsv", [&](std::ostream& o) { sino::io::write_readings(o, readings); });
  write_file(dir / "radicals.tsv", [&](std::ostream& o) { sino::io::write_radicals(o, radicals); });
  write_file(dir / "synsets.tsv", [&](std::ostream& o) { sino::io::write_synsets(o, store); });
  write_file(dir / "relations.tsv", [&](std::ostream& o) { sino::io::write_relations(o, store); });
  write_file(dir / "glosses.tsv", [&](std::ostream& o) { sino::io::write_glosses(o, glosses); });
  write_file(dir / "freq.tsv", [&](std::ostream& o) { sino::io::write_counts(o, counts); });
  write_file(dir / "corpus.tsv", [&](std::ostream& o) { sino::io::write_corpus(o, corpus); });

  return {glyphs.size(), corpus.size(), store.synsets().size(), store.relations().size()};
}

}  // namespace sinograph_app
