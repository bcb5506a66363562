#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sino/error.hpp"
#include "sino/phonetics.hpp"

using namespace sino;

namespace {

InclusionGraph toy(std::vector<std::optional<double>> distances) {
  std::vector<NodeId> nodes;
  std::vector<Edge> edges;
  for (NodeId i = 0; i <= distances.size(); ++i) nodes.push_back(i);
  for (NodeId i = 0; i < distances.size(); ++i) edges.push_back({i, i + 1});
  InclusionGraph g(nodes, edges);
  for (NodeId i = 0; i < distances.size(); ++i) g.attributes({i, i + 1}).distance[0] = distances[i];
  return g;
}

// Hand-built metric: syllables are single letters, distance is |a - b|.
class LetterMetric : public SyllableMetric {
 public:
  double distance(std::string_view a, std::string_view b) const override {
    return std::abs(static_cast<double>(a[0]) - static_cast<double>(b[0]));
  }
  void validate(std::string_view s) const override {
    if (s.size() != 1) throw InputError("one letter");
  }
};

}  // namespace

TEST(SyllableDistance, Examples) {
  SyllableFeatures a{{0.3, 1, 0.4, 0, 0.5, 0.5, 0}};
  EXPECT_EQ(syllable_distance(a, a), 0.0);
  auto b = a;
  b.values[4] += 1.0;
  EXPECT_DOUBLE_EQ(syllable_distance(a, b), 5.0);
  EXPECT_DOUBLE_EQ(syllable_distance(b, a), 5.0);
  EXPECT_DOUBLE_EQ(max_segmental_distance(), std::sqrt(61.0));
}

TEST(Morae, Split) {
  EXPECT_EQ(split_morae("nin"), (std::vector<std::string>{"ni", "n"}));
  EXPECT_EQ(split_morae("kitte"), (std::vector<std::string>{"ki", "q", "te"}));
  EXPECT_EQ(split_morae("shou"), (std::vector<std::string>{"sho", "u"}));
  EXPECT_EQ(split_morae("kan'i"), (std::vector<std::string>{"ka", "n", "i"}));
  EXPECT_THROW(split_morae("k"), InputError);
}

TEST(Pinyin, Parse) {
  EXPECT_EQ(parse_pinyin("zhuang4"), (PinyinSyllable{"zh", "ua", "ng", 4}));
  EXPECT_EQ(parse_pinyin("lv3"), (PinyinSyllable{"l", "v", "", 3}));
  EXPECT_EQ(parse_pinyin("nu:3"), (PinyinSyllable{"n", "v", "", 3}));
  EXPECT_EQ(parse_pinyin("ju2").vowels, "v");
  EXPECT_EQ(parse_pinyin("liu2").vowels, "iou");
  EXPECT_EQ(parse_pinyin("er2").coda, "r");
  EXPECT_EQ(parse_pinyin("ma").tone, 5);
  EXPECT_THROW(parse_pinyin("xyz1"), InputError);
}

TEST(ReadingDistance, Basics) {
  Reading nin{Language::japanese_on, {"ni", "n"}};
  EXPECT_EQ(reading_distance(nin, nin), 0.0);
  Reading jin{Language::japanese_on, {"ji", "n"}};
  EXPECT_GT(reading_distance(nin, jin), 0.0);
  EXPECT_DOUBLE_EQ(reading_distance(nin, jin), reading_distance(jin, nin));
  Reading suffix{Language::japanese_on, {"n"}};
  EXPECT_EQ(reading_distance(nin, suffix), 0.0);
  Reading ren{Language::mandarin, {"ren2"}};
  EXPECT_THROW(reading_distance(nin, ren), InputError);
  EXPECT_EQ(reading_distance(ren, ren), 0.0);
  EXPECT_GT(reading_distance(ren, {Language::mandarin, {"ren4"}}), 0.0);
}

TEST(ReadingDistance, WindowMinimumMatchesEnumeration) {
  PhoneticModel model;
  model.set_metric(Language::japanese_on, std::make_shared<LetterMetric>());
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    Reading a{Language::japanese_on, {}}, b{Language::japanese_on, {}};
    const std::size_t la = 1 + rng() % 5, lb = 1 + rng() % 5;
    for (std::size_t i = 0; i < la; ++i) a.syllables.push_back(std::string(1, static_cast<char>('a' + rng() % 8)));
    for (std::size_t i = 0; i < lb; ++i) b.syllables.push_back(std::string(1, static_cast<char>('a' + rng() % 8)));
    const auto& shorter = la <= lb ? a : b;
    const auto& longer = la <= lb ? b : a;
    double best = 1e300;
    for (std::size_t off = 0; off + shorter.syllables.size() <= longer.syllables.size(); ++off) {
      double sum = 0;
      for (std::size_t i = 0; i < shorter.syllables.size(); ++i) {
        sum += std::abs(shorter.syllables[i][0] - longer.syllables[off + i][0]);
      }
      best = std::min(best, sum / static_cast<double>(shorter.syllables.size()));
    }
    EXPECT_NEAR(reading_distance(a, b, model), best, 1e-12);
  }
}

TEST(ClassDistance, SharedReadingAndUnknown) {
  CharStore store;
  store.add_reading(0x4EBA, {Language::japanese_on, {"ni", "n"}});  // 人
  store.add_reading(0x4EBA, {Language::japanese_on, {"ji", "n"}});
  store.add_reading(0x4EFB, {Language::japanese_on, {"ni", "n"}});  // 任
  store.add(0x4E00);
  AllographClass ren{0, {0x4EBA}, 0x4EBA}, nin{1, {0x4EFB}, 0x4EFB}, none{2, {0x4E00}, 0x4E00};
  EXPECT_EQ(class_distance(ren, nin, Language::japanese_on, store), 0.0);
  EXPECT_FALSE(class_distance(ren, none, Language::japanese_on, store));
  EXPECT_FALSE(class_distance(ren, nin, Language::mandarin, store));
}

TEST(ClassDistance, MinimumOverMemberPairs) {
  CharStore store;
  const std::vector<std::string> pool{"ka", "ki", "ku", "sa", "shi", "ta", "na", "ha", "ma", "ya", "ra", "wa"};
  std::mt19937_64 rng(4);
  for (Codepoint cp = 1; cp <= 6; ++cp) {
    for (int r = 0; r < 2; ++r) store.add_reading(cp, {Language::japanese_on, {pool[rng() % pool.size()]}});
  }
  AllographClass a{0, {1, 2, 3}, 1}, b{1, {4, 5, 6}, 4};
  double best = 1e300;
  for (auto s : a.members)
    for (auto c : b.members)
      for (auto* r1 : store.readings(s, Language::japanese_on))
        for (auto* r2 : store.readings(c, Language::japanese_on)) best = std::min(best, reading_distance(*r1, *r2));
  EXPECT_DOUBLE_EQ(*class_distance(a, b, Language::japanese_on, store), best);
}

TEST(Phoneticity, Normalization) {
  auto g = toy({0.0, 2.0, 4.0, std::nullopt});
  EXPECT_DOUBLE_EQ(normalize_phoneticity(g, Language::mandarin), 4.0);
  EXPECT_DOUBLE_EQ(*g.attributes({0, 1}).phoneticity[0], 1.0);
  EXPECT_DOUBLE_EQ(*g.attributes({1, 2}).phoneticity[0], 0.5);
  EXPECT_DOUBLE_EQ(*g.attributes({2, 3}).phoneticity[0], 0.0);
  EXPECT_FALSE(g.attributes({3, 4}).phoneticity[0]);
  EXPECT_EQ(g.metadata().at(phoneticity_norm_key(Language::mandarin)), "4");

  auto zero = toy({0.0, 0.0});
  normalize_phoneticity(zero, Language::mandarin);
  EXPECT_DOUBLE_EQ(*zero.attributes({0, 1}).phoneticity[0], 1.0);

  auto unknown = toy({std::nullopt});
  EXPECT_THROW(normalize_phoneticity(unknown, Language::mandarin), DataError);
}

TEST(Phoneticity, ScaleInvariantChains) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_dag(rng, 15, 0.3);
    auto h = g;
    for (const auto& e : g.edge_list()) {
      const double d = std::round(u(rng) * 4) / 4;
      g.attributes(e).distance[0] = d;
      h.attributes(e).distance[0] = d * 7.5;
    }
    normalize_phoneticity(g, Language::mandarin);
    normalize_phoneticity(h, Language::mandarin);
    for (const auto& e : g.edge_list()) {
      EXPECT_NEAR(*g.attributes(e).phoneticity[0], *h.attributes(e).phoneticity[0], 1e-12);
      EXPECT_GE(*g.attributes(e).phoneticity[0], 0.0);
      EXPECT_LE(*g.attributes(e).phoneticity[0], 1.0);
      EXPECT_EQ(*g.attributes(e).phoneticity[0] == 1.0, *g.attributes(e).distance[0] == 0.0);
    }
    for (NodeId n : g.nodes()) EXPECT_EQ(least_phonetic_chain(g, n, Language::mandarin), least_phonetic_chain(h, n, Language::mandarin));
  }
}

TEST(Phoneticity, ChainMatchesExhaustiveStep) {
  auto g = toy({1.0, 3.0});
  EXPECT_EQ(least_phonetic_chain(g, 0, Language::mandarin), std::vector<NodeId>{0});
  normalize_phoneticity(g, Language::mandarin);
  EXPECT_EQ(least_phonetic_chain(g, 1, Language::mandarin), (std::vector<NodeId>{1, 0}));
  auto score = [](const EdgeAttributes& a) { return a.phoneticity[0]; };
  EXPECT_EQ(least_phonetic_chain(g, 2, Language::mandarin), oracle::chain(g, 2, score, false));
}

TEST(Phoneticity, Histogram) {
  auto ones = toy({0.0, 0.0, 0.0});
  normalize_phoneticity(ones, Language::mandarin);
  const auto h = phoneticity_histogram(ones, Language::mandarin, 4);
  EXPECT_EQ(h.counts, (std::vector<std::size_t>{0, 0, 0, 3}));

  std::vector<std::optional<double>> d;
  for (int i = 0; i <= 100; ++i) d.push_back(i);
  auto flat = toy(d);
  normalize_phoneticity(flat, Language::mandarin);
  const auto f = phoneticity_histogram(flat, Language::mandarin, 10);
  for (auto c : f.counts) EXPECT_NEAR(static_cast<double>(c), 10.1, 1.5);

  auto none = toy({std::nullopt});
  EXPECT_THROW(phoneticity_histogram(none, Language::mandarin, 4), DataError);
  EXPECT_THROW(phoneticity_histogram(ones, Language::mandarin, 0), InputError);
}

TEST(Phoneticity, EndToEndOnClasses) {
  CharStore store;
  store.add_reading(1, {Language::mandarin, {"ren2"}});
  store.add_reading(2, {Language::mandarin, {"ren4"}});
  store.add_reading(3, {Language::mandarin, {"shui3"}});
  AllographPartition p({{0, {1}, 1}, {1, {2}, 2}, {2, {3}, 3}});
  InclusionGraph g({0, 1, 2}, std::vector<Edge>{{0, 1}, {0, 2}});
  const double D = phoneticity(g, p, store, Language::mandarin);
  EXPECT_DOUBLE_EQ(D, *g.attributes({0, 2}).distance[0]);
  EXPECT_DOUBLE_EQ(*g.attributes({0, 2}).phoneticity[0], 0.0);
  EXPECT_GT(*g.attributes({0, 1}).phoneticity[0], 0.0);
}
