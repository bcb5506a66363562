#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sino/error.hpp"
#include "sino/features.hpp"

using namespace sino;

namespace {

AllographPartition singles(std::u32string chars) {
  std::vector<AllographClass> classes;
  std::sort(chars.begin(), chars.end());
  for (std::size_t i = 0; i < chars.size(); ++i) classes.push_back({static_cast<ClassId>(i), {chars[i]}, chars[i]});
  return AllographPartition(classes);
}

// Chain 2 <- 1 <- 0 (class 2 contains 1 contains 0) with S values on both edges.
InclusionGraph chain_graph(double s21, double s10) {
  InclusionGraph g({0, 1, 2}, std::vector<Edge>{{1, 2}, {0, 1}});
  g.attributes({1, 2}).semanticity = s21;
  g.attributes({0, 1}).semanticity = s10;
  return g;
}

FeatureSet single_feature(ClassId id, double w) {
  FeatureSet f;
  f.vocabulary.add(id, Provenance::baseline);
  f.labels = {"x"};
  f.weights = {{{id, w}}};
  return f;
}

}  // namespace

TEST(Baseline, RelativeFrequencies) {
  auto p = singles(U"ab");
  std::vector<Document> docs{{"x", U"aab"}};
  const auto f = baseline_vectors(docs, p, 1);
  EXPECT_DOUBLE_EQ(f.weights[0].at(p.class_of(U'a')), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(f.weights[0].at(p.class_of(U'b')), 1.0 / 3.0);
  EXPECT_EQ(f.vocabulary.count(Provenance::baseline), 2u);
  EXPECT_THROW(baseline_vectors(docs, p, 5), DataError);
  EXPECT_THROW(baseline_vectors({}, p, 1), InputError);
}

TEST(Baseline, ClassMaxRule) {
  AllographPartition p({{0, {U'x', U'y'}, U'x'}});
  std::vector<Document> docs{{"x", U"xy"}, {"y", U"?"}};
  const auto f = baseline_vectors(docs, p, 1);
  ASSERT_EQ(f.weights[0].size(), 1u);
  EXPECT_DOUBLE_EQ(f.weights[0].at(0), 0.5);
  EXPECT_EQ(f.empty_documents, 1u);
  EXPECT_EQ(f.unmapped_characters, 1u);
}

TEST(Baseline, MinCountFilter) {
  auto p = singles(U"abc");
  std::vector<Document> docs{{"x", U"aab"}, {"y", U"ac"}};
  const auto f = baseline_vectors(docs, p, 2);
  EXPECT_EQ(f.vocabulary.size(), 1u);
  EXPECT_TRUE(f.vocabulary.contains(p.class_of(U'a')));
  EXPECT_DOUBLE_EQ(f.weights[0].at(p.class_of(U'a')), 2.0 / 3.0);
}

TEST(Normalize, UnitLength) {
  std::vector<SparseVector> v{{{0, 3.0}, {1, 4.0}}, {}};
  const auto n = l2_normalized(v);
  EXPECT_DOUBLE_EQ(n[0].at(0), 0.6);
  EXPECT_DOUBLE_EQ(n[0].at(1), 0.8);
  EXPECT_TRUE(n[1].empty());
}

TEST(Strategy1, WorkedExample) {
  const auto g = chain_graph(0.8, 0.4);
  const auto base = single_feature(2, 0.5);
  const auto chains = semantic_chains(g, base.vocabulary);
  ASSERT_EQ(chains.at(2), (std::vector<NodeId>{2, 1, 0}));
  AugmentStats stats;
  const auto out = augment_strategy1(base, chains, semanticity_weight(g), &stats);
  EXPECT_NEAR(out.weights[0].at(1), 0.4, 1e-9);
  EXPECT_NEAR(out.weights[0].at(0), 0.1, 1e-9);
  EXPECT_DOUBLE_EQ(out.weights[0].at(2), 0.5);
  EXPECT_EQ(stats.added, 2u);
  EXPECT_EQ(stats.modified, 0u);
  EXPECT_EQ(out.vocabulary.count(Provenance::added_by_chain), 2u);
}

TEST(Strategy1, ZeroSemanticityIsIdentity) {
  const auto g = chain_graph(0.0, 0.0);
  const auto base = single_feature(2, 0.5);
  const auto out = augment_strategy1(base, semantic_chains(g, base.vocabulary), semanticity_weight(g));
  EXPECT_EQ(out, base);
}

TEST(Strategy1, ExistingEntryIsIncremented) {
  const auto g = chain_graph(0.8, 0.4);
  FeatureSet base = single_feature(2, 0.5);
  base.vocabulary.add(1, Provenance::baseline);
  base.weights[0][1] = 0.25;
  AugmentStats stats;
  const auto out = augment_strategy1(base, semantic_chains(g, base.vocabulary), semanticity_weight(g), &stats);
  EXPECT_NEAR(out.weights[0].at(1), 0.25 + 0.4, 1e-12);
  EXPECT_EQ(out.vocabulary.entries().at(1), Provenance::baseline);
  EXPECT_EQ(stats.modified, 1u);
}

TEST(Strategy2, UnknownPhoneticityEqualsStrategy1) {
  const auto g = chain_graph(0.8, 0.4);
  const auto base = single_feature(2, 0.5);
  const auto sem = semantic_chains(g, base.vocabulary);
  const auto pho = phonetic_chains(g, base.vocabulary, Language::mandarin);
  const auto s1 = augment_strategy1(base, sem, semanticity_weight(g));
  const auto s2 = augment_strategy2(base, sem, pho, semanticity_weight(g), phoneticity_weight(g, Language::mandarin));
  EXPECT_EQ(s1, s2);
}

TEST(Strategy2, PhoneticStepAndSuperposition) {
  auto g = chain_graph(0.8, 0.4);
  g.attributes({1, 2}).phoneticity[0] = 1.0;
  const auto base = single_feature(2, 0.5);
  const auto sem = semantic_chains(g, base.vocabulary);
  const auto pho = phonetic_chains(g, base.vocabulary, Language::mandarin);
  ASSERT_EQ(pho.at(2), (std::vector<NodeId>{2, 1}));
  const auto only = augment_strategy2(base, sem, pho, semanticity_weight(g), phoneticity_weight(g, Language::mandarin), true);
  EXPECT_DOUBLE_EQ(only.weights[0].at(1), 0.5);
  EXPECT_FALSE(only.weights[0].contains(0));
  const auto both = augment_strategy2(base, sem, pho, semanticity_weight(g), phoneticity_weight(g, Language::mandarin));
  EXPECT_NEAR(both.weights[0].at(1), 0.4 + 0.5, 1e-12);
  EXPECT_NEAR(both.weights[0].at(0), 0.1, 1e-12);
}

TEST(Augment, AddedCountMatchesChainMembership) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_dag(rng, 20, 0.2);
    for (const auto& e : g.edge_list()) g.attributes(e).semanticity = (rng() % 3) / 2.0;
    FeatureSet base;
    base.labels = {"a", "b"};
    base.weights.resize(2);
    for (ClassId id = 0; id < 20; ++id) {
      if (rng() % 3 == 0) {
        base.vocabulary.add(id, Provenance::baseline);
        base.weights[rng() % 2][id] = 0.1 + (rng() % 5) / 10.0;
      }
    }
    const auto chains = semantic_chains(g, base.vocabulary);
    AugmentStats stats;
    const auto out = augment_strategy1(base, chains, semanticity_weight(g), &stats);

    std::set<ClassId> reached;
    for (const auto& doc : base.weights) {
      for (const auto& [id, w] : doc) {
        const auto& c = chains.at(id);
        for (std::size_t i = 1; i < c.size(); ++i) {
          if (*g.attributes({c[i], c[i - 1]}).semanticity * w > 0) reached.insert(c[i]);
        }
      }
    }
    std::size_t added = 0, modified = 0;
    for (auto id : reached) (base.vocabulary.contains(id) ? modified : added)++;
    EXPECT_EQ(stats.added, added);
    EXPECT_EQ(stats.modified, modified);
    EXPECT_EQ(out.vocabulary.size(), base.vocabulary.size() + added);
  }
}
