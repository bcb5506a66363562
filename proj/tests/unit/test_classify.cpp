#include <gtest/gtest.h>

#include <random>

#include "sino/classify.hpp"
#include "sino/error.hpp"

using namespace sino;

namespace {

// Each category owns a block of features headed by an anchor that every one of
// its documents carries; a shared noise block sits on top.
Dataset separable(std::size_t per_class, std::size_t classes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SparseVector> vectors;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < per_class * classes; ++i) {
    const std::size_t c = i % classes;
    SparseVector v;
    v[static_cast<ClassId>(c * 10)] = 1.0;
    v[static_cast<ClassId>(c * 10 + 1 + rng() % 9)] = 0.5;
    v[static_cast<ClassId>(100 + rng() % 20)] = 0.5;
    vectors.push_back(v);
    labels.push_back("c" + std::to_string(c));
  }
  return make_dataset(vectors, labels);
}

}  // namespace

TEST(Dataset, Mapping) {
  std::vector<SparseVector> v{{{5, 1.0}}, {{9, 2.0}, {5, 0.5}}};
  std::vector<std::string> l{"b", "a"};
  const auto d = make_dataset(v, l);
  EXPECT_EQ(d.dimension, 2u);
  EXPECT_EQ(d.categories, (std::vector<std::string>{"b", "a"}));
  EXPECT_EQ(d.rows[1].index, (std::vector<std::uint32_t>{0, 1}));
  EXPECT_THROW(make_dataset(v, std::span(l).first(1)), InputError);
}

TEST(Train, SeparableTrainingAccuracy) {
  const auto d = separable(20, 3, 1);
  const auto m = train(d);
  for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(predict(m, d.rows[i]), d.labels[i]);
}

TEST(Train, ContradictoryLabels) {
  std::vector<SparseVector> v{{{0, 1.0}}, {{0, 1.0}}, {{1, 1.0}}, {{1, 1.0}}};
  std::vector<std::string> l{"a", "b", "a", "b"};
  const auto d = make_dataset(v, l);
  const auto m = train(d);
  std::size_t correct = 0;
  for (std::size_t i = 0; i < d.size(); ++i) correct += predict(m, d.rows[i]) == d.labels[i];
  EXPECT_LT(correct, d.size());
}

TEST(Train, SmallCShrinksWeights) {
  const auto d = separable(20, 2, 2);
  TrainOptions tiny;
  tiny.C = 1e-6;
  const auto m = train(d, tiny);
  double norm = 0;
  for (const auto& w : m.weights)
    for (double x : w) norm += x * x;
  EXPECT_LT(std::sqrt(norm), 1e-2);
}

TEST(Train, Errors) {
  std::vector<SparseVector> v{{{0, 1.0}}};
  std::vector<std::string> l{"a"};
  EXPECT_THROW(train(make_dataset(v, l)), DataError);
}

TEST(Predict, TiesAndZeroVector) {
  LinearModel m;
  m.categories = {"a", "b", "c"};
  m.dimension = 2;
  m.weights = {{0, 0}, {0, 0}, {0, 0}};
  m.bias = {0.0, 0.0, 0.0};
  EXPECT_EQ(predict(m, SparseRow{}), 0u);
  m.bias = {0.0, 0.3, 0.3};
  EXPECT_EQ(predict(m, SparseRow{}), 1u);
  EXPECT_THROW(predict(m, SparseRow{{5}, {1.0}}), InputError);
}

TEST(Folds, Stratified) {
  const auto d = separable(13, 3, 3);
  const auto folds = stratified_folds(d, 5, 9);
  std::vector<std::size_t> seen(d.size(), 0);
  for (const auto& f : folds) {
    std::vector<std::size_t> per(3, 0);
    for (auto i : f) {
      ++seen[i];
      ++per[d.labels[i]];
    }
    for (auto c : per) EXPECT_TRUE(c == 2 || c == 3);
  }
  for (auto s : seen) EXPECT_EQ(s, 1u);
  EXPECT_EQ(stratified_folds(d, 5, 9), folds);
  EXPECT_THROW(stratified_folds(d, 14, 9), DataError);
  EXPECT_THROW(stratified_folds(d, 1, 9), InputError);
}

TEST(CrossValidate, SeparableAndLeaveOneOut) {
  const auto d = separable(10, 3, 4);
  const auto r = cross_validate(d, 10);
  EXPECT_DOUBLE_EQ(r.mean_accuracy, 1.0);
  EXPECT_EQ(r.fold_accuracies.size(), 10u);
  EXPECT_GT(r.support_vector_count, 0u);
  const auto loo = cross_validate(d, d.size());
  EXPECT_EQ(loo.total, d.size());
  EXPECT_EQ(loo.fold_accuracies.size(), d.size());
  EXPECT_EQ(cross_validate(d, 10).correct, r.correct);
}
