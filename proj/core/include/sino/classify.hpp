#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sino/features.hpp"

namespace sino {

struct SparseRow {
  std::vector<std::uint32_t> index;  // ascending, < dimension
  std::vector<double> value;
};

struct Dataset {
  std::vector<SparseRow> rows;
  std::vector<std::size_t> labels;  // indices into categories
  std::vector<std::string> categories;
  std::size_t dimension = 0;

  std::size_t size() const noexcept { return rows.size(); }
};

// Maps class ids onto dense feature indices (ascending id order) and labels
// onto categories (order of first appearance).
Dataset make_dataset(std::span<const SparseVector> vectors, std::span<const std::string> labels);

struct TrainOptions {
  double C = 1.0;
  std::uint64_t seed = 1;
  std::size_t max_epochs = 100;
  // Stop when the relative change of the primal objective between epochs falls below this.
  double tolerance = 1e-5;
  // Margin threshold y * f(x) <= 1 + slack counted as an active (support) example.
  double support_slack = 1e-6;
};

// One-vs-rest linear soft-margin classifiers; the bias is a constant feature.
struct LinearModel {
  std::vector<std::vector<double>> weights;  // per category, size dimension
  std::vector<double> bias;
  std::vector<std::string> categories;
  std::size_t dimension = 0;
  double C = 1.0;
  std::uint64_t seed = 1;
  std::size_t epochs = 0;  // max over the binary problems
  bool converged = false;  // every binary problem met the tolerance

  double score(std::size_t category, const SparseRow& row) const;
};

// Minimises 1/2 |w|^2 + C * sum hinge with stochastic subgradient steps
// (step 1/(lambda t), lambda = 1/(C n)), one pass per epoch in a seeded order.
// Throws DataError with fewer than two categories or an empty category.
LinearModel train(const Dataset& data, const TrainOptions& options = {});
LinearModel train(const Dataset& data, std::span<const std::size_t> rows, const TrainOptions& options);

// Argmax of the category scores, ties to the first category. Throws
// InputError when the row has an index outside the model dimension.
std::size_t predict(const LinearModel& model, const SparseRow& row);

// Rows whose margin is active for at least one binary problem.
std::size_t support_vector_count(const LinearModel& model, const Dataset& data, std::span<const std::size_t> rows,
                                 double slack = 1e-6);

// k folds; each category is shuffled with `seed` and dealt round-robin, so
// per-fold category counts differ by at most one. k equal to the dataset size
// gives leave-one-out folds without stratification.
std::vector<std::vector<std::size_t>> stratified_folds(const Dataset& data, std::size_t k, std::uint64_t seed);

struct EvalReport {
  double mean_accuracy = 0.0;  // micro-averaged
  std::vector<double> fold_accuracies;
  std::size_t support_vector_count = 0;  // summed over folds
  std::size_t correct = 0;
  std::size_t total = 0;
};

EvalReport cross_validate(const Dataset& data, std::size_t k = 10, const TrainOptions& options = {});

}  // namespace sino
