#include "sino/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "sino/error.hpp"

namespace sino {

namespace {

double dot(const std::vector<double>& w, const SparseRow& row) {
  double s = 0.0;
  for (std::size_t k = 0; k < row.index.size(); ++k) s += w[row.index[k]] * row.value[k];
  return s;
}

double squared_norm(const SparseRow& row) {
  double s = 0.0;
  for (double v : row.value) s += v * v;
  return s;
}

struct BinaryResult {
  std::vector<double> weights;
  double bias = 0.0;
  std::size_t epochs = 0;
  bool converged = false;
};

// Pegasos with the scaled representation w = a * v and a constant bias
// feature of value 1 stored after the regular weights.
BinaryResult train_binary(const Dataset& data, std::span<const std::size_t> rows, std::size_t positive,
                          const TrainOptions& options, std::uint64_t seed) {
  const std::size_t n = rows.size();
  const std::size_t dim = data.dimension;
  const double lambda = 1.0 / (options.C * static_cast<double>(n));
  const double radius = 1.0 / std::sqrt(lambda);

  std::vector<double> v(dim + 1, 0.0);
  double a = 1.0;
  double v_norm_sq = 0.0;

  auto margin_of = [&](std::size_t r) {
    const auto& row = data.rows[r];
    const double y = data.labels[r] == positive ? 1.0 : -1.0;
    return y * a * (dot(v, row) + v[dim]);
  };
  auto objective = [&]() {
    double loss = 0.0;
    for (std::size_t r : rows) loss += std::max(0.0, 1.0 - margin_of(r));
    return 0.5 * lambda * a * a * v_norm_sq + loss / static_cast<double>(n);
  };
  auto fold_scale = [&]() {
    for (double& x : v) x *= a;
    v_norm_sq *= a * a;
    a = 1.0;
  };

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(rows.begin(), rows.end());
  BinaryResult result;
  double previous = std::numeric_limits<double>::infinity();
  std::uint64_t t = 0;
  for (std::size_t epoch = 1; epoch <= options.max_epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t r : order) {
      ++t;
      const double eta = 1.0 / (lambda * static_cast<double>(t));
      const double margin = margin_of(r);
      if (t == 1) {
        std::fill(v.begin(), v.end(), 0.0);
        v_norm_sq = 0.0;
        a = 1.0;
      } else {
        a *= 1.0 - 1.0 / static_cast<double>(t);
      }
      if (margin < 1.0) {
        const auto& row = data.rows[r];
        const double y = data.labels[r] == positive ? 1.0 : -1.0;
        const double c = eta * y / a;
        double vx = v[dim];
        for (std::size_t k = 0; k < row.index.size(); ++k) vx += v[row.index[k]] * row.value[k];
        for (std::size_t k = 0; k < row.index.size(); ++k) v[row.index[k]] += c * row.value[k];
        v[dim] += c;
        v_norm_sq += 2.0 * c * vx + c * c * (squared_norm(row) + 1.0);
      }
      const double norm = a * std::sqrt(std::max(v_norm_sq, 0.0));
      if (norm > radius) a *= radius / norm;
      if (a < 1e-9) fold_scale();
    }
    result.epochs = epoch;
    const double current = objective();
    if (std::abs(previous - current) <= options.tolerance * std::max(std::abs(current), 1e-12)) {
      result.converged = true;
      break;
    }
    previous = current;
  }
  fold_scale();
  result.bias = v[dim];
  v.pop_back();
  result.weights = std::move(v);
  return result;
}

void check_categories(const Dataset& data, std::span<const std::size_t> rows) {
  if (data.categories.size() < 2) throw DataError("train: at least two categories required");
  std::vector<std::size_t> counts(data.categories.size(), 0);
  for (std::size_t r : rows) ++counts[data.labels[r]];
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] == 0) throw DataError("train: category '" + data.categories[c] + "' has no examples");
  }
}

LinearModel train_rows(const Dataset& data, std::span<const std::size_t> rows, const TrainOptions& options) {
  if (rows.empty()) throw DataError("train: no examples");
  if (!(options.C > 0.0)) throw InputError("train: C must be positive");
  LinearModel model;
  model.categories = data.categories;
  model.dimension = data.dimension;
  model.C = options.C;
  model.seed = options.seed;
  model.converged = true;
  for (std::size_t c = 0; c < data.categories.size(); ++c) {
    auto binary = train_binary(data, rows, c, options, options.seed + 7919 * c);
    model.weights.push_back(std::move(binary.weights));
    model.bias.push_back(binary.bias);
    model.epochs = std::max(model.epochs, binary.epochs);
    model.converged = model.converged && binary.converged;
  }
  return model;
}

}  // namespace

Dataset make_dataset(std::span<const SparseVector> vectors, std::span<const std::string> labels) {
  if (vectors.size() != labels.size()) throw InputError("make_dataset: vectors and labels differ in length");
  std::map<ClassId, std::uint32_t> feature_index;
  for (const auto& v : vectors) {
    for (const auto& [id, _] : v) feature_index.emplace(id, 0);
  }
  std::uint32_t next = 0;
  for (auto& [_, idx] : feature_index) idx = next++;

  Dataset data;
  data.dimension = feature_index.size();
  std::map<std::string, std::size_t> category_index;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    auto [it, inserted] = category_index.try_emplace(labels[i], data.categories.size());
    if (inserted) data.categories.push_back(labels[i]);
    data.labels.push_back(it->second);
    SparseRow row;
    for (const auto& [id, w] : vectors[i]) {
      row.index.push_back(feature_index.at(id));
      row.value.push_back(w);
    }
    data.rows.push_back(std::move(row));
  }
  return data;
}

double LinearModel::score(std::size_t category, const SparseRow& row) const {
  return dot(weights[category], row) + bias[category];
}

LinearModel train(const Dataset& data, const TrainOptions& options) {
  std::vector<std::size_t> rows(data.size());
  std::iota(rows.begin(), rows.end(), 0);
  return train(data, rows, options);
}

LinearModel train(const Dataset& data, std::span<const std::size_t> rows, const TrainOptions& options) {
  check_categories(data, rows);
  return train_rows(data, rows, options);
}

std::size_t predict(const LinearModel& model, const SparseRow& row) {
  for (auto idx : row.index) {
    if (idx >= model.dimension) {
      throw InputError("predict: feature index " + std::to_string(idx) + " outside model dimension " +
                       std::to_string(model.dimension));
    }
  }
  std::size_t best = 0;
  double best_score = model.score(0, row);
  for (std::size_t c = 1; c < model.categories.size(); ++c) {
    const double s = model.score(c, row);
    if (s > best_score) {
      best = c;
      best_score = s;
    }
  }
  return best;
}

std::size_t support_vector_count(const LinearModel& model, const Dataset& data, std::span<const std::size_t> rows,
                                 double slack) {
  std::size_t count = 0;
  for (std::size_t r : rows) {
    for (std::size_t c = 0; c < model.categories.size(); ++c) {
      const double y = data.labels[r] == c ? 1.0 : -1.0;
      if (y * model.score(c, data.rows[r]) <= 1.0 + slack) {
        ++count;
        break;
      }
    }
  }
  return count;
}

std::vector<std::vector<std::size_t>> stratified_folds(const Dataset& data, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw InputError("cross-validation needs k >= 2");
  if (k > data.size()) throw DataError("cross-validation: k exceeds the number of examples");
  std::vector<std::vector<std::size_t>> folds(k);
  std::mt19937_64 rng(seed);
  if (k == data.size()) {
    std::vector<std::size_t> all(data.size());
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    for (std::size_t i = 0; i < all.size(); ++i) folds[i].push_back(all[i]);
    return folds;
  }
  std::vector<std::vector<std::size_t>> by_category(data.categories.size());
  for (std::size_t i = 0; i < data.size(); ++i) by_category[data.labels[i]].push_back(i);
  std::size_t next = 0;
  for (std::size_t c = 0; c < by_category.size(); ++c) {
    auto& members = by_category[c];
    if (members.size() < k) {
      throw DataError("cross-validation: category '" + data.categories[c] + "' has " +
                      std::to_string(members.size()) + " examples, fewer than k = " + std::to_string(k));
    }
    std::shuffle(members.begin(), members.end(), rng);
    for (std::size_t i : members) {
      folds[next].push_back(i);
      next = (next + 1) % k;
    }
  }
  for (auto& f : folds) std::sort(f.begin(), f.end());
  return folds;
}

EvalReport cross_validate(const Dataset& data, std::size_t k, const TrainOptions& options) {
  if (data.categories.size() < 2) throw DataError("cross-validation: at least two categories required");
  const auto folds = stratified_folds(data, k, options.seed);

  struct FoldResult {
    std::size_t correct = 0;
    std::size_t total = 0;
    std::size_t support = 0;
  };
  auto run_fold = [&](std::size_t f) {
    std::vector<std::size_t> train_rows_idx;
    for (std::size_t g = 0; g < folds.size(); ++g) {
      if (g != f) train_rows_idx.insert(train_rows_idx.end(), folds[g].begin(), folds[g].end());
    }
    std::sort(train_rows_idx.begin(), train_rows_idx.end());
    TrainOptions fold_options = options;
    fold_options.seed = options.seed + 104729 * (f + 1);
    const auto model = train_rows(data, train_rows_idx, fold_options);
    FoldResult result;
    for (std::size_t r : folds[f]) {
      if (predict(model, data.rows[r]) == data.labels[r]) ++result.correct;
      ++result.total;
    }
    result.support = support_vector_count(model, data, train_rows_idx, options.support_slack);
    return result;
  };

  std::vector<FoldResult> results(folds.size());
  std::atomic<std::size_t> next_fold{0};
  auto worker = [&]() {
    for (std::size_t f = next_fold++; f < folds.size(); f = next_fold++) results[f] = run_fold(f);
  };
  const std::size_t workers =
      std::min<std::size_t>(folds.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> pending;
  for (std::size_t w = 0; w < workers; ++w) pending.push_back(std::async(std::launch::async, worker));
  for (auto& p : pending) p.get();

  EvalReport report;
  for (const auto& r : results) {
    report.fold_accuracies.push_back(static_cast<double>(r.correct) / static_cast<double>(r.total));
    report.correct += r.correct;
    report.total += r.total;
    report.support_vector_count += r.support;
  }
  report.mean_accuracy = static_cast<double>(report.correct) / static_cast<double>(report.total);
  return report;
}

}  // namespace sino
