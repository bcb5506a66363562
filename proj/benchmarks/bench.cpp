#include <benchmark/benchmark.h>

#include <random>

#include "sino/classify.hpp"
#include "sino/formats.hpp"
#include "sino/graphcore.hpp"
#include "sino/strokesig.hpp"

using namespace sino;

namespace {

InclusionGraph layered_dag(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(density);
  std::vector<NodeId> nodes(n);
  for (std::size_t i = 0; i < n; ++i) nodes[i] = static_cast<NodeId>(i);
  std::vector<Edge> edges;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b)
      if (keep(rng)) edges.push_back({a, b});
  return InclusionGraph(nodes, edges);
}

void BM_TransitiveReduce(benchmark::State& state) {
  const auto g = layered_dag(static_cast<std::size_t>(state.range(0)), 0.05, 1);
  for (auto _ : state) benchmark::DoNotOptimize(transitive_reduce(g));
  state.counters["edges"] = static_cast<double>(g.edge_count());
}
BENCHMARK(BM_TransitiveReduce)->Arg(100)->Arg(400)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_DetectInclusions(benchmark::State& state) {
  const auto strokes = io::read_file(std::string(SINOGRAPH_DATA_DIR) + "/strokes.tsv",
                                     [](std::istream& in, const std::string& src) { return io::read_strokes(in, src); });
  std::map<Codepoint, CharSignature> sigs;
  for (const auto& [cp, list] : strokes) sigs.emplace(cp, char_signature(list));
  for (auto _ : state) benchmark::DoNotOptimize(detect_inclusions(sigs));
  state.counters["characters"] = static_cast<double>(sigs.size());
}
BENCHMARK(BM_DetectInclusions)->Unit(benchmark::kMillisecond);

void BM_Train(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<SparseVector> vectors;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    SparseVector v;
    for (int k = 0; k < 30; ++k) v[static_cast<ClassId>(rng() % 2000)] += 0.1;
    v[static_cast<ClassId>(2000 + i % 5)] = 0.5;
    vectors.push_back(v);
    labels.push_back("c" + std::to_string(i % 5));
  }
  const auto data = make_dataset(vectors, labels);
  for (auto _ : state) benchmark::DoNotOptimize(train(data));
}
BENCHMARK(BM_Train)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
