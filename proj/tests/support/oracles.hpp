#pragma once

// Brute-force reference implementations used by the unit and acceptance tests.
// They favour obviousness over speed and share no code with the library.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sino/charstore.hpp"
#include "sino/graphcore.hpp"
#include "sino/semantics.hpp"
#include "sino/strokesig.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

// Random DAG on nodes 0..n-1: each pair i < j of a random permutation gets an
// edge with probability `density`.
sino::InclusionGraph random_dag(std::mt19937_64& rng, std::size_t n, double density);

// Floyd-Warshall closure over the graph's node ids (nodes must be 0..n-1).
Matrix reachability(const sino::InclusionGraph& g);

// Keeps (a, c) iff no b with a ->+ b ->+ c.
std::set<sino::Edge> transitive_reduction(const sino::InclusionGraph& g);

// Pearson correlation of average ranks, ranks counted pairwise.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

// Every (s, c, offset) checked stroke by stroke.
std::set<sino::CharEdge> inclusions(const std::map<sino::Codepoint, sino::CharSignature>& sigs, double tolerance);

// Explicit tuple enumeration: (relation index, w1, w2, s, c).
std::uint64_t count_f1(const sino::AllographClass& sub, const sino::AllographClass& super,
                       const sino::SynsetStore& store);
// (relation index 1, relation index 2, w1, w3, s, c) over two-step paths.
std::uint64_t count_f2(const sino::AllographClass& sub, const sino::AllographClass& super,
                       const sino::SynsetStore& store);

// At each step look at every incoming edge, keep the eligible best one.
std::vector<sino::NodeId> chain(const sino::InclusionGraph& g, sino::NodeId start,
                                const std::function<std::optional<double>(const sino::EdgeAttributes&)>& score,
                                bool maximize);

// Enumerates every simple backward path of <= max_depth edges as an explicit
// node list and keeps those ending at their first annotated node.
std::map<std::string, double> semantic_approximation(const sino::InclusionGraph& g,
                                                     const sino::ClassAnnotations& annotations, sino::NodeId u,
                                                     std::size_t max_depth);

// Discrete power law p(x) ~ x^-a on x >= 1 (rejection sampler).
std::uint64_t zeta_sample(std::mt19937_64& rng, double a);

}  // namespace oracle
