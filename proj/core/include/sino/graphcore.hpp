#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sino/charstore.hpp"
#include "sino/strokesig.hpp"
#include "sino/types.hpp"

namespace sino {

struct Edge {
  NodeId sub = 0;    // subcharacter
  NodeId super = 0;  // including character

  auto operator<=>(const Edge&) const = default;
};

// Weights attached to an inclusion. Unset optionals mean "not computed" or
// UNKNOWN (for instance when one side has no reading in a language).
struct EdgeAttributes {
  std::array<std::optional<double>, kLanguageCount> distance;     // d_min per language
  std::array<std::optional<double>, kLanguageCount> phoneticity;  // phi per language
  std::uint64_t f1 = 0;
  std::uint64_t f2 = 0;
  std::optional<double> radical_agreement;
  std::optional<double> raw_semanticity;
  std::optional<double> semanticity;

  bool operator==(const EdgeAttributes&) const = default;
};

// Directed acyclic inclusion graph. Topology is fixed at construction; edge
// attributes and metadata may be filled in afterwards.
class InclusionGraph {
 public:
  InclusionGraph() = default;
  // Duplicate nodes and edges collapse. Throws InputError on self-loops or
  // edges with an endpoint outside `nodes`. Acyclicity is not checked here.
  InclusionGraph(std::vector<NodeId> nodes, std::span<const Edge> edges);

  const std::vector<NodeId>& nodes() const noexcept { return nodes_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool contains(NodeId node) const { return index_.contains(node); }
  bool has_edge(const Edge& e) const { return edges_.contains(e); }

  // Incoming neighbours (subcharacters), ascending.
  const std::vector<NodeId>& predecessors(NodeId node) const;
  // Outgoing neighbours (including characters), ascending.
  const std::vector<NodeId>& successors(NodeId node) const;

  const std::map<Edge, EdgeAttributes>& edges() const noexcept { return edges_; }
  std::vector<Edge> edge_list() const;
  const EdgeAttributes& attributes(const Edge& e) const;
  EdgeAttributes& attributes(const Edge& e);

  std::map<std::string, std::string>& metadata() noexcept { return metadata_; }
  const std::map<std::string, std::string>& metadata() const noexcept { return metadata_; }

  bool operator==(const InclusionGraph& other) const {
    return nodes_ == other.nodes_ && edges_ == other.edges_ && metadata_ == other.metadata_;
  }

 private:
  std::size_t slot(NodeId node) const;

  std::vector<NodeId> nodes_;
  std::unordered_map<NodeId, std::size_t> index_;
  std::vector<std::vector<NodeId>> preds_;
  std::vector<std::vector<NodeId>> succs_;
  std::map<Edge, EdgeAttributes> edges_;
  std::map<std::string, std::string> metadata_;
};

// Character-level graph over the given codepoints.
InclusionGraph character_graph(const std::set<Codepoint>& chars, const std::set<CharEdge>& edges);

// Class edge c1 -> c2 iff some member pair carries a character edge. Edges
// inside one class are dropped. Every class becomes a node.
InclusionGraph lift_to_classes(const std::set<CharEdge>& char_edges, const AllographPartition& classes);
InclusionGraph lift_to_classes(const InclusionGraph& char_graph, const AllographPartition& classes);

// Nodes in a topological order (ties by ascending id). Throws CycleError.
std::vector<NodeId> topological_order(const InclusionGraph& g);

// Removes every edge (a, c) that is implied by a longer path a -> ... -> c.
// Node set and attributes of surviving edges are kept. Throws CycleError.
InclusionGraph transitive_reduce(const InclusionGraph& g);

struct DegreeStatistics {
  std::map<std::size_t, std::size_t> in_hist;   // degree -> node count
  std::map<std::size_t, std::size_t> out_hist;
  std::vector<NodeId> sources;  // in-degree 0
  std::vector<NodeId> leaves;   // out-degree 0
  std::size_t max_in = 0;
  std::size_t max_out = 0;
};

DegreeStatistics degree_statistics(const InclusionGraph& g);
std::vector<std::uint64_t> in_degrees(const InclusionGraph& g);
std::vector<std::uint64_t> out_degrees(const InclusionGraph& g);

inline constexpr std::size_t kMinPowerLawSamples = 10;

struct PowerLawFit {
  double alpha = 0.0;  // +infinity when degenerate
  std::size_t samples = 0;
  bool degenerate = false;
  std::string diagnostic;
};

// Discrete maximum-likelihood exponent of p(x) ~ x^-alpha / zeta(alpha) on
// x >= 1. Zero degrees are excluded; fewer than ten positive samples throws
// DataError. All-equal samples give the degenerate +infinity sentinel.
PowerLawFit fit_power_law(std::span<const std::uint64_t> degrees);

// 1 + n / sum ln(x / (x_min - 1/2)) with x_min = 1; biased there.
double power_law_alpha_approx(std::span<const std::uint64_t> degrees);

enum class ChainObjective { minimize, maximize };

// Score of an incoming edge; std::nullopt marks the edge ineligible.
using EdgeScore = std::function<std::optional<double>(const Edge&, const EdgeAttributes&)>;

// Greedy descent along incoming edges: from `start`, repeatedly step to the
// eligible subcharacter with the best score, ties to the lowest id, until no
// eligible incoming edge remains. Never revisits a node.
std::vector<NodeId> greedy_chain(const InclusionGraph& g, NodeId start, const EdgeScore& score,
                                 ChainObjective objective);

}  // namespace sino
