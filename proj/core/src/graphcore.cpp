#include "sino/graphcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include <boost/math/special_functions/zeta.hpp>
#include <boost/math/tools/minima.hpp>

#include "sino/error.hpp"

namespace sino {

InclusionGraph::InclusionGraph(std::vector<NodeId> nodes, std::span<const Edge> edges) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  index_.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i], i);
  preds_.resize(nodes_.size());
  succs_.resize(nodes_.size());
  for (const Edge& e : edges) {
    if (e.sub == e.super) throw InputError("self-loop on node " + std::to_string(e.sub));
    if (!contains(e.sub) || !contains(e.super)) {
      throw InputError("edge " + std::to_string(e.sub) + " -> " + std::to_string(e.super) + " has an unknown endpoint");
    }
    if (edges_.try_emplace(e).second) {
      succs_[index_.at(e.sub)].push_back(e.super);
      preds_[index_.at(e.super)].push_back(e.sub);
    }
  }
  for (auto& v : preds_) std::sort(v.begin(), v.end());
  for (auto& v : succs_) std::sort(v.begin(), v.end());
}

std::size_t InclusionGraph::slot(NodeId node) const {
  auto it = index_.find(node);
  if (it == index_.end()) throw NotFoundError("node " + std::to_string(node) + " not in graph");
  return it->second;
}

const std::vector<NodeId>& InclusionGraph::predecessors(NodeId node) const { return preds_[slot(node)]; }
const std::vector<NodeId>& InclusionGraph::successors(NodeId node) const { return succs_[slot(node)]; }

std::vector<Edge> InclusionGraph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [e, _] : edges_) out.push_back(e);
  return out;
}

const EdgeAttributes& InclusionGraph::attributes(const Edge& e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) {
    throw NotFoundError("edge " + std::to_string(e.sub) + " -> " + std::to_string(e.super) + " not in graph");
  }
  return it->second;
}

EdgeAttributes& InclusionGraph::attributes(const Edge& e) {
  return const_cast<EdgeAttributes&>(static_cast<const InclusionGraph&>(*this).attributes(e));
}

InclusionGraph character_graph(const std::set<Codepoint>& chars, const std::set<CharEdge>& edges) {
  std::vector<NodeId> nodes(chars.begin(), chars.end());
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [s, c] : edges) list.push_back({static_cast<NodeId>(s), static_cast<NodeId>(c)});
  return InclusionGraph(std::move(nodes), list);
}

InclusionGraph lift_to_classes(const std::set<CharEdge>& char_edges, const AllographPartition& classes) {
  std::vector<NodeId> nodes;
  nodes.reserve(classes.size());
  for (const auto& c : classes.classes()) nodes.push_back(c.id);
  std::set<Edge> lifted;
  for (const auto& [s, c] : char_edges) {
    const ClassId a = classes.class_of(s);
    const ClassId b = classes.class_of(c);
    if (a != b) lifted.insert({a, b});
  }
  std::vector<Edge> list(lifted.begin(), lifted.end());
  return InclusionGraph(std::move(nodes), list);
}

InclusionGraph lift_to_classes(const InclusionGraph& char_graph, const AllographPartition& classes) {
  std::set<CharEdge> edges;
  for (const auto& [e, _] : char_graph.edges()) edges.emplace(static_cast<Codepoint>(e.sub), static_cast<Codepoint>(e.super));
  return lift_to_classes(edges, classes);
}

namespace {

[[noreturn]] void throw_cycle(const InclusionGraph& g) {
  // Iterative DFS; a grey successor closes a cycle.
  enum class Color : std::uint8_t { white, grey, black };
  std::unordered_map<NodeId, Color> color;
  for (NodeId n : g.nodes()) color[n] = Color::white;
  for (NodeId root : g.nodes()) {
    if (color[root] != Color::white) continue;
    std::vector<std::pair<NodeId, std::size_t>> stack{{root, 0}};
    color[root] = Color::grey;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      const auto& succ = g.successors(node);
      if (next == succ.size()) {
        color[node] = Color::black;
        stack.pop_back();
        continue;
      }
      const NodeId child = succ[next++];
      if (color[child] == Color::grey) {
        std::vector<NodeId> witness;
        auto it = std::find_if(stack.begin(), stack.end(), [&](const auto& f) { return f.first == child; });
        for (; it != stack.end(); ++it) witness.push_back(it->first);
        std::string text = "cycle detected:";
        for (NodeId n : witness) text += " " + std::to_string(n) + " ->";
        text += " " + std::to_string(child);
        throw CycleError(text, std::move(witness));
      }
      if (color[child] == Color::white) {
        color[child] = Color::grey;
        stack.emplace_back(child, 0);
      }
    }
  }
  throw CycleError("cycle detected", {});
}

}  // namespace

std::vector<NodeId> topological_order(const InclusionGraph& g) {
  std::unordered_map<NodeId, std::size_t> indegree;
  indegree.reserve(g.node_count());
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (NodeId n : g.nodes()) {
    indegree[n] = g.predecessors(n).size();
    if (indegree[n] == 0) ready.push(n);
  }
  std::vector<NodeId> order;
  order.reserve(g.node_count());
  while (!ready.empty()) {
    const NodeId n = ready.top();
    ready.pop();
    order.push_back(n);
    for (NodeId s : g.successors(n)) {
      if (--indegree[s] == 0) ready.push(s);
    }
  }
  if (order.size() != g.node_count()) throw_cycle(g);
  return order;
}

InclusionGraph transitive_reduce(const InclusionGraph& g) {
  const auto order = topological_order(g);
  std::unordered_map<NodeId, std::size_t> position;
  position.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position.emplace(order[i], i);

  // For each node, visit successors in topological order and flood everything
  // reachable from the ones kept so far. A successor already flooded is
  // reachable through a longer path, so its direct edge is redundant.
  std::unordered_map<NodeId, std::uint32_t> stamp;
  stamp.reserve(order.size());
  std::uint32_t epoch = 0;
  std::vector<Edge> kept;
  std::vector<NodeId> stack;
  for (NodeId u : g.nodes()) {
    ++epoch;
    auto succ = g.successors(u);
    std::sort(succ.begin(), succ.end(), [&](NodeId a, NodeId b) { return position[a] < position[b]; });
    for (NodeId v : succ) {
      if (stamp[v] == epoch) continue;
      kept.push_back({u, v});
      stamp[v] = epoch;
      stack.assign(1, v);
      while (!stack.empty()) {
        const NodeId x = stack.back();
        stack.pop_back();
        for (NodeId y : g.successors(x)) {
          if (stamp[y] != epoch) {
            stamp[y] = epoch;
            stack.push_back(y);
          }
        }
      }
    }
  }

  InclusionGraph reduced(g.nodes(), kept);
  for (const Edge& e : kept) reduced.attributes(e) = g.attributes(e);
  reduced.metadata() = g.metadata();
  return reduced;
}

std::vector<std::uint64_t> in_degrees(const InclusionGraph& g) {
  std::vector<std::uint64_t> out;
  out.reserve(g.node_count());
  for (NodeId n : g.nodes()) out.push_back(g.predecessors(n).size());
  return out;
}

std::vector<std::uint64_t> out_degrees(const InclusionGraph& g) {
  std::vector<std::uint64_t> out;
  out.reserve(g.node_count());
  for (NodeId n : g.nodes()) out.push_back(g.successors(n).size());
  return out;
}

DegreeStatistics degree_statistics(const InclusionGraph& g) {
  DegreeStatistics stats;
  for (NodeId n : g.nodes()) {
    const std::size_t in = g.predecessors(n).size();
    const std::size_t out = g.successors(n).size();
    ++stats.in_hist[in];
    ++stats.out_hist[out];
    if (in == 0) stats.sources.push_back(n);
    if (out == 0) stats.leaves.push_back(n);
    stats.max_in = std::max(stats.max_in, in);
    stats.max_out = std::max(stats.max_out, out);
  }
  return stats;
}

namespace {

std::vector<std::uint64_t> positive_samples(std::span<const std::uint64_t> degrees) {
  std::vector<std::uint64_t> xs;
  xs.reserve(degrees.size());
  for (auto d : degrees) {
    if (d > 0) xs.push_back(d);
  }
  if (xs.size() < kMinPowerLawSamples) {
    throw DataError("power-law fit needs at least 10 positive samples, got " + std::to_string(xs.size()));
  }
  return xs;
}

}  // namespace

double power_law_alpha_approx(std::span<const std::uint64_t> degrees) {
  const auto xs = positive_samples(degrees);
  double sum = 0.0;
  for (auto x : xs) sum += std::log(static_cast<double>(x) / 0.5);
  return 1.0 + static_cast<double>(xs.size()) / sum;
}

PowerLawFit fit_power_law(std::span<const std::uint64_t> degrees) {
  const auto xs = positive_samples(degrees);
  PowerLawFit fit;
  fit.samples = xs.size();
  if (std::all_of(xs.begin(), xs.end(), [&](auto x) { return x == xs.front(); })) {
    fit.alpha = std::numeric_limits<double>::infinity();
    fit.degenerate = true;
    fit.diagnostic = "all samples equal; exponent not identifiable";
    return fit;
  }
  double mean_log = 0.0;
  for (auto x : xs) mean_log += std::log(static_cast<double>(x));
  mean_log /= static_cast<double>(xs.size());

  // Negative mean log-likelihood per sample: alpha * mean ln x + ln zeta(alpha).
  auto objective = [mean_log](double alpha) { return alpha * mean_log + std::log(boost::math::zeta(alpha)); };
  constexpr double kLower = 1.0 + 1e-6;
  constexpr double kUpper = 30.0;
  const auto [alpha, value] = boost::math::tools::brent_find_minima(objective, kLower, kUpper, 40);
  (void)value;
  fit.alpha = alpha;
  if (alpha >= kUpper - 1e-3) {
    fit.degenerate = true;
    fit.diagnostic = "exponent at search upper bound";
  }
  return fit;
}

std::vector<NodeId> greedy_chain(const InclusionGraph& g, NodeId start, const EdgeScore& score,
                                 ChainObjective objective) {
  if (!g.contains(start)) throw NotFoundError("node " + std::to_string(start) + " not in graph");
  std::vector<NodeId> chain{start};
  std::set<NodeId> visited{start};
  NodeId current = start;
  while (true) {
    std::optional<NodeId> best;
    double best_score = 0.0;
    for (NodeId z : g.predecessors(current)) {
      if (visited.contains(z)) continue;
      const Edge e{z, current};
      const auto s = score(e, g.attributes(e));
      if (!s) continue;
      const bool better = !best || (objective == ChainObjective::minimize ? *s < best_score : *s > best_score);
      if (better) {
        best = z;
        best_score = *s;
      }
    }
    if (!best) break;
    chain.push_back(*best);
    visited.insert(*best);
    current = *best;
  }
  return chain;
}

}  // namespace sino
