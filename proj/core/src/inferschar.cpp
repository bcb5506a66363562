#include "sino/inferschar.hpp"

#include <set>
#include <vector>

#include "sino/error.hpp"

namespace sino {

namespace {

struct Walker {
  const InclusionGraph& g;
  const ClassAnnotations& annotations;
  std::size_t max_depth;
  Propagation direction;
  SynsetVector raw;
  std::set<NodeId> on_path;

  void walk(NodeId node, std::size_t depth, double product) {
    const auto& next = direction == Propagation::from_subcharacters ? g.predecessors(node) : g.successors(node);
    for (NodeId n : next) {
      if (on_path.contains(n)) continue;
      const Edge e = direction == Propagation::from_subcharacters ? Edge{n, node} : Edge{node, n};
      const double s = g.attributes(e).semanticity.value_or(0.0);
      const double p = product * s;
      if (auto it = annotations.find(n); it != annotations.end() && !it->second.empty()) {
        for (const auto& synset : it->second) raw[synset] += p / static_cast<double>(depth + 1);
        continue;
      }
      if (depth + 1 < max_depth) {
        on_path.insert(n);
        walk(n, depth + 1, p);
        on_path.erase(n);
      }
    }
  }
};

SynsetVector normalized(SynsetVector v) {
  std::erase_if(v, [](const auto& kv) { return !(kv.second > 0.0); });
  double total = 0.0;
  for (const auto& [_, w] : v) total += w;
  if (!(total > 0.0)) return {};
  for (auto& [_, w] : v) w /= total;
  return v;
}

}  // namespace

SynsetVector semantic_approximation(const InclusionGraph& g, const ClassAnnotations& annotations, NodeId u,
                                    std::size_t max_depth, Propagation direction) {
  if (!g.contains(u)) throw NotFoundError("semantic_approximation: class " + std::to_string(u) + " is not in the graph");
  if (auto it = annotations.find(u); it != annotations.end() && !it->second.empty()) {
    SynsetVector own;
    for (const auto& synset : it->second) own[synset] = 1.0;
    return normalized(std::move(own));
  }
  Walker walker{g, annotations, max_depth, direction, {}, {u}};
  if (max_depth > 0) walker.walk(u, 0, 1.0);
  return normalized(std::move(walker.raw));
}

}  // namespace sino
