#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "sino/graphcore.hpp"
#include "sino/semantics.hpp"

namespace sino {

// synset id -> weight; unit sum or empty
using SynsetVector = std::map<std::string, double>;

enum class Propagation {
  from_subcharacters,     // walk incoming edges (toward components)
  from_including_chars,   // walk outgoing edges (toward the leaves)
};

// Simple paths from u of at most max_depth edges, each cut at its first
// annotated node. That node adds (product of edge S) / (path length) to each
// of its synsets. Edges without S count as zero. An annotated u returns its
// own synsets with equal weight. Throws NotFoundError if u is not in g.
SynsetVector semantic_approximation(const InclusionGraph& g, const ClassAnnotations& annotations, NodeId u,
                                    std::size_t max_depth = 4,
                                    Propagation direction = Propagation::from_subcharacters);

}  // namespace sino
