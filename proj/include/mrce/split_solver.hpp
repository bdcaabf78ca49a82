#pragma once

#include <span>
#include <variant>

#include "mrce/graph.hpp"

namespace mrce {

/// Clique / independent-set partition of a split graph with a maximum clique.
struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
};

/// Why a graph is not split: two clique candidates that are not adjacent, or
/// two independent candidates that are.
struct NonSplitWitness {
  Vertex u = 0;
  Vertex v = 0;
  bool adjacent = false;
};

using SplitRecognition = std::variant<SplitPartition, NonSplitWitness>;

/// Degree-sequence recognition: the m highest-degree vertices, m the largest
/// i with d_i >= i - 1, form a maximum clique iff the graph is split.
SplitRecognition recognize_and_partition(const RootedGraph& g);

/// Replaces every non-root independent vertex of a feasible set by its
/// smallest clique neighbour. The result has no more vertices and dominates
/// a superset of N[s].
VertexSet lift_to_clique(const RootedGraph& g, const SplitPartition& p,
                         std::span<const Vertex> s);

/// Best connected root set with at most k + 2 vertices; a k/(k+2)
/// approximation on split graphs. Throws InputError for k < 1 and
/// IncompatibleInput when g is not split.
Solution approximate_split(const RootedGraph& g, int k);

}  // namespace mrce
