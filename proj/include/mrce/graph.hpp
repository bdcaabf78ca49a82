#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "mrce/ratio.hpp"

namespace mrce {

using Vertex = std::int32_t;

/// Sorted vertex indices without duplicates.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Simple, undirected, connected graph with a distinguished root.
class RootedGraph {
 public:
  /// Validates simplicity, index ranges and connectivity; throws InputError.
  RootedGraph(std::size_t vertex_count, std::span<const Edge> edges,
              Vertex root);

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  Vertex root() const noexcept { return root_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  std::size_t max_degree() const noexcept { return max_degree_; }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < adjacency_.size();
  }

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  std::size_t max_degree_ = 0;
  Vertex root_ = 0;
};

/// A feasible rooted expansion with its exact ratio |N[S]| / |S|.
struct Solution {
  VertexSet set;
  std::size_t closed_nbhd_size = 0;
  Ratio ratio;

  std::size_t size() const noexcept { return set.size(); }
};

/// Strict preference: larger ratio, then smaller set, then the
/// lexicographically smaller vertex list.
bool better_than(const Solution& a, const Solution& b);

/// Sorts and checks range and uniqueness; throws InputError.
VertexSet normalize_set(const RootedGraph& g, std::span<const Vertex> s);

/// N[S] = S together with every vertex adjacent to S.
VertexSet closed_neighborhood(const RootedGraph& g, std::span<const Vertex> s);
std::size_t closed_neighborhood_size(const RootedGraph& g,
                                     std::span<const Vertex> s);

/// True iff the root is in s and s induces a connected subgraph.
bool is_connected_containing_root(const RootedGraph& g,
                                  std::span<const Vertex> s);

/// Exact ratio of a feasible set; throws FeasibilityError naming the
/// violated condition.
Solution evaluate(const RootedGraph& g, std::span<const Vertex> s);

/// (Δ + 1) / 1, an upper bound on every rooted expansion ratio.
Ratio max_degree_plus_one_bound(const RootedGraph& g);

/// Visits every connected superset of `seed` with at most `max_size`
/// vertices exactly once, growing from the seed by frontier vertices and
/// excluding already-branched siblings. Returning false from the visitor
/// stops the walk. Visit order is deterministic but not lexicographic.
void for_each_connected_superset(
    const RootedGraph& g, std::span<const Vertex> seed, std::size_t max_size,
    const std::function<bool(const VertexSet&)>& visit);

/// All connected supersets of `seed` of size at most `max_size`, sorted
/// lexicographically by their vertex lists.
std::vector<VertexSet> enumerate_connected_supersets(
    const RootedGraph& g, std::span<const Vertex> seed, std::size_t max_size);

}  // namespace mrce
