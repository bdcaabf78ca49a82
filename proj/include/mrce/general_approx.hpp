#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mrce/graph.hpp"

namespace mrce {

/// Per-vertex nonnegative profit.
using ProfitMap = std::vector<std::int64_t>;

/// Copy of g with n^2 extra leaves hung off the root. Original vertices keep
/// their indices; the leaves are n .. n + n^2 - 1.
RootedGraph augment_with_leaves(const RootedGraph& g);

struct DominatingSet {
  std::vector<Vertex> picks;  // in the order the greedy chose them
  ProfitMap profit;           // newly dominated count at pick time, else 0
};

/// Greedy dominating set: repeatedly pick the vertex that dominates the most
/// undominated vertices (ties to the smaller index).
DominatingSet greedy_dominating_set(const RootedGraph& g);

/// A tree in g with unit edge costs.
struct SteinerTree {
  VertexSet vertices;
  std::vector<Edge> edges;
  bool contains_root = false;
  std::int64_t profit = 0;

  std::size_t cost() const noexcept { return edges.size(); }
};

/// Rooted quota Steiner tree. Runs rooted moat growing with prizes
/// lambda * p(v), bisects lambda until the pruned tree crosses the quota,
/// and returns the cheapest quota-meeting tree seen after leaf trimming (or
/// a greedy path completion, whichever is cheaper). nullopt when the total
/// profit is below the quota.
std::optional<SteinerTree> rqst_2apx(const RootedGraph& g,
                                     std::span<const std::int64_t> profit,
                                     std::int64_t quota);

/// Minimum-cost rooted tree meeting the quota, by enumeration of connected
/// root sets. Throws CapacityError above `vertex_cap` vertices.
std::optional<SteinerTree> exact_rqst_oracle(const RootedGraph& g,
                                             std::span<const std::int64_t> profit,
                                             std::int64_t quota,
                                             std::size_t vertex_cap = 16);

/// floor(q * 0.632120558), a quota strictly below (1 - 1/e) q for q >= 1.
std::int64_t quota_for_guess(std::int64_t guess);

/// Greedy-dominating-set profits of the leaf-augmented graph, restricted to
/// the original vertices. The root's share of the extra leaves is removed so
/// that the profits sum to n and never exceed the domination they stand for.
ProfitMap domination_profits(const RootedGraph& g);

struct GuessOutcome {
  std::int64_t guess = 0;
  std::int64_t quota = 0;
  std::optional<SteinerTree> tree;
};

/// One quota Steiner tree per guess q = 1..n of OPT_i. A guess is shared by
/// every size i <= q, so the (i, q) sweep collapses to this list.
std::vector<GuessOutcome> greedy_mrce_trace(const RootedGraph& g);

/// Best rooted expansion among the trees of greedy_mrce_trace, compared by
/// exact ratio in g.
Solution greedy_mrce(const RootedGraph& g);

}  // namespace mrce
