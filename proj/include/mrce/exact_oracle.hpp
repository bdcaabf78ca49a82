#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mrce/graph.hpp"

namespace mrce {

/// Default vertex guard of the exhaustive solvers.
inline constexpr std::size_t kDefaultOracleCap = 26;
/// Vertex sets are bitmasks; nothing larger can be represented.
inline constexpr std::size_t kOracleHardLimit = 64;

/// Maximum-ratio connected set containing the root, by exhaustive
/// branch-and-bound over root-anchored growth. With `size_cap`, only sets of
/// at most that many vertices are considered. Throws CapacityError when the
/// graph has more than `vertex_cap` vertices.
Solution solve_exact(const RootedGraph& g,
                     std::optional<std::size_t> size_cap = std::nullopt,
                     std::size_t vertex_cap = kDefaultOracleCap);

/// OPT_i for i = 0..n: the largest |N[S]| over connected root sets with
/// exactly i vertices (entry 0 is 0).
std::vector<std::size_t> max_domination_by_size(
    const RootedGraph& g, std::size_t vertex_cap = kDefaultOracleCap);

struct PeelStep {
  VertexSet set;
  std::size_t closed_nbhd_size = 0;
  Ratio ratio;
};

/// Repeatedly drops the vertex with the fewest exclusive neighbours
/// (|N[S]| - |N[S - u]|, ties to the smaller index) until `target_size`
/// vertices remain. The first step is s itself. The sets need not stay
/// connected or keep the root.
std::vector<PeelStep> peel_least_contribution(const RootedGraph& g,
                                              std::span<const Vertex> s,
                                              std::size_t target_size);

/// ceil((|N[S]| - 1) / |S|), a lower bound on the surveillance number.
std::int64_t surveillance_lower_bound(const Solution& sol);

}  // namespace mrce
