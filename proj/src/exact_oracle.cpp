#include "mrce/exact_oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "mrce/errors.hpp"

namespace mrce {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << static_cast<unsigned>(v); }

VertexSet to_set(Mask m) {
  VertexSet out;
  while (m) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

void check_capacity(const RootedGraph& g, std::size_t vertex_cap) {
  const std::size_t limit = std::min(vertex_cap, kOracleHardLimit);
  if (g.size() > limit) {
    throw CapacityError("exact solver refuses " + std::to_string(g.size()) +
                        " vertices (cap " + std::to_string(limit) + ")");
  }
}

struct BitGraph {
  explicit BitGraph(const RootedGraph& g) : open(g.size()), closed(g.size()) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      for (Vertex u : g.neighbors(static_cast<Vertex>(v))) open[v] |= bit(u);
      closed[v] = open[v] | bit(static_cast<Vertex>(v));
    }
  }
  std::vector<Mask> open;
  std::vector<Mask> closed;
};

// Candidate (nbhd, size, set) is strictly preferred over the incumbent.
bool prefer(std::size_t nb, std::size_t sz, Mask set, std::size_t best_nb,
            std::size_t best_sz, Mask best_set) {
  const auto lhs = static_cast<detail::UInt128>(nb) * best_sz;
  const auto rhs = static_cast<detail::UInt128>(best_nb) * sz;
  if (lhs != rhs) return lhs > rhs;
  if (sz != best_sz) return sz < best_sz;
  // Same size: the smaller sorted list owns the lowest differing vertex.
  const Mask diff = set ^ best_set;
  return diff != 0 && (set & (diff & (~diff + 1))) != 0;
}

class BranchAndBound {
 public:
  BranchAndBound(const RootedGraph& g, std::size_t size_cap)
      : bits_(g),
        n_(g.size()),
        size_cap_(size_cap),
        gain_(g.max_degree() > 0 ? g.max_degree() - 1 : 0) {}

  Mask solve(Vertex root) {
    const Mask s = bit(root);
    best_set_ = s;
    best_nb_ = static_cast<std::size_t>(std::popcount(bits_.closed[static_cast<std::size_t>(root)]));
    best_sz_ = 1;
    grow(s, bits_.closed[static_cast<std::size_t>(root)], 1,
         bits_.open[static_cast<std::size_t>(root)], 0);
    return best_set_;
  }

 private:
  // Largest ratio any superset with at least one more vertex could reach:
  // every added vertex is already dominated and has one neighbour inside,
  // so it brings at most Δ - 1 new vertices.
  bool supersets_hopeless(std::size_t nb, std::size_t sz) const {
    const std::size_t t_max = std::min(size_cap_, n_) - sz;
    if (t_max == 0) return true;
    auto beats = [&](std::size_t t) {
      const std::size_t reach = std::min(n_, nb + t * gain_);
      return static_cast<detail::UInt128>(reach) * best_sz_ >=
             static_cast<detail::UInt128>(best_nb_) * (sz + t);
    };
    std::vector<std::size_t> probes{1, t_max};
    if (gain_ > 0 && n_ > nb) {
      probes.push_back((n_ - nb) / gain_);
      probes.push_back((n_ - nb + gain_ - 1) / gain_);
    }
    for (std::size_t t : probes) {
      if (t >= 1 && t <= t_max && beats(t)) return false;
    }
    return true;
  }

  void grow(Mask s, Mask nbhd, std::size_t sz, Mask frontier, Mask excluded) {
    const auto nb = static_cast<std::size_t>(std::popcount(nbhd));
    if (prefer(nb, sz, s, best_nb_, best_sz_, best_set_)) {
      best_set_ = s;
      best_nb_ = nb;
      best_sz_ = sz;
    }
    if (supersets_hopeless(nb, sz)) return;
    Mask rest = frontier;
    while (rest) {
      const Vertex v = static_cast<Vertex>(std::countr_zero(rest));
      rest &= rest - 1;
      const auto vi = static_cast<std::size_t>(v);
      const Mask next_frontier =
          (rest | bits_.open[vi]) & ~(s | bit(v)) & ~excluded;
      grow(s | bit(v), nbhd | bits_.closed[vi], sz + 1, next_frontier & ~(frontier & ~rest), excluded);
      excluded |= bit(v);
    }
  }

  BitGraph bits_;
  std::size_t n_;
  std::size_t size_cap_;
  std::size_t gain_;
  Mask best_set_ = 0;
  std::size_t best_nb_ = 0;
  std::size_t best_sz_ = 1;
};

}  // namespace

Solution solve_exact(const RootedGraph& g, std::optional<std::size_t> size_cap,
                     std::size_t vertex_cap) {
  check_capacity(g, vertex_cap);
  const std::size_t cap = size_cap.value_or(g.size());
  if (cap < 1) throw InputError("size cap must be at least 1");
  BranchAndBound search(g, cap);
  const Mask best = search.solve(g.root());
  return evaluate(g, to_set(best));
}

std::vector<std::size_t> max_domination_by_size(const RootedGraph& g,
                                                std::size_t vertex_cap) {
  check_capacity(g, vertex_cap);
  const BitGraph bits(g);
  std::vector<std::size_t> best(g.size() + 1, 0);
  // Plain growth without pruning; every connected root set is visited once.
  auto walk = [&](auto&& self, Mask s, Mask nbhd, std::size_t sz, Mask frontier,
                  Mask excluded) -> void {
    best[sz] = std::max(best[sz], static_cast<std::size_t>(std::popcount(nbhd)));
    Mask rest = frontier;
    while (rest) {
      const Vertex v = static_cast<Vertex>(std::countr_zero(rest));
      rest &= rest - 1;
      const auto vi = static_cast<std::size_t>(v);
      const Mask next = (rest | bits.open[vi]) & ~(s | bit(v)) & ~excluded &
                        ~(frontier & ~rest);
      self(self, s | bit(v), nbhd | bits.closed[vi], sz + 1, next, excluded);
      excluded |= bit(v);
    }
  };
  const auto r = static_cast<std::size_t>(g.root());
  walk(walk, bit(g.root()), bits.closed[r], 1, bits.open[r], 0);
  return best;
}

std::vector<PeelStep> peel_least_contribution(const RootedGraph& g,
                                              std::span<const Vertex> s,
                                              std::size_t target_size) {
  VertexSet current = normalize_set(g, s);
  if (target_size < 1 || target_size > current.size()) {
    throw InputError("peel target size out of range");
  }
  auto step_of = [&](const VertexSet& set) {
    const std::size_t nb = closed_neighborhood_size(g, set);
    return PeelStep{set, nb,
                    Ratio(static_cast<std::int64_t>(nb),
                          static_cast<std::int64_t>(set.size()))};
  };
  std::vector<PeelStep> steps{step_of(current)};
  while (current.size() > target_size) {
    const std::size_t nb = steps.back().closed_nbhd_size;
    std::size_t victim = 0;
    std::size_t least = nb + 1;
    VertexSet without;
    for (std::size_t i = 0; i < current.size(); ++i) {
      without.assign(current.begin(), current.end());
      without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
      const std::size_t exclusive = nb - closed_neighborhood_size(g, without);
      // Strict comparison keeps the smallest index among ties.
      if (exclusive < least) {
        least = exclusive;
        victim = i;
      }
    }
    current.erase(current.begin() + static_cast<std::ptrdiff_t>(victim));
    steps.push_back(step_of(current));
  }
  return steps;
}

std::int64_t surveillance_lower_bound(const Solution& sol) {
  const auto nb = static_cast<std::int64_t>(sol.closed_nbhd_size);
  const auto sz = static_cast<std::int64_t>(sol.set.size());
  if (sz == 0) throw InputError("empty solution");
  return (nb - 1 + sz - 1) / sz;
}

}  // namespace mrce
