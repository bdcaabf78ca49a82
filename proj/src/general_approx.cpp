#include "mrce/general_approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "mrce/errors.hpp"

namespace mrce {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

}  // namespace

RootedGraph augment_with_leaves(const RootedGraph& g) {
  const std::size_t n = g.size();
  std::vector<Edge> edges = g.edges();
  edges.reserve(edges.size() + n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    edges.emplace_back(g.root(), static_cast<Vertex>(n + i));
  }
  return RootedGraph(n + n * n, edges, g.root());
}

DominatingSet greedy_dominating_set(const RootedGraph& g) {
  const std::size_t n = g.size();
  DominatingSet out;
  out.profit.assign(n, 0);
  std::vector<std::int64_t> gain(n);
  std::set<std::pair<std::int64_t, Vertex>> queue;  // (-gain, vertex)
  for (std::size_t v = 0; v < n; ++v) {
    gain[v] = static_cast<std::int64_t>(g.degree(static_cast<Vertex>(v))) + 1;
    queue.emplace(-gain[v], static_cast<Vertex>(v));
  }
  std::vector<char> dominated(n, 0);
  std::vector<char> picked(n, 0);
  std::size_t undominated = n;

  auto lower_gain = [&](Vertex w) {
    if (picked[idx(w)]) return;
    queue.erase({-gain[idx(w)], w});
    --gain[idx(w)];
    queue.emplace(-gain[idx(w)], w);
  };
  auto dominate = [&](Vertex x) {
    dominated[idx(x)] = 1;
    --undominated;
    lower_gain(x);
    for (Vertex w : g.neighbors(x)) lower_gain(w);
  };

  while (undominated > 0) {
    const auto [neg_gain, w] = *queue.begin();
    queue.erase(queue.begin());
    picked[idx(w)] = 1;
    out.picks.push_back(w);
    out.profit[idx(w)] = -neg_gain;
    if (!dominated[idx(w)]) dominate(w);
    for (Vertex u : g.neighbors(w)) {
      if (!dominated[idx(u)]) dominate(u);
    }
  }
  return out;
}

namespace {

void check_profits(const RootedGraph& g, std::span<const std::int64_t> profit) {
  if (profit.size() != g.size()) {
    throw InputError("profit map has " + std::to_string(profit.size()) +
                     " entries for " + std::to_string(g.size()) + " vertices");
  }
  for (std::int64_t p : profit) {
    if (p < 0) throw InputError("profits must be nonnegative");
  }
}

// Tree kept as parent links over a vertex subset of g.
struct TreeBuilder {
  explicit TreeBuilder(std::size_t n) : in_tree(n, 0) {}

  std::vector<char> in_tree;
  std::vector<Edge> edges;

  SteinerTree finish(const RootedGraph& g,
                     std::span<const std::int64_t> profit) const {
    SteinerTree t;
    for (std::size_t v = 0; v < in_tree.size(); ++v) {
      if (in_tree[v]) {
        t.vertices.push_back(static_cast<Vertex>(v));
        t.profit += profit[v];
      }
    }
    t.edges = edges;
    for (auto& [u, v] : t.edges) {
      if (u > v) std::swap(u, v);
    }
    std::sort(t.edges.begin(), t.edges.end());
    t.contains_root = in_tree[idx(g.root())] != 0;
    return t;
  }
};

SteinerTree root_only(const RootedGraph& g, std::span<const std::int64_t> profit) {
  TreeBuilder b(g.size());
  b.in_tree[idx(g.root())] = 1;
  return b.finish(g, profit);
}

// Rooted moat growing on unit edge costs; the root's moat never grows.
// Returns the strongly pruned tree of tight edges around the root.
SteinerTree grow_moats(const RootedGraph& g, std::span<const std::int64_t> profit,
                       double lambda) {
  const std::size_t n = g.size();
  const std::vector<Edge> all_edges = g.edges();

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };

  std::vector<double> load(n, 0.0);       // dual load on each vertex
  std::vector<double> remaining(n, 0.0);  // per component representative
  std::vector<char> active(n, 0);
  std::vector<char> has_root(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    remaining[v] = lambda * static_cast<double>(profit[v]);
    has_root[v] = static_cast<Vertex>(v) == g.root();
    active[v] = !has_root[v];
  }

  std::vector<Edge> forest;
  for (;;) {
    double best_t = std::numeric_limits<double>::infinity();
    std::ptrdiff_t best_edge = -1;
    std::ptrdiff_t best_comp = -1;
    for (std::size_t e = 0; e < all_edges.size(); ++e) {
      const auto [u, v] = all_edges[e];
      const std::size_t cu = find(idx(u));
      const std::size_t cv = find(idx(v));
      if (cu == cv) continue;
      const int rate = active[cu] + active[cv];
      if (rate == 0) continue;
      const double t = std::max(0.0, 1.0 - load[idx(u)] - load[idx(v)]) / rate;
      if (t < best_t) {
        best_t = t;
        best_edge = static_cast<std::ptrdiff_t>(e);
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (find(c) != c || !active[c]) continue;
      const double t = std::max(0.0, remaining[c]);
      if (t < best_t) {
        best_t = t;
        best_edge = -1;
        best_comp = static_cast<std::ptrdiff_t>(c);
      }
    }
    if (best_edge < 0 && best_comp < 0) break;

    for (std::size_t v = 0; v < n; ++v) {
      if (active[find(v)]) load[v] += best_t;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (find(c) == c && active[c]) remaining[c] -= best_t;
    }

    if (best_edge >= 0) {
      const auto [u, v] = all_edges[static_cast<std::size_t>(best_edge)];
      const std::size_t cu = find(idx(u));
      const std::size_t cv = find(idx(v));
      forest.emplace_back(u, v);
      parent[cv] = cu;
      remaining[cu] = std::max(0.0, remaining[cu]) + std::max(0.0, remaining[cv]);
      has_root[cu] = has_root[cu] || has_root[cv];
      active[cu] = !has_root[cu];
      active[cv] = 0;
    } else {
      active[static_cast<std::size_t>(best_comp)] = 0;
    }
  }

  // Root the tight-edge tree and keep only subtrees that pay for their edge.
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& [u, v] : forest) {
    adj[idx(u)].push_back(v);
    adj[idx(v)].push_back(u);
  }
  std::vector<Vertex> order{g.root()};
  std::vector<Vertex> up(n, -1);
  std::vector<char> seen(n, 0);
  seen[idx(g.root())] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex u : adj[idx(order[i])]) {
      if (!seen[idx(u)]) {
        seen[idx(u)] = 1;
        up[idx(u)] = order[i];
        order.push_back(u);
      }
    }
  }
  std::vector<double> net(n, 0.0);
  std::vector<char> keep(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    net[idx(v)] += lambda * static_cast<double>(profit[idx(v)]);
    if (v == g.root()) continue;
    if (net[idx(v)] - 1.0 > 0.0) {
      keep[idx(v)] = 1;
      net[idx(up[idx(v)])] += net[idx(v)] - 1.0;
    }
  }
  TreeBuilder b(n);
  b.in_tree[idx(g.root())] = 1;
  for (Vertex v : order) {  // parents precede children
    if (v == g.root()) continue;
    if (keep[idx(v)] && b.in_tree[idx(up[idx(v)])]) {
      b.in_tree[idx(v)] = 1;
      b.edges.emplace_back(up[idx(v)], v);
    }
  }
  return b.finish(g, profit);
}

// Drops non-root leaves while the quota still holds, cheapest profit first.
SteinerTree trim_leaves(const RootedGraph& g, std::span<const std::int64_t> profit,
                        SteinerTree t, std::int64_t quota) {
  const std::size_t n = g.size();
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& [u, v] : t.edges) {
    adj[idx(u)].push_back(v);
    adj[idx(v)].push_back(u);
  }
  std::vector<char> alive(n, 0);
  for (Vertex v : t.vertices) alive[idx(v)] = 1;
  std::vector<std::size_t> deg(n, 0);
  for (Vertex v : t.vertices) deg[idx(v)] = adj[idx(v)].size();
  std::int64_t total = t.profit;

  for (;;) {
    Vertex victim = -1;
    for (Vertex v : t.vertices) {
      if (!alive[idx(v)] || v == g.root() || deg[idx(v)] != 1) continue;
      if (total - profit[idx(v)] < quota) continue;
      if (victim < 0 || profit[idx(v)] < profit[idx(victim)]) victim = v;
    }
    if (victim < 0) break;
    alive[idx(victim)] = 0;
    total -= profit[idx(victim)];
    for (Vertex u : adj[idx(victim)]) {
      if (alive[idx(u)]) --deg[idx(u)];
    }
  }

  TreeBuilder b(n);
  for (Vertex v : t.vertices) b.in_tree[idx(v)] = alive[idx(v)];
  for (const auto& [u, v] : t.edges) {
    if (alive[idx(u)] && alive[idx(v)]) b.edges.emplace_back(u, v);
  }
  return b.finish(g, profit);
}

// Extends a rooted tree along shortest paths until the quota holds: a path
// that closes the gap is taken if one exists (shortest first), otherwise
// the path with the best profit per edge.
SteinerTree complete_by_paths(const RootedGraph& g,
                              std::span<const std::int64_t> profit,
                              const SteinerTree& start, std::int64_t quota) {
  const std::size_t n = g.size();
  TreeBuilder b(n);
  for (Vertex v : start.vertices) b.in_tree[idx(v)] = 1;
  b.edges = start.edges;
  std::int64_t total = start.profit;

  while (total < quota) {
    std::vector<int> dist(n, -1);
    std::vector<Vertex> via(n, -1);
    std::vector<std::int64_t> gained(n, 0);
    std::vector<Vertex> bfs;
    for (std::size_t v = 0; v < n; ++v) {
      if (b.in_tree[v]) {
        dist[v] = 0;
        bfs.push_back(static_cast<Vertex>(v));
      }
    }
    for (std::size_t i = 0; i < bfs.size(); ++i) {
      const Vertex v = bfs[i];
      for (Vertex u : g.neighbors(v)) {
        if (dist[idx(u)] >= 0) continue;
        dist[idx(u)] = dist[idx(v)] + 1;
        via[idx(u)] = v;
        gained[idx(u)] = gained[idx(v)] + profit[idx(u)];
        bfs.push_back(u);
      }
    }
    const std::int64_t need = quota - total;
    Vertex pick = -1;
    for (std::size_t u = 0; u < n; ++u) {  // closes the gap, fewest edges
      if (dist[u] <= 0 || gained[u] < need) continue;
      if (pick < 0 || dist[u] < dist[idx(pick)] ||
          (dist[u] == dist[idx(pick)] && gained[u] > gained[idx(pick)])) {
        pick = static_cast<Vertex>(u);
      }
    }
    if (pick < 0) {  // best profit per edge
      for (std::size_t u = 0; u < n; ++u) {
        if (dist[u] <= 0 || profit[u] == 0) continue;
        if (pick < 0 ||
            gained[u] * dist[idx(pick)] > gained[idx(pick)] * dist[u]) {
          pick = static_cast<Vertex>(u);
        }
      }
    }
    if (pick < 0) break;  // nothing left to collect
    for (Vertex u = pick; dist[idx(u)] > 0; u = via[idx(u)]) {
      b.in_tree[idx(u)] = 1;
      b.edges.emplace_back(via[idx(u)], u);
      total += profit[idx(u)];
    }
  }
  return b.finish(g, profit);
}

// Cheaper first, then more profit, then the smaller vertex list.
bool cheaper(const SteinerTree& a, const SteinerTree& b) {
  if (a.cost() != b.cost()) return a.cost() < b.cost();
  if (a.profit != b.profit) return a.profit > b.profit;
  return a.vertices < b.vertices;
}

}  // namespace

std::optional<SteinerTree> rqst_2apx(const RootedGraph& g,
                                     std::span<const std::int64_t> profit,
                                     std::int64_t quota) {
  check_profits(g, profit);
  const SteinerTree trivial = root_only(g, profit);
  if (quota <= trivial.profit) return trivial;
  const std::int64_t total = std::accumulate(profit.begin(), profit.end(), std::int64_t{0});
  if (total < quota) return std::nullopt;

  std::optional<SteinerTree> best;
  auto offer = [&](SteinerTree t) {
    if (t.profit < quota) return;
    t = trim_leaves(g, profit, std::move(t), quota);
    if (!best || cheaper(t, *best)) best = std::move(t);
  };

  double lo = 0.0;
  double hi = static_cast<double>(g.size()) + 1.0;
  SteinerTree below = trivial;
  SteinerTree above = grow_moats(g, profit, hi);
  for (int widen = 0; above.profit < quota && widen < 8; ++widen) {
    lo = hi;
    hi *= 2.0;
    above = grow_moats(g, profit, hi);
  }
  if (above.profit >= quota) {
    offer(above);
    for (int iter = 0; iter < 60 && hi - lo > 1e-9; ++iter) {
      const double mid = 0.5 * (lo + hi);
      SteinerTree t = grow_moats(g, profit, mid);
      if (t.profit >= quota) {
        hi = mid;
        offer(std::move(t));
      } else {
        lo = mid;
        if (t.profit > below.profit) below = std::move(t);
      }
    }
  }
  offer(complete_by_paths(g, profit, below, quota));
  offer(complete_by_paths(g, profit, trivial, quota));
  return best;
}

std::optional<SteinerTree> exact_rqst_oracle(const RootedGraph& g,
                                             std::span<const std::int64_t> profit,
                                             std::int64_t quota,
                                             std::size_t vertex_cap) {
  check_profits(g, profit);
  if (g.size() > vertex_cap) {
    throw CapacityError("exact quota tree refuses " + std::to_string(g.size()) +
                        " vertices (cap " + std::to_string(vertex_cap) + ")");
  }
  std::optional<VertexSet> best;
  std::int64_t best_profit = 0;
  const Vertex root = g.root();
  for_each_connected_superset(
      g, std::span<const Vertex>(&root, 1), g.size(), [&](const VertexSet& s) {
        std::int64_t p = 0;
        for (Vertex v : s) p += profit[idx(v)];
        if (p < quota) return true;
        if (!best || s.size() < best->size() ||
            (s.size() == best->size() &&
             (p > best_profit || (p == best_profit && s < *best)))) {
          best = s;
          best_profit = p;
        }
        return true;
      });
  if (!best) return std::nullopt;

  // Any spanning tree of the set has |set| - 1 unit edges.
  TreeBuilder b(g.size());
  for (Vertex v : *best) b.in_tree[idx(v)] = 1;
  std::vector<char> seen(g.size(), 0);
  std::vector<Vertex> bfs{root};
  seen[idx(root)] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    for (Vertex u : g.neighbors(bfs[i])) {
      if (b.in_tree[idx(u)] && !seen[idx(u)]) {
        seen[idx(u)] = 1;
        b.edges.emplace_back(bfs[i], u);
        bfs.push_back(u);
      }
    }
  }
  return b.finish(g, profit);
}

std::int64_t quota_for_guess(std::int64_t guess) {
  return static_cast<std::int64_t>(
      (static_cast<detail::Int128>(guess) * 632120558) / 1000000000);
}

ProfitMap domination_profits(const RootedGraph& g) {
  const std::size_t n = g.size();
  const DominatingSet gds = greedy_dominating_set(augment_with_leaves(g));
  ProfitMap p(gds.profit.begin(), gds.profit.begin() + static_cast<std::ptrdiff_t>(n));
  // The root is picked first and takes every extra leaf with it.
  p[idx(g.root())] -= static_cast<std::int64_t>(n * n);
  return p;
}

std::vector<GuessOutcome> greedy_mrce_trace(const RootedGraph& g) {
  const ProfitMap profit = domination_profits(g);
  std::vector<GuessOutcome> out;
  const auto n = static_cast<std::int64_t>(g.size());
  for (std::int64_t guess = 1; guess <= n; ++guess) {
    GuessOutcome o;
    o.guess = guess;
    o.quota = quota_for_guess(guess);
    if (!out.empty() && out.back().quota == o.quota) {
      o.tree = out.back().tree;
    } else {
      o.tree = rqst_2apx(g, profit, o.quota);
    }
    out.push_back(std::move(o));
  }
  return out;
}

Solution greedy_mrce(const RootedGraph& g) {
  std::optional<Solution> best;
  for (const GuessOutcome& o : greedy_mrce_trace(g)) {
    if (!o.tree) continue;
    Solution candidate = evaluate(g, o.tree->vertices);
    if (!best || better_than(candidate, *best)) best = std::move(candidate);
  }
  // The first guess has quota 0, which the root alone meets.
  return *best;
}

}  // namespace mrce
