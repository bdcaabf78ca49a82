#include "mrce/instance_forge.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>

#include "mrce/errors.hpp"

namespace mrce {

void validate(const CnfFormula& f) {
  for (const auto& clause : f.clauses) {
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > f.variables) {
        throw InputError("literal " + std::to_string(lit) +
                         " references an undeclared variable");
      }
    }
  }
}

CnfFormula equalize(const CnfFormula& f) {
  if (f.variables < 1 || f.clauses.empty()) {
    throw InputError("formula needs at least one variable and one clause");
  }
  validate(f);
  CnfFormula out = f;
  while (out.clauses.size() < static_cast<std::size_t>(out.variables)) {
    out.clauses.push_back(f.clauses.front());
  }
  out.variables = std::max(out.variables, static_cast<int>(out.clauses.size()));
  return out;
}

std::string VertexRole::str() const {
  switch (kind) {
    case RoleKind::kRoot:
      return "root";
    case RoleKind::kLiteral:
      return std::string("literal ") + (positive ? "+" : "-") +
             std::to_string(variable);
    case RoleKind::kClause:
      return "clause " + std::to_string(clause);
    case RoleKind::kLeaf:
      return "leaf " + std::to_string(variable) + " " + std::to_string(leaf);
  }
  return "unknown";
}

Vertex literal_vertex(int literal) {
  const int i = std::abs(literal);
  return static_cast<Vertex>(literal > 0 ? 2 * i - 1 : 2 * i);
}

ReductionOutput reduce_to_split_mrce(const CnfFormula& f) {
  validate(f);
  const int n = f.variables;
  if (n < 1 || static_cast<std::size_t>(n) != f.clauses.size()) {
    throw InputError("reduction needs equal variable and clause counts (got " +
                     std::to_string(n) + " variables, " +
                     std::to_string(f.clauses.size()) +
                     " clauses); equalize first");
  }
  const std::size_t total = 1 + 5 * static_cast<std::size_t>(n) +
                            3 * static_cast<std::size_t>(n) * n;
  std::vector<VertexRole> roles(total);
  for (int i = 1; i <= n; ++i) {
    roles[static_cast<std::size_t>(literal_vertex(i))] = {RoleKind::kLiteral, i, true, 0, 0};
    roles[static_cast<std::size_t>(literal_vertex(-i))] = {RoleKind::kLiteral, i, false, 0, 0};
  }
  auto clause_vertex = [&](int j) { return static_cast<Vertex>(2 * n + j); };
  auto leaf_vertex = [&](int i, int j) {
    return static_cast<Vertex>(3 * n + 1 + (i - 1) * (3 * n + 2) + (j - 1));
  };
  for (int j = 1; j <= n; ++j) {
    roles[static_cast<std::size_t>(clause_vertex(j))] = {RoleKind::kClause, 0, true, j, 0};
  }

  std::vector<Edge> edges;
  for (Vertex u = 1; u <= 2 * n; ++u) {
    edges.emplace_back(0, u);
    for (Vertex v = u + 1; v <= 2 * n; ++v) edges.emplace_back(u, v);
  }
  for (int j = 1; j <= n; ++j) {
    // One edge per distinct literal; a repeated literal adds nothing.
    std::set<Vertex> lits;
    for (int lit : f.clauses[static_cast<std::size_t>(j - 1)]) {
      lits.insert(literal_vertex(lit));
    }
    for (Vertex u : lits) edges.emplace_back(u, clause_vertex(j));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= 3 * n + 2; ++j) {
      const Vertex y = leaf_vertex(i, j);
      roles[static_cast<std::size_t>(y)] = {RoleKind::kLeaf, i, true, 0, j};
      edges.emplace_back(literal_vertex(i), y);
      edges.emplace_back(literal_vertex(-i), y);
    }
  }
  std::sort(edges.begin(), edges.end());

  const auto nn = static_cast<std::int64_t>(n);
  return ReductionOutput{RootedGraph(total, edges, 0), std::move(roles),
                         Ratio(1 + 5 * nn + 3 * nn * nn, 1 + nn)};
}

namespace {

std::uint64_t splitmix(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

// xoshiro256** seeded through splitmix64.
Rng::Rng(std::uint64_t seed) {
  for (auto& s : state_) s = splitmix(seed);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InputError("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

bool Rng::bernoulli(double p) {
  return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
}

RootedGraph random_split(const SplitParams& params, std::uint64_t seed) {
  const std::size_t n = params.n;
  if (n < 1) throw InputError("split instance needs n >= 1");
  if (params.clique_size && (*params.clique_size < 1 || *params.clique_size > n)) {
    throw InputError("clique size must be in [1, n]");
  }
  if (params.edge_probability < 0.0 || params.edge_probability > 1.0) {
    throw InputError("edge probability must be in [0, 1]");
  }
  Rng rng(seed);
  const std::size_t c = params.clique_size.value_or(
      static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n))));
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);

  std::vector<Edge> edges;
  auto add = [&](Vertex a, Vertex b) { edges.emplace_back(std::min(a, b), std::max(a, b)); };
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i + 1; j < c; ++j) add(perm[i], perm[j]);
  }
  for (std::size_t i = c; i < n; ++i) {
    bool attached = false;
    for (std::size_t j = 0; j < c; ++j) {
      if (rng.bernoulli(params.edge_probability)) {
        add(perm[i], perm[j]);
        attached = true;
      }
    }
    if (!attached) {
      add(perm[i], perm[static_cast<std::size_t>(
                       rng.uniform(0, static_cast<std::int64_t>(c) - 1))]);
    }
  }
  std::sort(edges.begin(), edges.end());
  const auto root = static_cast<Vertex>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
  return RootedGraph(n, edges, root);
}

IntervalInstance random_interval(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw InputError("interval instance needs n >= 1");
  Rng rng(seed);
  const auto span = static_cast<std::int64_t>(4 * n);
  const std::int64_t max_len = std::max<std::int64_t>(2, span / 3);

  std::vector<std::pair<std::int64_t, std::int64_t>> laid_out;
  std::int64_t left = rng.uniform(0, span / 4);
  std::int64_t reach = left;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) left = rng.uniform(left, reach);
    const std::int64_t right = left + rng.uniform(1, max_len);
    laid_out.emplace_back(left, right);
    reach = std::max(reach, right);
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);

  std::vector<RawInterval> raw(n);
  for (std::size_t i = 0; i < n; ++i) {
    raw[perm[i]] = {Coordinate(laid_out[i].first), Coordinate(laid_out[i].second)};
  }
  const auto root = static_cast<Vertex>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
  IntervalRealization realization = canonicalize_realization(raw);
  RootedGraph graph = intersection_graph(realization, root);
  return IntervalInstance{root, std::move(raw), std::move(realization), std::move(graph)};
}

RootedGraph random_connected(std::size_t n, double density, std::uint64_t seed) {
  if (n < 1) throw InputError("graph needs n >= 1");
  if (density < 0.0 || density > 1.0) throw InputError("density must be in [0, 1]");
  const std::size_t pairs = n * (n - 1) / 2;
  const auto target = static_cast<std::size_t>(std::llround(density * static_cast<double>(pairs)));
  if (target + 1 < n) {
    throw InputError("density " + std::to_string(density) +
                     " gives fewer edges than a spanning tree needs");
  }
  Rng rng(seed);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);

  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<Edge> edges;
  auto add = [&](Vertex a, Vertex b) {
    adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
    edges.emplace_back(std::min(a, b), std::max(a, b));
  };
  for (std::size_t i = 1; i < n; ++i) {
    add(perm[i], perm[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
  }
  std::vector<Edge> spare;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!adj[u][v]) spare.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  rng.shuffle(spare);
  const std::size_t extra = target - (n - 1);
  for (std::size_t i = 0; i < extra && i < spare.size(); ++i) {
    add(spare[i].first, spare[i].second);
  }
  std::sort(edges.begin(), edges.end());
  const auto root = static_cast<Vertex>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
  return RootedGraph(n, edges, root);
}

}  // namespace mrce
