#include "mrce/graph.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "mrce/errors.hpp"

namespace mrce {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Connected-component check restricted to vertices with in_set[v] != 0,
// started from `start`. Returns the number of vertices reached.
std::size_t reach_within(const RootedGraph& g, const std::vector<char>& in_set,
                         Vertex start) {
  std::vector<char> seen(g.size(), 0);
  std::vector<Vertex> stack{start};
  seen[idx(start)] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex u : g.neighbors(v)) {
      if (in_set[idx(u)] && !seen[idx(u)]) {
        seen[idx(u)] = 1;
        stack.push_back(u);
      }
    }
  }
  return reached;
}

}  // namespace

RootedGraph::RootedGraph(std::size_t vertex_count, std::span<const Edge> edges,
                         Vertex root)
    : adjacency_(vertex_count), root_(root) {
  if (vertex_count == 0) throw InputError("graph must have at least one vertex");
  if (!contains(root)) {
    throw InputError("root " + std::to_string(root) + " out of range");
  }
  for (const auto& [u, v] : edges) {
    if (!contains(u) || !contains(v)) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") out of range");
    }
    if (u == v) throw InputError("self-loop at " + std::to_string(u));
    adjacency_[idx(u)].push_back(v);
    adjacency_[idx(v)].push_back(u);
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto& nbrs = adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    const auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
    if (dup != nbrs.end()) {
      throw InputError("duplicate edge (" + std::to_string(v) + ", " +
                       std::to_string(*dup) + ")");
    }
    max_degree_ = std::max(max_degree_, nbrs.size());
  }
  edge_count_ = edges.size();

  const std::vector<char> all(vertex_count, 1);
  if (reach_within(*this, all, root_) != vertex_count) {
    throw InputError("graph is not connected");
  }
}

bool RootedGraph::has_edge(Vertex u, Vertex v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> RootedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

bool better_than(const Solution& a, const Solution& b) {
  if (a.ratio != b.ratio) return a.ratio > b.ratio;
  if (a.set.size() != b.set.size()) return a.set.size() < b.set.size();
  return a.set < b.set;
}

VertexSet normalize_set(const RootedGraph& g, std::span<const Vertex> s) {
  VertexSet out(s.begin(), s.end());
  for (Vertex v : out) {
    if (!g.contains(v)) {
      throw InputError("vertex " + std::to_string(v) + " out of range");
    }
  }
  std::sort(out.begin(), out.end());
  const auto dup = std::adjacent_find(out.begin(), out.end());
  if (dup != out.end()) {
    throw InputError("duplicate vertex " + std::to_string(*dup));
  }
  return out;
}

namespace {

std::vector<char> closed_mask(const RootedGraph& g, std::span<const Vertex> s) {
  std::vector<char> mark(g.size(), 0);
  for (Vertex v : s) {
    if (!g.contains(v)) {
      throw InputError("vertex " + std::to_string(v) + " out of range");
    }
    mark[idx(v)] = 1;
    for (Vertex u : g.neighbors(v)) mark[idx(u)] = 1;
  }
  return mark;
}

}  // namespace

VertexSet closed_neighborhood(const RootedGraph& g, std::span<const Vertex> s) {
  const auto mark = closed_mask(g, s);
  VertexSet out;
  for (std::size_t v = 0; v < mark.size(); ++v) {
    if (mark[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::size_t closed_neighborhood_size(const RootedGraph& g,
                                     std::span<const Vertex> s) {
  const auto mark = closed_mask(g, s);
  return static_cast<std::size_t>(std::count(mark.begin(), mark.end(), 1));
}

namespace {

// Distinct-vertex count and connectivity of s, assuming indices are valid.
std::optional<FeasibilityError> feasibility_violation(const RootedGraph& g,
                                                      std::span<const Vertex> s) {
  using Reason = FeasibilityError::Reason;
  if (s.empty()) return FeasibilityError(Reason::kEmpty, "empty set");
  std::vector<char> in_set(g.size(), 0);
  std::size_t distinct = 0;
  for (Vertex v : s) {
    if (!g.contains(v)) {
      throw InputError("vertex " + std::to_string(v) + " out of range");
    }
    if (!in_set[idx(v)]) ++distinct;
    in_set[idx(v)] = 1;
  }
  if (!in_set[idx(g.root())]) {
    return FeasibilityError(Reason::kRootMissing, "root missing");
  }
  if (reach_within(g, in_set, g.root()) != distinct) {
    return FeasibilityError(Reason::kDisconnected, "set is disconnected");
  }
  return std::nullopt;
}

}  // namespace

bool is_connected_containing_root(const RootedGraph& g,
                                  std::span<const Vertex> s) {
  return !feasibility_violation(g, s).has_value();
}

Solution evaluate(const RootedGraph& g, std::span<const Vertex> s) {
  VertexSet set = normalize_set(g, s);
  if (auto violation = feasibility_violation(g, set)) throw *violation;
  const std::size_t nbhd = closed_neighborhood_size(g, set);
  const Ratio ratio(static_cast<std::int64_t>(nbhd),
                    static_cast<std::int64_t>(set.size()));
  return Solution{std::move(set), nbhd, ratio};
}

Ratio max_degree_plus_one_bound(const RootedGraph& g) {
  return Ratio(static_cast<std::int64_t>(g.max_degree()) + 1, 1);
}

namespace {

// Frontier growth with sibling exclusion. state: 0 free, 1 in set,
// 2 excluded; `frontier` is N(S) \ S \ excluded in ascending order.
class SupersetWalker {
 public:
  SupersetWalker(const RootedGraph& g, std::size_t max_size,
                 const std::function<bool(const VertexSet&)>& visit)
      : g_(g), max_size_(max_size), visit_(visit), state_(g.size(), 0) {}

  void run(const VertexSet& seed) {
    for (Vertex v : seed) state_[idx(v)] = 1;
    current_ = seed;
    std::vector<Vertex> frontier;
    std::vector<char> queued(g_.size(), 0);
    for (Vertex v : seed) {
      for (Vertex u : g_.neighbors(v)) {
        if (state_[idx(u)] == 0 && !queued[idx(u)]) {
          queued[idx(u)] = 1;
          frontier.push_back(u);
        }
      }
    }
    std::sort(frontier.begin(), frontier.end());
    grow(frontier);
  }

 private:
  bool grow(const std::vector<Vertex>& frontier) {
    VertexSet sorted = current_;
    std::sort(sorted.begin(), sorted.end());
    if (!visit_(sorted)) return false;
    if (current_.size() >= max_size_) return true;

    std::vector<Vertex> excluded_here;
    bool keep_going = true;
    for (std::size_t i = 0; i < frontier.size() && keep_going; ++i) {
      const Vertex v = frontier[i];
      // Remaining frontier after v, plus the new neighbors of v.
      std::vector<Vertex> next(frontier.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                               frontier.end());
      state_[idx(v)] = 1;
      for (Vertex u : g_.neighbors(v)) {
        if (state_[idx(u)] == 0 &&
            !std::binary_search(frontier.begin(), frontier.end(), u)) {
          next.push_back(u);
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      current_.push_back(v);
      keep_going = grow(next);
      current_.pop_back();
      state_[idx(v)] = 2;
      excluded_here.push_back(v);
    }
    for (Vertex v : excluded_here) state_[idx(v)] = 0;
    return keep_going;
  }

  const RootedGraph& g_;
  std::size_t max_size_;
  const std::function<bool(const VertexSet&)>& visit_;
  std::vector<char> state_;
  VertexSet current_;
};

}  // namespace

void for_each_connected_superset(
    const RootedGraph& g, std::span<const Vertex> seed, std::size_t max_size,
    const std::function<bool(const VertexSet&)>& visit) {
  const VertexSet start = normalize_set(g, seed);
  if (auto violation = feasibility_violation(g, start)) throw *violation;
  if (max_size < start.size()) {
    throw InputError("max_size is smaller than the seed");
  }
  SupersetWalker(g, max_size, visit).run(start);
}

std::vector<VertexSet> enumerate_connected_supersets(
    const RootedGraph& g, std::span<const Vertex> seed, std::size_t max_size) {
  std::vector<VertexSet> out;
  for_each_connected_superset(g, seed, max_size, [&](const VertexSet& s) {
    out.push_back(s);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mrce
