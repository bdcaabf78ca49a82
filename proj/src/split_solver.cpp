#include "mrce/split_solver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mrce/errors.hpp"

namespace mrce {

SplitRecognition recognize_and_partition(const RootedGraph& g) {
  const std::size_t n = g.size();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });

  std::size_t m = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (g.degree(order[i - 1]) + 1 >= i) m = i;
  }

  SplitPartition p;
  p.clique.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
  p.independent.assign(order.begin() + static_cast<std::ptrdiff_t>(m), order.end());
  std::sort(p.clique.begin(), p.clique.end());
  std::sort(p.independent.begin(), p.independent.end());

  for (std::size_t i = 0; i < p.clique.size(); ++i) {
    for (std::size_t j = i + 1; j < p.clique.size(); ++j) {
      if (!g.has_edge(p.clique[i], p.clique[j])) {
        return NonSplitWitness{p.clique[i], p.clique[j], false};
      }
    }
  }
  for (std::size_t i = 0; i < p.independent.size(); ++i) {
    for (std::size_t j = i + 1; j < p.independent.size(); ++j) {
      if (g.has_edge(p.independent[i], p.independent[j])) {
        return NonSplitWitness{p.independent[i], p.independent[j], true};
      }
    }
  }
  return p;
}

VertexSet lift_to_clique(const RootedGraph& g, const SplitPartition& p,
                         std::span<const Vertex> s) {
  const Solution original = evaluate(g, s);  // throws on infeasible input
  std::vector<char> in_clique(g.size(), 0);
  for (Vertex v : p.clique) in_clique[static_cast<std::size_t>(v)] = 1;

  VertexSet lifted{g.root()};
  for (Vertex v : original.set) {
    if (v == g.root()) continue;
    if (in_clique[static_cast<std::size_t>(v)]) {
      lifted.push_back(v);
      continue;
    }
    const auto nbrs = g.neighbors(v);
    const auto it = std::find_if(nbrs.begin(), nbrs.end(), [&](Vertex u) {
      return in_clique[static_cast<std::size_t>(u)] != 0;
    });
    if (it == nbrs.end()) {
      throw IncompatibleInput("independent vertex " + std::to_string(v) +
                              " has no clique neighbour");
    }
    lifted.push_back(*it);
  }
  std::sort(lifted.begin(), lifted.end());
  lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
  return lifted;
}

Solution approximate_split(const RootedGraph& g, int k) {
  if (k < 1) throw InputError("k must be at least 1");
  const SplitRecognition recognition = recognize_and_partition(g);
  if (const auto* w = std::get_if<NonSplitWitness>(&recognition)) {
    throw IncompatibleInput("graph is not split: vertices " +
                            std::to_string(w->u) + " and " +
                            std::to_string(w->v) +
                            (w->adjacent ? " are adjacent" : " are not adjacent"));
  }
  const Vertex root = g.root();
  Solution best = evaluate(g, std::span<const Vertex>(&root, 1));
  for_each_connected_superset(
      g, std::span<const Vertex>(&root, 1), static_cast<std::size_t>(k) + 2,
      [&](const VertexSet& s) {
        const std::size_t nb = closed_neighborhood_size(g, s);
        Solution candidate{s, nb,
                           Ratio(static_cast<std::int64_t>(nb),
                                 static_cast<std::int64_t>(s.size()))};
        if (better_than(candidate, best)) best = std::move(candidate);
        return true;
      });
  return best;
}

}  // namespace mrce
