#include <doctest.h>

#include <set>

#include "mrce/errors.hpp"
#include "mrce/exact_oracle.hpp"
#include "mrce/instance_forge.hpp"
#include "mrce/split_solver.hpp"
#include "test_support.hpp"

using namespace mrce;

namespace {

bool satisfiable(const CnfFormula& f) {
  for (std::uint32_t a = 0; a < (1u << f.variables); ++a) {
    bool all = true;
    for (const auto& c : f.clauses) {
      bool any = false;
      for (int lit : c) {
        const bool value = a >> (std::abs(lit) - 1) & 1u;
        any = any || (lit > 0) == value;
      }
      all = all && any;
    }
    if (all) return true;
  }
  return false;
}

CnfFormula random_formula(int n, Rng& rng, bool distinct) {
  CnfFormula f{n, {}};
  while (static_cast<int>(f.clauses.size()) < n) {
    std::array<int, 3> c{};
    for (auto& lit : c) {
      lit = static_cast<int>(rng.uniform(1, n)) * (rng.bernoulli(0.5) ? 1 : -1);
    }
    if (distinct && (c[0] == c[1] || c[1] == c[2] || c[0] == c[2])) continue;
    f.clauses.push_back(c);
  }
  return f;
}

std::size_t distinct_literal_occurrences(const CnfFormula& f) {
  std::size_t total = 0;
  for (const auto& c : f.clauses) total += std::set<int>(c.begin(), c.end()).size();
  return total;
}

}  // namespace

TEST_CASE("equalize examples") {
  const CnfFormula square{2, {{1, 2, -1}, {-2, 1, 1}}};
  const auto a = equalize(square);
  CHECK(a.variables == 2);
  CHECK(a.clauses == square.clauses);

  const CnfFormula wide{3, {{1, -2, 3}}};
  const auto b = equalize(wide);
  CHECK(b.variables == 3);
  REQUIRE(b.clauses.size() == 3);
  CHECK(b.clauses[1] == wide.clauses[0]);
  CHECK(b.clauses[2] == wide.clauses[0]);

  const CnfFormula tall{1, {{1, 1, 1}, {-1, -1, -1}, {1, -1, 1}}};
  const auto c = equalize(tall);
  CHECK(c.variables == 3);
  CHECK(c.clauses == tall.clauses);

  CHECK_THROWS_AS(equalize(CnfFormula{1, {}}), InputError);
  CHECK_THROWS_AS(equalize(CnfFormula{0, {{1, 1, 1}}}), InputError);
  CHECK_THROWS_AS(validate(CnfFormula{1, {{1, 2, 1}}}), InputError);
  CHECK_THROWS_AS(validate(CnfFormula{2, {{0, 1, 2}}}), InputError);
}

TEST_CASE("equalize preserves satisfiability") {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int vars = static_cast<int>(rng.uniform(1, 6));
    const int clauses = static_cast<int>(rng.uniform(1, 6));
    CnfFormula f{vars, {}};
    for (int j = 0; j < clauses; ++j) {
      std::array<int, 3> c{};
      for (auto& lit : c) lit = static_cast<int>(rng.uniform(1, vars)) * (rng.bernoulli(0.5) ? 1 : -1);
      f.clauses.push_back(c);
    }
    const auto g = equalize(f);
    CHECK(static_cast<std::size_t>(g.variables) == g.clauses.size());
    CHECK(satisfiable(g) == satisfiable(f));
  }
}

TEST_CASE("reduction layout for n = 1") {
  const auto red = reduce_to_split_mrce(CnfFormula{1, {{1, 1, 1}}});
  CHECK(red.graph.size() == 9);
  CHECK(red.threshold == Ratio(9, 2));
  CHECK(red.roles[0].str() == "root");
  CHECK(red.roles[1].str() == "literal +1");
  CHECK(red.roles[2].str() == "literal -1");
  CHECK(red.roles[3].str() == "clause 1");
  CHECK(red.roles[4].str() == "leaf 1 1");
  CHECK(red.roles[8].str() == "leaf 1 5");
  CHECK(literal_vertex(1) == 1);
  CHECK(literal_vertex(-1) == 2);
  CHECK(literal_vertex(-3) == 6);
  // A clause repeating one literal has a single edge to it, so the simple
  // graph has 14 edges rather than 8n^2 + 8n = 16.
  CHECK(red.graph.edge_count() == 14);
  CHECK_THROWS_AS(reduce_to_split_mrce(CnfFormula{2, {{1, 2, 2}}}), InputError);
}

TEST_CASE("reduction counts follow the closed forms") {
  Rng rng(11);
  for (int n = 1; n <= 30; ++n) {
    for (const bool distinct : {true, false}) {
      if (n == 1 && distinct) continue;  // only one variable, so no three distinct literals
      const auto f = random_formula(n, rng, distinct);
      const auto red = reduce_to_split_mrce(f);
      const auto nn = static_cast<std::size_t>(n);
      CHECK(red.graph.size() == 1 + 5 * nn + 3 * nn * nn);
      CHECK(red.roles.size() == red.graph.size());
      CHECK(red.graph.edge_count() == 8 * nn * nn + 5 * nn + distinct_literal_occurrences(f));
      if (distinct) CHECK(red.graph.edge_count() == 8 * nn * nn + 8 * nn);
      CHECK(red.threshold == Ratio(1 + 5 * n + 3 * n * n, 1 + n));
    }
  }
}

TEST_CASE("reduction structure") {
  Rng rng(3);
  for (int n = 1; n <= 6; ++n) {
    const auto f = random_formula(n, rng, n >= 2);
    const auto red = reduce_to_split_mrce(f);
    const auto& g = red.graph;
    const auto rec = recognize_and_partition(g);
    REQUIRE(std::holds_alternative<SplitPartition>(rec));
    // The root sees every literal, so the maximum clique is the literals
    // plus one more vertex.
    const auto& clique = std::get<SplitPartition>(rec).clique;
    CHECK(clique.size() == static_cast<std::size_t>(2 * n + 1));
    for (Vertex v = 1; v <= 2 * n; ++v) {
      CHECK(std::binary_search(clique.begin(), clique.end(), v));
    }
    for (std::size_t v = 0; v < g.size(); ++v) {
      const auto& role = red.roles[v];
      const auto vv = static_cast<Vertex>(v);
      switch (role.kind) {
        case RoleKind::kRoot:
          CHECK(g.degree(vv) == static_cast<std::size_t>(2 * n));
          break;
        case RoleKind::kLiteral:
          CHECK(vv == literal_vertex(role.positive ? role.variable : -role.variable));
          CHECK(g.has_edge(0, vv));
          break;
        case RoleKind::kClause:
          for (int lit : f.clauses[static_cast<std::size_t>(role.clause - 1)]) {
            CHECK(g.has_edge(vv, literal_vertex(lit)));
          }
          break;
        case RoleKind::kLeaf:
          CHECK(g.degree(vv) == 2);
          CHECK(g.has_edge(vv, literal_vertex(role.variable)));
          CHECK(g.has_edge(vv, literal_vertex(-role.variable)));
          break;
      }
    }
  }
}

TEST_CASE("optimum reaches the threshold exactly for satisfiable formulas") {
  const auto one = reduce_to_split_mrce(CnfFormula{1, {{1, 1, 1}}});
  CHECK(solve_exact(one.graph).ratio == Ratio(9, 2));

  const auto two = reduce_to_split_mrce(CnfFormula{2, {{1, 2, -1}, {2, 2, 2}}});
  CHECK(solve_exact(two.graph).ratio == Ratio(23, 3));

  const auto unsat = reduce_to_split_mrce(CnfFormula{2, {{1, 1, 1}, {-1, -1, -1}}});
  CHECK(solve_exact(unsat.graph).ratio < Ratio(23, 3));
}

TEST_CASE("threshold separates satisfiable from unsatisfiable formulas at n = 2") {
  // Every pair of clauses drawn from literal multisets over x1, x2.
  std::vector<std::array<int, 3>> clauses;
  const int lits[] = {1, -1, 2, -2};
  for (int a = 0; a < 4; ++a) {
    for (int b = a; b < 4; ++b) {
      for (int c = b; c < 4; ++c) clauses.push_back({lits[a], lits[b], lits[c]});
    }
  }
  int sat = 0;
  int unsat = 0;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    for (std::size_t j = i; j < clauses.size(); ++j) {
      const CnfFormula f{2, {clauses[i], clauses[j]}};
      const auto red = reduce_to_split_mrce(f);
      const auto best = solve_exact(red.graph).ratio;
      if (satisfiable(f)) {
        ++sat;
        CHECK(best == red.threshold);
      } else {
        ++unsat;
        CHECK(best < red.threshold);
      }
    }
  }
  CHECK(sat > 0);
  CHECK(unsat > 0);
}

TEST_CASE("leaves and clauses never help a root-and-literal set") {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 4));
    const auto red = reduce_to_split_mrce(random_formula(n, rng, false));
    VertexSet base{0};
    for (Vertex v = 1; v <= 2 * n; ++v) {
      if (rng.bernoulli(0.5)) base.push_back(v);
    }
    const auto before = evaluate(red.graph, base).ratio;
    for (std::size_t v = 0; v < red.graph.size(); ++v) {
      const auto kind = red.roles[v].kind;
      if (kind != RoleKind::kLeaf && kind != RoleKind::kClause) continue;
      VertexSet grown = base;
      grown.push_back(static_cast<Vertex>(v));
      std::sort(grown.begin(), grown.end());
      if (!is_connected_containing_root(red.graph, grown)) continue;
      CHECK(evaluate(red.graph, grown).ratio <= before);
    }
  }
}

TEST_CASE("generators are deterministic") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const SplitParams params{12, std::nullopt, 0.4};
    const auto a = random_split(params, seed);
    const auto b = random_split(params, seed);
    CHECK(a.edges() == b.edges());
    CHECK(a.root() == b.root());
    const auto c = random_connected(12, 0.3, seed);
    const auto d = random_connected(12, 0.3, seed);
    CHECK(c.edges() == d.edges());
    CHECK(c.root() == d.root());
    const auto e = random_interval(12, seed);
    const auto f = random_interval(12, seed);
    CHECK(e.graph.edges() == f.graph.edges());
    CHECK(e.root == f.root);
    CHECK(e.realization.intervals().size() == f.realization.intervals().size());
  }
  CHECK(random_connected(12, 0.3, 1).edges() != random_connected(12, 0.3, 2).edges());
  Rng x(99);
  Rng y(99);
  for (int i = 0; i < 100; ++i) CHECK(x.next() == y.next());
}

TEST_CASE("random split instances are split and connected") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto n = static_cast<std::size_t>(1 + seed % 14);
    const auto g = random_split(SplitParams{n, std::nullopt, 0.1}, seed);
    CHECK(g.size() == n);
    CHECK(std::holds_alternative<SplitPartition>(recognize_and_partition(g)));
  }
  const auto fixed = random_split(SplitParams{10, 4, 0.5}, 3);
  CHECK(std::get<SplitPartition>(recognize_and_partition(fixed)).clique.size() >= 4);
  CHECK_THROWS_AS(random_split(SplitParams{0, std::nullopt, 0.5}, 1), InputError);
  CHECK_THROWS_AS(random_split(SplitParams{5, 6, 0.5}, 1), InputError);
}

TEST_CASE("random interval instances carry their own realization") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto n = static_cast<std::size_t>(1 + seed % 16);
    const auto inst = random_interval(n, seed);
    CHECK(inst.graph.size() == n);
    CHECK(inst.raw.size() == n);
    CHECK(realizes(inst.realization, inst.graph));
    CHECK(inst.graph.root() == inst.root);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const bool raw = inst.raw[a].left <= inst.raw[b].right && inst.raw[b].left <= inst.raw[a].right;
        CHECK(raw == inst.graph.has_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)));
      }
    }
  }
}

TEST_CASE("random connected graphs hit the requested density") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto g = random_connected(10, 0.5, seed);
    CHECK(g.edge_count() == 23);  // round(0.5 * 45)
  }
  CHECK_THROWS_AS(random_connected(10, 0.1, 1), InputError);
  CHECK_THROWS_AS(random_connected(0, 0.5, 1), InputError);
  CHECK(random_connected(1, 0.0, 1).size() == 1);
}
