#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mrce/graph.hpp"
#include "mrce/interval_solver.hpp"

namespace mrce {

/// CNF with exactly three literals per clause. Literals are signed 1-based
/// variable indices; repeats inside a clause are allowed.
struct CnfFormula {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;
};

/// Throws InputError on a literal outside 1..variables (either sign).
void validate(const CnfFormula& f);

/// Pads to as many variables as clauses without changing satisfiability:
/// repeats the first clause, or declares unused variables.
CnfFormula equalize(const CnfFormula& f);

enum class RoleKind { kRoot, kLiteral, kClause, kLeaf };

struct VertexRole {
  RoleKind kind = RoleKind::kRoot;
  int variable = 0;   // literal and leaf: 1-based variable
  bool positive = true;  // literal only
  int clause = 0;     // clause: 1-based clause index
  int leaf = 0;       // leaf: 1-based index within its variable's family

  std::string str() const;
};

struct ReductionOutput {
  RootedGraph graph;
  std::vector<VertexRole> roles;
  Ratio threshold;  // (1 + 5n + 3n^2) / (1 + n)
};

/// Vertex of literal x_i (2i - 1) or its negation (2i).
Vertex literal_vertex(int literal);

/// Split instance whose optimum reaches the threshold iff f is satisfiable.
/// Layout: root 0, literals 1..2n, clauses 2n+1..3n, then 3n+2 leaves per
/// variable, variable-major. Requires as many variables as clauses.
ReductionOutput reduce_to_split_mrce(const CnfFormula& f);

/// Deterministic 64-bit generator with platform-independent draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool bernoulli(double p);
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(
                              uniform(0, static_cast<std::int64_t>(i) - 1))]);
    }
  }

 private:
  std::uint64_t state_[4];
};

struct SplitParams {
  std::size_t n = 8;
  std::optional<std::size_t> clique_size;  // random in [1, n] when empty
  double edge_probability = 0.5;           // independent-to-clique edges
};

RootedGraph random_split(const SplitParams& params, std::uint64_t seed);

struct IntervalInstance {
  Vertex root = 0;
  std::vector<RawInterval> raw;  // integer endpoints, ties possible
  IntervalRealization realization;
  RootedGraph graph;
};

/// Connected interval instance: intervals are laid out left to right, each
/// starting inside the union of the previous ones.
IntervalInstance random_interval(std::size_t n, std::uint64_t seed);

/// Random spanning tree plus uniformly chosen extra edges, for a total of
/// round(density * n(n-1)/2) edges. Throws InputError if that is below n-1.
RootedGraph random_connected(std::size_t n, double density, std::uint64_t seed);

}  // namespace mrce
