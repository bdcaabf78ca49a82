#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mrce/graph.hpp"
#include "mrce/instance_forge.hpp"
#include "mrce/interval_solver.hpp"

namespace mrce {

// Readers throw InputError with a line number on malformed input. `#`
// starts a comment everywhere except in DIMACS, which uses `c` lines.

/// Header `n m root`, then m lines `u v` with 0 <= u < v < n.
RootedGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const RootedGraph& g,
                     std::span<const std::string> comments = {});

struct IntervalFile {
  Vertex root = 0;
  std::vector<RawInterval> intervals;
};

/// Header `n root`, then n lines `id left right`; each id 0..n-1 once.
IntervalFile read_intervals(std::istream& in);
void write_intervals(std::ostream& out, const IntervalFile& file);

std::string to_string(const Coordinate& c);

struct ClaimedSolution {
  Ratio ratio;
  std::vector<Vertex> vertices;  // as listed, unvalidated
};

/// Line 1 `ratio <num>/<den>`, line 2 the sorted vertex ids.
ClaimedSolution read_solution(std::istream& in);
void write_solution(std::ostream& out, const Solution& sol,
                    std::span<const std::string> comments = {});

/// `p cnf <vars> <clauses>` then clauses of three literals ending in 0.
CnfFormula read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const CnfFormula& f);

/// One `vertex role` line per vertex.
void write_roles(std::ostream& out, std::span<const VertexRole> roles);

}  // namespace mrce
