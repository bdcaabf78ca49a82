#include "mrce/formats.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "mrce/errors.hpp"

namespace mrce {

namespace {

// Yields non-empty, comment-stripped lines with their 1-based numbers.
class LineReader {
 public:
  LineReader(std::istream& in, char comment) : in_(in), comment_(comment) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (const auto pos = line.find(comment_); pos != std::string::npos) {
        line.erase(pos);
      }
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("line " + std::to_string(number_) + ": " + what);
  }

 private:
  std::istream& in_;
  char comment_;
  std::size_t number_ = 0;
};

template <typename... T>
bool scan_exact(const std::string& line, T&... fields) {
  std::istringstream ss(line);
  ((ss >> fields), ...);
  if (ss.fail()) return false;
  std::string extra;
  return !(ss >> extra);
}

}  // namespace

RootedGraph read_edge_list(std::istream& in) {
  LineReader lines(in, '#');
  std::string line;
  if (!lines.next(line)) throw InputError("empty edge list");
  long long n = 0, m = 0, root = 0;
  if (!scan_exact(line, n, m, root) || n < 1 || m < 0) {
    lines.fail("expected header 'n m root'");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (lines.next(line)) {
    long long u = 0, v = 0;
    if (!scan_exact(line, u, v)) lines.fail("expected 'u v'");
    if (!(0 <= u && u < v && v < n)) lines.fail("edge must satisfy 0 <= u < v < n");
    if (static_cast<long long>(edges.size()) == m) lines.fail("more edges than declared");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw InputError("declared " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return RootedGraph(static_cast<std::size_t>(n), edges, static_cast<Vertex>(root));
}

void write_edge_list(std::ostream& out, const RootedGraph& g,
                     std::span<const std::string> comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << g.size() << ' ' << g.edge_count() << ' ' << g.root() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

IntervalFile read_intervals(std::istream& in) {
  LineReader lines(in, '#');
  std::string line;
  if (!lines.next(line)) throw InputError("empty interval file");
  long long n = 0, root = 0;
  if (!scan_exact(line, n, root) || n < 1) lines.fail("expected header 'n root'");
  if (root < 0 || root >= n) lines.fail("root out of range");

  IntervalFile file;
  file.root = static_cast<Vertex>(root);
  file.intervals.resize(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  long long count = 0;
  while (lines.next(line)) {
    long long id = 0;
    std::string left, right;
    if (!scan_exact(line, id, left, right)) lines.fail("expected 'id left right'");
    if (id < 0 || id >= n) lines.fail("interval id out of range");
    if (seen[static_cast<std::size_t>(id)]) lines.fail("interval id repeated");
    seen[static_cast<std::size_t>(id)] = 1;
    try {
      file.intervals[static_cast<std::size_t>(id)] = {Coordinate::parse(left),
                                                      Coordinate::parse(right)};
    } catch (const InputError& e) {
      lines.fail(e.what());
    }
    ++count;
  }
  if (count != n) {
    throw InputError("declared " + std::to_string(n) + " intervals, found " +
                     std::to_string(count));
  }
  return file;
}

std::string to_string(const Coordinate& c) {
  if (c.den() == 1) return std::to_string(c.num());
  return std::to_string(c.num()) + "/" + std::to_string(c.den());
}

void write_intervals(std::ostream& out, const IntervalFile& file) {
  out << file.intervals.size() << ' ' << file.root << '\n';
  for (std::size_t v = 0; v < file.intervals.size(); ++v) {
    out << v << ' ' << to_string(file.intervals[v].left) << ' '
        << to_string(file.intervals[v].right) << '\n';
  }
}

ClaimedSolution read_solution(std::istream& in) {
  LineReader lines(in, '#');
  std::string line;
  if (!lines.next(line)) throw InputError("empty solution file");
  std::string keyword, ratio;
  if (!scan_exact(line, keyword, ratio) || keyword != "ratio") {
    lines.fail("expected 'ratio <num>/<den>'");
  }
  ClaimedSolution sol;
  try {
    sol.ratio = Ratio::parse(ratio);
  } catch (const InputError& e) {
    lines.fail(e.what());
  }
  if (!lines.next(line)) throw InputError("solution file lists no vertices");
  std::istringstream ss(line);
  std::string token;
  while (ss >> token) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      sol.vertices.push_back(static_cast<Vertex>(v));
    } catch (const std::logic_error&) {
      lines.fail("malformed vertex id '" + token + "'");
    }
  }
  if (lines.next(line)) lines.fail("unexpected content after the vertex list");
  return sol;
}

void write_solution(std::ostream& out, const Solution& sol,
                    std::span<const std::string> comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "ratio " << sol.ratio.str() << '\n';
  for (std::size_t i = 0; i < sol.set.size(); ++i) {
    out << (i ? " " : "") << sol.set[i];
  }
  out << '\n';
}

CnfFormula read_dimacs(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  auto fail = [&](const std::string& what) {
    throw InputError("line " + std::to_string(number) + ": " + what);
  };
  CnfFormula f;
  long long declared_clauses = -1;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first) || first == "c" || first == "%") continue;
    if (first == "p") {
      std::string cnf;
      long long vars = 0;
      if (!(ss >> cnf >> vars >> declared_clauses) || cnf != "cnf" || vars < 0 ||
          declared_clauses < 0) {
        fail("expected 'p cnf <vars> <clauses>'");
      }
      f.variables = static_cast<int>(vars);
      continue;
    }
    if (declared_clauses < 0) fail("clause before the problem line");
    ss.clear();
    ss.str(line);
    long long lit = 0;
    while (ss >> lit) {
      if (lit == 0) {
        if (pending.size() != 3) fail("clause must have exactly 3 literals");
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        if (lit < -f.variables || lit > f.variables) fail("literal out of range");
        pending.push_back(static_cast<int>(lit));
      }
    }
    if (!ss.eof()) fail("malformed literal");
  }
  if (declared_clauses < 0) throw InputError("missing 'p cnf' line");
  if (!pending.empty()) throw InputError("last clause is not terminated by 0");
  if (static_cast<long long>(f.clauses.size()) != declared_clauses) {
    throw InputError("declared " + std::to_string(declared_clauses) +
                     " clauses, found " + std::to_string(f.clauses.size()));
  }
  return f;
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  }
}

void write_roles(std::ostream& out, std::span<const VertexRole> roles) {
  for (std::size_t v = 0; v < roles.size(); ++v) {
    out << v << ' ' << roles[v].str() << '\n';
  }
}

}  // namespace mrce
