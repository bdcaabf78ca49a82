#include "mrce/interval_solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mrce/errors.hpp"

namespace mrce {

Coordinate::Coordinate(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("coordinate with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Coordinate Coordinate::parse(const std::string& text) {
  auto fail = [&]() -> Coordinate {
    throw InputError("malformed coordinate '" + text + "'");
  };
  if (text.empty()) return fail();
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    if (s.empty() || s.size() > 18) fail();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) fail();
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') fail();
    }
    return std::stoll(s);
  };

  if (const auto slash = text.find('/'); slash != std::string::npos) {
    return Coordinate(parse_int(text.substr(0, slash)),
                      parse_int(text.substr(slash + 1)));
  }
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 12) fail();
    for (char c : frac) {
      if (c < '0' || c > '9') fail();
    }
    const bool negative = !whole.empty() && whole[0] == '-';
    const std::string digits =
        (whole.empty() || whole == "-" || whole == "+") ? "0" : whole;
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t int_part = parse_int(digits);
    const std::int64_t magnitude =
        (int_part < 0 ? -int_part : int_part) * scale + std::stoll(frac);
    return Coordinate(negative ? -magnitude : magnitude, scale);
  }
  return Coordinate(parse_int(text));
}

IntervalRealization::IntervalRealization(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  if (intervals_.empty()) throw InputError("realization needs an interval");
  std::vector<std::int64_t> ends;
  ends.reserve(2 * intervals_.size());
  for (const Interval& iv : intervals_) {
    if (!(iv.left < iv.right)) throw InputError("trivial interval");
    ends.push_back(iv.left);
    ends.push_back(iv.right);
  }
  std::sort(ends.begin(), ends.end());
  if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) {
    throw InputError("interval endpoints are not pairwise distinct");
  }
}

IntervalRealization canonicalize_realization(std::span<const RawInterval> raw) {
  struct End {
    Coordinate at;
    bool is_right;
    Vertex owner;
  };
  std::vector<End> ends;
  ends.reserve(2 * raw.size());
  for (std::size_t v = 0; v < raw.size(); ++v) {
    if (!(raw[v].left < raw[v].right)) {
      throw InputError("interval of vertex " + std::to_string(v) +
                       " is trivial or reversed");
    }
    ends.push_back({raw[v].left, false, static_cast<Vertex>(v)});
    ends.push_back({raw[v].right, true, static_cast<Vertex>(v)});
  }
  std::sort(ends.begin(), ends.end(), [](const End& a, const End& b) {
    if (a.at != b.at) return a.at < b.at;
    if (a.is_right != b.is_right) return !a.is_right;
    return a.owner < b.owner;
  });
  std::vector<Interval> out(raw.size());
  for (std::size_t i = 0; i < ends.size(); ++i) {
    auto& iv = out[static_cast<std::size_t>(ends[i].owner)];
    (ends[i].is_right ? iv.right : iv.left) = static_cast<std::int64_t>(i) + 1;
  }
  return IntervalRealization(std::move(out));
}

bool intervals_intersect(const Interval& a, const Interval& b) noexcept {
  return a.left <= b.right && b.left <= a.right;
}

bool strictly_inside(const Interval& x, const Interval& y) noexcept {
  return x.left > y.left && x.right < y.right;
}

bool overlaps_left(const Interval& x, const Interval& y) noexcept {
  return x.left < y.left && y.left < x.right && x.right < y.right;
}

bool overlaps_right(const Interval& x, const Interval& y) noexcept {
  return x.right > y.right && y.left < x.left && x.left < y.right;
}

RootedGraph intersection_graph(const IntervalRealization& r, Vertex root) {
  // Sweep by left endpoint; an interval meets every later-starting interval
  // that starts before it ends.
  const std::size_t n = r.size();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return r[a].left < r[b].left; });
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n && r[order[j]].left <= r[order[i]].right; ++j) {
      edges.emplace_back(std::min(order[i], order[j]), std::max(order[i], order[j]));
    }
  }
  std::sort(edges.begin(), edges.end());
  return RootedGraph(n, edges, root);
}

bool realizes(const IntervalRealization& r, const RootedGraph& g) {
  if (r.size() != g.size()) return false;
  std::size_t count = 0;
  for (Vertex u = 0; static_cast<std::size_t>(u) < g.size(); ++u) {
    for (Vertex v = u + 1; static_cast<std::size_t>(v) < g.size(); ++v) {
      const bool meet = intervals_intersect(r[u], r[v]);
      if (meet != g.has_edge(u, v)) return false;
      count += meet;
    }
  }
  return count == g.edge_count();
}

RealLinePartition partition_by_root(const IntervalRealization& r, Vertex root) {
  if (root < 0 || static_cast<std::size_t>(root) >= r.size()) {
    throw InputError("root out of range");
  }
  RealLinePartition p;
  const Interval& y = r[root];
  for (Vertex v = 0; static_cast<std::size_t>(v) < r.size(); ++v) {
    const Interval& x = r[v];
    if (v == root) {
      p.root.push_back(v);
    } else if (strictly_inside(y, x)) {
      p.around.push_back(v);
    } else if (strictly_inside(x, y)) {
      p.inside.push_back(v);
    } else if (overlaps_left(x, y)) {
      p.cross_left.push_back(v);
    } else if (overlaps_right(x, y)) {
      p.cross_right.push_back(v);
    } else if (x.right < y.left) {
      p.left.push_back(v);
    } else if (x.left > y.right) {
      p.right.push_back(v);
    } else {
      throw std::logic_error("interval " + std::to_string(v) +
                             " fits no position class");
    }
  }
  return p;
}

VertexSet core(const IntervalRealization& r, const RealLinePartition& p) {
  VertexSet out;
  for (Vertex v : p.around) {
    const bool dominated = std::any_of(p.around.begin(), p.around.end(), [&](Vertex w) {
      return w != v && strictly_inside(r[v], r[w]);
    });
    if (!dominated) out.push_back(v);
  }
  return out;
}

ExpansionVector expand(Direction direction, Vertex start,
                       const IntervalRealization& r) {
  if (start < 0 || static_cast<std::size_t>(start) >= r.size()) {
    throw InputError("start vertex out of range");
  }
  const bool leftward = direction == Direction::kLeft;
  ExpansionVector out{VertexSet{start}};
  Vertex current = start;
  for (;;) {
    Vertex pick = -1;
    for (Vertex v = 0; static_cast<std::size_t>(v) < r.size(); ++v) {
      const bool overlaps = leftward ? overlaps_left(r[v], r[current])
                                     : overlaps_right(r[v], r[current]);
      if (!overlaps) continue;
      if (pick < 0 || (leftward ? r[v].left < r[pick].left
                                : r[v].right > r[pick].right)) {
        pick = v;
      }
    }
    if (pick < 0) break;
    VertexSet next = out.back();
    next.insert(std::upper_bound(next.begin(), next.end(), pick), pick);
    out.push_back(std::move(next));
    current = pick;
  }
  return out;
}

Solution combine(const RootedGraph& g, std::span<const Vertex> base,
                 const ExpansionVector& left, const ExpansionVector& right) {
  auto score = [&](VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    try {
      return evaluate(g, s);
    } catch (const FeasibilityError& e) {
      throw std::logic_error(std::string("combined expansion infeasible: ") +
                             e.what());
    }
  };
  Solution best = score(VertexSet(base.begin(), base.end()));
  for (const VertexSet& l : left) {
    for (const VertexSet& r : right) {
      VertexSet s(base.begin(), base.end());
      s.insert(s.end(), l.begin(), l.end());
      s.insert(s.end(), r.begin(), r.end());
      Solution candidate = score(std::move(s));
      if (better_than(candidate, best)) best = std::move(candidate);
    }
  }
  return best;
}

Solution solve_interval(const RootedGraph& g, const IntervalRealization& r) {
  if (!realizes(r, g)) {
    throw IncompatibleInput("interval realization does not match the graph");
  }
  const Vertex root = g.root();
  const RealLinePartition partition = partition_by_root(r, root);

  Solution best = combine(g, std::span<const Vertex>(&root, 1),
                          expand(Direction::kLeft, root, r),
                          expand(Direction::kRight, root, r));
  for (Vertex c : core(r, partition)) {
    const VertexSet base = root < c ? VertexSet{root, c} : VertexSet{c, root};
    Solution candidate = combine(g, base, expand(Direction::kLeft, c, r),
                                 expand(Direction::kRight, c, r));
    if (better_than(candidate, best)) best = std::move(candidate);
  }
  return best;
}

}  // namespace mrce
