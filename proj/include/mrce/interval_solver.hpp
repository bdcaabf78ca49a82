#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mrce/graph.hpp"

namespace mrce {

/// Signed exact rational endpoint as read from an interval file.
class Coordinate {
 public:
  Coordinate() = default;
  Coordinate(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  /// Accepts integers, decimals ("2.5") and fractions ("7/2").
  static Coordinate parse(const std::string& text);

  friend bool operator==(const Coordinate&, const Coordinate&) = default;
  friend std::strong_ordering operator<=>(const Coordinate& a,
                                          const Coordinate& b) noexcept {
    const detail::Int128 lhs = static_cast<detail::Int128>(a.num_) * b.den_;
    const detail::Int128 rhs = static_cast<detail::Int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct RawInterval {
  Coordinate left;
  Coordinate right;
};

/// Closed interval with integer endpoints.
struct Interval {
  std::int64_t left = 0;
  std::int64_t right = 0;
};

/// One interval per vertex, all 2n endpoints pairwise distinct, left < right.
class IntervalRealization {
 public:
  /// Throws InputError when the endpoint invariant does not hold.
  explicit IntervalRealization(std::vector<Interval> intervals);

  std::size_t size() const noexcept { return intervals_.size(); }
  const Interval& operator[](Vertex v) const {
    return intervals_[static_cast<std::size_t>(v)];
  }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }

 private:
  std::vector<Interval> intervals_;
};

/// Relabels endpoints to 1..2n preserving coordinate order. Equal
/// coordinates put left endpoints before right ones, then go by vertex
/// index, so touching closed intervals stay adjacent.
IntervalRealization canonicalize_realization(std::span<const RawInterval> raw);

bool intervals_intersect(const Interval& a, const Interval& b) noexcept;

/// x strictly inside y.
bool strictly_inside(const Interval& x, const Interval& y) noexcept;
/// x sticks out of y on the left only: x_l < y_l < x_r < y_r.
bool overlaps_left(const Interval& x, const Interval& y) noexcept;
/// x sticks out of y on the right only: y_l < x_l < y_r < x_r.
bool overlaps_right(const Interval& x, const Interval& y) noexcept;

/// Intersection graph of the realization; throws InputError if disconnected.
RootedGraph intersection_graph(const IntervalRealization& r, Vertex root);

/// True iff r has g's vertex count and its intersection graph equals g.
bool realizes(const IntervalRealization& r, const RootedGraph& g);

/// Vertices classified by the position of their interval against the
/// root's interval.
struct RealLinePartition {
  VertexSet left;           // entirely left of the root interval
  VertexSet cross_left;     // overlaps it from the left
  VertexSet inside;         // strictly inside it
  VertexSet around;         // strictly contains it
  VertexSet root;           // the root itself
  VertexSet cross_right;    // overlaps it from the right
  VertexSet right;          // entirely right of it
};

RealLinePartition partition_by_root(const IntervalRealization& r, Vertex root);

/// Members of `around` whose interval is not strictly inside another
/// member's interval.
VertexSet core(const IntervalRealization& r, const RealLinePartition& p);

enum class Direction { kLeft, kRight };

/// Entry t holds the start vertex and the first t greedy picks.
using ExpansionVector = std::vector<VertexSet>;

/// Greedy chain from `start`: repeatedly take the interval that overlaps
/// the current one on the given side and reaches farthest in that
/// direction. Intervals containing the current one never qualify.
ExpansionVector expand(Direction direction, Vertex start,
                       const IntervalRealization& r);

/// Best of base ∪ l ∪ r over all pairs of prefixes.
Solution combine(const RootedGraph& g, std::span<const Vertex> base,
                 const ExpansionVector& left, const ExpansionVector& right);

/// Optimal rooted expansion of an interval graph given its realization.
/// Throws IncompatibleInput when r does not realize g.
Solution solve_interval(const RootedGraph& g, const IntervalRealization& r);

}  // namespace mrce
