#pragma once

// Lattice points, monomial sets, staircases, half-plane cuts and convex
// lattice polygons.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "linserlab/exact.hpp"

namespace linserlab::lattice {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  auto operator<=>(const LatticePoint&) const = default;
};

using PointList = std::vector<LatticePoint>;

/// Sorted, duplicate-free finite subset of N^2.
class MonomialSet {
 public:
  MonomialSet() = default;
  /// Throws std::invalid_argument on negative coordinates; duplicates are merged.
  explicit MonomialSet(PointList points);

  const PointList& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(LatticePoint p) const;

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool operator==(const MonomialSet&) const = default;

 private:
  PointList points_;
};

/// A monomial set closed under decrementing either coordinate.
class Staircase {
 public:
  /// Throws std::invalid_argument when the closure invariant fails.
  explicit Staircase(PointList cells);

  const PointList& cells() const { return cells_.points(); }
  const MonomialSet& as_set() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  bool operator==(const Staircase&) const = default;

 private:
  MonomialSet cells_;
};

/// g(x, y) = a x + b y + c; the positive side is g > 0.
struct CutFunctional {
  Rational a;
  Rational b;
  Rational c;

  CutFunctional(Rational a_, Rational b_, Rational c_);
  Rational eval(LatticePoint p) const;
  int sign_at(LatticePoint p) const;
  bool operator==(const CutFunctional&) const = default;
};

struct HalfplanePartition {
  MonomialSet plus;
  MonomialSet zero;
  MonomialSet minus;
};

/// Convex lattice polygon, vertices counterclockwise with no three
/// consecutive collinear. Two vertices describe a segment.
class LatticePolygon {
 public:
  explicit LatticePolygon(PointList ccw_vertices);
  /// Convex hull of arbitrary points (at least one).
  static LatticePolygon hull_of(PointList points);

  const PointList& vertices() const { return vertices_; }
  /// Twice the signed shoelace area.
  std::int64_t twice_area() const;
  Rational area() const;
  /// Closed containment.
  bool contains(LatticePoint p) const;
  bool operator==(const LatticePolygon&) const = default;

 private:
  PointList vertices_;
};

/// Cross product of (b - a) and (c - a).
std::int64_t orient(LatticePoint a, LatticePoint b, LatticePoint c);

MonomialSet triangle_set(std::int64_t d);
HalfplanePartition halfplane_partition(const MonomialSet& d, const CutFunctional& f);
bool is_staircase(const PointList& e);
Staircase triangle_staircase(std::int64_t m);
Staircase collision_staircase(std::int64_t r, std::int64_t m);

}  // namespace linserlab::lattice
