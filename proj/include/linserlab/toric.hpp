#pragma once

// Normal fans of lattice polygons, regular subdivisions from lower hulls, and
// the single-cut lifts that build a subdivision one hyperplane at a time.

#include <map>
#include <optional>
#include <vector>

#include "linserlab/exact.hpp"
#include "linserlab/lattice.hpp"

namespace linserlab::toric {

using lattice::CutFunctional;
using lattice::LatticePoint;
using lattice::LatticePolygon;
using lattice::MonomialSet;
using lattice::PointList;

/// One or two primitive generators, counterclockwise.
struct Cone2 {
  std::vector<LatticePoint> generators;
  bool operator==(const Cone2&) const = default;
};

struct NormalFan {
  std::vector<Cone2> cones;         // one per vertex, counterclockwise
  std::vector<LatticePoint> rays;   // one per edge, counterclockwise
};

/// conv(points) + cone(recession).
struct Polyhedron2 {
  PointList points;
  std::vector<LatticePoint> recession;
};

/// Region on or above the chain (0,0), (1,-1), (2,-1), (3,0) with 0 <= x <= 3.
Polyhedron2 twisted_cubic_polyhedron();

/// Cones C_Q = {v : <v, p - q> >= 0 for all p}. A segment gives the fan of an
/// interval: two one-generator cones. Throws on a single point.
NormalFan normal_fan(const LatticePolygon& p);
NormalFan normal_fan(const Polyhedron2& p);

using Heights = std::map<LatticePoint, Rational>;

struct Subdivision {
  std::vector<LatticePolygon> cells;  // sorted by vertex list
  Heights heights;
};

struct AffineFunction {
  Rational a;
  Rational b;
  Rational c;
  Rational operator()(LatticePoint p) const;
  bool operator==(const AffineFunction&) const = default;
};

struct PiecewiseLinearLift {
  std::vector<AffineFunction> pieces;
  Heights values;
};

/// Projection of the lower faces of the lifted points. Collinear input gives
/// a subdivision of the segment into segments. Throws when a height is missing
/// or there are fewer than two distinct points.
Subdivision lower_hull_subdivision(const PointList& points, const Heights& heights);

/// Per-cell affine functions through the lifted cell vertices and the values
/// they induce at every point of `sub.heights`. On a segment the functions are
/// constant across the segment's direction.
PiecewiseLinearLift induced_lift(const Subdivision& sub);

/// F equals L_i on cell i, L_i <= L_j on cell j, and F(p) > L_i(p) at every
/// point outside cell i. Requires one piece per cell.
bool check_strict_convexity(const Subdivision& sub, const PiecewiseLinearLift& F);

/// Points of `sub.heights` inside the closed cell.
MonomialSet cell_content(const Subdivision& sub, std::size_t cell);

/// For each part, the cell whose lattice content equals it.
std::vector<std::optional<std::size_t>> primary_cells(const Subdivision& sub, const std::vector<MonomialSet>& parts);

/// Pieces are ordered (cut parts..., residue). The new cut splits the residue
/// with the component residue + lambda * cut, lambda = 2^-k for the least k
/// such that points already split off keep their piece, every component wins
/// strictly on its own points, each 2-D part is a cell of the lower hull, and
/// the induced lift is strictly convex.
/// Throws when a cut vanishes on D.
PiecewiseLinearLift split_lift(const MonomialSet& D, const CutFunctional& cut,
                               const std::optional<PiecewiseLinearLift>& prior);

PiecewiseLinearLift iterated_split_lift(const MonomialSet& D, const std::vector<CutFunctional>& cuts);

/// Points on which each piece attains the maximum, in piece order.
std::vector<MonomialSet> lift_parts(const PiecewiseLinearLift& F);

}  // namespace linserlab::toric
