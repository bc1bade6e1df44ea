#include "linserlab/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace linserlab::lattice {

MonomialSet::MonomialSet(PointList points) : points_(std::move(points)) {
  for (const auto& p : points_)
    if (p.x < 0 || p.y < 0) throw std::invalid_argument("monomial set point with negative coordinate");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool MonomialSet::contains(LatticePoint p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

Staircase::Staircase(PointList cells) : cells_(std::move(cells)) {
  if (!is_staircase(cells_.points())) throw std::invalid_argument("not a staircase");
}

CutFunctional::CutFunctional(Rational a_, Rational b_, Rational c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (a == 0 && b == 0) throw std::invalid_argument("cut functional with zero direction");
}

Rational CutFunctional::eval(LatticePoint p) const {
  return a * static_cast<long>(p.x) + b * static_cast<long>(p.y) + c;
}

int CutFunctional::sign_at(LatticePoint p) const { return sgn(eval(p)); }

std::int64_t orient(LatticePoint a, LatticePoint b, LatticePoint c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

LatticePolygon::LatticePolygon(PointList v) : vertices_(std::move(v)) {
  const std::size_t n = vertices_.size();
  if (n == 0) throw std::invalid_argument("empty polygon");
  if (n == 2 && vertices_[0] == vertices_[1]) throw std::invalid_argument("degenerate segment");
  if (n >= 3) {
    for (std::size_t i = 0; i < n; ++i) {
      if (orient(vertices_[i], vertices_[(i + 1) % n], vertices_[(i + 2) % n]) <= 0)
        throw std::invalid_argument("polygon not strictly convex counterclockwise");
    }
  }
}

LatticePolygon LatticePolygon::hull_of(PointList pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return LatticePolygon(pts);
  // Andrew's monotone chain, dropping collinear points.
  PointList hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return LatticePolygon(hull);
}

std::int64_t LatticePolygon::twice_area() const {
  const std::size_t n = vertices_.size();
  if (n < 3) return 0;
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = vertices_[i];
    const auto& q = vertices_[(i + 1) % n];
    s += p.x * q.y - q.x * p.y;
  }
  return s;
}

Rational LatticePolygon::area() const { return make_rational(twice_area(), 2); }

bool LatticePolygon::contains(LatticePoint p) const {
  const std::size_t n = vertices_.size();
  if (n == 1) return p == vertices_[0];
  if (n == 2) {
    const auto& a = vertices_[0];
    const auto& b = vertices_[1];
    return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (orient(vertices_[i], vertices_[(i + 1) % n], p) < 0) return false;
  return true;
}

MonomialSet triangle_set(std::int64_t d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  PointList pts;
  pts.reserve(static_cast<std::size_t>((d + 1) * (d + 2) / 2));
  for (std::int64_t x = 0; x <= d; ++x)
    for (std::int64_t y = 0; x + y <= d; ++y) pts.push_back({x, y});
  return MonomialSet(std::move(pts));
}

HalfplanePartition halfplane_partition(const MonomialSet& d, const CutFunctional& f) {
  PointList plus, zero, minus;
  for (const auto& p : d) {
    switch (f.sign_at(p)) {
      case 1: plus.push_back(p); break;
      case 0: zero.push_back(p); break;
      default: minus.push_back(p); break;
    }
  }
  return {MonomialSet(std::move(plus)), MonomialSet(std::move(zero)), MonomialSet(std::move(minus))};
}

bool is_staircase(const PointList& e) {
  PointList sorted = e;
  std::sort(sorted.begin(), sorted.end());
  auto has = [&](LatticePoint p) { return std::binary_search(sorted.begin(), sorted.end(), p); };
  for (const auto& p : sorted) {
    if (p.x < 0 || p.y < 0) return false;
    if (p.x > 0 && !has({p.x - 1, p.y})) return false;
    if (p.y > 0 && !has({p.x, p.y - 1})) return false;
  }
  return true;
}

Staircase triangle_staircase(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("triangle staircase needs m >= 1 (empty scheme)");
  PointList cells;
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = 0; i + j < m; ++j) cells.push_back({i, j});
  return Staircase(std::move(cells));
}

Staircase collision_staircase(std::int64_t r, std::int64_t m) {
  if (r < 1 || m < 1) throw std::invalid_argument("collision staircase needs r, m >= 1");
  // Standard monomials x^i y^j of (y, x^r)^m.
  PointList cells;
  for (std::int64_t j = 0; j < m; ++j)
    for (std::int64_t i = 0; i < r * (m - j); ++i) cells.push_back({i, j});
  return Staircase(std::move(cells));
}

}  // namespace linserlab::lattice
