#include "linserlab/toric.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace linserlab::toric {

namespace {

std::int64_t cross(LatticePoint u, LatticePoint v) { return u.x * v.y - u.y * v.x; }
std::int64_t dot(LatticePoint u, LatticePoint v) { return u.x * v.x + u.y * v.y; }

LatticePoint primitive(LatticePoint v) {
  const std::int64_t g = std::gcd(v.x, v.y);
  return {v.x / g, v.y / g};
}

bool angle_less(LatticePoint a, LatticePoint b) {
  auto half = [](LatticePoint v) { return v.y < 0 || (v.y == 0 && v.x < 0); };
  if (half(a) != half(b)) return half(a) < half(b);
  return cross(a, b) > 0;
}

Rational q(std::int64_t v) { return Rational(static_cast<long>(v)); }

}  // namespace

Rational AffineFunction::operator()(LatticePoint p) const { return a * q(p.x) + b * q(p.y) + c; }

Polyhedron2 twisted_cubic_polyhedron() { return {{{0, 0}, {1, -1}, {2, -1}, {3, 0}}, {{0, 1}}}; }

NormalFan normal_fan(const LatticePolygon& p) { return normal_fan(Polyhedron2{p.vertices(), {}}); }

NormalFan normal_fan(const Polyhedron2& poly) {
  PointList pts = poly.points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) throw std::invalid_argument("normal fan of an empty polyhedron");
  for (const auto& r : poly.recession)
    if (r.x == 0 && r.y == 0) throw std::invalid_argument("zero recession ray");
  NormalFan fan;
  for (const auto& q0 : pts) {
    std::vector<LatticePoint> dirs(poly.recession);
    for (const auto& p : pts)
      if (p != q0) dirs.push_back({p.x - q0.x, p.y - q0.y});
    if (dirs.empty()) throw std::invalid_argument("normal fan of a single point");
    // u: clockwise-most direction, w: counterclockwise-most; both exist only
    // when the tangent cone at q0 is pointed.
    auto extreme = [&](int side) -> std::optional<LatticePoint> {
      for (const auto& u : dirs) {
        bool ok = true;
        for (const auto& v : dirs) {
          const std::int64_t c = cross(u, v) * side;
          if (c < 0 || (c == 0 && dot(u, v) <= 0)) {
            ok = false;
            break;
          }
        }
        if (ok) return u;
      }
      return std::nullopt;
    };
    const auto u = extreme(1);
    const auto w = extreme(-1);
    if (!u || !w) continue;
    if (cross(*u, *w) == 0) {
      fan.cones.push_back({{primitive(*u)}});
    } else {
      fan.cones.push_back({{primitive({w->y, -w->x}), primitive({-u->y, u->x})}});
    }
  }
  std::set<LatticePoint> rays;
  for (const auto& c : fan.cones) rays.insert(c.generators.begin(), c.generators.end());
  fan.rays.assign(rays.begin(), rays.end());
  std::sort(fan.rays.begin(), fan.rays.end(), angle_less);
  std::sort(fan.cones.begin(), fan.cones.end(),
            [](const Cone2& a, const Cone2& b) { return angle_less(a.generators[0], b.generators[0]); });
  return fan;
}

// ---------------------------------------------------------------------------

namespace {

struct Lifted {
  PointList pts;
  std::vector<Rational> h;
};

Lifted lift_points(const PointList& points, const Heights& heights) {
  Lifted l;
  l.pts = points;
  std::sort(l.pts.begin(), l.pts.end());
  l.pts.erase(std::unique(l.pts.begin(), l.pts.end()), l.pts.end());
  for (const auto& p : l.pts) {
    auto it = heights.find(p);
    if (it == heights.end()) throw std::invalid_argument("missing height");
    l.h.push_back(it->second);
  }
  return l;
}

std::vector<LatticePolygon> segment_cells(const Lifted& l) {
  const LatticePoint p0 = l.pts.front();
  const LatticePoint e = primitive({l.pts.back().x - p0.x, l.pts.back().y - p0.y});
  // Points are already in order along e; keep the strictly convex lower chain.
  std::vector<std::size_t> chain;
  auto t = [&](std::size_t i) { return q(dot({l.pts[i].x - p0.x, l.pts[i].y - p0.y}, e)); };
  for (std::size_t i = 0; i < l.pts.size(); ++i) {
    while (chain.size() >= 2) {
      const auto a = chain[chain.size() - 2], b = chain.back();
      const Rational c = (t(b) - t(a)) * (l.h[i] - l.h[a]) - (l.h[b] - l.h[a]) * (t(i) - t(a));
      if (c > 0) break;
      chain.pop_back();
    }
    chain.push_back(i);
  }
  std::vector<LatticePolygon> cells;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) cells.emplace_back(PointList{l.pts[chain[k]], l.pts[chain[k + 1]]});
  return cells;
}

// -orient(u, v, p) as an affine function: positive to the right of u -> v.
AffineFunction right_of(LatticePoint u, LatticePoint v) {
  const std::int64_t a = v.y - u.y;
  const std::int64_t b = -(v.x - u.x);
  return {q(a), q(b), q(-(a * u.x + b * u.y))};
}

AffineFunction add(const AffineFunction& f, const Rational& s, const AffineFunction& g) {
  return {f.a + s * g.a, f.b + s * g.b, f.c + s * g.c};
}

PointList on_plane(const Lifted& l, const AffineFunction& L) {
  PointList s;
  for (std::size_t i = 0; i < l.pts.size(); ++i)
    if (L(l.pts[i]) == l.h[i]) s.push_back(l.pts[i]);
  return s;
}

std::vector<LatticePolygon> facet_cells(const Lifted& l, const LatticePolygon& hull) {
  // Initial facet: a lower edge along the first hull edge, tilted up to the
  // first point it meets.
  const LatticePoint u = hull.vertices()[0], w = hull.vertices()[1];
  const LatticePoint e{w.x - u.x, w.y - u.y};
  std::size_t ui = 0;
  while (l.pts[ui] != u) ++ui;
  std::optional<Rational> slope;
  for (std::size_t i = 0; i < l.pts.size(); ++i) {
    const LatticePoint d{l.pts[i].x - u.x, l.pts[i].y - u.y};
    if (i == ui || cross(e, d) != 0) continue;
    const Rational s = (l.h[i] - l.h[ui]) / q(dot(d, e));
    if (!slope || s < *slope) slope = s;
  }
  AffineFunction L{*slope * q(e.x), *slope * q(e.y), l.h[ui] - *slope * q(dot(u, e))};
  const AffineFunction inward = add({0, 0, 0}, -1, right_of(u, w));
  std::optional<Rational> tilt;
  for (std::size_t i = 0; i < l.pts.size(); ++i) {
    const Rational g = inward(l.pts[i]);
    if (g <= 0) continue;
    const Rational s = (l.h[i] - L(l.pts[i])) / g;
    if (!tilt || s < *tilt) tilt = s;
  }
  L = add(L, *tilt, inward);

  std::set<PointList> seen;
  std::deque<std::pair<AffineFunction, PointList>> todo;
  PointList first = on_plane(l, L);
  seen.insert(first);
  todo.emplace_back(L, std::move(first));
  std::vector<LatticePolygon> cells;
  while (!todo.empty()) {
    auto [plane, s] = std::move(todo.front());
    todo.pop_front();
    const LatticePolygon cell = LatticePolygon::hull_of(s);
    cells.push_back(cell);
    const auto& vs = cell.vertices();
    for (std::size_t k = 0; k < vs.size(); ++k) {
      const AffineFunction g = right_of(vs[k], vs[(k + 1) % vs.size()]);
      std::optional<Rational> best;
      for (std::size_t i = 0; i < l.pts.size(); ++i) {
        const Rational gv = g(l.pts[i]);
        if (gv <= 0) continue;
        const Rational t = (l.h[i] - plane(l.pts[i])) / gv;
        if (!best || t < *best) best = t;
      }
      if (!best) continue;
      const AffineFunction next = add(plane, *best, g);
      PointList ns = on_plane(l, next);
      if (seen.insert(ns).second) todo.emplace_back(next, std::move(ns));
    }
  }
  return cells;
}

}  // namespace

Subdivision lower_hull_subdivision(const PointList& points, const Heights& heights) {
  const Lifted l = lift_points(points, heights);
  if (l.pts.size() < 2) throw std::invalid_argument("subdivision needs at least two distinct points");
  Subdivision sub;
  for (const auto& p : l.pts) sub.heights[p] = heights.at(p);
  const LatticePolygon hull = LatticePolygon::hull_of(l.pts);
  sub.cells = hull.vertices().size() == 2 ? segment_cells(l) : facet_cells(l, hull);
  std::sort(sub.cells.begin(), sub.cells.end(),
            [](const LatticePolygon& a, const LatticePolygon& b) { return a.vertices() < b.vertices(); });
  return sub;
}

PiecewiseLinearLift induced_lift(const Subdivision& sub) {
  PiecewiseLinearLift F;
  for (const auto& cell : sub.cells) {
    const auto& v = cell.vertices();
    const Rational h0 = sub.heights.at(v[0]);
    if (v.size() == 2) {
      const LatticePoint e{v[1].x - v[0].x, v[1].y - v[0].y};
      const Rational k = (sub.heights.at(v[1]) - h0) / q(dot(e, e));
      F.pieces.push_back({k * q(e.x), k * q(e.y), h0 - k * q(dot(v[0], e))});
      continue;
    }
    if (v.size() < 3) throw std::invalid_argument("cell without area or length");
    const LatticePoint d1{v[1].x - v[0].x, v[1].y - v[0].y}, d2{v[2].x - v[0].x, v[2].y - v[0].y};
    const Rational dh1 = sub.heights.at(v[1]) - h0, dh2 = sub.heights.at(v[2]) - h0;
    const Rational det = q(cross(d1, d2));
    const Rational a = (dh1 * q(d2.y) - dh2 * q(d1.y)) / det;
    const Rational b = (q(d1.x) * dh2 - q(d2.x) * dh1) / det;
    F.pieces.push_back({a, b, h0 - a * q(v[0].x) - b * q(v[0].y)});
  }
  for (const auto& [p, h] : sub.heights) {
    for (std::size_t i = 0; i < sub.cells.size(); ++i)
      if (sub.cells[i].contains(p)) {
        F.values[p] = F.pieces[i](p);
        break;
      }
  }
  return F;
}

bool check_strict_convexity(const Subdivision& sub, const PiecewiseLinearLift& F) {
  if (F.pieces.size() != sub.cells.size()) return false;
  for (std::size_t i = 0; i < sub.cells.size(); ++i) {
    const auto& L = F.pieces[i];
    for (const auto& [p, v] : F.values) {
      if (sub.cells[i].contains(p) ? v != L(p) : v <= L(p)) return false;
    }
    // Convexity: L_i stays below every other cell's function on that cell.
    for (std::size_t j = 0; j < sub.cells.size(); ++j)
      for (const auto& p : sub.cells[j].vertices())
        if (L(p) > F.pieces[j](p)) return false;
  }
  return true;
}

MonomialSet cell_content(const Subdivision& sub, std::size_t cell) {
  PointList pts;
  for (const auto& [p, h] : sub.heights)
    if (sub.cells.at(cell).contains(p)) pts.push_back(p);
  return MonomialSet(std::move(pts));
}

std::vector<std::optional<std::size_t>> primary_cells(const Subdivision& sub, const std::vector<MonomialSet>& parts) {
  std::vector<MonomialSet> contents;
  for (std::size_t i = 0; i < sub.cells.size(); ++i) contents.push_back(cell_content(sub, i));
  std::vector<std::optional<std::size_t>> out;
  for (const auto& part : parts) {
    auto it = std::find(contents.begin(), contents.end(), part);
    out.push_back(it == contents.end() ? std::nullopt : std::optional<std::size_t>(it - contents.begin()));
  }
  return out;
}

std::vector<MonomialSet> lift_parts(const PiecewiseLinearLift& F) {
  std::vector<PointList> parts(F.pieces.size());
  for (const auto& [p, v] : F.values)
    for (std::size_t k = 0; k < F.pieces.size(); ++k)
      if (F.pieces[k](p) == v) parts[k].push_back(p);
  std::vector<MonomialSet> out;
  for (auto& s : parts) out.emplace_back(std::move(s));
  return out;
}

namespace {

bool spans_plane(const MonomialSet& s) {
  const auto& p = s.points();
  for (std::size_t i = 2; i < p.size(); ++i)
    if (lattice::orient(p[0], p[1], p[i]) != 0) return true;
  return false;
}

bool unique_winners(const PiecewiseLinearLift& F) {
  for (const auto& [p, v] : F.values) {
    int hits = 0;
    for (const auto& L : F.pieces) hits += L(p) == v;
    if (hits != 1) return false;
  }
  return true;
}

}  // namespace

PiecewiseLinearLift split_lift(const MonomialSet& D, const CutFunctional& cut,
                               const std::optional<PiecewiseLinearLift>& prior) {
  for (const auto& p : D)
    if (cut.sign_at(p) == 0) throw std::invalid_argument("cut passes through a point of D");
  PiecewiseLinearLift base;
  if (prior) {
    base = *prior;
    if (base.pieces.empty()) throw std::invalid_argument("prior lift without pieces");
    for (const auto& p : D)
      if (!base.values.count(p)) throw std::invalid_argument("prior lift undefined on D");
  } else {
    base.pieces.push_back({0, 0, 0});
    for (const auto& p : D) base.values[p] = 0;
  }
  const AffineFunction residue = base.pieces.back();
  const AffineFunction g{cut.a, cut.b, cut.c};
  Rational lambda = 1;
  for (int k = 0; k < 256; ++k, lambda /= 2) {
    PiecewiseLinearLift F;
    F.pieces.assign(base.pieces.begin(), base.pieces.end() - 1);
    F.pieces.push_back(add(residue, lambda, g));
    F.pieces.push_back(residue);
    const AffineFunction& comp = F.pieces[F.pieces.size() - 2];
    bool kept = true;
    for (const auto& [p, v] : base.values) {
      const Rational c = comp(p);
      // Points already split off keep their piece.
      if (v != residue(p) && c >= v) kept = false;
      F.values[p] = std::max(v, c);
    }
    if (!kept || !unique_winners(F)) continue;
    PointList pts;
    for (const auto& [p, v] : F.values) pts.push_back(p);
    const Subdivision sub = lower_hull_subdivision(pts, F.values);
    const auto parts = lift_parts(F);
    const auto cells = primary_cells(sub, parts);
    bool ok = true;
    for (std::size_t j = 0; j < parts.size() && ok; ++j) ok = !spans_plane(parts[j]) || cells[j].has_value();
    if (ok && check_strict_convexity(sub, induced_lift(sub))) return F;
  }
  throw std::runtime_error("no admissible lambda for split_lift");
}

PiecewiseLinearLift iterated_split_lift(const MonomialSet& D, const std::vector<CutFunctional>& cuts) {
  std::optional<PiecewiseLinearLift> F;
  for (const auto& c : cuts) F = split_lift(D, c, F);
  if (!F) {
    PiecewiseLinearLift zero;
    zero.pieces.push_back({0, 0, 0});
    for (const auto& p : D) zero.values[p] = 0;
    return zero;
  }
  return *F;
}

}  // namespace linserlab::toric
