#include "linserlab/surfaces.hpp"

#include <numeric>
#include <stdexcept>

namespace linserlab::surfaces {

namespace {

Integer z(std::int64_t v) { return Integer(static_cast<long>(v)); }

NSLattice make_lattice(std::vector<std::string> labels, IntMatrix gram, DivClass k) {
  return {std::move(labels), std::move(gram), std::move(k)};
}

}  // namespace

NSLattice ee_lattice() {
  IntMatrix g(3, 3, Integer(1));
  for (std::size_t i = 0; i < 3; ++i) g(i, i) = 0;
  return make_lattice({"F1", "F2", "Delta"}, g, DivClass{{0, 0, 0}});
}

NSLattice blowup_lattice(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("negative number of points");
  const auto r = static_cast<std::size_t>(n + 1);
  IntMatrix g(r, r);
  std::vector<std::string> labels{"H"};
  DivClass k{std::vector<Integer>(r, Integer(1))};
  k.coeffs[0] = -3;
  g(0, 0) = 1;
  for (std::size_t i = 1; i < r; ++i) {
    g(i, i) = -1;
    labels.push_back("E" + std::to_string(i));
  }
  return make_lattice(std::move(labels), g, std::move(k));
}

Integer pair(const NSLattice& L, const DivClass& A, const DivClass& B) {
  const std::size_t r = L.gram.rows();
  if (L.gram.cols() != r || A.coeffs.size() != r || B.coeffs.size() != r)
    throw std::invalid_argument("dimension mismatch in intersection pairing");
  Integer s = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (L.gram(i, j) != L.gram(j, i)) throw std::invalid_argument("Gram matrix not symmetric");
      s += A.coeffs[i] * L.gram(i, j) * B.coeffs[j];
    }
  return s;
}

DivClass operator+(const DivClass& a, const DivClass& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw std::invalid_argument("dimension mismatch");
  DivClass c = a;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] += b.coeffs[i];
  return c;
}

DivClass operator-(const DivClass& a, const DivClass& b) { return a + Integer(-1) * b; }

DivClass operator*(const Integer& k, const DivClass& a) {
  DivClass c = a;
  for (auto& x : c.coeffs) x *= k;
  return c;
}

bool ee_nef_test(const Integer& a1, const Integer& a2, const Integer& b) {
  return a1 * a2 + a1 * b + a2 * b >= 0 && a1 + a2 + b >= 0;
}

KollarReport kollar_report(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("Kollar example needs n >= 2");
  const NSLattice L = ee_lattice();
  const Integer N = z(n);
  KollarReport r;
  r.n = n;
  r.An = DivClass{{N, N * N - N + 1, -(N - 1)}};
  const DivClass R{{1, 1, 0}};
  r.AnSq = pair(L, r.An, r.An);
  r.An_dot_F1F2 = pair(L, r.An, R);
  const DivClass D = N * r.An - R;
  r.nAn_minus_R_sq = pair(L, D, D);
  r.chi = r.nAn_minus_R_sq / 2;
  r.h1_lower = -r.chi;
  r.h1_printed = N * N * N - 2 * N * N + 3 * N - 1;
  const DivClass C = N * r.An;
  r.h0_Cn = pair(L, C, C) / 2;
  r.nef = ee_nef_test(r.An.coeffs[0], r.An.coeffs[1], r.An.coeffs[2]);
  return r;
}

std::int64_t counterexample_n(std::int64_t c) {
  if (c < 0) throw std::invalid_argument("negative constant");
  for (std::int64_t n = 2;; ++n) {
    const Integer m = z(n - 1);
    if (m * m * m > z(c) * z(n) * z(n)) return n;
  }
}

std::int64_t vwbnc_bound(const SurfaceInvariants& inv, std::int64_t g) {
  if (g < 0) throw std::invalid_argument("negative genus");
  return inv.c1sq - 4 * inv.c2 - 4 * g + 4;
}

std::int64_t wbnc_bound(const SurfaceInvariants& inv, std::int64_t g) {
  if (g < 0) throw std::invalid_argument("negative genus");
  return inv.c1sq - 3 * inv.c2 + 2 - 2 * g;
}

BlowupStep blowup_step(const SurfaceInvariants& inv, std::int64_t Csq, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("multiplicity must be at least 1");
  return {{inv.c1sq - 1, inv.c2 + 1}, Csq - m * m};
}

LogChern log_my_check(const SurfaceInvariants& inv, std::int64_t KdotC, std::int64_t Csq, std::int64_t g) {
  if (g < 0) throw std::invalid_argument("negative genus");
  if (KdotC + Csq != 2 * g - 2) throw std::invalid_argument("adjunction fails: K.C + C^2 != 2g - 2");
  LogChern r;
  r.log_c1sq = inv.c1sq + 2 * KdotC + Csq;
  r.log_c2 = inv.c2 + KdotC;
  r.satisfied = r.log_c1sq <= 3 * (inv.c2 - (2 - 2 * g));
  return r;
}

int InverseSqrt::compare(const Rational& q) const {
  if (q <= 0) return 1;
  const Rational t = q * q * radicand;
  return t < 1 ? 1 : (t == 1 ? 0 : -1);
}

std::optional<Rational> InverseSqrt::rational_value() const {
  const Integer& num = radicand.get_num();
  const Integer& den = radicand.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return make_rational(rd, rn);
}

InverseSqrt seshadri_lower(const Rational& b) {
  if (b < 0) throw std::invalid_argument("b must be nonnegative");
  return {b + 1};
}

Integer reducible_bound(std::int64_t rho, std::int64_t b) {
  if (rho < 1 || b < 1) throw std::invalid_argument("rho and b must be at least 1");
  return z(rho) * z(b) * z((b + 1) / 2);
}

// ---------------------------------------------------------------------------

namespace {

std::int64_t dot(const Coords& p, const Coords& l) { return p[0] * l[0] + p[1] * l[1] + p[2] * l[2]; }

Coords cross(const Coords& a, const Coords& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Primitive, last nonzero coordinate positive.
Coords normalize(Coords v) {
  const std::int64_t g = std::gcd(std::gcd(v[0], v[1]), v[2]);
  if (g == 0) throw std::invalid_argument("zero coordinate vector");
  for (auto& x : v) x /= g;
  for (int i = 2; i >= 0; --i)
    if (v[i] != 0) {
      if (v[i] < 0)
        for (auto& x : v) x = -x;
      break;
    }
  return v;
}

bool on(const IncidenceConfig& cfg, const Coords& p, const Coords& l) {
  if (cfg.modulus == 0) return dot(p, l) == 0;
  const auto q = static_cast<std::int64_t>(cfg.modulus);
  return ((dot(p, l) % q) + q) % q == 0;
}

void fill_incidence(IncidenceConfig& cfg) {
  cfg.incidence.assign(cfg.points.size(), std::vector<int>(cfg.lines.size(), 0));
  for (std::size_t i = 0; i < cfg.points.size(); ++i)
    for (std::size_t j = 0; j < cfg.lines.size(); ++j) cfg.incidence[i][j] = on(cfg, cfg.points[i], cfg.lines[j]);
}

void validate(const IncidenceConfig& cfg) {
  if (cfg.incidence.size() != cfg.points.size()) throw std::invalid_argument("incidence rows differ from points");
  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    if (cfg.incidence[i].size() != cfg.lines.size()) throw std::invalid_argument("incidence columns differ from lines");
    for (std::size_t j = 0; j < cfg.lines.size(); ++j)
      if ((cfg.incidence[i][j] != 0) != on(cfg, cfg.points[i], cfg.lines[j]))
        throw std::invalid_argument("incidence matrix inconsistent with coordinates");
  }
}

}  // namespace

IncidenceConfig general_lines(std::int64_t s, std::uint64_t seed) {
  if (s < 2) throw std::invalid_argument("need at least two lines");
  Rng rng(seed);
  IncidenceConfig cfg;
  cfg.kind = IncidenceKind::GeneralLines;
  for (;;) {
    cfg.lines.clear();
    while (static_cast<std::int64_t>(cfg.lines.size()) < s) {
      Coords l{rng.uniform(-20, 20), rng.uniform(-20, 20), rng.uniform(-20, 20)};
      if (l == Coords{0, 0, 0}) continue;
      l = normalize(l);
      bool fresh = true;
      for (const auto& m : cfg.lines) fresh = fresh && cross(l, m) != Coords{0, 0, 0};
      if (fresh) cfg.lines.push_back(l);
    }
    bool general = true;
    for (std::size_t i = 0; i < cfg.lines.size() && general; ++i)
      for (std::size_t j = i + 1; j < cfg.lines.size() && general; ++j)
        for (std::size_t k = j + 1; k < cfg.lines.size() && general; ++k)
          general = dot(cross(cfg.lines[i], cfg.lines[j]), cfg.lines[k]) != 0;
    if (general) break;
  }
  for (std::size_t i = 0; i < cfg.lines.size(); ++i)
    for (std::size_t j = i + 1; j < cfg.lines.size(); ++j) cfg.points.push_back(normalize(cross(cfg.lines[i], cfg.lines[j])));
  fill_incidence(cfg);
  return cfg;
}

IncidenceConfig projective_plane(std::int64_t q) {
  if (q < 2 || !is_prime_u64(static_cast<std::uint64_t>(q)))
    throw std::invalid_argument("projective_plane supports prime q only");
  IncidenceConfig cfg;
  cfg.kind = IncidenceKind::ProjectivePlane;
  cfg.modulus = static_cast<std::uint64_t>(q);
  std::vector<Coords> pts;
  for (std::int64_t x = 0; x < q; ++x)
    for (std::int64_t y = 0; y < q; ++y) pts.push_back({x, y, 1});
  for (std::int64_t x = 0; x < q; ++x) pts.push_back({x, 1, 0});
  pts.push_back({1, 0, 0});
  cfg.points = pts;
  cfg.lines = pts;
  fill_incidence(cfg);
  return cfg;
}

IncidenceConfig collinear(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("need at least one point");
  IncidenceConfig cfg;
  cfg.kind = IncidenceKind::Collinear;
  for (std::int64_t i = 0; i < n; ++i) cfg.points.push_back({i, 0, 1});
  cfg.lines.push_back({0, 1, 0});
  fill_incidence(cfg);
  return cfg;
}

IncidenceConfig exceptional_only(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("need at least one point");
  IncidenceConfig cfg;
  cfg.kind = IncidenceKind::ExceptionalOnly;
  for (std::int64_t i = 0; i < n; ++i) cfg.points.push_back({i, i * i, 1});
  cfg.exceptional = n;
  fill_incidence(cfg);
  return cfg;
}

Integer c_squared(const IncidenceConfig& cfg) {
  validate(cfg);
  if (cfg.kind == IncidenceKind::ExceptionalOnly) return -z(cfg.exceptional);
  const Integer l = z(static_cast<std::int64_t>(cfg.lines.size()));
  Integer s = l * l;
  for (const auto& row : cfg.incidence) {
    const std::int64_t t = std::accumulate(row.begin(), row.end(), std::int64_t{0});
    s -= z(t * t);
  }
  return s;
}

Integer lines_lower_bound(const IncidenceConfig& cfg) {
  validate(cfg);
  std::int64_t m = 0;
  for (const auto& row : cfg.incidence) m += std::accumulate(row.begin(), row.end(), std::int64_t{0});
  return z(static_cast<std::int64_t>(cfg.lines.size()) - m);
}

Rational ratio_report(const IncidenceConfig& cfg) {
  if (cfg.points.empty()) throw std::invalid_argument("ratio needs at least one point");
  return make_rational(c_squared(cfg), z(static_cast<std::int64_t>(cfg.points.size())));
}

NodalCurve rational_curve_nodes(std::int64_t d) {
  if (d < 3) throw std::invalid_argument("degree must be at least 3");
  NodalCurve c;
  c.n = (d - 1) * (d - 2) / 2;
  c.Csq = d * d - 4 * c.n;
  c.ratio = make_rational(c.Csq, c.n);
  return c;
}

}  // namespace linserlab::surfaces
