#include "linserlab/fatpoints.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace linserlab::fatpoints {

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("field characteristic is not prime");
  return FieldSpec{p};
}

ProjectivePoint::ProjectivePoint(Rational x, Rational y, Rational z)
    : coords_{std::move(x), std::move(y), std::move(z)} {
  int c = 2;
  while (c >= 0 && coords_[c] == 0) --c;
  if (c < 0) throw std::invalid_argument("projective point with all coordinates zero");
  const Rational s = coords_[c];
  for (auto& v : coords_) v /= s;
}

int ProjectivePoint::chart() const {
  int c = 2;
  while (coords_[c] == 0) --c;
  return c;
}

std::int64_t monomial_count(std::int64_t d) { return d < 0 ? 0 : (d + 1) * (d + 2) / 2; }

std::int64_t condition_count(std::int64_t m) { return m <= 0 ? 0 : m * (m + 1) / 2; }

std::int64_t virtual_dimension(std::int64_t d, const std::vector<std::int64_t>& mults) {
  std::int64_t chi = monomial_count(d);
  for (auto m : mults) chi -= condition_count(m);
  return chi;
}

namespace {

struct Monomial {
  std::int64_t e[3];
};

std::vector<Monomial> monomials(std::int64_t d) {
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(monomial_count(d)));
  for (std::int64_t i = 0; i <= d; ++i)
    for (std::int64_t j = 0; i + j <= d; ++j) out.push_back({{i, j, d - i - j}});
  return out;
}

// The two affine coordinates of a point in its chart and the exponent indices
// they carry.
struct Chart {
  int c;
  int iu, iv;
};

Chart chart_of(int c) {
  if (c == 2) return {2, 0, 1};
  if (c == 1) return {1, 0, 2};
  return {0, 1, 2};
}

// Residues of a point normalized in Z/p; nullopt when not reducible or zero.
std::optional<std::array<std::uint64_t, 3>> residues(const ProjectivePoint& pt, const PrimeField& f) {
  std::array<std::uint64_t, 3> r{};
  for (int i = 0; i < 3; ++i) {
    if (!f.reducible(pt.coords()[i])) return std::nullopt;
    r[i] = f.from_rational(pt.coords()[i]);
  }
  int c = 2;
  while (c >= 0 && r[c] == 0) --c;
  if (c < 0) return std::nullopt;
  const std::uint64_t inv = f.inv(r[c]);
  for (auto& v : r) v = f.mul(v, inv);
  return r;
}

int residue_chart(const std::array<std::uint64_t, 3>& r) {
  int c = 2;
  while (r[c] == 0) --c;
  return c;
}

}  // namespace

void validate(const FatPointSystem& sys) {
  if (sys.degree < 0) throw std::invalid_argument("negative degree (h2 may be nonzero)");
  if (sys.points.size() != sys.mults.size()) throw std::invalid_argument("points and multiplicities differ in length");
  for (auto m : sys.mults)
    if (m < 1) throw std::invalid_argument("multiplicity must be at least 1");
  if (sys.field.is_rational()) {
    for (std::size_t i = 0; i < sys.points.size(); ++i)
      for (std::size_t j = i + 1; j < sys.points.size(); ++j)
        if (sys.points[i] == sys.points[j]) throw std::invalid_argument("duplicate points");
    return;
  }
  const PrimeField f(sys.field.prime);
  for (auto m : sys.mults)
    if (static_cast<std::uint64_t>(m - 1) >= sys.field.prime)
      throw std::invalid_argument("characteristic divides a derivative factorial (m-1 >= p)");
  std::vector<std::array<std::uint64_t, 3>> res;
  for (const auto& pt : sys.points) {
    auto r = residues(pt, f);
    if (!r) throw std::invalid_argument("point does not reduce modulo the field characteristic");
    res.push_back(*r);
  }
  for (std::size_t i = 0; i < res.size(); ++i)
    for (std::size_t j = i + 1; j < res.size(); ++j)
      if (res[i] == res[j]) throw std::invalid_argument("duplicate points");
}

RatMatrix conditions_matrix(const FatPointSystem& sys) {
  validate(sys);
  if (!sys.field.is_rational()) throw std::invalid_argument("rational conditions matrix over a prime field");
  const auto mons = monomials(sys.degree);
  std::int64_t rows = 0;
  for (auto m : sys.mults) rows += condition_count(m);
  RatMatrix out(static_cast<std::size_t>(rows), mons.size());
  std::size_t row = 0;
  for (std::size_t k = 0; k < sys.points.size(); ++k) {
    const auto& pt = sys.points[k];
    const Chart ch = chart_of(pt.chart());
    const Rational& u = pt.coords()[ch.iu];
    const Rational& v = pt.coords()[ch.iv];
    std::vector<Rational> upow(sys.degree + 1), vpow(sys.degree + 1);
    upow[0] = vpow[0] = 1;
    for (std::int64_t e = 1; e <= sys.degree; ++e) {
      upow[e] = upow[e - 1] * u;
      vpow[e] = vpow[e - 1] * v;
    }
    const std::int64_t m = sys.mults[k];
    for (std::int64_t a = 0; a < m; ++a)
      for (std::int64_t b = 0; a + b < m; ++b, ++row)
        for (std::size_t c = 0; c < mons.size(); ++c) {
          const std::int64_t e1 = mons[c].e[ch.iu];
          const std::int64_t e2 = mons[c].e[ch.iv];
          if (a > e1 || b > e2) continue;
          Rational val(falling_factorial(e1, a) * falling_factorial(e2, b));
          out(row, c) = val * upow[e1 - a] * vpow[e2 - b];
        }
  }
  return out;
}

std::optional<ModMatrix> conditions_matrix_mod(const FatPointSystem& sys, const PrimeField& f) {
  validate(sys);
  for (auto m : sys.mults)
    if (static_cast<std::uint64_t>(m - 1) >= f.modulus()) return std::nullopt;
  const auto mons = monomials(sys.degree);
  std::int64_t rows = 0;
  for (auto m : sys.mults) rows += condition_count(m);
  ModMatrix out(static_cast<std::size_t>(rows), mons.size(), 0);
  // Falling factorials mod p up to the degree.
  const std::int64_t d = sys.degree;
  std::vector<std::vector<std::uint64_t>> ff(d + 1);
  for (std::int64_t e = 0; e <= d; ++e) {
    ff[e].assign(e + 1, 1);
    for (std::int64_t a = 1; a <= e; ++a) ff[e][a] = f.mul(ff[e][a - 1], f.from_int(e - a + 1));
  }
  std::size_t row = 0;
  for (std::size_t k = 0; k < sys.points.size(); ++k) {
    auto r = residues(sys.points[k], f);
    if (!r) return std::nullopt;
    const Chart ch = chart_of(residue_chart(*r));
    std::vector<std::uint64_t> upow(d + 1), vpow(d + 1);
    upow[0] = vpow[0] = 1;
    for (std::int64_t e = 1; e <= d; ++e) {
      upow[e] = f.mul(upow[e - 1], (*r)[ch.iu]);
      vpow[e] = f.mul(vpow[e - 1], (*r)[ch.iv]);
    }
    const std::int64_t m = sys.mults[k];
    for (std::int64_t a = 0; a < m; ++a)
      for (std::int64_t b = 0; a + b < m; ++b, ++row)
        for (std::size_t c = 0; c < mons.size(); ++c) {
          const std::int64_t e1 = mons[c].e[ch.iu];
          const std::int64_t e2 = mons[c].e[ch.iv];
          if (a > e1 || b > e2) continue;
          out(row, c) = f.mul(f.mul(ff[e1][a], ff[e2][b]), f.mul(upow[e1 - a], vpow[e2 - b]));
        }
  }
  return out;
}

std::int64_t conditions_rank(const FatPointSystem& sys) {
  validate(sys);
  if (!sys.field.is_rational()) {
    const PrimeField f(sys.field.prime);
    return static_cast<std::int64_t>(rank_mod(*conditions_matrix_mod(sys, f), f));
  }
  std::int64_t rows = 0;
  for (auto m : sys.mults) rows += condition_count(m);
  const std::int64_t full = std::min(rows, monomial_count(sys.degree));
  if (full == 0) return 0;
  // Full rank modulo a prime certifies full rank over Q.
  for (auto p : prepass_primes()) {
    const PrimeField f(p);
    auto mm = conditions_matrix_mod(sys, f);
    if (!mm) continue;
    if (static_cast<std::int64_t>(rank_mod(std::move(*mm), f)) == full) return full;
    break;
  }
  IntMatrix z = integerize_rows(conditions_matrix(sys));
  if (z.rows() > z.cols()) z = z.transposed();
  return static_cast<std::int64_t>(bareiss_rank(std::move(z)));
}

SystemReport cohomology(const FatPointSystem& sys) {
  const std::int64_t rank = conditions_rank(sys);
  SystemReport r;
  r.h0 = monomial_count(sys.degree) - rank;
  r.chi = virtual_dimension(sys.degree, sys.mults);
  r.h1 = r.h0 - r.chi;
  r.expected = std::max<std::int64_t>(0, r.chi);
  r.special = r.h0 > 0 && r.h1 > 0;
  return r;
}

// ---------------------------------------------------------------------------

ConfigKind parse_config_kind(const std::string& name) {
  if (name == "random") return ConfigKind::Random;
  if (name == "collinear") return ConfigKind::Collinear;
  if (name == "star") return ConfigKind::Star;
  if (name == "pencil_products") return ConfigKind::PencilProducts;
  throw std::invalid_argument("unknown configuration kind: " + name);
}

std::string config_kind_name(ConfigKind k) {
  switch (k) {
    case ConfigKind::Random: return "random";
    case ConfigKind::Collinear: return "collinear";
    case ConfigKind::Star: return "star";
    case ConfigKind::PencilProducts: return "pencil_products";
  }
  return "";
}

namespace {

constexpr std::int64_t kCoordHeight = 10000;
constexpr int kMaxRetries = 1000;

using Line = std::array<Integer, 3>;

ProjectivePoint random_point(Rng& rng) {
  return ProjectivePoint::affine(rng.rational(kCoordHeight), rng.rational(kCoordHeight));
}

bool has_duplicates(const std::vector<ProjectivePoint>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) return true;
  return false;
}

Line random_line(Rng& rng, std::int64_t height) {
  for (;;) {
    Line l{rng.uniform(-height, height), rng.uniform(-height, height), rng.uniform(-height, height)};
    if (l[0] != 0 || l[1] != 0) return l;
  }
}

std::optional<std::array<Integer, 3>> meet(const Line& a, const Line& b) {
  std::array<Integer, 3> p{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  if (p[0] == 0 && p[1] == 0 && p[2] == 0) return std::nullopt;
  return p;
}

Integer incidence(const Line& l, const std::array<Integer, 3>& p) {
  return l[0] * p[0] + l[1] * p[1] + l[2] * p[2];
}

ProjectivePoint to_point(const std::array<Integer, 3>& p) {
  return ProjectivePoint(Rational(p[0]), Rational(p[1]), Rational(p[2]));
}

// Intersections of `first[i]` with `second[j]`; every such point must lie on
// no other line of `all`. nullopt when degenerate.
std::optional<std::vector<ProjectivePoint>> transverse_meets(
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs, const std::vector<Line>& all) {
  std::vector<ProjectivePoint> pts;
  for (auto [i, j] : pairs) {
    auto p = meet(all[i], all[j]);
    if (!p) return std::nullopt;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (k != i && k != j && incidence(all[k], *p) == 0) return std::nullopt;
    pts.push_back(to_point(*p));
  }
  if (has_duplicates(pts)) return std::nullopt;
  return pts;
}

}  // namespace

std::vector<ProjectivePoint> grouped_collinear_points(std::size_t total, const std::vector<std::int64_t>& groups,
                                                      Rng& rng) {
  std::int64_t grouped = 0;
  for (auto g : groups) {
    if (g < 0) throw std::invalid_argument("negative group size");
    grouped += g;
  }
  if (static_cast<std::size_t>(grouped) > total) throw std::invalid_argument("groups exceed the number of points");
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::vector<ProjectivePoint> pts;
    for (auto g : groups) {
      const ProjectivePoint a = random_point(rng);
      const ProjectivePoint b = random_point(rng);
      if (a == b) continue;
      for (std::int64_t k = 0; k < g; ++k) {
        const Rational t = rng.rational(kCoordHeight);
        const auto& pa = a.coords();
        const auto& pb = b.coords();
        pts.push_back(ProjectivePoint::affine(pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1])));
      }
    }
    if (pts.size() != static_cast<std::size_t>(grouped)) continue;
    while (pts.size() < total) pts.push_back(random_point(rng));
    if (!has_duplicates(pts)) return pts;
  }
  throw std::runtime_error("could not draw a nondegenerate grouped configuration");
}

std::vector<ProjectivePoint> make_config(ConfigKind kind, std::int64_t param, std::uint64_t seed) {
  Rng rng(seed);
  switch (kind) {
    case ConfigKind::Random:
      if (param < 0) throw std::invalid_argument("random(r) needs r >= 0");
      return grouped_collinear_points(static_cast<std::size_t>(param), {}, rng);
    case ConfigKind::Collinear:
      if (param < 1) throw std::invalid_argument("collinear(r) needs r >= 1");
      return grouped_collinear_points(static_cast<std::size_t>(param), {param}, rng);
    case ConfigKind::Star: {
      if (param < 2) throw std::invalid_argument("star(s) needs s >= 2");
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < static_cast<std::size_t>(param); ++i)
        for (std::size_t j = i + 1; j < static_cast<std::size_t>(param); ++j) pairs.emplace_back(i, j);
      for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        std::vector<Line> lines;
        for (std::int64_t i = 0; i < param; ++i) lines.push_back(random_line(rng, 100));
        if (auto pts = transverse_meets(pairs, lines)) return *pts;
      }
      throw std::runtime_error("could not draw a star configuration");
    }
    case ConfigKind::PencilProducts: {
      if (param < 1) throw std::invalid_argument("pencil_products(k) needs k >= 1");
      const auto k = static_cast<std::size_t>(param);
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) pairs.emplace_back(i, k + j);
      for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        std::vector<Line> lines;
        for (std::size_t i = 0; i < 2 * k; ++i) lines.push_back(random_line(rng, 10));
        bool distinct = true;
        for (std::size_t i = 0; i < lines.size() && distinct; ++i)
          for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (!meet(lines[i], lines[j])) {
              distinct = false;
              break;
            }
        if (!distinct) continue;
        if (auto pts = transverse_meets(pairs, lines)) return *pts;
      }
      throw std::runtime_error("could not draw transverse line products");
    }
  }
  throw std::invalid_argument("unknown configuration kind");
}

SystemReport generic_cohomology(std::int64_t d, const std::vector<std::int64_t>& mults, std::uint64_t seed,
                                std::int64_t trials) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  std::optional<SystemReport> best;
  for (std::int64_t t = 0; t < trials; ++t) {
    Rng rng(seed + static_cast<std::uint64_t>(t) * 0x9E3779B97F4A7C15ULL);
    FatPointSystem sys{d, grouped_collinear_points(mults.size(), {}, rng), mults, FieldSpec::rationals()};
    SystemReport r = cohomology(sys);
    if (!best || r.h0 < best->h0) best = r;
  }
  return *best;
}

// ---------------------------------------------------------------------------

std::int64_t initial_degree(const std::vector<ProjectivePoint>& points, const std::vector<std::int64_t>& mults) {
  if (points.size() != mults.size()) throw std::invalid_argument("points and multiplicities differ in length");
  std::vector<ProjectivePoint> pts;
  std::vector<std::int64_t> ms;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (mults[i] < 0) throw std::invalid_argument("negative multiplicity");
    if (mults[i] == 0) continue;
    pts.push_back(points[i]);
    ms.push_back(mults[i]);
  }
  if (pts.empty()) return 0;
  // No curve of degree t has a point of multiplicity > t.
  for (std::int64_t t = *std::max_element(ms.begin(), ms.end());; ++t) {
    if (virtual_dimension(t, ms) > 0) return t;
    if (cohomology({t, pts, ms, FieldSpec::rationals()}).h0 > 0) return t;
  }
}

std::int64_t alpha(const std::vector<ProjectivePoint>& points, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("alpha needs m >= 1");
  return initial_degree(points, std::vector<std::int64_t>(points.size(), m));
}

std::pair<Rational, Rational> waldschmidt_sandwich(const std::vector<ProjectivePoint>& points, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("sandwich needs k >= 0");
  const std::int64_t a = alpha(points, k + 1);
  return {make_rational(a, k + 2), make_rational(a, k + 1)};
}

ChudnovskyReport chudnovsky_report(const std::vector<ProjectivePoint>& points) {
  ChudnovskyReport r;
  r.alpha1 = alpha(points, 1);
  r.alpha2 = alpha(points, 2);
  r.bound = make_rational(r.alpha1 + 1, 2);
  r.sandwich = {make_rational(r.alpha2, 3), make_rational(r.alpha2, 2)};
  r.equality_witness = make_rational(r.alpha2, 2) == r.bound;
  return r;
}

std::vector<StabilityRow> speciality_stability(std::int64_t d, const std::vector<std::int64_t>& mults,
                                               const std::vector<ProjectivePoint>& points, std::int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  std::vector<StabilityRow> rows;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    std::vector<std::int64_t> ms(mults);
    for (auto& m : ms) m *= n;
    const SystemReport r = cohomology({n * d, points, ms, FieldSpec::rationals()});
    rows.push_back({n, r.h0, r.h1});
  }
  return rows;
}

// ---------------------------------------------------------------------------

Integer PlaneDivisorClass::self_intersection() const {
  Integer s = Integer(d) * d;
  for (auto m : mults) s -= Integer(m) * m;
  return s;
}

Integer PlaneDivisorClass::canonical_pairing() const {
  Integer s = Integer(-3) * d;
  for (auto m : mults) s += m;
  return s;
}

CremonaResult cremona_reduce(PlaneDivisorClass c) {
  while (c.mults.size() < 3) c.mults.push_back(0);
  CremonaResult res;
  // d strictly decreases, so starting from d >= 0 this stops within d + 1 steps.
  for (;;) {
    std::vector<std::size_t> idx(c.mults.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return c.mults[a] > c.mults[b]; });
    const std::size_t i = idx[0], j = idx[1], k = idx[2];
    const std::int64_t s = c.mults[i] + c.mults[j] + c.mults[k];
    const std::int64_t d2 = 2 * c.d - s;
    if (d2 >= c.d || c.d < 0) {
      res.reduced = c;
      return res;
    }
    PlaneDivisorClass next = c;
    next.d = d2;
    next.mults[i] = c.d - c.mults[j] - c.mults[k];
    next.mults[j] = c.d - c.mults[i] - c.mults[k];
    next.mults[k] = c.d - c.mults[i] - c.mults[j];
    res.steps.push_back({{i, j, k}, c, next});
    c = std::move(next);
  }
}

PlaneDivisorClass PellMember::divisor_class() const {
  const Integer top = m + 1;
  if (!d.fits_slong_p() || !top.fits_slong_p()) throw std::overflow_error("Pell member exceeds 64-bit range");
  PlaneDivisorClass c;
  c.d = d.get_si();
  c.mults.push_back(top.get_si());
  for (int i = 0; i < 9; ++i) c.mults.push_back(m.get_si());
  return c;
}

std::vector<PellMember> pell_family(std::size_t count) {
  if (count == 0) throw std::invalid_argument("count must be at least 1");
  // Each chain contributes at most one inadmissible member, so count + 2
  // terms per chain cover the first `count` admissible ones in b order.
  std::vector<std::pair<Integer, Integer>> sols;
  for (auto [u0, b0] : {std::pair<int, int>{4, 1}, std::pair<int, int>{16, 5}}) {
    Integer u = u0, b = b0;
    for (std::size_t i = 0; i < count + 2; ++i) {
      sols.emplace_back(u, b);
      Integer nu = 19 * u + 60 * b;
      Integer nb = 6 * u + 19 * b;
      u = std::move(nu);
      b = std::move(nb);
    }
  }
  std::sort(sols.begin(), sols.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
  std::vector<PellMember> out;
  for (const auto& [u, b] : sols) {
    if (out.size() == count) break;
    const Integer a = u - 3 * b;
    if (!(a > 0 && a < b)) continue;
    if (mpz_even_p(a.get_mpz_t()) || mpz_even_p(b.get_mpz_t())) continue;
    const Integer sum = b * b + a * a;
    const Integer diff = b * b - a * a;
    if (!mpz_divisible_ui_p(diff.get_mpz_t(), 6)) continue;
    PellMember pm;
    pm.a = a;
    pm.b = b;
    pm.d = sum / 2;
    pm.m = diff / 6;
    out.push_back(std::move(pm));
  }
  return out;
}

// ---------------------------------------------------------------------------

SemiEffectivityReport semi_effectivity_status(const PlaneDivisorClass& c, const std::vector<ProjectivePoint>& points,
                                              std::int64_t k) {
  if (points.size() != c.mults.size()) throw std::invalid_argument("points and multiplicities differ in length");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  SemiEffectivityReport rep;
  std::vector<ProjectivePoint> pts;
  std::vector<std::int64_t> ms;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (c.mults[i] < 0) throw std::invalid_argument("negative multiplicity");
    if (c.mults[i] == 0) continue;
    pts.push_back(points[i]);
    ms.push_back(c.mults[i]);
  }
  if (c.d < 0) {
    rep.status = SemiEffectivity::NotSemiEffective;
    rep.evidence = "negative degree";
    return rep;
  }
  if (pts.empty()) {
    rep.status = SemiEffectivity::SemiEffective;
    rep.n = 1;
    rep.h0 = monomial_count(c.d);
    rep.evidence = "no base points";
    return rep;
  }

  auto h0_multiple = [&](std::int64_t n) {
    std::vector<std::int64_t> nm(ms);
    for (auto& m : nm) m *= n;
    return cohomology({n * c.d, pts, nm, FieldSpec::rationals()}).h0;
  };

  for (std::int64_t n = 1; n <= k; ++n) {
    const std::int64_t h = h0_multiple(n);
    if (h > 0) {
      rep.status = SemiEffectivity::SemiEffective;
      rep.n = n;
      rep.h0 = h;
      rep.evidence = "section of nD found directly";
      return rep;
    }
  }

  const bool uniform = std::all_of(ms.begin(), ms.end(), [&](std::int64_t m) { return m == ms[0]; });
  // Uniform: e(S) in [a(S,t)/(t+1), a(S,t)/t] compared with d/m.
  // Mixed: lim a(tZ)/t in [a(tZ)/(t+1), a(tZ)/t] compared with d.
  rep.threshold = uniform ? make_rational(c.d, ms[0]) : make_rational(c.d);
  bool have_bounds = false;
  for (std::int64_t t = 1; t <= k; ++t) {
    const std::int64_t a = uniform ? alpha(pts, t) : [&] {
      std::vector<std::int64_t> tm(ms);
      for (auto& m : tm) m *= t;
      return initial_degree(pts, tm);
    }();
    const Rational lo = make_rational(a, t + 1);
    const Rational hi = make_rational(a, t);
    if (!have_bounds || lo > rep.lower) rep.lower = lo;
    if (!have_bounds || hi < rep.upper) rep.upper = hi;
    have_bounds = true;
    if (lo > rep.threshold) {
      rep.status = SemiEffectivity::NotSemiEffective;
      rep.evidence = "lower limit bound exceeds threshold at t=" + std::to_string(t);
      return rep;
    }
    if (hi < rep.threshold) {
      // A minimal curve for tZ (its m-th power when uniform) completed by
      // lines is a section of tD.
      const std::int64_t h = h0_multiple(t);
      if (h > 0) {
        rep.status = SemiEffectivity::SemiEffective;
        rep.n = t;
        rep.h0 = h;
        rep.evidence = "upper limit bound below threshold at t=" + std::to_string(t);
        return rep;
      }
    }
  }
  rep.status = SemiEffectivity::Boundary;
  rep.evidence = "limit bounds straddle the threshold";
  return rep;
}

CollinearExperiment collinear_constraint_experiment(std::int64_t d, const std::vector<std::int64_t>& mults,
                                                    const std::vector<std::int64_t>& groups, std::uint64_t seed) {
  Rng rng(seed);
  const auto general = grouped_collinear_points(mults.size(), {}, rng);
  const auto constrained = grouped_collinear_points(mults.size(), groups, rng);
  CollinearExperiment e;
  e.general_h0 = cohomology({d, general, mults, FieldSpec::rationals()}).h0;
  e.constrained_h0 = cohomology({d, constrained, mults, FieldSpec::rationals()}).h0;
  return e;
}

}  // namespace linserlab::fatpoints
