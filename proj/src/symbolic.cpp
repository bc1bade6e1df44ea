#include "linserlab/symbolic.hpp"

#include <algorithm>
#include <set>

namespace linserlab::symbolic {

std::int64_t Monomial::degree() const {
  std::int64_t d = 0;
  for (auto e : exps) d += e;
  return d;
}

bool Monomial::divides(const Monomial& m) const {
  if (m.exps.size() != exps.size()) throw std::invalid_argument("variable count mismatch");
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > m.exps[i]) return false;
  return true;
}

bool Monomial::squarefree() const {
  return std::all_of(exps.begin(), exps.end(), [](std::int64_t e) { return e <= 1; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.exps.size() != b.exps.size()) throw std::invalid_argument("variable count mismatch");
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += b.exps[i];
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.exps.size() != b.exps.size()) throw std::invalid_argument("variable count mismatch");
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] = std::max(m.exps[i], b.exps[i]);
  return m;
}

namespace {

// Minimal elements under divisibility, sorted.
std::vector<Monomial> minimize(std::vector<Monomial> v) {
  std::sort(v.begin(), v.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  std::vector<Monomial> keep;
  for (auto& m : v) {
    bool divisible = false;
    for (const auto& k : keep)
      if (k.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) keep.push_back(std::move(m));
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

void same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.nvars() != J.nvars()) throw std::invalid_argument("variable count mismatch");
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw std::invalid_argument("generator length differs from variable count");
    for (auto e : g.exps)
      if (e < 0) throw std::invalid_argument("negative exponent");
  }
  gens_ = minimize(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) {
  return MonomialIdeal(nvars, {Monomial{std::vector<std::int64_t>(nvars, 0)}});
}

MonomialIdeal MonomialIdeal::maximal(std::size_t nvars) {
  std::vector<Monomial> g;
  for (std::size_t i = 0; i < nvars; ++i) {
    Monomial m{std::vector<std::int64_t>(nvars, 0)};
    m.exps[i] = 1;
    g.push_back(m);
  }
  return MonomialIdeal(nvars, std::move(g));
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_[0].degree() == 0; }

bool MonomialIdeal::squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.squarefree(); });
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  same_ring(I, J);
  std::vector<Monomial> g;
  g.reserve(I.gens().size() * J.gens().size());
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) g.push_back(a * b);
  return MonomialIdeal(I.nvars(), std::move(g));
}

MonomialIdeal power(const MonomialIdeal& I, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("negative power");
  MonomialIdeal out = MonomialIdeal::unit(I.nvars());
  for (std::int64_t i = 0; i < k; ++i) out = product(out, I);
  return out;
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  same_ring(I, J);
  std::vector<Monomial> g;
  g.reserve(I.gens().size() * J.gens().size());
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) g.push_back(lcm(a, b));
  return MonomialIdeal(I.nvars(), std::move(g));
}

bool contains(const MonomialIdeal& I, const Monomial& m) {
  if (m.nvars() != I.nvars()) throw std::invalid_argument("variable count mismatch");
  return std::any_of(I.gens().begin(), I.gens().end(), [&](const Monomial& g) { return g.divides(m); });
}

bool subset(const MonomialIdeal& J, const MonomialIdeal& I) {
  same_ring(I, J);
  return std::all_of(J.gens().begin(), J.gens().end(), [&](const Monomial& g) { return contains(I, g); });
}

std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& I) {
  const std::size_t n = I.nvars();
  if (n > kMaxVariables) throw std::invalid_argument("too many variables for vertex-cover enumeration");
  if (!I.squarefree()) throw std::invalid_argument("ideal is not squarefree");
  if (I.is_zero() || I.is_unit()) throw std::invalid_argument("ideal must be nonzero and proper");
  std::vector<std::uint32_t> supports;
  for (const auto& g : I.gens()) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g.exps[i]) s |= 1u << i;
    supports.push_back(s);
  }
  std::vector<std::uint32_t> covers;
  for (std::uint32_t S = 1; S < (1u << n); ++S)
    if (std::all_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & S) != 0; }))
      covers.push_back(S);
  std::vector<PrimeSupport> out;
  for (auto S : covers) {
    const bool minimal = std::none_of(covers.begin(), covers.end(), [&](std::uint32_t T) { return T != S && (T & S) == T; });
    if (!minimal) continue;
    PrimeSupport P;
    for (std::size_t i = 0; i < n; ++i)
      if (S & (1u << i)) P.variables.push_back(i);
    out.push_back(P);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t bight(const MonomialIdeal& I) {
  std::size_t e = 0;
  for (const auto& P : minimal_primes(I)) e = std::max(e, P.variables.size());
  return e;
}

MonomialIdeal prime_ideal(std::size_t nvars, const PrimeSupport& P) {
  if (P.variables.empty()) throw std::invalid_argument("empty prime support");
  std::vector<Monomial> g;
  for (auto i : P.variables) {
    if (i >= nvars) throw std::invalid_argument("variable index out of range");
    Monomial m{std::vector<std::int64_t>(nvars, 0)};
    m.exps[i] = 1;
    g.push_back(m);
  }
  return MonomialIdeal(nvars, std::move(g));
}

MonomialIdeal symbolic_power(const MonomialIdeal& I, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("negative symbolic power");
  const auto primes = minimal_primes(I);
  MonomialIdeal out = MonomialIdeal::unit(I.nvars());
  for (const auto& P : primes) out = intersect(out, power(prime_ideal(I.nvars(), P), m));
  return out;
}

ContainmentReport containment_suite(const MonomialIdeal& I, std::int64_t r) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  ContainmentReport rep;
  rep.r = r;
  rep.e = bight(I);
  rep.n = I.nvars();
  const auto e = static_cast<std::int64_t>(rep.e), n = static_cast<std::int64_t>(rep.n);
  const MonomialIdeal Ir = power(I, r);
  const MonomialIdeal M = MonomialIdeal::maximal(I.nvars());
  const auto with_m = [&](std::int64_t k) { return product(power(M, std::max<std::int64_t>(k, 0)), Ir); };
  const auto sym = [&](std::int64_t k) { return symbolic_power(I, std::max<std::int64_t>(k, 0)); };
  rep.els = subset(sym(r * e), Ir);
  rep.harbourne = subset(sym(r * e - (e - 1)), Ir);
  rep.hh1 = subset(sym(r * n), with_m(r * n - r));
  rep.hh2 = subset(sym(r * n - (n - 1)), with_m(r * n - r - (n - 1)));
  rep.hh3 = subset(sym(r * e), with_m(r * e - r));
  rep.hh4 = subset(sym(r * e - (e - 1)), with_m(r * e - r - (e - 1)));
  return rep;
}

// ---------------------------------------------------------------------------
// Exact simplex for the Newton region tests.

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : t_(rows, std::vector<Rational>(cols + 1)), basis_(rows), cols_(cols) {}

  Rational& at(std::size_t i, std::size_t j) { return t_[i][j]; }
  Rational& rhs(std::size_t i) { return t_[i][cols_]; }
  std::size_t& basic(std::size_t i) { return basis_[i]; }
  std::size_t rows() const { return t_.size(); }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t_[r][c];
    for (auto& x : t_[r]) x /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || t_[i][c] == 0) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  // Maximizes cost over columns allowed by `enter`, Bland's rule.
  Rational maximize(const std::vector<Rational>& cost, const std::vector<bool>& enter) {
    for (;;) {
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < cols_ && !col; ++j) {
        if (!enter[j]) continue;
        Rational red = cost[j];
        for (std::size_t i = 0; i < t_.size(); ++i)
          if (t_[i][j] != 0) red -= cost[basis_[i]] * t_[i][j];
        if (red > 0) col = j;
      }
      if (!col) break;
      std::optional<std::size_t> row;
      Rational best;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (t_[i][*col] <= 0) continue;
        const Rational ratio = t_[i][cols_] / t_[i][*col];
        if (!row || ratio < best || (ratio == best && basis_[i] < basis_[*row])) {
          row = i;
          best = ratio;
        }
      }
      if (!row) throw std::logic_error("unbounded Newton region program");
      pivot(*row, *col);
    }
    Rational v = 0;
    for (std::size_t i = 0; i < t_.size(); ++i) v += cost[basis_[i]] * t_[i][cols_];
    return v;
  }

  void drop_row(std::size_t i) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
  }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

// Largest eps >= 0 with u - eps * 1 in conv(G) + orthant, or nullopt when u
// is outside the region.
std::optional<Rational> depth(const std::vector<Monomial>& G, const std::vector<Rational>& u) {
  const std::size_t n = u.size(), k = G.size();
  for (const auto& x : u)
    if (x < 0) return std::nullopt;
  // Columns: lambda_1..k, eps, s_1..n, artificial.
  const std::size_t eps = k, slack = k + 1, art = k + 1 + n, cols = art + 1;
  Tableau T(n + 1, cols);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t g = 0; g < k; ++g) T.at(j, g) = static_cast<long>(G[g].exps[j]);
    T.at(j, eps) = 1;
    T.at(j, slack + j) = 1;
    T.rhs(j) = u[j];
    T.basic(j) = slack + j;
  }
  for (std::size_t g = 0; g < k; ++g) T.at(n, g) = 1;
  T.at(n, art) = 1;
  T.rhs(n) = 1;
  T.basic(n) = art;

  std::vector<bool> enter(cols, true);
  std::vector<Rational> phase1(cols, Rational(0));
  phase1[art] = -1;
  if (T.maximize(phase1, enter) < 0) return std::nullopt;
  for (std::size_t i = 0; i < T.rows(); ++i) {
    if (T.basic(i) != art) continue;
    std::optional<std::size_t> c;
    for (std::size_t j = 0; j < art && !c; ++j)
      if (T.at(i, j) != 0) c = j;
    if (c)
      T.pivot(i, *c);
    else
      T.drop_row(i);
    break;
  }
  enter[art] = false;
  std::vector<Rational> phase2(cols, Rational(0));
  phase2[eps] = 1;
  return T.maximize(phase2, enter);
}

}  // namespace

bool newton_region_contains(const MonomialIdeal& I, const Rational& c, const std::vector<Rational>& v, bool interior) {
  if (c <= 0) throw std::invalid_argument("scale must be positive");
  if (I.is_zero()) throw std::invalid_argument("zero ideal has no Newton region");
  if (v.size() != I.nvars()) throw std::invalid_argument("variable count mismatch");
  std::vector<Rational> u;
  for (const auto& x : v) u.push_back(x / c);
  const auto d = depth(I.gens(), u);
  return d && (!interior || *d > 0);
}

MonomialIdeal howald_multiplier(const MonomialIdeal& I, const Rational& c) {
  if (c <= 0) throw std::invalid_argument("scale must be positive");
  if (I.is_zero()) throw std::invalid_argument("zero ideal has no Newton region");
  const std::size_t n = I.nvars();
  // Minimal generators have a_j <= floor(c * max_g g_j).
  std::vector<std::int64_t> box(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::int64_t mx = 0;
    for (const auto& g : I.gens()) mx = std::max(mx, g.exps[j]);
    box[j] = floor_q(c * mx).get_si();
  }
  // Exact shortcuts before the simplex: 0/1 weights w give valid
  // inequalities w.v >= min_g w.g, and a point strictly above a generator is
  // interior.
  const std::size_t nw = n <= kMaxVariables ? (std::size_t{1} << n) : 0;
  std::vector<std::int64_t> wmin(nw, 0);
  for (std::size_t w = 1; w < nw; ++w) {
    std::int64_t best = -1;
    for (const auto& g : I.gens()) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if ((w >> j) & 1) s += g.exps[j];
      if (best < 0 || s < best) best = s;
    }
    wmin[w] = best;
  }
  const auto interior = [&](const Monomial& a) {
    // u = (a + 1) / c; compare c * (w.g) against w.(a + 1).
    for (std::size_t w = 1; w < nw; ++w) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if ((w >> j) & 1) s += a.exps[j] + 1;
      if (Rational(s) <= c * wmin[w]) return false;
    }
    for (const auto& g : I.gens()) {
      bool above = true;
      for (std::size_t j = 0; j < n && above; ++j) above = Rational(a.exps[j] + 1) > c * g.exps[j];
      if (above) return true;
    }
    std::vector<Rational> u(n);
    for (std::size_t j = 0; j < n; ++j) u[j] = Rational(a.exps[j] + 1) / c;
    const auto d = depth(I.gens(), u);
    return d && *d > 0;
  };

  std::vector<Monomial> found;
  Monomial a{std::vector<std::int64_t>(n, 0)};
  for (;;) {
    const bool known = std::any_of(found.begin(), found.end(), [&](const Monomial& f) { return f.divides(a); });
    if (!known && interior(a)) found.push_back(a);
    std::size_t j = 0;
    while (j < n && ++a.exps[j] > box[j]) a.exps[j++] = 0;
    if (j == n) break;
  }
  return MonomialIdeal(n, std::move(found));
}

std::vector<std::int64_t> default_p_range(const Rational& t) {
  if (t <= 0) throw std::invalid_argument("t must be positive");
  const std::int64_t d = t.get_den().get_si();
  std::vector<std::int64_t> out;
  for (std::int64_t k : {1, 2, 3, 4, 6, 12}) out.push_back(d * k);
  return out;
}

MonomialIdeal asymptotic_multiplier(const MonomialIdeal& I, const Rational& t, const std::vector<std::int64_t>& p_range) {
  if (t <= 0) throw std::invalid_argument("t must be positive");
  if (p_range.size() < 3) throw std::invalid_argument("need at least three values of p");
  std::vector<MonomialIdeal> vals;
  for (auto p : p_range) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    vals.push_back(howald_multiplier(symbolic_power(I, p), t / Rational(p)));
  }
  const std::size_t k = vals.size();
  if (!(vals[k - 1] == vals[k - 2] && vals[k - 2] == vals[k - 3]))
    throw NonStabilization("asymptotic multiplier of " + to_string(I) + " at t = " + linserlab::to_string(t) +
                           " did not stabilize over the last three p values");
  return vals.back();
}

MonomialIdeal asymptotic_multiplier(const MonomialIdeal& I, const Rational& t) {
  return asymptotic_multiplier(I, t, default_p_range(t));
}

ElsChain els_chain_check(const MonomialIdeal& I, std::int64_t r) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  const auto e = static_cast<std::int64_t>(bight(I));
  const MonomialIdeal Jre = asymptotic_multiplier(I, Rational(r * e));
  const MonomialIdeal Je = asymptotic_multiplier(I, Rational(e));
  const MonomialIdeal JeR = power(Je, r);
  ElsChain c;
  c.left = subset(symbolic_power(I, r * e), Jre);
  c.middle = subset(Jre, JeR);
  c.right = subset(JeR, power(I, r));
  return c;
}

std::string to_string(const Monomial& m) {
  static const char* names[] = {"x", "y", "z", "w"};
  std::string s;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += i < 4 ? names[i] : "x" + std::to_string(i + 1);
    if (m.exps[i] > 1) s += "^" + std::to_string(m.exps[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const MonomialIdeal& I) {
  std::string s = "(";
  for (std::size_t i = 0; i < I.gens().size(); ++i) s += (i ? ", " : "") + to_string(I.gens()[i]);
  return s + ")";
}

}  // namespace linserlab::symbolic
