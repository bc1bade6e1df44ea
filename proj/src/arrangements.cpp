#include "linserlab/arrangements.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "linserlab/linalg.hpp"

namespace linserlab::arrangements {

namespace {

Form cross(const Form& a, const Form& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Form& f) { return f[0] == 0 && f[1] == 0 && f[2] == 0; }

Rational det3(const Form& a, const Form& b, const Form& c) {
  const Form x = cross(a, b);
  return x[0] * c[0] + x[1] * c[1] + x[2] * c[2];
}

ProjPoint normalize(const Form& v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, Integer(q.get_den()));
  ProjPoint p;
  Integer g = 0;
  for (int i = 0; i < 3; ++i) {
    p[i] = Integer(v[i] * l);
    g = gcd(g, p[i]);
  }
  if (g == 0) throw std::invalid_argument("zero point");
  for (auto& x : p) x /= g;
  for (int i = 2; i >= 0; --i)
    if (p[i] != 0) {
      if (p[i] < 0)
        for (auto& x : p) x = -x;
      break;
    }
  return p;
}

Form form(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

// Calls f on every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_subsets(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

LineArrangement::LineArrangement(std::vector<Form> forms) : forms_(std::move(forms)) {
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (is_zero(forms_[i])) throw std::invalid_argument("zero linear form");
    for (std::size_t j = 0; j < i; ++j)
      if (is_zero(cross(forms_[i], forms_[j]))) throw std::invalid_argument("proportional linear forms");
  }
}

LineArrangement five_line_example() {
  return LineArrangement({form(1, 0, 0), form(0, 1, 0), form(0, 0, 1), form(1, 1, 1), form(1, 2, 3)});
}

LineArrangement generic_lines(std::size_t s, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Form> f;
  while (f.size() < s) {
    const Form c = form(rng.uniform(-20, 20), rng.uniform(-20, 20), rng.uniform(-20, 20));
    if (is_zero(c)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < f.size() && ok; ++i) {
      ok = !is_zero(cross(c, f[i]));
      for (std::size_t j = 0; j < i && ok; ++j) ok = det3(f[j], f[i], c) != 0;
    }
    if (ok) f.push_back(c);
  }
  return LineArrangement(std::move(f));
}

LineArrangement m8_minus() {
  return LineArrangement({form(0, 1, -1), form(0, 1, -3), form(1, 0, -1), form(1, 0, -3), form(1, 1, -2),
                          form(1, 1, -6), form(2, 1, -5), form(0, 0, 1)});
}

std::vector<SingularPoint> singular_points(const LineArrangement& A) {
  if (A.size() < 2) throw std::invalid_argument("need at least two lines");
  std::map<ProjPoint, std::vector<std::size_t>> groups;
  const auto& f = A.forms();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      auto& v = groups[normalize(cross(f[i], f[j]))];
      for (auto k : {i, j})
        if (std::find(v.begin(), v.end(), k) == v.end()) v.push_back(k);
    }
  std::vector<SingularPoint> out;
  for (auto& [p, lines] : groups) {
    std::sort(lines.begin(), lines.end());
    out.push_back({p, lines});
  }
  return out;
}

std::vector<Circuit> circuits(const LineArrangement& A, std::size_t max_size) {
  std::vector<Circuit> out;
  const auto& f = A.forms();
  for (std::size_t k = 2; k <= std::min<std::size_t>(max_size, 4); ++k)
    for_subsets(A.size(), k, [&](const std::vector<std::size_t>& S) {
      RatMatrix m(3, k);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < 3; ++i) m(i, j) = f[S[j]][i];
      const auto ker = kernel(m);
      if (ker.size() != 1) return;
      const auto& v = ker[0];
      if (std::any_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; })) return;
      Integer l = 1;
      for (const auto& q : v) l = lcm(l, Integer(q.get_den()));
      std::vector<Integer> c;
      Integer g = 0;
      for (const auto& q : v) {
        c.push_back(Integer(q * l));
        g = gcd(g, c.back());
      }
      if (c[0] < 0) g = -g;
      for (auto& x : c) x /= g;
      out.push_back({S, c});
    });
  std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) { return a.indices < b.indices; });
  return out;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Rational Polynomial::eval(const std::vector<Rational>& y) const {
  if (y.size() != nvars) throw std::invalid_argument("variable count mismatch");
  Rational s = 0;
  for (const auto& [e, c] : terms) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars; ++i)
      for (int k = 0; k < e[i]; ++k) t *= y[i];
    s += t;
  }
  return s;
}

Polynomial ot_generator(std::size_t nvars, const Circuit& c) {
  Polynomial p;
  p.nvars = nvars;
  for (std::size_t j = 0; j < c.indices.size(); ++j) {
    std::vector<int> e(nvars, 0);
    for (std::size_t l = 0; l < c.indices.size(); ++l) {
      if (c.indices[l] >= nvars) throw std::invalid_argument("circuit index out of range");
      if (l != j) ++e[c.indices[l]];
    }
    p.terms[e] += Rational(c.coeffs[j]);
  }
  std::erase_if(p.terms, [](const auto& kv) { return kv.second == 0; });
  return p;
}

std::vector<Polynomial> ot_generators(const LineArrangement& A, std::size_t max_size) {
  std::vector<Polynomial> out;
  for (const auto& c : circuits(A, max_size)) out.push_back(ot_generator(A.size(), c));
  return out;
}

namespace {

void monomials_of_degree(std::size_t n, int k, std::vector<int>& cur, std::size_t i, std::vector<std::vector<int>>& out) {
  if (i + 1 == n) {
    cur[i] = k;
    out.push_back(cur);
    return;
  }
  for (int a = k; a >= 0; --a) {
    cur[i] = a;
    monomials_of_degree(n, k - a, cur, i + 1, out);
  }
  cur[i] = 0;
}

std::vector<std::vector<int>> monomials_of_degree(std::size_t n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0) return out;
  std::vector<int> cur(n, 0);
  monomials_of_degree(n, k, cur, 0, out);
  return out;
}

// Rows: m * f for every f in `gens` with deg f <= k (or < k) and deg m = k - deg f.
RatMatrix degree_piece(const std::vector<Polynomial>& gens, std::size_t n, int k, bool strict) {
  const auto cols = monomials_of_degree(n, k);
  std::map<std::vector<int>, std::size_t> col;
  for (std::size_t i = 0; i < cols.size(); ++i) col[cols[i]] = i;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
  for (const auto& f : gens) {
    const int d = f.degree();
    if (d > k || (strict && d == k)) continue;
    for (const auto& m : monomials_of_degree(n, k - d)) {
      std::vector<std::pair<std::size_t, Rational>> row;
      for (const auto& [e, c] : f.terms) {
        std::vector<int> s = e;
        for (std::size_t i = 0; i < n; ++i) s[i] += m[i];
        row.emplace_back(col.at(s), c);
      }
      rows.push_back(std::move(row));
    }
  }
  RatMatrix M(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [j, c] : rows[r]) M(r, j) = c;
  return M;
}

}  // namespace

GradedCounts graded_counts(const LineArrangement& A, int max_deg) {
  if (max_deg < 2 || max_deg > 4) throw std::invalid_argument("max_deg must be between 2 and 4");
  const std::size_t n = A.size();
  const auto gens = ot_generators(A, static_cast<std::size_t>(max_deg) + 1);
  GradedCounts gc;
  gc.max_deg = static_cast<std::size_t>(max_deg);
  for (int k = 1; k <= max_deg; ++k) {
    const std::size_t full = exact_rank(degree_piece(gens, n, k, false)).rank;
    const std::size_t lower = exact_rank(degree_piece(gens, n, k, true)).rank;
    gc.ideal_dim[k] = full;
    gc.min_gens[k] = full - lower;
  }
  // A basis of I_2: the quadrics are exactly the minimal quadratic generators.
  std::vector<Polynomial> quadrics;
  for (const auto& g : gens)
    if (g.degree() == 2) quadrics.push_back(g);
  std::vector<Polynomial> basis;
  for (const auto& q : quadrics) {
    basis.push_back(q);
    if (exact_rank(degree_piece(basis, n, 2, false)).rank < basis.size()) basis.pop_back();
  }
  if (!basis.empty()) {
    const std::size_t r = exact_rank(degree_piece(basis, n, 3, false)).rank;
    gc.linear_syzygies = n * basis.size() - r;
  }
  return gc;
}

namespace {

DaReport da_report(const LineArrangement& A, const std::vector<SingularPoint>& pts, const surfaces::DivClass& D) {
  DaReport r;
  r.lattice = surfaces::blowup_lattice(static_cast<std::int64_t>(pts.size()));
  r.D = D;
  const std::size_t rank = pts.size() + 1;
  if (D.coeffs.size() != rank) throw std::invalid_argument("class has the wrong rank");
  for (std::size_t l = 0; l < A.size(); ++l) {
    surfaces::DivClass L{std::vector<Integer>(rank, Integer(0))};
    L.coeffs[0] = 1;
    for (std::size_t p = 0; p < pts.size(); ++p)
      if (std::find(pts[p].lines.begin(), pts[p].lines.end(), l) != pts[p].lines.end()) L.coeffs[p + 1] = -1;
    r.line_pairings.push_back(surfaces::pair(r.lattice, D, L));
  }
  for (std::size_t p = 0; p < pts.size(); ++p) {
    surfaces::DivClass E{std::vector<Integer>(rank, Integer(0))};
    E.coeffs[p + 1] = 1;
    r.exceptional_pairings.push_back(surfaces::pair(r.lattice, D, E));
  }
  const auto nonneg = [](const std::vector<Integer>& v) { return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; }); };
  r.nef_partial = nonneg(r.line_pairings) && nonneg(r.exceptional_pairings);
  r.lines_contracted = std::all_of(r.line_pairings.begin(), r.line_pairings.end(), [](const Integer& x) { return x == 0; });
  return r;
}

}  // namespace

DaReport da_divisor(const LineArrangement& A) {
  const auto pts = singular_points(A);
  for (const auto& p : pts)
    if (p.multiplicity() != 2) throw std::invalid_argument("closed form needs an arrangement with only double points");
  surfaces::DivClass D{std::vector<Integer>(pts.size() + 1, Integer(-1))};
  D.coeffs[0] = static_cast<long>(A.size()) - 1;
  return da_report(A, pts, D);
}

DaReport da_divisor(const LineArrangement& A, const surfaces::DivClass& D) {
  return da_report(A, singular_points(A), D);
}

}  // namespace linserlab::arrangements
