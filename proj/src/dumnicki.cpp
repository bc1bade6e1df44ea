#include "linserlab/dumnicki.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace linserlab::dumnicki {

namespace {

// ff[a][k] = a (a-1) ... (a-k+1) for 0 <= k <= a.
std::vector<std::vector<Integer>> falling_table(std::int64_t top) {
  std::vector<std::vector<Integer>> t(static_cast<std::size_t>(top + 1));
  for (std::int64_t a = 0; a <= top; ++a) {
    t[a].assign(static_cast<std::size_t>(a + 1), 1);
    for (std::int64_t k = 1; k <= a; ++k) t[a][k] = t[a][k - 1] * (a - k + 1);
  }
  return t;
}

Integer ff_lookup(const std::vector<std::vector<Integer>>& t, std::int64_t a, std::int64_t k) {
  return k > a ? Integer(0) : t[a][k];
}

std::int64_t capacity(std::int64_t m) { return m * (m + 1) / 2; }

}  // namespace

IntMatrix interp_matrix_int(const PointList& rows, const PointList& cols) {
  std::int64_t top = 0;
  for (const auto& p : cols) top = std::max({top, p.x, p.y});
  const auto t = falling_table(top);
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      m(i, j) = ff_lookup(t, cols[j].x, rows[i].x) * ff_lookup(t, cols[j].y, rows[i].y);
  return m;
}

RatMatrix interp_matrix(const InterpolationProblem& p) {
  const IntMatrix z = interp_matrix_int(p.E.cells(), p.D.points());
  RatMatrix q(z.rows(), z.cols());
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) q(i, j) = Rational(z(i, j));
  return q;
}

Rational eval_dual(const PointList& rows, const std::vector<Rational>& coeffs, LatticePoint p) {
  Rational s = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    s += coeffs[i] * Rational(falling_factorial(p.x, rows[i].x) * falling_factorial(p.y, rows[i].y));
  return s;
}

GenericDim generic_dim(const InterpolationProblem& p) {
  const RatMatrix m = interp_matrix(p);
  const std::size_t nd = p.D.size();
  GenericDim g;
  const std::size_t rank = nd == 0 ? 0 : exact_rank(m).rank;
  g.dim = static_cast<std::int64_t>(nd) - 1 - static_cast<std::int64_t>(rank);
  g.empty = rank == nd;
  if (g.empty) return g;
  auto ker = kernel(m);
  g.section = Witness{Witness::Kind::Section, ker.front()};
  if (p.E.size() == nd) {
    auto left = kernel(m.transposed());
    Witness w{Witness::Kind::DualPolynomial, left.front()};
    for (const auto& pt : p.D)
      if (eval_dual(p.E.cells(), w.coeffs, pt) != 0) throw std::logic_error("dual witness does not vanish on D");
    g.dual = std::move(w);
  }
  return g;
}

std::string direction_name(Direction d) { return d == Direction::Vertical ? "vertical" : "horizontal"; }

Direction parse_direction(const std::string& s) {
  if (s == "vertical") return Direction::Vertical;
  if (s == "horizontal") return Direction::Horizontal;
  throw std::invalid_argument("unknown direction: " + s);
}

std::optional<LineAssignment> line_certificate(const MonomialSet& D, std::int64_t m, Direction dir) {
  if (m < 1) throw std::invalid_argument("line_certificate needs m >= 1");
  std::map<std::int64_t, std::int64_t> counts;
  for (const auto& p : D) ++counts[dir == Direction::Vertical ? p.x : p.y];
  const auto t = static_cast<std::int64_t>(counts.size());
  if (t > m) return std::nullopt;
  std::vector<std::pair<std::int64_t, std::int64_t>> by_count;  // (count, coord)
  for (auto [coord, c] : counts) by_count.emplace_back(c, coord);
  std::sort(by_count.begin(), by_count.end());
  LineAssignment a{dir, {}};
  for (std::int64_t i = 1; i <= t; ++i) {
    const std::int64_t label = m - t + i;
    if (by_count[i - 1].first > label) return std::nullopt;
    a.lines.emplace_back(by_count[i - 1].second, label);
  }
  std::sort(a.lines.begin(), a.lines.end());
  return a;
}

std::vector<MonomialSet> reduce_partition(const MonomialSet& D, const std::vector<CutFunctional>& cuts) {
  for (const auto& f : cuts)
    for (const auto& p : D)
      if (f.sign_at(p) == 0) throw std::invalid_argument("cut passes through a lattice point of D");
  std::vector<MonomialSet> pieces;
  PointList residue = D.points();
  for (const auto& f : cuts) {
    PointList part, rest;
    for (const auto& p : residue) (f.sign_at(p) > 0 ? part : rest).push_back(p);
    pieces.emplace_back(std::move(part));
    residue = std::move(rest);
  }
  pieces.emplace_back(std::move(residue));
  return pieces;
}

namespace {

// Positive multiple of (a, b) that is a primitive integer vector, as integers.
std::pair<Integer, Integer> primitive_direction(const CutFunctional& f) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), f.a.get_den_mpz_t(), f.b.get_den_mpz_t());
  Integer a = f.a.get_num() * (l / f.a.get_den());
  Integer b = f.b.get_num() * (l / f.b.get_den());
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return {a / g, b / g};
}

}  // namespace

CutFunctional canonical_cut(const CutFunctional& f, const MonomialSet& part) {
  auto [a, b] = primitive_direction(f);
  if (part.empty()) throw std::invalid_argument("canonical cut of an empty part");
  Integer lo;
  bool first = true;
  for (const auto& p : part) {
    Integer v = a * static_cast<long>(p.x) + b * static_cast<long>(p.y);
    if (first || v < lo) lo = v;
    first = false;
  }
  return CutFunctional(Rational(a), Rational(b), Rational(1, 2) - Rational(lo));
}

std::optional<PieceEvidence> certify_piece(const MonomialSet& D, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("multiplicity must be at least 1");
  if (auto v = line_certificate(D, m, Direction::Vertical)) return *v;
  if (auto h = line_certificate(D, m, Direction::Horizontal)) return *h;
  const auto cap = static_cast<std::size_t>(capacity(m));
  if (D.size() > cap) return std::nullopt;
  const auto stair = lattice::triangle_staircase(m);
  const IntMatrix full = interp_matrix_int(stair.cells(), D.points());
  if (D.size() == cap) {
    Integer det = bareiss_determinant(full);
    if (det == 0) return std::nullopt;
    return NonzeroDeterminant{stair.cells(), det};
  }
  const PrimeField f(kCertificatePrime);
  const ModMatrix mm = reduce_mod(full, f);
  const auto idx = independent_rows_mod(mm, f);
  if (idx.size() != D.size()) return std::nullopt;
  FullRank fr;
  for (auto i : idx) fr.rows.push_back(stair.cells()[i]);
  fr.residue = determinant_mod(mm.select_rows(idx), f);
  return fr;
}

namespace {

// Canonical stored form of cut j: tight on its part, or the fixed functional
// -x - 1/2 (negative on all of N^2) when the part is empty.
CutFunctional stored_cut(const CutFunctional& f, const MonomialSet& part) {
  if (!part.empty()) return canonical_cut(f, part);
  return CutFunctional(Rational(-1), Rational(0), Rational(-1, 2));
}

}  // namespace

ProofResult prove_empty(const MonomialSet& D, const std::vector<std::int64_t>& mults,
                        const std::vector<CutFunctional>& cuts) {
  const auto pieces = reduce_partition(D, cuts);
  if (pieces.size() != mults.size()) throw std::invalid_argument("number of pieces differs from number of multiplicities");
  for (auto m : mults)
    if (m < 1) throw std::invalid_argument("multiplicity must be at least 1");
  ProofResult res;
  EmptinessCertificate cert;
  cert.domain = D;
  cert.mults = mults;
  for (std::size_t j = 0; j < cuts.size(); ++j) cert.cuts.push_back(stored_cut(cuts[j], pieces[j]));
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    auto ev = certify_piece(pieces[j], mults[j]);
    if (!ev) {
      res.failed_piece = j;
      res.failure = generic_dim({pieces[j], lattice::triangle_staircase(mults[j])});
      res.status = (cuts.empty() && !res.failure->empty) ? ProofStatus::Nonempty : ProofStatus::Undecided;
      return res;
    }
    cert.pieces.push_back({pieces[j], mults[j], std::move(*ev)});
  }
  res.status = ProofStatus::Certified;
  res.certificate = std::move(cert);
  return res;
}

FamilyInstance nine_cut_family(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("family index n must be at least 1");
  FamilyInstance fam;
  fam.D = lattice::triangle_set(13 * n);
  fam.mults.push_back(5 * n);
  for (int i = 0; i < 9; ++i) fam.mults.push_back(4 * n);
  const Rational half(1, 2);
  auto cut = [&](std::int64_t a, std::int64_t b, std::int64_t c) {
    return CutFunctional(Rational(a), Rational(b), Rational(c) + half);
  };
  fam.cuts = {
      cut(-1, -1, 5 * n - 1),
      cut(1, 0, -9 * n - 1),
      cut(0, 1, -9 * n - 1),
      cut(1, -1, -5 * n - 1),
      cut(-1, 1, -5 * n - 1),
      cut(3, -1, -15 * n - 1),
      cut(-3, 1, 3 * n - 1),
      cut(2 * n + 1, -2 * n, -2 * n * n - 5 * n - 1),
      cut(1, 3, -21 * n),
  };
  return fam;
}

// ---------------------------------------------------------------------------
// Cut search

namespace {

constexpr std::size_t kSearchDeterminantLimit = 36;

bool certifiable_in_search(const MonomialSet& part, std::int64_t m) {
  if (line_certificate(part, m, Direction::Vertical) || line_certificate(part, m, Direction::Horizontal))
    return true;
  if (part.size() > kSearchDeterminantLimit || part.size() > static_cast<std::size_t>(capacity(m))) return false;
  return certify_piece(part, m).has_value();
}

struct Searcher {
  const MonomialSet& domain;
  const std::vector<std::int64_t>& mults;
  const SearchBudget& budget;
  std::vector<std::pair<std::int64_t, std::int64_t>> directions;
  std::int64_t nodes = 0;
  std::vector<CutFunctional> path;

  bool dfs(const PointList& residue, std::size_t j) {
    if (++nodes > budget.nodes) return false;
    const std::int64_t m = mults[j];
    if (j + 1 == mults.size()) return certifiable_in_search(MonomialSet(residue), m);
    std::int64_t room = 0;
    for (std::size_t i = j; i < mults.size(); ++i) room += capacity(mults[i]);
    if (static_cast<std::int64_t>(residue.size()) > room) return false;

    std::vector<std::pair<CutFunctional, PointList>> candidates;
    for (const auto& s : budget.seeds) {
      if (std::any_of(domain.begin(), domain.end(), [&](LatticePoint p) { return s.sign_at(p) == 0; })) continue;
      PointList part;
      for (const auto& p : residue)
        if (s.sign_at(p) > 0) part.push_back(p);
      if (part.empty() || part.size() == residue.size()) continue;
      if (certifiable_in_search(MonomialSet(part), m)) candidates.emplace_back(s, std::move(part));
    }
    std::vector<std::pair<CutFunctional, PointList>> generated;
    for (auto [a, b] : directions) {
      std::vector<std::pair<std::int64_t, LatticePoint>> vals;
      for (const auto& p : residue) vals.push_back({a * p.x + b * p.y, p});
      std::sort(vals.begin(), vals.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
      std::optional<std::int64_t> best;
      PointList part;
      std::size_t best_size = 0;
      for (std::size_t k = 0; k < vals.size();) {
        const std::int64_t v = vals[k].first;
        while (k < vals.size() && vals[k].first == v) part.push_back(vals[k++].second);
        if (part.size() > static_cast<std::size_t>(capacity(m))) break;
        if (part.size() == residue.size()) break;  // cut must leave a remainder
        if (certifiable_in_search(MonomialSet(part), m)) {
          best = v;
          best_size = part.size();
        }
      }
      if (!best) continue;
      PointList chosen;
      for (std::size_t k = 0; k < best_size; ++k) chosen.push_back(vals[k].second);
      generated.emplace_back(CutFunctional(Rational(a), Rational(b), Rational(1, 2) - Rational(*best)),
                             std::move(chosen));
    }
    std::stable_sort(generated.begin(), generated.end(),
                     [](const auto& l, const auto& r) { return l.second.size() > r.second.size(); });
    for (auto& g : generated) candidates.push_back(std::move(g));

    for (const auto& [cut, part] : candidates) {
      const MonomialSet ps(part);
      PointList rest;
      for (const auto& p : residue)
        if (!ps.contains(p)) rest.push_back(p);
      path.push_back(cut);
      if (dfs(rest, j + 1)) return true;
      path.pop_back();
      if (nodes > budget.nodes) return false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<CutFunctional>> search_cuts(const MonomialSet& D, const std::vector<std::int64_t>& mults,
                                                      const SearchBudget& budget) {
  if (mults.empty()) throw std::invalid_argument("search needs at least one multiplicity");
  for (auto m : mults)
    if (m < 1) throw std::invalid_argument("multiplicity must be at least 1");
  if (budget.nodes <= 0) return std::nullopt;
  Searcher s{D, mults, budget, {}, 0, {}};
  for (std::int64_t a = -budget.height; a <= budget.height; ++a)
    for (std::int64_t b = -budget.height; b <= budget.height; ++b)
      if (std::gcd(a, b) == 1) s.directions.emplace_back(a, b);
  if (!s.dfs(D.points(), 0)) return std::nullopt;
  return s.path;
}

CollisionProbe collision_probe(std::int64_t d, std::int64_t r, std::int64_t m) {
  if (d < 0) throw std::invalid_argument("negative degree");
  InterpolationProblem p{lattice::triangle_set(d), lattice::collision_staircase(r, m)};
  const GenericDim g = generic_dim(p);
  CollisionProbe c;
  c.empty = g.empty;
  c.dim = g.dim;
  c.predicted = std::max<std::int64_t>(0, static_cast<std::int64_t>(p.D.size()) - static_cast<std::int64_t>(p.E.size()));
  c.agrees = c.dim + 1 == c.predicted;
  return c;
}

}  // namespace linserlab::dumnicki
