#include <doctest.h>

#include <map>
#include <set>

#include "linserlab/certificate.hpp"
#include "linserlab/fatpoints.hpp"

using namespace linserlab;
using namespace linserlab::dumnicki;
using lattice::triangle_set;
using lattice::triangle_staircase;

namespace {

// Plain Gaussian elimination over Q, separate from the Bareiss code path.
std::size_t gauss_rank(RatMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Rational t = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= t * m(r, j);
    }
    ++r;
  }
  return r;
}

// Entry of the jet matrix straight from the definition: the (alpha, beta)
// derivative of x^a y^b evaluated at (1, 1).
Integer jet(std::int64_t a, std::int64_t b, std::int64_t alpha, std::int64_t beta) {
  Integer v = 1;
  for (std::int64_t i = 0; i < alpha; ++i) v *= a - i;
  for (std::int64_t i = 0; i < beta; ++i) v *= b - i;
  return v;
}

std::set<std::string> evidence_kinds(const EmptinessCertificate& c) {
  std::set<std::string> out;
  for (const auto& p : c.pieces) out.insert(std::visit([](const auto& e) -> std::string {
    using T = std::decay_t<decltype(e)>;
    if constexpr (std::is_same_v<T, LineAssignment>) return "line";
    if constexpr (std::is_same_v<T, NonzeroDeterminant>) return "det";
    return "rank";
  }, p.evidence));
  return out;
}

CutFunctional cut(std::int64_t a, std::int64_t b, Rational c) { return CutFunctional(Rational(a), Rational(b), c); }

}  // namespace

TEST_CASE("interpolation matrices") {
  CHECK(interp_matrix({MonomialSet({{0, 0}}), lattice::Staircase({{0, 0}})})(0, 0) == 1);

  const MonomialSet tri({{0, 0}, {1, 0}, {0, 1}});
  const RatMatrix m = interp_matrix({tri, triangle_staircase(2)});
  // Rows (0,0), (0,1), (1,0); columns (0,0), (0,1), (1,0).
  REQUIRE(m.rows() == 3);
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == 1);
  CHECK(m(0, 2) == 1);
  CHECK(m(1, 1) == 1);
  CHECK(m(1, 2) == 0);
  CHECK(m(2, 2) == 1);
  CHECK(m(2, 1) == 0);
  CHECK(bareiss_determinant(integerize_rows(m)) == 1);

  const MonomialSet row({{0, 0}, {2, 0}, {4, 0}});
  const lattice::Staircase e({{0, 0}, {1, 0}, {2, 0}});
  const IntMatrix v = integerize_rows(interp_matrix({row, e}));
  // Falling-factorial Vandermonde: det = 1 * (2 * 12 - 4 * 2) = 16.
  CHECK(bareiss_determinant(v) == 16);

  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    PointList cols, rows;
    for (int i = 0; i < 6; ++i) cols.push_back({rng.uniform(0, 6), rng.uniform(0, 6)});
    const MonomialSet D(cols);
    const auto E = lattice::collision_staircase(rng.uniform(1, 3), rng.uniform(1, 3));
    const RatMatrix q = interp_matrix({D, E});
    for (std::size_t i = 0; i < E.size(); ++i)
      for (std::size_t j = 0; j < D.size(); ++j)
        CHECK(q(i, j) == Rational(jet(D.points()[j].x, D.points()[j].y, E.cells()[i].x, E.cells()[i].y)));
  }
}

TEST_CASE("generic dimension and witnesses") {
  for (std::int64_t m = 1; m <= 6; ++m) {
    const auto g = generic_dim({triangle_set(m - 1), triangle_staircase(m)});
    CHECK(g.empty);
    CHECK(g.dim == -1);
  }

  const MonomialSet line({{0, 0}, {1, 0}, {2, 0}});
  const auto g = generic_dim({line, triangle_staircase(2)});
  CHECK_FALSE(g.empty);
  CHECK(g.dim == 0);
  REQUIRE(g.dual);
  // The dual polynomial is a multiple of y.
  const auto rows = triangle_staircase(2).cells();
  for (std::int64_t a = 0; a < 5; ++a)
    for (std::int64_t b = 0; b < 5; ++b) CHECK((eval_dual(rows, g.dual->coeffs, {a, b}) == 0) == (b == 0));
  REQUIRE(g.section);
  const RatMatrix m = interp_matrix({line, triangle_staircase(2)});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * g.section->coeffs[j];
    CHECK(s == 0);
  }

  CHECK(generic_dim({MonomialSet({{0, 0}, {1, 0}, {0, 1}}), triangle_staircase(2)}).empty);

  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    PointList pts;
    const auto k = rng.uniform(1, 8);
    for (int i = 0; i < k; ++i) pts.push_back({rng.uniform(0, 5), rng.uniform(0, 5)});
    const MonomialSet D(pts);
    const auto E = triangle_staircase(rng.uniform(1, 4));
    const auto r = generic_dim({D, E});
    CHECK(r.dim == static_cast<std::int64_t>(D.size()) - 1 - static_cast<std::int64_t>(gauss_rank(interp_matrix({D, E}))));
    CHECK(r.empty == (r.dim == -1));
  }
}

TEST_CASE("line assignments") {
  for (std::int64_t m = 1; m <= 6; ++m) {
    auto la = line_certificate(triangle_set(m - 1), m, Direction::Vertical);
    REQUIRE(la);
    CHECK(la->lines.size() == static_cast<std::size_t>(m));
    // Column x holds m - x points and gets label m - x.
    for (auto [coord, label] : la->lines) CHECK(label == m - coord);
  }
  const MonomialSet three({{0, 0}, {1, 0}, {2, 0}});
  CHECK_FALSE(line_certificate(three, 2, Direction::Horizontal));
  CHECK_FALSE(line_certificate(three, 2, Direction::Vertical));
  CHECK(line_certificate(three, 3, Direction::Vertical));
  CHECK(line_certificate(three, 3, Direction::Horizontal));

  CHECK(direction_name(Direction::Horizontal) == "horizontal");
  CHECK(parse_direction("vertical") == Direction::Vertical);
  CHECK_THROWS_AS(parse_direction("diagonal"), std::invalid_argument);
}

TEST_CASE("line assignment agrees with brute force over all labelings") {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    PointList pts;
    const auto k = rng.uniform(0, 9);
    for (int i = 0; i < k; ++i) pts.push_back({rng.uniform(0, 4), rng.uniform(0, 4)});
    const MonomialSet D(pts);
    const auto m = rng.uniform(1, 4);
    std::map<std::int64_t, std::int64_t> counts;
    for (const auto& p : D) counts[p.x] += 1;
    std::vector<std::int64_t> c;
    for (auto [x, n] : counts) c.push_back(n);
    // Try every injective map of lines into labels 1..m.
    bool found = false;
    std::vector<std::int64_t> labels(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    if (c.size() <= labels.size()) {
      do {
        bool ok = true;
        for (std::size_t i = 0; i < c.size(); ++i) ok = ok && c[i] <= labels[i];
        found = found || ok;
      } while (std::next_permutation(labels.begin(), labels.end()));
    }
    const auto la = line_certificate(D, m, Direction::Vertical);
    CHECK(la.has_value() == found);
  }
}

TEST_CASE("line assignment implies a nonzero determinant") {
  Rng rng(5);
  for (std::int64_t m = 1; m <= 4; ++m) {
    const std::int64_t need = m * (m + 1) / 2;
    int seen = 0;
    for (int t = 0; t < 400 && seen < 60; ++t) {
      std::set<lattice::LatticePoint> s;
      while (static_cast<std::int64_t>(s.size()) < need) s.insert({rng.uniform(0, m + 1), rng.uniform(0, m + 1)});
      const MonomialSet D(PointList(s.begin(), s.end()));
      const bool v = line_certificate(D, m, Direction::Vertical).has_value();
      const bool h = line_certificate(D, m, Direction::Horizontal).has_value();
      if (!v && !h) continue;
      ++seen;
      CHECK(gauss_rank(interp_matrix({D, triangle_staircase(m)})) == D.size());
    }
    CHECK(seen > 0);
  }
}

TEST_CASE("partitions by cuts") {
  const auto parts = reduce_partition(triangle_set(2), {cut(1, 0, Rational(-1, 2))});
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].size() == 3);
  CHECK(parts[1].size() == 3);

  CHECK(reduce_partition(triangle_set(3), {}).size() == 1);
  CHECK_THROWS_AS(reduce_partition(triangle_set(2), {cut(1, 0, Rational(-1))}), std::invalid_argument);

  const auto fam = nine_cut_family(1);
  const auto pieces = reduce_partition(fam.D, fam.cuts);
  REQUIRE(pieces.size() == 10);
  std::vector<std::size_t> sizes;
  std::set<lattice::LatticePoint> all;
  for (const auto& p : pieces) {
    sizes.push_back(p.size());
    for (const auto& q : p) CHECK(all.insert(q).second);
  }
  CHECK(all.size() == 105);
  CHECK(sizes == std::vector<std::size_t>{15, 10, 10, 10, 10, 10, 10, 10, 10, 10});

  const auto c = canonical_cut(cut(2, 4, Rational(-3)), reduce_partition(triangle_set(4), {cut(2, 4, Rational(-3))})[0]);
  CHECK(c.a == 1);
  CHECK(c.b == 2);
  CHECK(c.c == Rational(-3, 2));
}

TEST_CASE("small emptiness proofs") {
  const auto one = prove_empty(triangle_set(1), {2}, {});
  CHECK(one.status == ProofStatus::Certified);
  REQUIRE(one.certificate);
  CHECK(std::holds_alternative<LineAssignment>(one.certificate->pieces[0].evidence));

  const auto conic = prove_empty(triangle_set(2), {2}, {});
  CHECK(conic.status == ProofStatus::Nonempty);
  CHECK(conic.failed_piece == 0u);
  REQUIRE(conic.failure);
  CHECK(conic.failure->section);
  CHECK(conic.failure->dim == 2);

  const auto det = prove_empty(MonomialSet({{0, 0}, {1, 2}, {2, 1}}), {2}, {});
  REQUIRE(det.certificate);
  const auto* nd = std::get_if<NonzeroDeterminant>(&det.certificate->pieces[0].evidence);
  REQUIRE(nd);
  CHECK(nd->value == 3);

  const auto fr = prove_empty(MonomialSet({{0, 0}, {1, 2}, {2, 4}, {3, 1}, {4, 3}}), {3}, {});
  REQUIRE(fr.certificate);
  CHECK(std::holds_alternative<FullRank>(fr.certificate->pieces[0].evidence));
  CHECK(certificate::verify(*fr.certificate).valid);

  CHECK_THROWS_AS(prove_empty(triangle_set(2), {1, 1}, {}), std::invalid_argument);
}

TEST_CASE("nine-line family") {
  const auto f1 = nine_cut_family(1);
  REQUIRE(f1.cuts.size() == 9);
  CHECK(f1.cuts[0] == cut(-1, -1, Rational(9, 2)));
  CHECK(f1.cuts[1] == cut(1, 0, Rational(-19, 2)));
  CHECK(f1.cuts[2] == cut(0, 1, Rational(-19, 2)));
  CHECK(f1.cuts[7] == cut(3, -2, Rational(-15, 2)));
  CHECK(f1.mults == std::vector<std::int64_t>{5, 4, 4, 4, 4, 4, 4, 4, 4, 4});

  for (std::int64_t n = 1; n <= 10; ++n) {
    CAPTURE(n);
    const auto fam = nine_cut_family(n);
    const auto res = prove_empty(fam.D, fam.mults, fam.cuts);
    REQUIRE(res.status == ProofStatus::Certified);
    const auto& c = *res.certificate;
    CHECK(c.pieces.size() == 10);
    CHECK(evidence_kinds(c) == std::set<std::string>{"line"});
    CHECK(certificate::verify(c).valid);
    CHECK(certificate::from_json(certificate::to_json(c)) == c);

    // The first piece has 5n points along the bottom row.
    std::int64_t bottom = 0;
    for (const auto& p : c.pieces[0].points) bottom += p.y == 0;
    CHECK(bottom == 5 * n);
    // The sixth piece meets 4n vertical lines in 2, 4, ..., 4n, ..., 3, 1 points.
    std::map<std::int64_t, std::int64_t> cols;
    for (const auto& p : c.pieces[5].points) cols[p.x] += 1;
    std::vector<std::int64_t> counts, expect;
    for (auto [x, k] : cols) counts.push_back(k);
    for (std::int64_t k = 2; k <= 4 * n; k += 2) expect.push_back(k);
    for (std::int64_t k = 4 * n - 1; k >= 1; k -= 2) expect.push_back(k);
    CHECK(counts == expect);
  }
  CHECK_THROWS_AS(nine_cut_family(0), std::invalid_argument);
}

TEST_CASE("nine-line family against the fat point count") {
  for (std::int64_t n = 1; n <= 3; ++n) {
    std::vector<std::int64_t> mults{5 * n};
    for (int i = 0; i < 9; ++i) mults.push_back(4 * n);
    const auto rep = fatpoints::generic_cohomology(13 * n, mults, kDefaultSeed, 1);
    const auto fam = nine_cut_family(n);
    CHECK(rep.h0 == 0);
    CHECK((prove_empty(fam.D, fam.mults, fam.cuts).status == ProofStatus::Certified) == (rep.h0 == 0));
  }
}

TEST_CASE("cut search") {
  CHECK_FALSE(search_cuts(triangle_set(4), {3, 2, 2}, {}));
  CHECK(fatpoints::generic_cohomology(4, {3, 2, 2}, kDefaultSeed, 1).h0 == 3);

  SearchBudget none;
  none.nodes = 0;
  CHECK_FALSE(search_cuts(triangle_set(1), {2}, none));

  const auto fam = nine_cut_family(1);
  SearchBudget seeded;
  seeded.seeds = fam.cuts;
  const auto cuts = search_cuts(fam.D, fam.mults, seeded);
  REQUIRE(cuts);
  const auto res = prove_empty(fam.D, fam.mults, *cuts);
  REQUIRE(res.certificate);
  CHECK(certificate::verify(*res.certificate).valid);

  // Three simple points need two cuts, one point per piece.
  const auto two = search_cuts(triangle_set(1), {1, 1, 1}, {});
  REQUIRE(two);
  CHECK(prove_empty(triangle_set(1), {1, 1, 1}, *two).status == ProofStatus::Certified);

  // Whatever the search returns must prove emptiness.
  Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    const auto d = rng.uniform(1, 4);
    std::vector<std::int64_t> mults;
    const auto k = rng.uniform(1, 3);
    for (int i = 0; i < k; ++i) mults.push_back(rng.uniform(1, 3));
    SearchBudget b;
    b.nodes = 2000;
    if (const auto found = search_cuts(triangle_set(d), mults, b)) {
      CHECK(prove_empty(triangle_set(d), mults, *found).status == ProofStatus::Certified);
      CHECK(fatpoints::generic_cohomology(d, mults, kDefaultSeed, 1).h0 == 0);
    }
  }
}

TEST_CASE("collision probes") {
  const auto a = collision_probe(1, 1, 2);
  CHECK(a.empty);
  CHECK(a.predicted == 0);
  CHECK(a.agrees);

  const auto b = collision_probe(1, 2, 1);
  CHECK_FALSE(b.empty);
  CHECK(b.dim == 0);
  CHECK(b.predicted == 1);
  CHECK(b.agrees);

  const auto c = collision_probe(13, 10, 4);
  CHECK(c.predicted == 5);
  CHECK(c.dim + 1 >= c.predicted);
  // Toric emptiness forces emptiness for general points.
  for (std::int64_t d = 1; d <= 6; ++d)
    for (std::int64_t r = 1; r <= 4; ++r)
      for (std::int64_t m = 1; m <= 3; ++m) {
        const auto p = collision_probe(d, r, m);
        if (p.empty) CHECK(fatpoints::generic_cohomology(d, std::vector<std::int64_t>(static_cast<std::size_t>(r), m), kDefaultSeed, 1).h0 == 0);
      }
}
