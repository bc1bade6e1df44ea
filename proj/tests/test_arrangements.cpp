#include <doctest.h>

#include <set>

#include "linserlab/arrangements.hpp"

using namespace linserlab;
using namespace linserlab::arrangements;

namespace {

Form form(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

Rational apply(const Form& f, const Form& p) { return f[0] * p[0] + f[1] * p[1] + f[2] * p[2]; }

// Hilbert function of the Orlik-Terao algebra from the Poincare polynomial
// 1 + d t + b2 t^2 + b3 t^3 evaluated at t / (1 - t).
Integer ot_hilbert(const LineArrangement& A, int k) {
  const long d = static_cast<long>(A.size());
  long b2 = 0;
  for (const auto& p : singular_points(A)) b2 += static_cast<long>(p.multiplicity()) - 1;
  const long b3 = b2 - d + 1;
  return d * binomial(k - 1, 0) + b2 * binomial(k - 1, 1) + b3 * binomial(k - 1, 2);
}

}  // namespace

TEST_CASE("arrangement validation") {
  CHECK_THROWS_AS(LineArrangement({form(1, 0, 0), form(2, 0, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(LineArrangement({form(0, 0, 0)}), std::invalid_argument);
  CHECK_NOTHROW(LineArrangement({{make_rational(1, 2), Rational(0), Rational(0)}, form(0, 1, 0)}));
  CHECK_THROWS(singular_points(LineArrangement({form(1, 0, 0)})));
}

TEST_CASE("singular points") {
  const auto five = singular_points(five_line_example());
  CHECK(five.size() == 10);
  for (const auto& p : five) CHECK(p.multiplicity() == 2);

  const auto conc = singular_points(LineArrangement({form(1, 0, 0), form(0, 1, 0), form(1, 1, 0)}));
  REQUIRE(conc.size() == 1);
  CHECK(conc[0].multiplicity() == 3);
  CHECK(conc[0].point == ProjPoint{0, 0, 1});

  CHECK(singular_points(LineArrangement({form(1, 0, 0), form(0, 1, 0)})).size() == 1);

  const auto m8 = m8_minus();
  const auto pts = singular_points(m8);
  std::size_t triples = 0, doubles = 0;
  for (const auto& p : pts) {
    triples += p.multiplicity() == 3;
    doubles += p.multiplicity() == 2;
    // Multiplicity against direct evaluation of every form.
    const Form q{Rational(p.point[0]), Rational(p.point[1]), Rational(p.point[2])};
    std::size_t through = 0;
    for (const auto& f : m8.forms()) through += apply(f, q) == 0;
    CHECK(through == p.multiplicity());
  }
  CHECK(triples == 7);
  CHECK(doubles == 7);

  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    for (std::size_t s = 2; s <= 7; ++s) {
      const auto g = singular_points(generic_lines(s, seed));
      CHECK(g.size() == s * (s - 1) / 2);
    }
}

TEST_CASE("circuits") {
  const auto gen5 = circuits(generic_lines(5, kDefaultSeed), 5);
  std::size_t c3 = 0, c4 = 0;
  for (const auto& c : gen5) {
    c3 += c.indices.size() == 3;
    c4 += c.indices.size() == 4;
  }
  CHECK(c3 == 0);
  CHECK(c4 == 5);

  const auto conc = circuits(LineArrangement({form(1, 0, 0), form(0, 1, 0), form(1, 1, 0)}), 3);
  REQUIRE(conc.size() == 1);
  CHECK(conc[0].coeffs == std::vector<Integer>{1, 1, -1});

  CHECK(circuits(generic_lines(4, kDefaultSeed), 4).size() == 1);

  const auto five = five_line_example();
  const auto fc = circuits(five, 4);
  const Circuit first{{0, 1, 2, 3}, {1, 1, 1, -1}};
  CHECK(std::find(fc.begin(), fc.end(), first) != fc.end());

  for (std::size_t s = 4; s <= 8; ++s) {
    const auto A = generic_lines(s, s);
    std::size_t n3 = 0, n4 = 0;
    for (const auto& c : circuits(A, 4)) {
      n3 += c.indices.size() == 3;
      n4 += c.indices.size() == 4;
    }
    CHECK(n3 == 0);
    CHECK(Integer(n4) == binomial(static_cast<long>(s), 4));
  }

  // Dependencies vanish exactly; dropping any line leaves an independent set.
  const auto m8 = m8_minus();
  for (const auto& c : circuits(m8, 4)) {
    for (int i = 0; i < 3; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < c.indices.size(); ++j) s += Rational(c.coeffs[j]) * m8.forms()[c.indices[j]][i];
      CHECK(s == 0);
    }
    CHECK(c.coeffs[0] > 0);
    if (c.indices.size() == 4) {
      for (std::size_t skip = 0; skip < 4; ++skip) {
        std::vector<Form> rest;
        for (std::size_t j = 0; j < 4; ++j)
          if (j != skip) rest.push_back(m8.forms()[c.indices[j]]);
        const Rational det = rest[0][0] * (rest[1][1] * rest[2][2] - rest[1][2] * rest[2][1]) -
                             rest[0][1] * (rest[1][0] * rest[2][2] - rest[1][2] * rest[2][0]) +
                             rest[0][2] * (rest[1][0] * rest[2][1] - rest[1][1] * rest[2][0]);
        CHECK(det != 0);
      }
    }
  }
}

TEST_CASE("Orlik-Terao generators") {
  const auto f = ot_generator(5, Circuit{{0, 1, 2, 3}, {1, 1, 1, -1}});
  Polynomial expect;
  expect.nvars = 5;
  expect.terms[{0, 1, 1, 1, 0}] = 1;
  expect.terms[{1, 0, 1, 1, 0}] = 1;
  expect.terms[{1, 1, 0, 1, 0}] = 1;
  expect.terms[{1, 1, 1, 0, 0}] = -1;
  CHECK(f == expect);
  CHECK(f.degree() == 3);

  const auto q = ot_generator(3, Circuit{{0, 1, 2}, {1, 1, -1}});
  Polynomial q2;
  q2.nvars = 3;
  q2.terms[{0, 1, 1}] = 1;
  q2.terms[{1, 0, 1}] = 1;
  q2.terms[{1, 1, 0}] = -1;
  CHECK(q == q2);

  CHECK(ot_generators(LineArrangement({form(1, 0, 0), form(0, 1, 0)}), 4).empty());

  // f vanishes at y_i = 1 / alpha_i(p) for p off the arrangement.
  Rng rng(kDefaultSeed);
  for (const auto& A : {five_line_example(), m8_minus(), generic_lines(6, 3)}) {
    const auto gens = ot_generators(A, 4);
    for (int t = 0; t < 20; ++t) {
      const Form p{rng.rational(9), rng.rational(9), rng.rational(9)};
      std::vector<Rational> y;
      bool off = true;
      for (const auto& a : A.forms()) {
        const Rational v = apply(a, p);
        off = off && v != 0;
        y.push_back(v == 0 ? Rational(0) : 1 / v);
      }
      if (!off) continue;
      for (const auto& g : gens) CHECK(g.eval(y) == 0);
    }
  }
}

TEST_CASE("graded counts") {
  const auto five = graded_counts(five_line_example(), 3);
  CHECK(five.min_gens.at(1) == 0);
  CHECK(five.min_gens.at(2) == 0);
  CHECK(five.min_gens.at(3) == 4);
  CHECK(five.linear_syzygies == 0);

  for (std::uint64_t seed : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{kDefaultSeed}}) {
    const auto g = graded_counts(generic_lines(5, seed), 3);
    CHECK(g.min_gens == five.min_gens);
    CHECK(g.ideal_dim == five.ideal_dim);
  }

  const auto conc = graded_counts(LineArrangement({form(1, 0, 0), form(0, 1, 0), form(1, 1, 0)}), 3);
  CHECK(conc.min_gens.at(2) == 1);
  CHECK(conc.min_gens.at(3) == 0);
  CHECK(conc.linear_syzygies == 0);

  const auto m8 = graded_counts(m8_minus(), 3);
  CHECK(m8.min_gens.at(1) == 0);
  CHECK(m8.min_gens.at(2) == 7);
  CHECK(m8.linear_syzygies == 1);
  CHECK(m8.min_gens.at(3) == 1);

  // Ideal dimensions against the Hilbert function of the algebra.
  for (const auto& A : {five_line_example(), m8_minus(), generic_lines(6, 4)}) {
    const auto g = graded_counts(A, 4);
    for (int k = 1; k <= 4; ++k)
      CHECK(Integer(g.ideal_dim.at(k)) == binomial(static_cast<long>(A.size()) + k - 1, k) - ot_hilbert(A, k));
  }

  CHECK_THROWS(graded_counts(m8_minus(), 5));
  CHECK_THROWS(graded_counts(m8_minus(), 1));
}

TEST_CASE("the divisor D_A") {
  const auto five = da_divisor(five_line_example());
  CHECK(five.D.coeffs.size() == 11);
  CHECK(five.D.coeffs[0] == 4);
  for (std::size_t i = 1; i < 11; ++i) CHECK(five.D.coeffs[i] == -1);
  CHECK(five.line_pairings == std::vector<Integer>(5, Integer(0)));
  CHECK(five.exceptional_pairings == std::vector<Integer>(10, Integer(1)));
  CHECK(five.nef_partial);
  CHECK(five.lines_contracted);

  const auto four = da_divisor(generic_lines(4, kDefaultSeed));
  CHECK(four.D.coeffs[0] == 3);
  CHECK(four.D.coeffs.size() == 7);
  CHECK(four.lines_contracted);

  CHECK_THROWS_AS(da_divisor(m8_minus()), std::invalid_argument);
  // A given class on M8^-: (d-1) H - sum (t_p - 1) E_p still meets every line in 0.
  const auto pts = singular_points(m8_minus());
  surfaces::DivClass D{{Integer(7)}};
  for (const auto& p : pts) D.coeffs.push_back(-Integer(static_cast<long>(p.multiplicity()) - 1));
  const auto r = da_divisor(m8_minus(), D);
  CHECK(r.line_pairings.size() == 8);
  for (std::size_t l = 0; l < 8; ++l) {
    Integer expect = 7;
    for (const auto& p : pts)
      if (std::find(p.lines.begin(), p.lines.end(), l) != p.lines.end()) expect -= static_cast<long>(p.multiplicity()) - 1;
    CHECK(r.line_pairings[l] == expect);
  }
  CHECK(r.lines_contracted);
  CHECK(r.nef_partial);
  CHECK_THROWS(da_divisor(m8_minus(), surfaces::DivClass{{Integer(1)}}));
}
