#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "linserlab/exact.hpp"
#include "linserlab/linalg.hpp"

using namespace linserlab;

namespace {

// Leibniz expansion; only for tiny matrices.
Integer leibniz(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Largest k with a nonzero k x k minor.
std::size_t minor_rank(const IntMatrix& m) {
  const std::size_t top = std::min(m.rows(), m.cols());
  for (std::size_t k = top; k > 0; --k) {
    std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        IntMatrix sub(k, k);
        std::size_t si = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) {
          if (!rsel[i]) continue;
          std::size_t sj = 0;
          for (std::size_t j = 0; j < m.cols(); ++j)
            if (csel[j]) sub(si, sj++) = m(i, j);
          ++si;
        }
        if (leibniz(sub) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

IntMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, std::int64_t h) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.uniform(-h, h);
  return m;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(make_rational(6, -4) == Rational(-3, 2));
  CHECK_THROWS(make_rational(1, 0));
  CHECK(floor_q(make_rational(-7, 2)) == -4);
  CHECK(ceil_q(make_rational(-7, 2)) == -3);
  CHECK(floor_q(Rational(5)) == 5);
  CHECK(to_string(make_rational(3, 6)) == "1/2");
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(2, 3) == 0);
  CHECK(falling_factorial(7, 0) == 1);
  CHECK(binomial(6, 2) == 15);
  CHECK(lcm_of_denominators({make_rational(1, 4), make_rational(5, 6)}) == 12);
}

TEST_CASE("prime field arithmetic") {
  CHECK(is_prime_u64(kCertificatePrime));
  CHECK_FALSE(is_prime_u64(561));
  CHECK(previous_prime(100) == 97);
  for (auto p : prepass_primes()) CHECK(is_prime_u64(p));
  PrimeField f(kCertificatePrime);
  const std::uint64_t a = 123456789012345ULL;
  CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.from_int(-1) == kCertificatePrime - 1);
  CHECK(f.from_rational(make_rational(1, 2)) == f.inv(2));
  PrimeField seven(7);
  CHECK_FALSE(seven.reducible(make_rational(1, 14)));
  CHECK_THROWS_AS(seven.from_rational(make_rational(1, 7)), std::domain_error);
  CHECK(seven.pow(3, 6) == 1);
}

TEST_CASE("rng is deterministic and bounded") {
  Rng a(kDefaultSeed), b(kDefaultSeed);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(1);
  for (int i = 0; i < 1000; ++i) {
    const auto v = c.uniform(-3, 5);
    CHECK(v >= -3);
    CHECK(v <= 5);
    const Rational q = c.rational(10);
    CHECK(abs(q.get_num()) <= 10);
    CHECK(q.get_den() <= 10);
  }
}

TEST_CASE("bareiss determinant agrees with Leibniz expansion") {
  Rng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    IntMatrix m = random_matrix(rng, n, n, trial % 3 == 0 ? 1 : 9);
    CHECK(bareiss_determinant(m) == leibniz(m));
    PrimeField f(kCertificatePrime);
    CHECK(determinant_mod(reduce_mod(m, f), f) == f.from_integer(leibniz(m)));
  }
}

TEST_CASE("rank paths agree with the minor oracle") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng.uniform(0, 4);
    const std::size_t c = 1 + rng.uniform(0, 4);
    IntMatrix m = random_matrix(rng, r, c, 2);
    if (trial % 4 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 3;
    const std::size_t expect = minor_rank(m);
    CHECK(bareiss_rank(m) == expect);
    RatMatrix q(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) q(i, j) = Rational(m(i, j), 1 + static_cast<long>(i));
    CHECK(exact_rank(q).rank == expect);
    CHECK(kernel(q).size() == c - expect);
  }
}

TEST_CASE("kernel vectors annihilate") {
  RatMatrix m(2, 4);
  const int vals[2][4] = {{1, 2, 3, 4}, {2, 4, 7, 1}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = vals[i][j];
  const auto ker = kernel(m);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker)
    for (int i = 0; i < 2; ++i) {
      Rational s = 0;
      for (int j = 0; j < 4; ++j) s += m(i, j) * v[j];
      CHECK(s == 0);
    }
}

TEST_CASE("modular full rank implies rational full rank") {
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix m = random_matrix(rng, 6, 5, 3);
    for (auto p : prepass_primes()) {
      PrimeField f(p);
      if (rank_mod(reduce_mod(m, f), f) == 5) CHECK(bareiss_rank(m) == 5);
    }
  }
}

TEST_CASE("independent rows modulo p") {
  IntMatrix m(3, 2);
  m(0, 0) = 1; m(0, 1) = 2;
  m(1, 0) = 2; m(1, 1) = 4;
  m(2, 0) = 0; m(2, 1) = 1;
  PrimeField f(kCertificatePrime);
  CHECK(independent_rows_mod(reduce_mod(m, f), f) == std::vector<std::size_t>{0, 2});
}
