#pragma once

// Exact scalars, prime-field arithmetic and the deterministic random source
// shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace linserlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational num/den; throws on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// Floor and ceiling of a rational as integers.
Integer floor_q(const Rational& q);
Integer ceil_q(const Rational& q);

/// Falling factorial a(a-1)...(a-k+1); zero when k > a >= 0.
Integer falling_factorial(std::int64_t a, std::int64_t k);
Integer binomial(std::int64_t n, std::int64_t k);

Integer lcm_of_denominators(const std::vector<Rational>& v);

// ---------------------------------------------------------------------------
// Prime fields

bool is_prime_u64(std::uint64_t n);

/// Largest prime strictly below `bound`.
std::uint64_t previous_prime(std::uint64_t bound);

/// Arithmetic in Z/p for any prime p < 2^63.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;

  std::uint64_t from_int(std::int64_t v) const;
  std::uint64_t from_integer(const Integer& z) const;
  /// Reduction of a rational; throws std::domain_error if p divides the
  /// denominator.
  std::uint64_t from_rational(const Rational& q) const;
  bool reducible(const Rational& q) const;

 private:
  std::uint64_t p_;
};

/// Fixed modulus used for modular full-rank evidence in certificates.
inline constexpr std::uint64_t kCertificatePrime = 2305843009213693951ULL;  // 2^61-1

/// Large primes used for the modular rank pre-pass, in fixed order.
const std::vector<std::uint64_t>& prepass_primes();

// ---------------------------------------------------------------------------
// Deterministic randomness. Distributions from <random> are not portable
// across standard libraries, so bounded draws are done by rejection here.

class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Rational num/den with |num| <= height, 1 <= den <= height.
  Rational rational(std::int64_t height);

 private:
  std::uint64_t state_[4];
};

inline constexpr std::uint64_t kDefaultSeed = 20100214ULL;

}  // namespace linserlab
