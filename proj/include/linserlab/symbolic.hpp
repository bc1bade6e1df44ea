#pragma once

// Monomial ideals: products, intersections, symbolic powers of squarefree
// ideals, containment tests, and Howald multiplier ideals.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linserlab/exact.hpp"

namespace linserlab::symbolic {

inline constexpr std::size_t kMaxVariables = 12;

struct Monomial {
  std::vector<std::int64_t> exps;
  auto operator<=>(const Monomial&) const = default;
  std::size_t nvars() const { return exps.size(); }
  std::int64_t degree() const;
  bool divides(const Monomial& m) const;
  bool squarefree() const;
};

Monomial operator*(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

class MonomialIdeal {
 public:
  /// The zero ideal in `nvars` variables.
  explicit MonomialIdeal(std::size_t nvars);
  /// Minimizes and sorts the generators. Throws on a length mismatch.
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);

  static MonomialIdeal unit(std::size_t nvars);
  /// The maximal ideal (x_1, ..., x_n).
  static MonomialIdeal maximal(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool squarefree() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
/// k = 0 gives the unit ideal.
MonomialIdeal power(const MonomialIdeal& I, std::int64_t k);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
bool contains(const MonomialIdeal& I, const Monomial& m);
/// J is contained in I.
bool subset(const MonomialIdeal& J, const MonomialIdeal& I);

/// A coordinate prime (x_i : i in variables).
struct PrimeSupport {
  std::vector<std::size_t> variables;
  auto operator<=>(const PrimeSupport&) const = default;
};

/// Minimal vertex covers of the generator supports. Throws unless I is
/// squarefree, nonzero, proper and has at most kMaxVariables variables.
std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& I);
std::size_t bight(const MonomialIdeal& I);

MonomialIdeal prime_ideal(std::size_t nvars, const PrimeSupport& P);

/// Intersection of P^m over the minimal primes P of a squarefree I.
MonomialIdeal symbolic_power(const MonomialIdeal& I, std::int64_t m);

struct ContainmentReport {
  std::int64_t r = 0;
  std::size_t e = 0;  // big height
  std::size_t n = 0;  // number of variables
  bool els = false;        // I^(re) in I^r
  bool harbourne = false;  // I^(re-(e-1)) in I^r
  bool hh1 = false;        // I^(rn) in m^(rn-r) I^r
  bool hh2 = false;        // I^(rn-(n-1)) in m^(rn-r-(n-1)) I^r
  bool hh3 = false;        // I^(re) in m^(re-r) I^r
  bool hh4 = false;        // I^(re-(e-1)) in m^(re-r-(e-1)) I^r
};

ContainmentReport containment_suite(const MonomialIdeal& I, std::int64_t r);

/// Whether `v` lies in c * Newt(I), Newt(I) = conv(exponents) + orthant.
/// With `interior`, whether it lies in the topological interior.
/// Throws for c <= 0 or the zero ideal.
bool newton_region_contains(const MonomialIdeal& I, const Rational& c, const std::vector<Rational>& v,
                            bool interior = false);

/// Monomials x^a with a + (1, ..., 1) in the interior of c * Newt(I).
MonomialIdeal howald_multiplier(const MonomialIdeal& I, const Rational& c);

struct NonStabilization : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// den(t) * {1, 2, 3, 4, 6, 12}.
std::vector<std::int64_t> default_p_range(const Rational& t);

/// howald_multiplier(I^(p), t / p) over `p_range`. Returns the common value of
/// the last three; throws NonStabilization when they differ.
MonomialIdeal asymptotic_multiplier(const MonomialIdeal& I, const Rational& t,
                                    const std::vector<std::int64_t>& p_range);
MonomialIdeal asymptotic_multiplier(const MonomialIdeal& I, const Rational& t);

struct ElsChain {
  bool left = false;    // I^(re) in J(re . I^(*))
  bool middle = false;  // J(re . I^(*)) in J(e . I^(*))^r
  bool right = false;   // J(e . I^(*))^r in I^r
};

ElsChain els_chain_check(const MonomialIdeal& I, std::int64_t r);

/// Monomial in variables named x, y, z, w, then x5, x6, ...
std::string to_string(const Monomial& m);
std::string to_string(const MonomialIdeal& I);

}  // namespace linserlab::symbolic
