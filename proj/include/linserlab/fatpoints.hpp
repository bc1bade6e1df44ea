#pragma once

// Plane linear systems L(d; m_1, ..., m_r) through fat points: the
// derivative-conditions matrix, exact cohomology, initial degrees and
// Waldschmidt sandwiches, Cremona reduction and named point configurations.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linserlab/exact.hpp"
#include "linserlab/linalg.hpp"

namespace linserlab::fatpoints {

/// Ground field: the rationals, or Z/p when `prime` is nonzero.
struct FieldSpec {
  std::uint64_t prime = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime_field(std::uint64_t p);
  bool is_rational() const { return prime == 0; }
  bool operator==(const FieldSpec&) const = default;
};

/// Homogeneous triple normalized so the last nonzero coordinate is 1.
class ProjectivePoint {
 public:
  ProjectivePoint(Rational x, Rational y, Rational z);
  static ProjectivePoint affine(Rational x, Rational y) { return {std::move(x), std::move(y), 1}; }

  const std::array<Rational, 3>& coords() const { return coords_; }
  /// Index of the coordinate normalized to 1.
  int chart() const;

  bool operator==(const ProjectivePoint&) const = default;

 private:
  std::array<Rational, 3> coords_;
};

struct FatPointSystem {
  std::int64_t degree = 0;
  std::vector<ProjectivePoint> points;
  std::vector<std::int64_t> mults;
  FieldSpec field;
};

struct SystemReport {
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  std::int64_t chi = 0;
  std::int64_t expected = 0;
  bool special = false;
  bool operator==(const SystemReport&) const = default;
};

/// Number of monomials of degree d in three variables.
std::int64_t monomial_count(std::int64_t d);
/// Number of conditions imposed by a point of multiplicity m.
std::int64_t condition_count(std::int64_t m);
/// chi = (d+1)(d+2)/2 - sum m(m+1)/2.
std::int64_t virtual_dimension(std::int64_t d, const std::vector<std::int64_t>& mults);

/// Throws std::invalid_argument on malformed systems (negative degree,
/// duplicate points, size mismatch, m-1 >= p in characteristic p).
void validate(const FatPointSystem& sys);

/// Conditions matrix over Q. Rows: derivative conditions per point; columns:
/// degree-d monomials x^i y^j z^k in lexicographic (i, j, k) order.
RatMatrix conditions_matrix(const FatPointSystem& sys);
/// The same matrix reduced mod p; nullopt if a coordinate is not reducible.
std::optional<ModMatrix> conditions_matrix_mod(const FatPointSystem& sys, const PrimeField& f);

std::int64_t conditions_rank(const FatPointSystem& sys);
SystemReport cohomology(const FatPointSystem& sys);

// ---------------------------------------------------------------------------
// Configurations

enum class ConfigKind { Random, Collinear, Star, PencilProducts };

ConfigKind parse_config_kind(const std::string& name);
std::string config_kind_name(ConfigKind k);

/// random(r), collinear(r), star(s) with C(s,2) points, pencil_products(k)
/// with k^2 points. Degenerate draws are redrawn (bounded retries).
std::vector<ProjectivePoint> make_config(ConfigKind kind, std::int64_t param, std::uint64_t seed);

/// Random points except that consecutive groups of the given sizes are placed
/// on common random lines (one line per group).
std::vector<ProjectivePoint> grouped_collinear_points(std::size_t total,
                                                      const std::vector<std::int64_t>& groups,
                                                      Rng& rng);

/// Minimum h0 over `trials` random point sets derived from `seed`.
SystemReport generic_cohomology(std::int64_t d, const std::vector<std::int64_t>& mults,
                                std::uint64_t seed, std::int64_t trials);

// ---------------------------------------------------------------------------
// Initial degrees and Waldschmidt bounds

/// Least t with h0(t; mults) > 0 at the given points.
std::int64_t initial_degree(const std::vector<ProjectivePoint>& points,
                            const std::vector<std::int64_t>& mults);
/// a(S, m): uniform multiplicity m.
std::int64_t alpha(const std::vector<ProjectivePoint>& points, std::int64_t m);

/// (a(S,k+1)/(k+2), a(S,k+1)/(k+1)).
std::pair<Rational, Rational> waldschmidt_sandwich(const std::vector<ProjectivePoint>& points,
                                                   std::int64_t k);

struct ChudnovskyReport {
  Rational bound;
  std::pair<Rational, Rational> sandwich;  // k = 1
  bool equality_witness = false;
  std::int64_t alpha1 = 0;
  std::int64_t alpha2 = 0;
};
ChudnovskyReport chudnovsky_report(const std::vector<ProjectivePoint>& points);

struct StabilityRow {
  std::int64_t n = 0;
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  bool operator==(const StabilityRow&) const = default;
};
std::vector<StabilityRow> speciality_stability(std::int64_t d, const std::vector<std::int64_t>& mults,
                                               const std::vector<ProjectivePoint>& points,
                                               std::int64_t n_max);

// ---------------------------------------------------------------------------
// Divisor classes on blowups of the plane

struct PlaneDivisorClass {
  std::int64_t d = 0;
  std::vector<std::int64_t> mults;

  Integer self_intersection() const;
  /// K.D with K = -3H + sum E_i.
  Integer canonical_pairing() const;
  bool operator==(const PlaneDivisorClass&) const = default;
};

struct CremonaStep {
  std::array<std::size_t, 3> slots{};
  PlaneDivisorClass before;
  PlaneDivisorClass after;
};

struct CremonaResult {
  PlaneDivisorClass reduced;
  std::vector<CremonaStep> steps;
};

CremonaResult cremona_reduce(PlaneDivisorClass c);

struct PellMember {
  Integer a, b, d, m;
  /// (d; m+1, m x 9); throws if the entries do not fit in 64 bits.
  PlaneDivisorClass divisor_class() const;
};

/// First `count` admissible members (odd 0 < a < b) ordered by b.
std::vector<PellMember> pell_family(std::size_t count);

enum class SemiEffectivity { NotSemiEffective, SemiEffective, Boundary };

struct SemiEffectivityReport {
  SemiEffectivity status = SemiEffectivity::Boundary;
  std::int64_t n = 0;   // multiple with a section (SemiEffective)
  std::int64_t h0 = 0;
  std::string evidence;
  Rational lower;       // best lower bound found for the compared limit
  Rational upper;       // best upper bound found
  Rational threshold;   // d/m (uniform) or d (mixed)
};

SemiEffectivityReport semi_effectivity_status(const PlaneDivisorClass& c,
                                              const std::vector<ProjectivePoint>& points,
                                              std::int64_t k);

struct CollinearExperiment {
  std::int64_t general_h0 = 0;
  std::int64_t constrained_h0 = 0;
};

/// h0 with all points random vs. with consecutive groups on common lines.
CollinearExperiment collinear_constraint_experiment(std::int64_t d,
                                                    const std::vector<std::int64_t>& mults,
                                                    const std::vector<std::int64_t>& groups,
                                                    std::uint64_t seed);

}  // namespace linserlab::fatpoints
