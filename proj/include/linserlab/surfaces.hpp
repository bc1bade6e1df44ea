#pragma once

// Neron-Severi arithmetic, the Kollar counterexample numbers, negativity bound
// calculators and self-intersections of line configurations.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linserlab/exact.hpp"
#include "linserlab/linalg.hpp"

namespace linserlab::surfaces {

struct DivClass {
  std::vector<Integer> coeffs;
  bool operator==(const DivClass&) const = default;
};

struct NSLattice {
  std::vector<std::string> labels;
  IntMatrix gram;
  DivClass canonical;
};

/// Basis F1, F2, Delta of E x E (fibres and diagonal); K = 0.
NSLattice ee_lattice();
/// Basis H, E1, ..., En of the blowup of P^2 at n points; K = -3H + sum E_i.
NSLattice blowup_lattice(std::int64_t n);

/// A^T G B. Throws on a dimension mismatch or a non-symmetric Gram matrix.
Integer pair(const NSLattice& L, const DivClass& A, const DivClass& B);

DivClass operator+(const DivClass& a, const DivClass& b);
DivClass operator-(const DivClass& a, const DivClass& b);
DivClass operator*(const Integer& k, const DivClass& a);

/// Nef test on E x E with the ample class F1 + F2 + Delta.
bool ee_nef_test(const Integer& a1, const Integer& a2, const Integer& b);

struct KollarReport {
  std::int64_t n = 0;
  DivClass An;
  Integer AnSq;
  Integer An_dot_F1F2;
  Integer nAn_minus_R_sq;  // R = F1 + F2
  Integer chi;             // (nAn - R)^2 / 2
  Integer h1_lower;        // -chi = (n-1)^3
  Integer h1_printed;      // n^3 - 2n^2 + 3n - 1, kept for comparison with (n-1)^3
  Integer h0_Cn;           // (nAn)^2 / 2 = n^2
  bool nef = false;
};

/// A_n = n F1 + (n^2 - n + 1) F2 - (n - 1) Delta. Throws for n < 2.
KollarReport kollar_report(std::int64_t n);

/// Least n >= 2 with (n - 1)^3 > c n^2.
std::int64_t counterexample_n(std::int64_t c);

struct SurfaceInvariants {
  std::int64_t c1sq = 0;
  std::int64_t c2 = 0;
  bool operator==(const SurfaceInvariants&) const = default;
};

/// c1^2 - 4 c2 - 4g + 4.
std::int64_t vwbnc_bound(const SurfaceInvariants& inv, std::int64_t g);
/// c1^2 - 3 c2 + 2 - 2g.
std::int64_t wbnc_bound(const SurfaceInvariants& inv, std::int64_t g);

struct BlowupStep {
  SurfaceInvariants inv;
  std::int64_t Ctildesq = 0;
};

/// Blowing up a point of multiplicity m on C: (c1^2 - 1, c2 + 1), C^2 - m^2.
BlowupStep blowup_step(const SurfaceInvariants& inv, std::int64_t Csq, std::int64_t m);

struct LogChern {
  std::int64_t log_c1sq = 0;  // (K + C)^2
  std::int64_t log_c2 = 0;    // c2 + K.C
  bool satisfied = false;     // (K + C)^2 <= 3 (e(X) - e(C))
};

/// Throws std::invalid_argument unless K.C + C^2 = 2g - 2.
LogChern log_my_check(const SurfaceInvariants& inv, std::int64_t KdotC, std::int64_t Csq, std::int64_t g);

/// The number 1 / sqrt(radicand).
struct InverseSqrt {
  Rational radicand;
  /// Sign of (this - q).
  int compare(const Rational& q) const;
  /// The exact value when the radicand is a rational square.
  std::optional<Rational> rational_value() const;
};

/// 1 / sqrt(b + 1). Throws for b < 0.
InverseSqrt seshadri_lower(const Rational& b);

/// rho * b * ceil(b / 2).
Integer reducible_bound(std::int64_t rho, std::int64_t b);

enum class IncidenceKind { GeneralLines, ProjectivePlane, Collinear, ExceptionalOnly };

using Coords = std::array<std::int64_t, 3>;

struct IncidenceConfig {
  IncidenceKind kind = IncidenceKind::Collinear;
  std::uint64_t modulus = 0;  // 0 for rational coordinates, q for F_q
  std::vector<Coords> points;
  std::vector<Coords> lines;  // coefficient vectors
  std::vector<std::vector<int>> incidence;  // rows points, columns lines
  std::int64_t exceptional = 0;            // ExceptionalOnly: number of points
};

/// s >= 2 lines with random integer coefficients, no three concurrent.
IncidenceConfig general_lines(std::int64_t s, std::uint64_t seed);
/// All points and lines of P^2(F_q), q prime.
IncidenceConfig projective_plane(std::int64_t q);
/// n >= 1 points on the line y = 0.
IncidenceConfig collinear(std::int64_t n);
/// n blown-up points with C = E_1 + ... + E_n.
IncidenceConfig exceptional_only(std::int64_t n);

/// C^2 for the proper transform of the union of the lines: l^2 - sum t_p^2, or
/// -n for ExceptionalOnly. Throws when the incidence matrix disagrees with
/// the coordinates.
Integer c_squared(const IncidenceConfig& cfg);
/// sum (L_i')^2 = l - |M|.
Integer lines_lower_bound(const IncidenceConfig& cfg);
Rational ratio_report(const IncidenceConfig& cfg);

struct NodalCurve {
  std::int64_t n = 0;
  std::int64_t Csq = 0;
  Rational ratio;
};

/// Rational plane curve of degree d >= 3 with its (d-1)(d-2)/2 nodes blown up.
NodalCurve rational_curve_nodes(std::int64_t d);

}  // namespace linserlab::surfaces
