#pragma once

// Line arrangements in P^2: singular points, circuits, Orlik-Terao relations
// and their low-degree graded counts.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "linserlab/exact.hpp"
#include "linserlab/surfaces.hpp"

namespace linserlab::arrangements {

using Form = std::array<Rational, 3>;

class LineArrangement {
 public:
  /// Throws on a zero form or two proportional forms.
  explicit LineArrangement(std::vector<Form> forms);
  const std::vector<Form>& forms() const { return forms_; }
  std::size_t size() const { return forms_.size(); }

 private:
  std::vector<Form> forms_;
};

/// Five lines x, y, z, x+y+z, x+2y+3z.
LineArrangement five_line_example();
/// s lines in general position (no three concurrent), from the seed.
LineArrangement generic_lines(std::size_t s, std::uint64_t seed);
/// The seven affine lines y=1, y=3, x=1, x=3, x+y=2, x+y=6, 2x+y=5 together
/// with the line at infinity z = 0.
LineArrangement m8_minus();

using ProjPoint = std::array<Integer, 3>;  // primitive, last nonzero positive

struct SingularPoint {
  ProjPoint point;
  std::vector<std::size_t> lines;
  std::size_t multiplicity() const { return lines.size(); }
};

/// Sorted by point.
std::vector<SingularPoint> singular_points(const LineArrangement& A);

struct Circuit {
  std::vector<std::size_t> indices;
  std::vector<Integer> coeffs;  // primitive, first positive
  bool operator==(const Circuit&) const = default;
};

/// Minimal dependent subsets of size <= max_size, in lexicographic order.
std::vector<Circuit> circuits(const LineArrangement& A, std::size_t max_size);

/// Polynomial in y_1..y_d with exact coefficients.
struct Polynomial {
  std::size_t nvars = 0;
  std::map<std::vector<int>, Rational> terms;  // no zero coefficients
  int degree() const;
  Rational eval(const std::vector<Rational>& y) const;
  bool operator==(const Polynomial&) const = default;
};

Polynomial ot_generator(std::size_t nvars, const Circuit& c);
std::vector<Polynomial> ot_generators(const LineArrangement& A, std::size_t max_size);

struct GradedCounts {
  std::size_t max_deg = 0;
  std::map<int, std::size_t> ideal_dim;        // dim I_k
  std::map<int, std::size_t> min_gens;         // by degree
  std::size_t linear_syzygies = 0;             // among minimal quadrics
};

/// Degrees 1..max_deg, 2 <= max_deg <= 4, from all circuits of size <= max_deg + 1.
GradedCounts graded_counts(const LineArrangement& A, int max_deg);

struct DaReport {
  surfaces::NSLattice lattice;             // H, E_1..E_n, one E per singular point
  surfaces::DivClass D;
  std::vector<Integer> line_pairings;      // D . (H - sum of E_p on the line)
  std::vector<Integer> exceptional_pairings;
  bool nef_partial = false;                // all pairings >= 0
  bool lines_contracted = false;           // every line pairing is 0
};

/// (d-1) H - sum E_p. Throws unless every singular point is a double point.
DaReport da_divisor(const LineArrangement& A);
/// The same checks for a given class in the blowup at the singular points.
DaReport da_divisor(const LineArrangement& A, const surfaces::DivClass& D);

}  // namespace linserlab::arrangements
