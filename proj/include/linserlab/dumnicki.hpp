#pragma once

// Emptiness prover for toric linear series L(D, m_1, ..., m_r): interpolation
// matrices, line-assignment and determinant evidence, partitions by cuts, the
// nine-line family and a bounded cut search.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "linserlab/exact.hpp"
#include "linserlab/lattice.hpp"
#include "linserlab/linalg.hpp"

namespace linserlab::dumnicki {

using lattice::CutFunctional;
using lattice::LatticePoint;
using lattice::MonomialSet;
using lattice::PointList;
using lattice::Staircase;

struct InterpolationProblem {
  MonomialSet D;
  Staircase E;
};

/// Rows indexed by E, columns by D (both in lexicographic order); entry
/// a^(alpha) b^(beta) in falling factorials.
RatMatrix interp_matrix(const InterpolationProblem& p);
IntMatrix interp_matrix_int(const PointList& rows, const PointList& cols);

struct Witness {
  enum class Kind { Section, DualPolynomial };
  Kind kind = Kind::Section;
  /// Section: coefficients over D. Dual: coefficients over E of
  /// F(a, b) = sum c_{alpha,beta} a^(alpha) b^(beta).
  std::vector<Rational> coeffs;
};

struct GenericDim {
  std::int64_t dim = -1;  // projective dimension, -1 when empty
  bool empty = true;
  std::optional<Witness> section;
  std::optional<Witness> dual;
};

GenericDim generic_dim(const InterpolationProblem& p);

/// Evaluates the dual polynomial of a witness at (a, b).
Rational eval_dual(const PointList& rows, const std::vector<Rational>& coeffs, LatticePoint p);

enum class Direction { Vertical, Horizontal };

std::string direction_name(Direction d);
Direction parse_direction(const std::string& s);

struct LineAssignment {
  Direction direction = Direction::Vertical;
  /// (line coordinate, label); vertical lines are x = coordinate.
  std::vector<std::pair<std::int64_t, std::int64_t>> lines;
  bool operator==(const LineAssignment&) const = default;
};

std::optional<LineAssignment> line_certificate(const MonomialSet& D, std::int64_t m, Direction dir);

struct NonzeroDeterminant {
  PointList rows;
  Integer value;
  bool operator==(const NonzeroDeterminant&) const = default;
};

struct FullRank {
  PointList rows;
  std::uint64_t residue = 0;  // modulo kCertificatePrime
  bool operator==(const FullRank&) const = default;
};

using PieceEvidence = std::variant<LineAssignment, NonzeroDeterminant, FullRank>;

struct CertifiedPiece {
  MonomialSet points;
  std::int64_t mult = 0;
  PieceEvidence evidence;
  bool operator==(const CertifiedPiece&) const = default;
};

struct EmptinessCertificate {
  MonomialSet domain;
  std::vector<std::int64_t> mults;
  std::vector<CutFunctional> cuts;
  std::vector<CertifiedPiece> pieces;
  bool operator==(const EmptinessCertificate&) const = default;
};

/// D_j = residue intersected with {f_j > 0}, last piece = final residue.
/// Throws std::invalid_argument when a cut vanishes on a point of D.
std::vector<MonomialSet> reduce_partition(const MonomialSet& D, const std::vector<CutFunctional>& cuts);

/// Positive rescaling to primitive integer direction and the tight half-integer
/// offset c = 1/2 - min over `part` of a x + b y. The partition is unchanged.
CutFunctional canonical_cut(const CutFunctional& f, const MonomialSet& part);

/// Preferred evidence for L(D, m) = empty: line assignment (vertical first),
/// then determinant when |D| = m(m+1)/2, then full rank of a row selection.
std::optional<PieceEvidence> certify_piece(const MonomialSet& D, std::int64_t m);

enum class ProofStatus { Certified, Nonempty, Undecided };

struct ProofResult {
  ProofStatus status = ProofStatus::Undecided;
  std::optional<EmptinessCertificate> certificate;
  std::optional<std::size_t> failed_piece;
  std::optional<GenericDim> failure;  // generic_dim of the failed piece
};

ProofResult prove_empty(const MonomialSet& D, const std::vector<std::int64_t>& mults,
                        const std::vector<CutFunctional>& cuts);

struct FamilyInstance {
  MonomialSet D;
  std::vector<std::int64_t> mults;
  std::vector<CutFunctional> cuts;
};

/// D = triangle_set(13n), mults (5n, 4n x 9), the nine cuts.
FamilyInstance nine_cut_family(std::int64_t n);

struct SearchBudget {
  std::int64_t height = 3;        // |a|, |b| bound for candidate directions
  std::int64_t nodes = 100000;    // DFS node limit; 0 disables the search
  std::vector<CutFunctional> seeds;  // tried first at every depth
};

std::optional<std::vector<CutFunctional>> search_cuts(const MonomialSet& D, const std::vector<std::int64_t>& mults,
                                                      const SearchBudget& budget);

struct CollisionProbe {
  bool empty = false;
  std::int64_t dim = -1;
  std::int64_t predicted = 0;  // affine count max(0, chi)
  bool agrees = false;         // dim + 1 == predicted
};

CollisionProbe collision_probe(std::int64_t d, std::int64_t r, std::int64_t m);

}  // namespace linserlab::dumnicki
