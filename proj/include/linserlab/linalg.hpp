#pragma once

// Dense exact linear algebra: fraction-free (Bareiss) elimination over Z,
// Gauss-Jordan over Q for kernels, and elimination over prime fields.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "linserlab/exact.hpp"

namespace linserlab {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix select_rows(const std::vector<std::size_t>& idx) const {
    Matrix s(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(idx[i], j);
    return s;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using ModMatrix = Matrix<std::uint64_t>;

/// Scales each row by the lcm of its denominators; rank and row kernel are
/// unchanged.
IntMatrix integerize_rows(const RatMatrix& m);

Integer bareiss_determinant(IntMatrix m);
std::size_t bareiss_rank(IntMatrix m);

/// Residues of a rational matrix; nullopt when p divides some denominator.
std::optional<ModMatrix> reduce_mod(const RatMatrix& m, const PrimeField& f);
ModMatrix reduce_mod(const IntMatrix& m, const PrimeField& f);

std::size_t rank_mod(ModMatrix m, const PrimeField& f);
std::uint64_t determinant_mod(ModMatrix m, const PrimeField& f);

/// Indices of the first maximal set of independent rows, scanning in order.
std::vector<std::size_t> independent_rows_mod(const ModMatrix& m, const PrimeField& f);

/// Basis of {v : m v = 0} over Q, one vector per free column of the RREF.
std::vector<std::vector<Rational>> kernel(const RatMatrix& m);

struct RankResult {
  std::size_t rank = 0;
  bool certified_by_prime = false;  // full rank seen modulo a pre-pass prime
};

/// Exact rank over Q. A modular pre-pass certifies full rank (rank mod p never
/// exceeds the rational rank); otherwise falls back to Bareiss elimination.
RankResult exact_rank(const RatMatrix& m);

}  // namespace linserlab
