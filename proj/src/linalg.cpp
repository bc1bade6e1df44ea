#include "linserlab/linalg.hpp"

#include <algorithm>
#include <utility>

namespace linserlab {

IntMatrix integerize_rows(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Integer v = m(i, j).get_num() * l;
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), m(i, j).get_den_mpz_t());
      out(i, j) = std::move(v);
    }
  }
  return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

Integer bareiss_determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  Integer t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      swap_rows(m, k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = m(i, j) * m(k, k);
        t -= m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Integer d = m(n - 1, n - 1);
  return sign > 0 ? d : Integer(-d);
}

std::size_t bareiss_rank(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Integer prev = 1;
  Integer t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    swap_rows(m, r, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = m(i, j) * m(r, c);
        t -= m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

std::optional<ModMatrix> reduce_mod(const RatMatrix& m, const PrimeField& f) {
  ModMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!f.reducible(m(i, j))) return std::nullopt;
      out(i, j) = f.from_rational(m(i, j));
    }
  return out;
}

ModMatrix reduce_mod(const IntMatrix& m, const PrimeField& f) {
  ModMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f.from_integer(m(i, j));
  return out;
}

namespace {

// Row echelon form in place; returns pivot count and records the original
// index of each row that became a pivot row.
std::size_t echelon_mod(ModMatrix& m, const PrimeField& f,
                        std::vector<std::size_t>* pivot_rows, int* sign) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> origin(rows);
  for (std::size_t i = 0; i < rows; ++i) origin[i] = i;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
      std::swap(origin[p], origin[r]);
      if (sign) *sign = -*sign;
    }
    const std::uint64_t inv = f.inv(m(r, c));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      const std::uint64_t factor = f.mul(m(i, c), inv);
      for (std::size_t j = c; j < cols; ++j) {
        if (m(r, j) != 0) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
      }
    }
    if (pivot_rows) pivot_rows->push_back(origin[r]);
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank_mod(ModMatrix m, const PrimeField& f) {
  // Eliminating on the narrower side is cheaper.
  if (m.rows() > m.cols()) m = m.transposed();
  return echelon_mod(m, f, nullptr, nullptr);
}

std::uint64_t determinant_mod(ModMatrix m, const PrimeField& f) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  int sign = 1;
  const std::size_t r = echelon_mod(m, f, nullptr, &sign);
  if (r < m.rows()) return 0;
  std::uint64_t d = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) d = f.mul(d, m(i, i));
  return sign > 0 ? d : f.neg(d);
}

std::vector<std::size_t> independent_rows_mod(const ModMatrix& m, const PrimeField& f) {
  // Independent rows of m are the pivot columns of its transpose.
  ModMatrix t = m.transposed();
  std::vector<std::size_t> pivot_cols;
  const std::size_t rows = t.rows();
  const std::size_t cols = t.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && t(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(t(p, j), t(r, j));
    const std::uint64_t inv = f.inv(t(r, c));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (t(i, c) == 0) continue;
      const std::uint64_t factor = f.mul(t(i, c), inv);
      for (std::size_t j = c; j < cols; ++j)
        if (t(r, j) != 0) t(i, j) = f.sub(t(i, j), f.mul(factor, t(r, j)));
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

std::vector<std::vector<Rational>> kernel(const RatMatrix& input) {
  RatMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RankResult exact_rank(const RatMatrix& m) {
  const std::size_t full = std::min(m.rows(), m.cols());
  if (full == 0) return {0, true};
  for (auto p : prepass_primes()) {
    PrimeField f(p);
    auto reduced = reduce_mod(m, f);
    if (!reduced) continue;
    if (rank_mod(std::move(*reduced), f) == full) return {full, true};
    break;  // one non-full residue rank: go exact
  }
  IntMatrix z = integerize_rows(m);
  if (z.rows() > z.cols()) z = z.transposed();
  return {bareiss_rank(std::move(z)), false};
}

}  // namespace linserlab
