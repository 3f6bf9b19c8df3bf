#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ajt/budget.hpp"
#include "ajt/fp.hpp"

namespace ajt {

// Square n x n matrix over F_p, row-major. Rows are the vectors a_1..a_n.
// Immutable once built; the determinant is computed at construction.
class FpMatrix {
 public:
  // Entries are reduced mod p (negative values allowed). Throws InputError
  // when the rows do not form a square matrix.
  FpMatrix(Prime p, const std::vector<std::vector<std::int64_t>>& rows);
  FpMatrix(Prime p, std::size_t n, std::vector<std::uint64_t> row_major);

  static FpMatrix identity(Prime p, std::size_t n);
  static FpMatrix from_rows(Prime p, const std::vector<FpVector>& rows);

  Prime prime() const noexcept { return prime_; }
  std::size_t dim() const noexcept { return n_; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  FpVector row(std::size_t i) const;
  FpVector column(std::size_t j) const;
  std::span<const std::uint64_t> row_major() const noexcept { return entries_; }

  FpScalar det() const { return FpScalar::from_residue(prime_, det_); }
  bool is_nonsingular() const noexcept { return det_ != 0; }

  FpMatrix transpose() const;
  FpMatrix operator*(const FpMatrix& o) const;
  FpVector operator*(const FpVector& x) const;

  // Throws SingularMatrix.
  FpMatrix inverse() const;

  // Submatrix with row i and column j deleted (0-based). Throws IndexOutOfRange.
  FpMatrix minor(std::size_t i, std::size_t j) const;

  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.prime_ == b.prime_ && a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  Prime prime_;
  std::size_t n_;
  std::vector<std::uint64_t> entries_;
  std::uint64_t det_;
};

std::ostream& operator<<(std::ostream& os, const FpMatrix& m);

// Determinant by fraction-free (Bareiss) elimination with pivoting.
std::uint64_t determinant(Prime p, std::size_t n, std::span<const std::uint64_t> row_major);

// prod_{0<=i<n} (p^n - p^i); saturates at UINT64_MAX.
std::uint64_t count_nonsingular(Prime p, std::size_t n);

// Visits every nonsingular n x n matrix exactly once, in lexicographic
// row-major order. The visitor returns false to stop early. Throws
// BudgetExceeded when p^(n^2) exceeds budget.max_enumeration.
// Returns the number of matrices visited.
std::uint64_t for_each_nonsingular(Prime p, std::size_t n, const Budget& budget,
                                   const std::function<bool(const FpMatrix&)>& visit);

std::vector<FpMatrix> enumerate_nonsingular(Prime p, std::size_t n, const Budget& budget);

// Uniform over nonsingular matrices (rejection sampling); deterministic in seed.
FpMatrix random_nonsingular(Prime p, std::size_t n, std::uint64_t seed);

class Rng;
FpMatrix random_nonsingular(Prime p, std::size_t n, Rng& rng);

}  // namespace ajt
