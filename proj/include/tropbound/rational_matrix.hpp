#pragma once

// Dense matrices over Q with exact Gauss-Jordan elimination.

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace tropbound {

class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpq_class &operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const mpq_class &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RationalMatrix transposed() const;
  std::vector<mpq_class> apply(const std::vector<mpq_class> &x) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

/// Reduced row echelon form in place; returns the pivot column of each
/// pivot row in order.
std::vector<std::size_t> row_reduce(RationalMatrix &m);

std::size_t rank(RationalMatrix m);

mpq_class determinant(RationalMatrix m);

struct InverseResult {
  RationalMatrix inverse;
  mpq_class determinant;
};

/// Inverse and determinant of a square matrix; empty when singular.
std::optional<InverseResult> invert(const RationalMatrix &m);

enum class SolveKind { unique, inconsistent, underdetermined };

struct LinearSolve {
  SolveKind kind;
  std::vector<mpq_class> x; // filled for `unique`
};

/// Classifies and solves A x = b.
LinearSolve solve(const RationalMatrix &a, const std::vector<mpq_class> &b);

/// Basis of { y : y^T A = 0 }.
std::vector<std::vector<mpq_class>> left_null_space(const RationalMatrix &a);

} // namespace tropbound
