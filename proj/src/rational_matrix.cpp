#include "tropbound/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace tropbound {

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

std::vector<mpq_class>
RationalMatrix::apply(const std::vector<mpq_class> &x) const {
  if (x.size() != cols_)
    throw std::invalid_argument("RationalMatrix::apply: size mismatch");
  std::vector<mpq_class> y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0)
        y[r] += (*this)(r, c) * x[c];
  return y;
}

namespace {

void swap_rows(RationalMatrix &m, std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t c = 0; c < m.cols(); ++c)
    std::swap(m(a, c), m(b, c));
}

// Forward elimination restricted to the first `limit` columns; the
// remaining columns ride along. Returns pivot columns and the row-swap
// parity.
std::pair<std::vector<std::size_t>, bool>
eliminate(RationalMatrix &m, std::size_t limit, bool reduce_above) {
  std::vector<std::size_t> pivots;
  bool odd = false;
  std::size_t row = 0;
  mpq_class factor;
  for (std::size_t col = 0; col < limit && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, col)) == 0)
      ++p;
    if (p == m.rows())
      continue;
    if (p != row) {
      swap_rows(m, p, row);
      odd = !odd;
    }
    const mpq_class pivot = m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      m(row, c) /= pivot;
    for (std::size_t r = reduce_above ? 0 : row + 1; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0)
        continue;
      factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (sgn(m(row, c)) != 0)
          m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {pivots, odd};
}

} // namespace

std::vector<std::size_t> row_reduce(RationalMatrix &m) {
  return eliminate(m, m.cols(), true).first;
}

std::size_t rank(RationalMatrix m) {
  return eliminate(m, m.cols(), false).first.size();
}

mpq_class determinant(RationalMatrix m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of non-square matrix");
  // Track the pivots before normalisation.
  mpq_class det = 1;
  std::size_t n = m.rows();
  mpq_class factor;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(m(p, col)) == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != col) {
      swap_rows(m, p, col);
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m(r, col)) == 0)
        continue;
      factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c)
        m(r, c) -= factor * m(col, c);
    }
  }
  det.canonicalize(); // entries may have been set without canonicalising
  return det;
}

std::optional<InverseResult> invert(const RationalMatrix &m) {
  const std::size_t n = m.rows();
  if (n != m.cols())
    throw std::invalid_argument("inverse of non-square matrix");
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  // Determinant is the product of the pivots taken before scaling.
  mpq_class det = 1;
  mpq_class factor;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(aug(p, col)) == 0)
      ++p;
    if (p == n)
      return std::nullopt;
    if (p != col) {
      swap_rows(aug, p, col);
      det = -det;
    }
    const mpq_class pivot = aug(col, col);
    det *= pivot;
    for (std::size_t c = col; c < 2 * n; ++c)
      aug(col, c) /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(aug(r, col)) == 0)
        continue;
      factor = aug(r, col);
      for (std::size_t c = col; c < 2 * n; ++c)
        if (sgn(aug(col, c)) != 0)
          aug(r, c) -= factor * aug(col, c);
    }
  }
  det.canonicalize();
  InverseResult out{RationalMatrix(n, n), det};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      out.inverse(r, c) = aug(r, n + c);
  return out;
}

LinearSolve solve(const RationalMatrix &a, const std::vector<mpq_class> &b) {
  if (b.size() != a.rows())
    throw std::invalid_argument("solve: right-hand side size mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto pivots = eliminate(aug, a.cols(), true).first;
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (sgn(aug(r, a.cols())) != 0)
      return {SolveKind::inconsistent, {}};
  if (pivots.size() < a.cols())
    return {SolveKind::underdetermined, {}};
  std::vector<mpq_class> x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = aug(i, a.cols());
  return {SolveKind::unique, std::move(x)};
}

std::vector<std::vector<mpq_class>> left_null_space(const RationalMatrix &a) {
  RationalMatrix t = a.transposed();
  const auto pivots = row_reduce(t);
  std::vector<bool> is_pivot(t.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t free = 0; free < t.cols(); ++free) {
    if (is_pivot[free])
      continue;
    std::vector<mpq_class> y(t.cols(), 0);
    y[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      y[pivots[i]] = -t(i, free);
    basis.push_back(std::move(y));
  }
  return basis;
}

} // namespace tropbound
