#include "arrhom/linalg.hpp"

#include <vector>

namespace arrhom {

int rref_in_place(RMat& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    int found = -1;
    for (int r = pivot_row; r < rows; ++r) {
      if (!m(r, col).is_zero()) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != pivot_row) m.row(found).swap(m.row(pivot_row));
    const Rational inv = Rational(1) / m(pivot_row, col);
    for (int c = col; c < cols; ++c) m(pivot_row, c) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == pivot_row || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col);
      for (int c = col; c < cols; ++c) {
        m(r, c) -= factor * m(pivot_row, c);
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

int rank_of(RMat m) { return rref_in_place(m); }

RMat nullspace(const RMat& m) {
  RMat r = m;
  const int rank = rref_in_place(r);
  const int cols = static_cast<int>(m.cols());

  std::vector<int> pivot_col_of_row(rank, -1);
  std::vector<bool> is_pivot(cols, false);
  {
    int row = 0;
    for (int col = 0; col < cols && row < rank; ++col) {
      if (!r(row, col).is_zero()) {
        pivot_col_of_row[row] = col;
        is_pivot[col] = true;
        ++row;
      }
    }
  }

  RMat basis(cols, cols - rank);
  int out = 0;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RVec v = RVec::Zero(cols);
    v(free_col) = Rational(1);
    for (int row = 0; row < rank; ++row) {
      v(pivot_col_of_row[row]) = -r(row, free_col);
    }
    basis.col(out++) = v;
  }
  return basis;
}

std::optional<RVec> solve(const RMat& a, const RVec& b) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  RMat aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  const int rank_aug = rref_in_place(aug);

  // Inconsistent iff some reduced row is (0 ... 0 | 1).
  for (int r = 0; r < rank_aug; ++r) {
    bool zero_coeffs = true;
    for (int c = 0; c < cols; ++c) {
      if (!aug(r, c).is_zero()) {
        zero_coeffs = false;
        break;
      }
    }
    if (zero_coeffs && !aug(r, cols).is_zero()) return std::nullopt;
  }

  RVec x = RVec::Zero(cols);
  int row = 0;
  for (int col = 0; col < cols && row < rank_aug; ++col) {
    if (!aug(row, col).is_zero()) {
      x(col) = aug(row, cols);
      ++row;
    }
  }
  return x;
}

std::string matrix_key(const RMat& m) {
  std::string key;
  key.reserve(static_cast<std::size_t>(m.size()) * 4 + 8);
  key += std::to_string(m.rows());
  key += 'x';
  key += std::to_string(m.cols());
  key += ':';
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      key += m(r, c).str();
      key += ',';
    }
    key += ';';
  }
  return key;
}

}  // namespace arrhom
