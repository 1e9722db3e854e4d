#include "destab/matrix.hpp"

#include <utility>

#include "destab/errors.hpp"

namespace destab {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<RationalVec>& rows) {
  if (rows.empty()) throw InputError("matrix needs at least one row");
  std::size_t cols = rows.front().size();
  if (cols == 0) throw InputError("matrix rows must be nonempty");
  ExactMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("matrix rows have inconsistent lengths");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RationalVec ExactMatrix::row(std::size_t i) const {
  RationalVec out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
  if (cols_ != other.rows_) throw InputError("matrix product with mismatched shapes");
  ExactMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& lhs = at(i, k);
      if (lhs == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, j) += lhs * other.at(k, j);
    }
  return out;
}

RationalVec ExactMatrix::apply(const RationalVec& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector product with mismatched shapes");
  RationalVec out(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

ExactMatrix ExactMatrix::reduced_echelon(std::size_t* rank_out) const {
  // Gauss-Jordan with exact arithmetic; returns the unique reduced row-echelon
  // form with all-zero rows removed, so equal row spans compare equal.
  std::vector<RationalVec> work(rows_);
  for (std::size_t i = 0; i < rows_; ++i) work[i] = row(i);
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols_ && pivot_row < work.size(); ++col) {
    std::size_t found = work.size();
    for (std::size_t r = pivot_row; r < work.size(); ++r) {
      if (work[r][col] != 0) {
        found = r;
        break;
      }
    }
    if (found == work.size()) continue;
    std::swap(work[pivot_row], work[found]);
    Rational inv = 1 / work[pivot_row][col];
    for (std::size_t j = col; j < cols_; ++j) work[pivot_row][j] *= inv;
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r == pivot_row || work[r][col] == 0) continue;
      Rational factor = work[r][col];
      for (std::size_t j = col; j < cols_; ++j) work[r][j] -= factor * work[pivot_row][j];
    }
    ++pivot_row;
  }
  if (rank_out != nullptr) *rank_out = pivot_row;
  if (pivot_row == 0) {
    // Keep a single zero row so the matrix stays well-formed.
    ExactMatrix out(1, cols_);
    return out;
  }
  ExactMatrix out(pivot_row, cols_);
  for (std::size_t i = 0; i < pivot_row; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = work[i][j];
  return out;
}

std::size_t ExactMatrix::rank() const {
  std::size_t r = 0;
  reduced_echelon(&r);
  return r;
}

Rational ExactMatrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
  std::vector<RationalVec> work(rows_);
  for (std::size_t i = 0; i < rows_; ++i) work[i] = row(i);
  Rational det = 1;
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t found = rows_;
    for (std::size_t r = col; r < rows_; ++r) {
      if (work[r][col] != 0) {
        found = r;
        break;
      }
    }
    if (found == rows_) return 0;
    if (found != col) {
      std::swap(work[col], work[found]);
      det = -det;
    }
    det *= work[col][col];
    Rational inv = 1 / work[col][col];
    for (std::size_t r = col + 1; r < rows_; ++r) {
      if (work[r][col] == 0) continue;
      Rational factor = work[r][col] * inv;
      for (std::size_t j = col; j < cols_; ++j) work[r][j] -= factor * work[col][j];
    }
  }
  return det;
}

std::optional<ExactMatrix> ExactMatrix::inverse() const {
  if (rows_ != cols_) throw InputError("inverse of a non-square matrix");
  std::vector<RationalVec> work(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    work[i] = row(i);
    work[i].resize(2 * cols_, Rational(0));
    work[i][cols_ + i] = 1;
  }
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t found = rows_;
    for (std::size_t r = col; r < rows_; ++r) {
      if (work[r][col] != 0) {
        found = r;
        break;
      }
    }
    if (found == rows_) return std::nullopt;
    std::swap(work[col], work[found]);
    Rational inv = 1 / work[col][col];
    for (std::size_t j = 0; j < 2 * cols_; ++j) work[col][j] *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == col || work[r][col] == 0) continue;
      Rational factor = work[r][col];
      for (std::size_t j = 0; j < 2 * cols_; ++j) work[r][j] -= factor * work[col][j];
    }
  }
  ExactMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = work[i][cols_ + j];
  return out;
}

std::optional<RationalVec> ExactMatrix::solve(const RationalVec& b) const {
  if (rows_ != cols_) throw InputError("solve requires a square matrix");
  if (b.size() != rows_) throw InputError("solve with mismatched right-hand side");
  std::vector<RationalVec> work(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    work[i] = row(i);
    work[i].push_back(b[i]);
  }
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t found = rows_;
    for (std::size_t r = col; r < rows_; ++r) {
      if (work[r][col] != 0) {
        found = r;
        break;
      }
    }
    if (found == rows_) return std::nullopt;
    std::swap(work[col], work[found]);
    Rational inv = 1 / work[col][col];
    for (std::size_t j = col; j <= cols_; ++j) work[col][j] *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == col || work[r][col] == 0) continue;
      Rational factor = work[r][col];
      for (std::size_t j = col; j <= cols_; ++j) work[r][j] -= factor * work[col][j];
    }
  }
  RationalVec x(cols_);
  for (std::size_t i = 0; i < cols_; ++i) x[i] = work[i][cols_];
  return x;
}

}  // namespace destab
