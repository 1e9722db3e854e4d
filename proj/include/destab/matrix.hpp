#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "destab/rational.hpp"

namespace destab {

// Dense matrix over exact rationals.  Small sizes only (frames, Gram systems,
// interpolation); all algorithms are fraction-exact Gauss eliminations.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<RationalVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVec row(std::size_t i) const;

  ExactMatrix operator*(const ExactMatrix& rhs) const;
  RationalVec apply(const RationalVec& v) const;  // matrix * column vector
  ExactMatrix transposed() const;

  bool operator==(const ExactMatrix& rhs) const = default;

  // Unique reduced row echelon form: pivots are 1, pivot columns are cleared,
  // zero rows are dropped.  Optionally reports the rank.
  ExactMatrix reduced_echelon(std::size_t* rank = nullptr) const;

  std::size_t rank() const;

  // Square matrices only.
  Rational determinant() const;
  std::optional<ExactMatrix> inverse() const;  // nullopt when singular

  // Solves A x = b for square A; nullopt when A is singular.
  std::optional<RationalVec> solve(const RationalVec& rhs) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace destab
