#pragma once

#include "stabwalls/rational.hpp"

#include <cstddef>
#include <vector>

namespace stabwalls {

/// Small dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rational& k) const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix transpose() const;
  /// Horizontal concatenation [this | o].
  Matrix hcat(const Matrix& o) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  Matrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Columns of `m` forming a basis of its column space (copied as column vectors).
std::vector<std::vector<Rational>> column_space_basis(const Matrix& m);
/// Throws std::domain_error if singular.
Matrix inverse(const Matrix& m);
Rational determinant(const Matrix& m);

}  // namespace stabwalls
