#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qhlin/rational.hpp"

namespace qhlin {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix column(std::size_t c) const;
  std::vector<Rational> flatten() const { return a_; }

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  friend bool operator==(const Matrix& x, const Matrix& y) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows);

namespace linalg {

// Rank by Bareiss fraction-free elimination on the row-scaled integer matrix.
std::size_t rank(const Matrix& m);

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
Echelon rref(Matrix m);

// Columns form a basis of { x : m x = 0 }.
Matrix nullspace(const Matrix& m);

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);

// Columns of the result span the column space of m and are independent.
Matrix column_basis(const Matrix& m);

}  // namespace linalg
}  // namespace qhlin
