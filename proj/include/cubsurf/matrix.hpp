#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cubsurf/rational.hpp"

namespace cubsurf {

class UniPoly;

// Dense row-major matrix of rationals. All elimination is fraction-free:
// rows are scaled to integers and reduced with Bareiss steps, pivoting on the
// first nonzero entry of the current column (row-major scan).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<Rational>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Rational>& entries() const { return data_; }

  Matrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend std::vector<Rational> operator*(const Matrix& a, const std::vector<Rational>& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

Rational det(const Matrix& m);
std::size_t rank(const Matrix& m);
// Monic characteristic polynomial det(T*I - m).
UniPoly charpoly(const Matrix& m);

// One exact solution of m*x = rhs, free variables set to zero; nullopt when
// the system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(const Matrix& m, const std::vector<Rational>& rhs);

// Basis of {x : m*x = 0}, one vector per free column (free entry 1).
std::vector<std::vector<Rational>> kernel(const Matrix& m);

Matrix inverse(const Matrix& m);

// Columns of the fraction-free row echelon form that carry pivots.
std::vector<std::size_t> pivot_columns(const Matrix& m);

}  // namespace cubsurf
