#pragma once

#include "ncinv/linalg/scalar.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ncinv {

// Dense row-major rational matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  // All rows must have equal length; throws DimensionMismatch otherwise.
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Scalar> entries() const { return data_; }
  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  Matrix transpose() const;
  Scalar trace() const;
  // M·v for a column vector v.
  Vector apply(const Vector& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  // Strict weak order on (shape, entries); used to deduplicate group elements.
  friend bool operator<(const Matrix& a, const Matrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

// Reduced row-echelon form; zero rows are moved to the bottom.
RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);
bool is_invertible(const Matrix& m);
Matrix inverse(const Matrix& m);

// Basis of {x : m·x = 0}, one vector per free column, in column order.
std::vector<Vector> kernel(const Matrix& m);

}  // namespace ncinv
