#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "horolib/rational.hpp"

namespace horolib {

using Vector = std::vector<Rational>;

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator*(const Matrix& other) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator-() const;
  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& c);
  friend Matrix operator*(const Rational& c, Matrix m) { return m *= c; }

  bool operator==(const Matrix& other) const = default;

  Matrix transpose() const;
  Matrix submatrix(std::span<const int> rows, std::span<const int> cols) const;
  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  Rational trace() const;
  bool is_zero() const;
  bool is_identity() const;

  // Least common multiple of all entry denominators.
  Integer common_denominator() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

// Bareiss elimination on the row-scaled integer matrix.
Rational determinant(const Matrix& m);

std::size_t rank(const Matrix& m);
std::size_t span_rank(const std::vector<Vector>& vectors);

std::optional<Matrix> inverse(const Matrix& m);

// Some solution of a x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

// Basis of { x : a x = 0 }.
std::vector<Vector> kernel(const Matrix& a);

// Rows of the reduced row echelon form, zero rows dropped.
Matrix row_echelon(const Matrix& m);

// Incrementally built subspace of Q^n with membership tests.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : n_(ambient) {}
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  // True when v enlarged the subspace.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  const std::vector<Vector>& basis() const { return rows_; }

 private:
  Vector reduce(Vector v) const;
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace horolib
