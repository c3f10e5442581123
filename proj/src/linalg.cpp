#include "horolib/linalg.hpp"

#include <utility>

#include "horolib/error.hpp"

namespace horolib {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Integer Matrix::common_denominator() const {
  Integer d = 1;
  for (const auto& x : data_)
    if (x.get_den() != 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  return d;
}

namespace {

std::vector<Integer> scaled_integers(const std::vector<Rational>& data, const Integer& d) {
  std::vector<Integer> out(data.size());
  Integer f;
  for (std::size_t k = 0; k < data.size(); ++k) {
    if (sgn(data[k]) == 0) continue;
    mpz_divexact(f.get_mpz_t(), d.get_mpz_t(), data[k].get_den_mpz_t());
    out[k] = data[k].get_num() * f;
  }
  return out;
}

}  // namespace

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw InvalidInput("matrix product dimension mismatch");
  Integer da = common_denominator();
  Integer db = other.common_denominator();
  auto a = scaled_integers(data_, da);
  auto b = scaled_integers(other.data_, db);
  std::size_t m = other.cols_;
  std::vector<Integer> c(rows_ * m);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t l = 0; l < cols_; ++l) {
      const Integer& x = a[i * cols_ + l];
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        const Integer& y = b[l * m + j];
        if (sgn(y) == 0) continue;
        mpz_addmul(c[i * m + j].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      }
    }
  }
  Integer den = da * db;
  Matrix out(rows_, m);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    out.data_[k] = Rational(c[k], den);
    out.data_[k].canonicalize();
  }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw InvalidInput("matrix-vector dimension mismatch");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(data_[i * cols_ + j]) != 0 && sgn(v[j]) != 0) out[i] += data_[i * cols_ + j] * v[j];
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvalidInput("matrix sum dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (sgn(other.data_[k]) != 0) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InvalidInput("matrix difference dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (sgn(other.data_[k]) != 0) data_[k] -= other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
  for (auto& x : data_)
    if (sgn(x) != 0) x *= c;
  return *this;
}

Matrix Matrix::operator+(const Matrix& other) const {
  Matrix m = *this;
  return m += other;
}

Matrix Matrix::operator-(const Matrix& other) const {
  Matrix m = *this;
  return m -= other;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::submatrix(std::span<const int> rows, std::span<const int> cols) const {
  Matrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
}

Rational Matrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InvalidInput("dot product dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  // Scale each row to integers, then fraction-free elimination.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer d = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j).get_den() != 1) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(m(i, j)) == 0) continue;
      Integer f;
      mpz_divexact(f.get_mpz_t(), d.get_mpz_t(), m(i, j).get_den_mpz_t());
      a[i][j] = m(i, j).get_num() * f;
    }
    scale *= Rational(d);
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a[p][k]) == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational det(a[n - 1][n - 1] * sign);
  return det / scale;
}

namespace {

// In-place Gauss-Jordan; returns pivot columns.
std::vector<std::size_t> reduce(Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j)
      if (sgn(a(r, j)) != 0) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (sgn(a(r, j)) != 0) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix row_echelon(const Matrix& m) {
  Matrix a = m;
  auto pivots = reduce(a);
  std::vector<int> rows(pivots.size()), cols(a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = static_cast<int>(i);
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = static_cast<int>(j);
  return a.submatrix(rows, cols);
}

std::size_t rank(const Matrix& m) {
  Matrix a = m;
  return reduce(a).size();
}

std::size_t span_rank(const std::vector<Vector>& vectors) {
  if (vectors.empty()) return 0;
  Matrix a(vectors.size(), vectors[0].size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors[i].size(); ++j) a(i, j) = vectors[i][j];
  return rank(a);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("inverse of a non-square matrix");
  std::size_t n = m.rows();
  Matrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  auto pivots = reduce(a);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
  return inv;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw InvalidInput("solve dimension mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = reduce(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

std::vector<Vector> kernel(const Matrix& m) {
  Matrix a = m;
  auto pivots = reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector Subspace::reduce(Vector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (sgn(v[pivots_[r]]) == 0) continue;
    Rational f = v[pivots_[r]];
    for (std::size_t k = 0; k < n_; ++k)
      if (sgn(rows_[r][k]) != 0) v[k] -= f * rows_[r][k];
  }
  return v;
}

bool Subspace::add(const Vector& v) {
  if (v.size() != n_) throw InvalidInput("subspace dimension mismatch");
  Vector w = reduce(v);
  std::size_t p = 0;
  while (p < n_ && sgn(w[p]) == 0) ++p;
  if (p == n_) return false;
  Rational inv = 1 / w[p];
  for (auto& x : w)
    if (sgn(x) != 0) x *= inv;
  rows_.push_back(std::move(w));
  pivots_.push_back(p);
  return true;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != n_) throw InvalidInput("subspace dimension mismatch");
  return is_zero(reduce(v));
}

}  // namespace horolib
