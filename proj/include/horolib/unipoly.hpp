#pragma once

#include <span>
#include <vector>

#include "horolib/rational.hpp"

namespace horolib {

// Dense univariate polynomial, coefficient k multiplies t^k.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational operator()(const Rational& t) const;

  UniPoly operator+(const UniPoly& other) const;
  UniPoly operator-(const UniPoly& other) const;
  UniPoly operator*(const UniPoly& other) const;
  UniPoly operator*(const Rational& c) const;
  bool operator==(const UniPoly& other) const = default;

  UniPoly pow(unsigned e) const;
  // Coefficients below t^n.
  UniPoly truncate(int n) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Unique polynomial of degree < nodes.size() through the given points.
UniPoly interpolate(std::span<const Rational> nodes, std::span<const Rational> values);

// First `terms` coefficients of p^(1/n) as a formal power series; p(0) must be 1.
UniPoly nth_root_series(const UniPoly& p, unsigned n, int terms);

// r with r^n == p exactly, if such a polynomial with r(0) = 1 exists.
// p must satisfy p(0) = 1.
bool is_perfect_power(const UniPoly& p, unsigned n, UniPoly* root = nullptr);

}  // namespace horolib
