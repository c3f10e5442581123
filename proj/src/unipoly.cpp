#include "horolib/unipoly.hpp"

#include <algorithm>

#include "horolib/error.hpp"

namespace horolib {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
  return v;
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
  std::vector<Rational> c(std::max(c_.size(), other.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(static_cast<int>(k)) + other.coeff(static_cast<int>(k));
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& other) const { return *this + other * Rational(-1); }

UniPoly UniPoly::operator*(const UniPoly& other) const {
  if (c_.empty() || other.c_.empty()) return {};
  std::vector<Rational> c(c_.size() + other.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < other.c_.size(); ++j) c[i + j] += c_[i] * other.c_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rational& a) const {
  std::vector<Rational> c = c_;
  for (auto& x : c) x *= a;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result({Rational(1)});
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

UniPoly UniPoly::truncate(int n) const {
  std::vector<Rational> c(c_.begin(), c_.begin() + std::min<long>(n, static_cast<long>(c_.size())));
  return UniPoly(std::move(c));
}

UniPoly interpolate(std::span<const Rational> nodes, std::span<const Rational> values) {
  if (nodes.size() != values.size() || nodes.empty()) throw InvalidInput("interpolation needs matching non-empty data");
  std::size_t n = nodes.size();
  // Newton divided differences.
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      Rational gap = nodes[i] - nodes[i - k];
      if (sgn(gap) == 0) throw InvalidInput("interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  UniPoly p({dd[n - 1]});
  for (std::size_t i = n - 1; i-- > 0;) {
    p = p * UniPoly({-nodes[i], Rational(1)}) + UniPoly({dd[i]});
  }
  return p;
}

UniPoly nth_root_series(const UniPoly& p, unsigned n, int terms) {
  if (n == 0) throw InvalidInput("zeroth root");
  if (p.coeff(0) != 1) throw PreconditionFailed("series root needs constant term 1");
  // From n p r' = p' r: r_m = sum_{k=1..m} (k - n(m-k)) p_k r_{m-k} / (n m).
  std::vector<Rational> r(std::max(terms, 1));
  r[0] = 1;
  for (int m = 1; m < terms; ++m) {
    Rational s = 0;
    for (int k = 1; k <= m; ++k) {
      Rational pk = p.coeff(k);
      if (sgn(pk) == 0) continue;
      s += Rational(k - static_cast<long>(n) * (m - k)) * pk * r[m - k];
    }
    r[m] = s / Rational(static_cast<long>(n) * m);
  }
  return UniPoly(std::move(r));
}

bool is_perfect_power(const UniPoly& p, unsigned n, UniPoly* root) {
  if (p.coeff(0) != 1) throw PreconditionFailed("perfect power test needs constant term 1");
  int deg = p.degree();
  if (deg % static_cast<int>(n) != 0) return false;
  UniPoly r = nth_root_series(p, n, deg / static_cast<int>(n) + 1);
  if (!(r.pow(n) == p)) return false;
  if (root) *root = r;
  return true;
}

}  // namespace horolib
