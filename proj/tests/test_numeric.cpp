#include <random>

#include "doctest.h"
#include "horolib/error.hpp"
#include "horolib/linalg.hpp"
#include "horolib/rational.hpp"
#include "horolib/unipoly.hpp"

using namespace horolib;

namespace {

// Cofactor expansion, independent of the elimination code.
Rational laplace_det(const Matrix& m) {
  std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(m(0, j)) == 0) continue;
    std::vector<int> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(static_cast<int>(i));
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(static_cast<int>(k));
    Rational minor = laplace_det(m.submatrix(rows, cols));
    d += (j % 2 ? -1 : 1) * m(0, j) * minor;
  }
  return d;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int zero_bias) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 7), z(0, 9);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (z(rng) >= zero_bias) m(i, j) = make_rational(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("rational formatting keeps lowest terms and sign on the numerator") {
  CHECK(to_string(make_rational(4, 6)) == "2/3");
  CHECK(to_string(make_rational(3, -9)) == "-1/3");
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(parse_rational(" -6/4 ") == make_rational(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1/-2"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
  CHECK(pow(make_rational(-2, 3), 3) == make_rational(-8, 27));
  CHECK(pow(make_rational(2, 3), -2) == make_rational(9, 4));
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 6;
    Matrix m = random_matrix(rng, n, n, trial % 3 * 3);
    CHECK(determinant(m) == laplace_det(m));
  }
}

TEST_CASE("product, inverse, solve and kernel are consistent") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + trial % 5;
    Matrix a = random_matrix(rng, n, n, 2);
    Matrix b = random_matrix(rng, n, n, 2);
    // Entrywise oracle for the product.
    Matrix ab = a * b;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
        CHECK(ab(i, j) == s);
      }
    CHECK(determinant(ab) == determinant(a) * determinant(b));
    auto inv = inverse(a);
    CHECK(inv.has_value() == (determinant(a) != 0));
    if (inv) CHECK((a * *inv).is_identity());
    Vector x(n);
    for (auto& e : x) e = make_rational(static_cast<long>(rng() % 5) - 2, 1);
    Vector rhs = a * x;
    auto sol = solve(a, rhs);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == rhs);
  }
  Matrix singular(3, 3);
  singular(0, 0) = 1;
  singular(0, 1) = 2;
  singular(1, 0) = 2;
  singular(1, 1) = 4;
  singular(2, 2) = 1;
  CHECK(rank(singular) == 2);
  auto ker = kernel(singular);
  REQUIRE(ker.size() == 1);
  CHECK(is_zero(singular * ker[0]));
  CHECK_FALSE(inverse(singular).has_value());
  Vector bad{Rational(1), Rational(0), Rational(0)};
  CHECK_FALSE(solve(singular, bad).has_value());
}

TEST_CASE("interpolation recovers polynomials and series roots detect perfect powers") {
  UniPoly p({Rational(3), Rational(-1), make_rational(1, 2), Rational(0), Rational(2)});
  std::vector<Rational> nodes, values;
  for (int k = 0; k < 5; ++k) {
    nodes.push_back(k);
    values.push_back(p(Rational(k)));
  }
  CHECK(interpolate(nodes, values) == p);
  UniPoly q({Rational(1), make_rational(2, 3), Rational(-5)});
  UniPoly root;
  CHECK(is_perfect_power(q.pow(5), 5, &root));
  CHECK(root == q);
  UniPoly bump({Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0),
                Rational(0), Rational(0), Rational(0), Rational(1)});
  CHECK_FALSE(is_perfect_power(q.pow(5) + bump, 5));
  CHECK_FALSE(is_perfect_power(q.pow(4), 3));
}
