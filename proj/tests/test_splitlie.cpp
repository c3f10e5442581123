#include <random>

#include "doctest.h"
#include "horolib/error.hpp"
#include "horolib/splitlie.hpp"

using namespace horolib;

namespace {

// Gram matrix of the invariant bilinear form, built independently of the library.
Matrix form_matrix(Family f, int n) {
  Matrix j(n, n);
  if (f == Family::sp) {
    int h = n / 2;
    for (int k = 0; k < h; ++k) {
      j(k, h + k) = 1;
      j(h + k, k) = -1;
    }
  } else {
    for (int k = 0; k < n; ++k) j(k, n - 1 - k) = 1;
  }
  return j;
}

bool in_algebra(Family f, const Matrix& x) {
  if (f == Family::sl) return x.trace() == 0;
  Matrix j = form_matrix(f, static_cast<int>(x.rows()));
  return (x.transpose() * j + j * x).is_zero();
}

Matrix dense_commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// Trace-form multiple of the Killing form on each classical family.
Rational trace_form_factor(Family f, int n) {
  switch (f) {
    case Family::sl: return 2 * n;
    case Family::sp: return n + 2;
    default: return n - 2;
  }
}

AlgElement random_element(const AlgebraPtr& alg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 7), keep(0, 2);
  AlgElement x(alg);
  for (int k = 0; k < alg->dim(); ++k)
    if (keep(rng) == 0) x[k] = make_rational(num(rng), den(rng));
  return x;
}

const std::vector<AlgebraDescriptor> kSmall = {
    {Family::sl, 2}, {Family::sl, 3}, {Family::sl, 4}, {Family::sp, 4},
    {Family::sp, 6}, {Family::so_odd, 5}, {Family::so_odd, 7}, {Family::so_even, 8},
};

}  // namespace

TEST_CASE("dimensions and supported sizes") {
  CHECK(build_algebra(Family::sl, 3)->dim() == 8);
  CHECK(build_algebra(Family::sp, 4)->dim() == 10);
  CHECK(build_algebra(Family::so_odd, 7)->dim() == 21);
  CHECK(build_algebra(Family::so_even, 8)->dim() == 28);
  CHECK(build_algebra(Family::sl, 9)->dim() == 80);
  CHECK_THROWS_AS(build_algebra(Family::sl, 10), Unsupported);
  CHECK_THROWS_AS(build_algebra(Family::sp, 5), Unsupported);
  CHECK_THROWS_AS(build_algebra(Family::so_even, 6), Unsupported);
  CHECK(AlgebraDescriptor::parse("so7") == AlgebraDescriptor{Family::so_odd, 7});
  CHECK(AlgebraDescriptor::parse("so_even:8") == AlgebraDescriptor{Family::so_even, 8});
  CHECK_THROWS_AS(AlgebraDescriptor::parse("gl3"), InvalidInput);
}

TEST_CASE("basis matrices lie in the algebra and brackets match matrix commutators") {
  std::mt19937_64 rng(3);
  for (const auto& d : kSmall) {
    CAPTURE(d.short_name());
    auto alg = build_algebra(d);
    for (int k = 0; k < alg->dim(); ++k) CHECK(in_algebra(d.family, alg->defining_matrix(k)));
    for (int t = 0; t < 10; ++t) {
      auto x = random_element(alg, rng);
      auto y = random_element(alg, rng);
      Matrix expect = dense_commutator(to_defining_matrix(x), to_defining_matrix(y));
      CHECK(to_defining_matrix(bracket(x, y)) == expect);
      CHECK(from_defining_matrix(alg, to_defining_matrix(x)) == x);
    }
  }
  auto sl3 = build_algebra(Family::sl, 3);
  Matrix bad(3, 3);
  bad(0, 0) = 1;
  CHECK_THROWS_AS(from_defining_matrix(sl3, bad), InvalidInput);
}

TEST_CASE("Killing form is tr(ad ad) and a multiple of the trace form") {
  std::mt19937_64 rng(5);
  for (const auto& d : kSmall) {
    CAPTURE(d.short_name());
    auto alg = build_algebra(d);
    for (int t = 0; t < 6; ++t) {
      auto x = random_element(alg, rng);
      auto y = random_element(alg, rng);
      Rational b = killing(x, y);
      CHECK(b == (ad_matrix(x) * ad_matrix(y)).trace());
      CHECK(b == trace_form_factor(d.family, d.size) * (to_defining_matrix(x) * to_defining_matrix(y)).trace());
    }
    // Root spaces pair only with their opposites.
    for (int a = 0; a < alg->dim(); ++a)
      for (int b = 0; b < alg->dim(); ++b) {
        const auto& la = alg->labels()[a];
        const auto& lb = alg->labels()[b];
        if (la.is_cartan || lb.is_cartan || (la.root + lb.root).is_zero()) continue;
        CHECK((ad_matrix(AlgElement::basis(alg, a)) * ad_matrix(AlgElement::basis(alg, b))).trace() == 0);
      }
  }
}

TEST_CASE("sl2 triple and Killing normalization") {
  auto sl2 = build_algebra(Family::sl, 2);
  auto e = AlgElement::basis(sl2, *sl2->find_label("E[1,2]"));
  auto f = AlgElement::basis(sl2, *sl2->find_label("E[2,1]"));
  auto h = AlgElement::basis(sl2, *sl2->find_label("H[1]"));
  CHECK(bracket(e, f) == h);
  CHECK(bracket(h, e) == Rational(2) * e);
  CHECK(killing(h, h) == 8);
}

TEST_CASE("root vectors carry the abstract root as weight") {
  for (const auto& d : kSmall) {
    auto alg = build_algebra(d);
    const auto& cartan = alg->root_system().cartan();
    CHECK(alg->realization_consistent());
    for (int k = 0; k < alg->dim(); ++k) {
      const auto& l = alg->labels()[k];
      if (l.is_cartan) continue;
      for (int i = 0; i < alg->rank(); ++i) {
        int expect = 0;
        for (int j = 0; j < alg->rank(); ++j) expect += l.root.coords[j] * cartan(j, i);
        CHECK(alg->root_value(k, i) == expect);
      }
    }
  }
}

TEST_CASE("h_theta examples") {
  auto sl3 = build_algebra(Family::sl, 3);
  Matrix d3(3, 3);
  d3(0, 0) = 1;
  d3(2, 2) = -1;
  CHECK(to_defining_matrix(h_theta_element(sl3, ThetaSet({0, 1}))) == d3);
  auto sl4 = build_algebra(Family::sl, 4);
  Matrix d4(4, 4);
  d4(0, 0) = d4(1, 1) = make_rational(1, 2);
  d4(2, 2) = d4(3, 3) = make_rational(-1, 2);
  CHECK(to_defining_matrix(h_theta_element(sl4, ThetaSet({1}))) == d4);
}

TEST_CASE("graded decomposition dimensions and bracket compatibility") {
  auto sl4 = build_algebra(Family::sl, 4);
  GradedDecomposition d4(sl4, ThetaSet({1}));
  CHECK(d4.depth() == 1);
  CHECK(d4.piece(1).size() == 4);
  auto sl3 = build_algebra(Family::sl, 3);
  GradedDecomposition d3(sl3, ThetaSet({0, 1}));
  std::vector<std::size_t> dims;
  for (int j = -2; j <= 2; ++j) dims.push_back(d3.piece(j).size());
  CHECK(dims == std::vector<std::size_t>{1, 2, 2, 2, 1});
  auto sp6 = build_algebra(Family::sp, 6);
  GradedDecomposition ds(sp6, ThetaSet({0}));
  CHECK(ds.depth() == 2);
  CHECK(ds.piece(2).size() == 1);
  for (const auto* dec : {&d4, &d3, &ds}) {
    const auto& alg = dec->algebra();
    for (int a = 0; a < alg->dim(); ++a)
      for (int b = 0; b < alg->dim(); ++b) {
        auto c = bracket(AlgElement::basis(alg, a), AlgElement::basis(alg, b));
        int lvl = dec->level_of(a) + dec->level_of(b);
        CHECK(dec->in_piece(c, lvl));
      }
  }
}

TEST_CASE("verify_structure passes on standard gradings") {
  std::vector<std::pair<AlgebraDescriptor, ThetaSet>> cases = {
      {{Family::sl, 3}, ThetaSet({0, 1})},     {{Family::sl, 4}, ThetaSet({1})},
      {{Family::sl, 4}, ThetaSet({0, 2})},     {{Family::sl, 5}, ThetaSet({0, 1, 2, 3})},
      {{Family::sp, 6}, ThetaSet({0})},        {{Family::sp, 6}, ThetaSet({2})},
      {{Family::so_odd, 7}, ThetaSet({0})},    {{Family::so_odd, 7}, ThetaSet({1})},
      {{Family::so_even, 8}, ThetaSet({0})},   {{Family::sl, 9}, ThetaSet({4})},
  };
  for (const auto& [d, theta] : cases) {
    CAPTURE(d.short_name());
    CAPTURE(theta.to_string());
    auto report = verify_structure(build_algebra(d), theta);
    for (const auto& c : report.checks()) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("verify_structure detects a corrupted structure constant") {
  AlgebraDescriptor d{Family::sl, 3};
  auto bad = build_algebra_with_faults(d, StructureFault{3, 5, 7, Rational(1)}, std::nullopt);
  auto report = verify_structure(bad, ThetaSet({0, 1}));
  CHECK_FALSE(report.passed());
  auto cartan_bad = build_algebra_with_faults(d, std::nullopt, CartanFault{0, 1, -1});
  CHECK_FALSE(verify_structure(cartan_bad, ThetaSet({0, 1})).passed());
  CHECK_THROWS(build_algebra_with_faults(d, std::nullopt, CartanFault{0, 0, 1}));
}
