#include <cmath>

#include "doctest.h"
#include "horolib/error.hpp"
#include "horolib/lab.hpp"

using namespace horolib;

namespace {

InvariantContext ctx_of(const std::string& desc, std::vector<int> theta) {
  return InvariantContext::create(build_algebra(AlgebraDescriptor::parse(desc)), ThetaSet::from_one_based(theta));
}

Matrix upper_block(const AlgElement& x, int n) {
  Matrix m = to_defining_matrix(x), b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = m(i, n + j);
  return b;
}

}  // namespace

TEST_CASE("lattice enumeration") {
  auto ctx = ctx_of("sl4", {2});
  LatticeSample l = integer_lattice(ctx.decomposition(), 0);
  auto pts = enumerate_lattice(l);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].is_zero());

  LatticeSample two;
  const auto& u = ctx.decomposition().u_indices();
  two.basis = {AlgElement::basis(ctx.algebra(), u[0]), AlgElement::basis(ctx.algebra(), u[1])};
  two.height_bound = 1;
  CHECK(enumerate_lattice(two).size() == 9);
  for (int b = 0; b <= 2; ++b) {
    LatticeSample full = integer_lattice(ctx.decomposition(), b);
    CHECK(enumerate_lattice(full).size() == static_cast<std::size_t>(std::pow(2 * b + 1, 4)));
  }
}

TEST_CASE("lattice validation") {
  auto ctx = ctx_of("sl3", {1, 2});
  LatticeSample full = integer_lattice(ctx.decomposition(), 1);
  CHECK(full.lie_lattice);
  const auto& g1 = ctx.decomposition().piece(1);
  LatticeSample partial;
  partial.basis = {AlgElement::basis(ctx.algebra(), g1[0]), AlgElement::basis(ctx.algebra(), g1[1])};
  partial.lie_lattice = true;
  CHECK_THROWS_AS(partial.validate(), InvalidInput);
  partial.lie_lattice = false;
  CHECK_NOTHROW(partial.validate());
  LatticeSample dependent;
  dependent.basis = {partial.basis[0], Rational(2) * partial.basis[0]};
  CHECK_THROWS_AS(dependent.validate(), InvalidInput);
}

TEST_CASE("value set discreteness") {
  auto c = value_set_discreteness({make_rational(2, 3), make_rational(2, 3)});
  CHECK_FALSE(c.min_gap);
  CHECK(c.common_denominator == 3);
  CHECK(c.generator == make_rational(2, 3));

  auto r = value_set_discreteness({make_rational(1, 2), make_rational(3, 4), Rational(-1)});
  REQUIRE(r.min_gap);
  CHECK(*r.min_gap == make_rational(1, 4));
  CHECK(r.common_denominator == 4);
  CHECK(r.generator == make_rational(1, 4));
  CHECK(r.within_cap);
  CHECK_FALSE(value_set_discreteness({make_rational(1, 1000003)}, 1000000).within_cap);
}

TEST_CASE("F on the integer block lattice of sl4") {
  auto ctx = ctx_of("sl4", {2});
  LatticeSample l = integer_lattice(ctx.decomposition(), 2);
  auto pts = enumerate_lattice(l);
  auto values = F_on_lattice(ctx, l);
  REQUIRE(values.size() == pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) CHECK(values[k] == pow(determinant(upper_block(pts[k], 2)), 4));
  auto rep = value_set_discreteness(values);
  CHECK(rep.common_denominator == 1);
  CHECK(rep.within_cap);
}

TEST_CASE("Phi over words in unit generators") {
  auto ctx = ctx_of("sl3", {1, 2});
  GroupSampler none = unit_generators(ctx.decomposition(), 0, 42);
  for (const auto& v : phi_gamma_sampler(ctx, none, 5)) CHECK(v == 1);
  GroupSampler s = unit_generators(ctx.decomposition(), 6, 42);
  for (const auto& g : s.generators)
    for (std::size_t i = 0; i < g.matrix().rows(); ++i)
      for (std::size_t j = 0; j < g.matrix().cols(); ++j) CHECK(is_integer(g.matrix()(i, j)));
  auto values = phi_gamma_sampler(ctx, s, 60);
  for (const auto& v : values) CHECK(is_integer(v));
  CHECK(value_set_discreteness(values).common_denominator == 1);
}

TEST_CASE("orbit probe") {
  auto ctx = ctx_of("sl4", {2});
  LatticeSample l = integer_lattice(ctx.decomposition(), 2);
  std::vector<Rational> ts = {1, make_rational(1, 2), make_rational(1, 4), make_rational(1, 8), 3};
  auto pts = orbit_probe(ctx, l, ctx.h_theta(), ts, 2);
  REQUIRE(pts.size() == ts.size());
  CHECK(pts[0].covolume == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(pts[0].shortest == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(pts[0].certified);
  for (const auto& p : pts) CHECK(p.normalized_covolume == doctest::Approx(1.0).epsilon(1e-9));
  // Ad a scales u by t, so vectors shrink as t -> 0.
  CHECK(pts[3].shortest == doctest::Approx(1.0 / 8).epsilon(1e-9));
  CHECK(pts[3].shortest < pts[2].shortest);
  CHECK(pts[2].shortest < pts[1].shortest);
  CHECK(pts[4].covolume == doctest::Approx(81.0).epsilon(1e-9));
}

TEST_CASE("lab config runner") {
  nlohmann::json cfg = {{"algebra", "sl3"}, {"theta", {1, 2}}, {"height", 1}, {"words", 10}, {"seed", 7},
                        {"orbit", {{"t", {"1/1", "1/2"}}, {"bound", 1}}}};
  auto out = run_lab(cfg);
  CHECK(out["seed"] == 7);
  CHECK(out["F_on_lattice"]["count"] == 27);
  CHECK(out["phi_on_words"]["count"] == 10);
  CHECK(out["orbit"].size() == 2);
  CHECK(run_lab(cfg) == out);
  cfg["lattice"] = "other";
  CHECK_THROWS_AS(run_lab(cfg), InvalidInput);
}
