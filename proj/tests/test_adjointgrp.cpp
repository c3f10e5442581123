#include "doctest.h"
#include "horolib/adjointgrp.hpp"
#include "horolib/error.hpp"
#include "horolib/invariants.hpp"
#include "horolib/sampling.hpp"

using namespace horolib;

namespace {

// Naive exponential of a nilpotent matrix, independent of exp_ad.
Matrix series_exp(const Matrix& a) {
  std::size_t n = a.rows();
  Matrix out = Matrix::identity(n), term = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = term * a;
    term = make_rational(1, static_cast<long>(k)) * term;
    out = out + term;
  }
  return out;
}

}  // namespace

TEST_CASE("exp_ad basics") {
  auto sl2 = build_algebra(Family::sl, 2);
  CHECK(exp_ad(AlgElement(sl2)).matrix().is_identity());
  int e = sl2->positive_indices()[0];
  Matrix a = ad_matrix(AlgElement::basis(sl2, e));
  CHECK((a * a * a).is_zero());
  CHECK(exp_ad(AlgElement::basis(sl2, e)).matrix() == Matrix::identity(3) + a + make_rational(1, 2) * (a * a));
  CHECK(exp_ad(AlgElement::basis(sl2, e)).matrix() == series_exp(a));

  int h = sl2->cartan_indices()[0];
  CHECK_THROWS_AS(exp_ad(AlgElement::basis(sl2, h)), PreconditionFailed);
}

TEST_CASE("exp_ad inverse and homomorphism on commuting elements") {
  auto alg = build_algebra(Family::sl, 4);
  GradedDecomposition dec(alg, ThetaSet::from_one_based({2}));
  Sampler smp(7);
  for (int k = 0; k < 20; ++k) {
    AlgElement x = smp.in_u(dec);
    CHECK((exp_ad(x) * exp_ad(Rational(-1) * x)).matrix().is_identity());
    AlgElement xp = smp.in_u(dec);
    REQUIRE(bracket(x, xp) == AlgElement(alg));
    CHECK(exp_ad(x + xp) == exp_ad(x) * exp_ad(xp));
    CHECK(exp_ad(x).is_automorphism());
  }
}

TEST_CASE("torus elements") {
  auto alg = build_algebra(Family::sl, 3);
  auto theta = ThetaSet::from_one_based({1, 2});
  GradedDecomposition dec(alg, theta);
  AlgElement h = h_theta_element(alg, theta);
  CHECK(torus_element(h, 1).matrix().is_identity());
  GroupElement t = torus_element(h, 2);
  for (int k = 0; k < alg->dim(); ++k) {
    int j = dec.level_of(k);
    CHECK(t.matrix()(k, k) == pow(Rational(2), j));
  }
  CHECK(t.is_automorphism());
  AlgElement half = make_rational(1, 2) * AlgElement::basis(alg, alg->cartan_indices()[0]);
  CHECK_THROWS_AS(torus_element(half, 2), PreconditionFailed);
}

TEST_CASE("Weyl representatives permute root spaces") {
  auto sl2 = build_algebra(Family::sl, 2);
  CHECK(weyl_representative(sl2, {}).matrix().is_identity());
  GroupElement n = weyl_representative(sl2, {0});
  int e = sl2->positive_indices()[0], f = sl2->negative_indices()[0], h = sl2->cartan_indices()[0];
  // n e = -f, n f = -e, n h = -h with e, f, h a standard triple.
  CHECK(sgn(n.matrix()(f, e)) != 0);
  CHECK(sgn(n.matrix()(e, f)) != 0);
  CHECK(n.matrix()(h, h) == -1);

  for (auto desc : {"sl3", "sp6", "so7", "so8"}) {
    auto alg = build_algebra(AlgebraDescriptor::parse(desc));
    const auto& rs = alg->root_system();
    GroupElement w = w0_representative(alg);
    CHECK(w.is_automorphism());
    auto word = rs.w0_word();
    for (int k = 0; k < alg->dim(); ++k) {
      if (alg->labels()[k].is_cartan) continue;
      Root image = alg->labels()[k].root;
      for (auto it = word.rbegin(); it != word.rend(); ++it) image = rs.reflect(*it, image);
      int target = alg->index_of_root(image);
      for (int m = 0; m < alg->dim(); ++m) CHECK((sgn(w.matrix()(m, k)) != 0) == (m == target));
    }
    Matrix sq = (w * w).matrix();
    for (int k = 0; k < alg->dim(); ++k)
      if (!alg->labels()[k].is_cartan) {
        CHECK((sq(k, k) == 1 || sq(k, k) == -1));
      }
  }
}

TEST_CASE("w0 conjugation reverses the grading") {
  auto alg = build_algebra(Family::sl, 4);
  GradedDecomposition dec(alg, ThetaSet::from_one_based({2}));
  GroupElement w = w0_representative(alg);
  for (int k = 0; k < alg->dim(); ++k)
    for (int m = 0; m < alg->dim(); ++m)
      if (sgn(w.matrix()(m, k)) != 0) CHECK(dec.level_of(m) == -dec.level_of(k));
}

TEST_CASE("opposite cell factorization") {
  for (auto [desc, th] : std::vector<std::pair<std::string, std::vector<int>>>{
           {"sl4", {2}}, {"sl3", {1, 2}}, {"sp6", {1}}, {"so7", {1}}}) {
    auto alg = build_algebra(AlgebraDescriptor::parse(desc));
    GradedDecomposition dec(alg, ThetaSet::from_one_based(th));
    auto id = opposite_cell_factor(GroupElement::identity(alg), dec);
    REQUIRE(id);
    CHECK(id->v.matrix().is_identity());
    CHECK(id->l.matrix().is_identity());
    CHECK(id->u.matrix().is_identity());
    CHECK_FALSE(opposite_cell_factor(w0_representative(alg), dec));

    Sampler smp(3);
    for (int k = 0; k < 5; ++k) {
      AlgElement y = smp.in_um(dec), x = smp.in_u(dec);
      GroupElement l = smp.levi(dec);
      auto f = opposite_cell_factor(exp_ad(y) * l * exp_ad(x), dec);
      REQUIRE(f);
      CHECK(f->log_v == y);
      CHECK(f->log_u == x);
      CHECK(f->l == l);
      CHECK(preserves_grading(f->l, dec));
    }
  }
  auto sl5 = build_algebra(Family::sl, 5);
  GradedDecomposition deep(sl5, ThetaSet::from_one_based({1, 2, 3, 4}));
  CHECK_THROWS_AS(opposite_cell_factor(GroupElement::identity(sl5), deep), Unsupported);
}

TEST_CASE("group elements from matrices") {
  auto alg = build_algebra(Family::sl, 3);
  Matrix m = Matrix::identity(alg->dim());
  m(0, 1) = 1;
  CHECK_THROWS_AS(GroupElement::from_matrix(alg, m), PreconditionFailed);
  CHECK_THROWS_AS(GroupElement::from_matrix(alg, Matrix(alg->dim(), alg->dim())), PreconditionFailed);
  CHECK_THROWS_AS(GroupElement::from_matrix(alg, Matrix::identity(3)), InvalidInput);
  GroupElement w = w0_representative(alg);
  CHECK((w * w.inverse()).matrix().is_identity());
}
