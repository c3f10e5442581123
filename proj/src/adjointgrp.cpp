#include "horolib/adjointgrp.hpp"

#include <random>

#include "horolib/error.hpp"

namespace horolib {

GroupElement GroupElement::identity(const AlgebraPtr& alg) { return unchecked(alg, Matrix::identity(alg->dim())); }

GroupElement GroupElement::unchecked(const AlgebraPtr& alg, Matrix m) {
  GroupElement g;
  g.alg_ = alg;
  g.m_ = std::move(m);
  return g;
}

GroupElement GroupElement::from_matrix(const AlgebraPtr& alg, Matrix m, bool check_automorphism) {
  if (static_cast<int>(m.rows()) != alg->dim() || static_cast<int>(m.cols()) != alg->dim())
    throw InvalidInput("group element matrix must be " + std::to_string(alg->dim()) + "x" + std::to_string(alg->dim()));
  if (determinant(m) == 0) throw PreconditionFailed("group element matrix is singular");
  GroupElement g = unchecked(alg, std::move(m));
  if (check_automorphism && !g.is_automorphism())
    throw PreconditionFailed("matrix is not a Lie algebra automorphism of " + alg->name());
  return g;
}

AlgElement GroupElement::apply(const AlgElement& x) const {
  if (x.algebra() != alg_) throw InvalidInput("element and group element belong to different algebras");
  return AlgElement(alg_, m_ * x.coeffs());
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  if (other.alg_ != alg_) throw InvalidInput("group elements belong to different algebras");
  return unchecked(alg_, m_ * other.m_);
}

GroupElement GroupElement::inverse() const {
  auto inv = horolib::inverse(m_);
  if (!inv) throw PreconditionFailed("group element is singular");
  return unchecked(alg_, std::move(*inv));
}

bool GroupElement::is_automorphism() const {
  int dim = alg_->dim();
  std::vector<AlgElement> images;
  for (int k = 0; k < dim; ++k) images.emplace_back(alg_, m_.column(k));
  auto ok = [&](int a, int b) {
    AlgElement lhs(alg_);
    for (const auto& e : alg_->bracket_basis(a, b)) lhs += e.value * images[e.index];
    return lhs == bracket(images[a], images[b]);
  };
  if (dim <= 40) {
    for (int a = 0; a < dim; ++a)
      for (int b = a + 1; b < dim; ++b)
        if (!ok(a, b)) return false;
    return true;
  }
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> pick(0, dim - 1);
  for (int t = 0; t < 300; ++t)
    if (!ok(pick(rng), pick(rng))) return false;
  return true;
}

GroupElement exp_ad(const AlgElement& x) {
  const auto& alg = x.algebra();
  int dim = alg->dim();
  Matrix a = ad_matrix(x);
  Matrix sum = Matrix::identity(dim);
  Matrix power = Matrix::identity(dim);
  Rational factorial = 1;
  for (int k = 1; k <= dim; ++k) {
    power = power * a;
    if (power.is_zero()) return GroupElement::unchecked(alg, std::move(sum));
    factorial *= k;
    sum += (Rational(1) / factorial) * power;
  }
  throw PreconditionFailed("ad X is not nilpotent: (ad X)^" + std::to_string(dim) + " is nonzero");
}

GroupElement torus_element(const AlgElement& h, const Rational& t) {
  const auto& alg = h.algebra();
  if (sgn(t) == 0) throw PreconditionFailed("torus parameter t must be nonzero");
  for (int k = 0; k < alg->dim(); ++k)
    if (!alg->labels()[k].is_cartan && sgn(h[k]) != 0)
      throw PreconditionFailed("torus element needs h in the Cartan subalgebra, found " + alg->labels()[k].name);
  Matrix ad = ad_matrix(h);
  Matrix m(alg->dim(), alg->dim());
  for (int k = 0; k < alg->dim(); ++k) {
    const Rational& ev = ad(k, k);
    if (!is_integer(ev))
      throw PreconditionFailed("alpha(h) = " + to_string(ev) + " is not an integer on " + alg->labels()[k].name);
    m(k, k) = pow(t, ev.get_num().get_si());
  }
  return GroupElement::unchecked(alg, std::move(m));
}

namespace {

GroupElement simple_reflection_rep(const AlgebraPtr& alg, int i) {
  Root a{std::vector<int>(alg->rank(), 0)};
  a.coords[i] = 1;
  auto e = AlgElement::basis(alg, alg->index_of_root(a));
  auto f = AlgElement::basis(alg, alg->index_of_root(-a));
  // Rescale f so that [e, f] is the coroot H_i.
  Rational c = bracket(e, f)[alg->cartan_indices()[i]];
  if (sgn(c) == 0) throw Error("degenerate simple root pair");
  f *= Rational(1) / c;
  GroupElement ee = exp_ad(e);
  return ee * exp_ad(-f) * ee;
}

}  // namespace

GroupElement weyl_representative(const AlgebraPtr& alg, const std::vector<int>& word) {
  std::vector<std::optional<GroupElement>> cache(alg->rank());
  GroupElement g = GroupElement::identity(alg);
  for (int i : word) {
    if (i < 0 || i >= alg->rank()) throw InvalidInput("Weyl word letter out of range");
    if (!cache[i]) cache[i] = simple_reflection_rep(alg, i);
    g = g * *cache[i];
  }
  return g;
}

GroupElement w0_representative(const AlgebraPtr& alg) { return weyl_representative(alg, alg->root_system().w0_word()); }

bool preserves_grading(const GroupElement& g, const GradedDecomposition& dec) {
  const Matrix& m = g.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0 && dec.level_of(static_cast<int>(r)) != dec.level_of(static_cast<int>(c))) return false;
  return true;
}

namespace {

// Element X of the given part with ad X = log_m, or nullopt.
std::optional<AlgElement> nilpotent_log(const AlgebraPtr& alg, const Matrix& unipotent, const GradedDecomposition& dec,
                                        bool negative_part) {
  int dim = alg->dim();
  Matrix n = unipotent - Matrix::identity(dim);
  Matrix log(dim, dim);
  Matrix power = Matrix::identity(dim);
  for (int k = 1;; ++k) {
    power = power * n;
    if (power.is_zero()) break;
    if (k > 2 * dec.depth()) return std::nullopt;
    log += make_rational(k % 2 ? 1 : -1, k) * power;
  }
  // [X, h_theta] = -sum_j j X_j recovers X from its action on h_theta.
  Vector image = log * h_theta_element(alg, dec.theta()).coeffs();
  AlgElement x(alg);
  for (int k = 0; k < dim; ++k) {
    int j = dec.level_of(k);
    if (sgn(image[k]) == 0) continue;
    if (j == 0 || (j < 0) != negative_part) return std::nullopt;
    x[k] = -image[k] / Rational(j);
  }
  if (!(ad_matrix(x) == log)) return std::nullopt;
  return x;
}

}  // namespace

std::optional<CellFactors> opposite_cell_factor(const GroupElement& g, const GradedDecomposition& dec) {
  const auto& alg = g.algebra();
  if (alg != dec.algebra()) throw InvalidInput("group element and grading belong to different algebras");
  int s = dec.depth();
  if (s != 1 && s != 2) throw Unsupported("opposite cell factorization supports depth s in {1,2}, got " + std::to_string(s));

  // Blocks ordered by decreasing level: z = g_s first.
  std::vector<std::vector<int>> blocks;
  for (int j = s; j >= -s; --j)
    if (!dec.piece(j).empty()) blocks.push_back(dec.piece(j));
  int nb = static_cast<int>(blocks.size());
  int dim = alg->dim();
  const Matrix& gm = g.matrix();
  std::vector<std::vector<Matrix>> sch(nb, std::vector<Matrix>(nb));
  for (int a = 0; a < nb; ++a)
    for (int b = 0; b < nb; ++b) sch[a][b] = gm.submatrix(blocks[a], blocks[b]);

  Matrix vm = Matrix::identity(dim), lm(dim, dim), um = Matrix::identity(dim);
  auto place = [](Matrix& target, const std::vector<int>& rows, const std::vector<int>& cols, const Matrix& blk) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) target(rows[i], cols[j]) = blk(i, j);
  };
  for (int k = 0; k < nb; ++k) {
    auto dinv = inverse(sch[k][k]);
    if (!dinv) return std::nullopt;
    place(lm, blocks[k], blocks[k], sch[k][k]);
    std::vector<Matrix> lower(nb), upper(nb);
    for (int i = k + 1; i < nb; ++i) {
      lower[i] = sch[i][k] * *dinv;
      upper[i] = *dinv * sch[k][i];
      place(vm, blocks[i], blocks[k], lower[i]);
      place(um, blocks[k], blocks[i], upper[i]);
    }
    for (int i = k + 1; i < nb; ++i)
      for (int j = k + 1; j < nb; ++j) sch[i][j] -= lower[i] * sch[k][j];
  }
  if (!(vm * lm * um == gm)) throw Error("block LDU reconstruction failed");
  auto log_v = nilpotent_log(alg, vm, dec, true);
  auto log_u = nilpotent_log(alg, um, dec, false);
  if (!log_v || !log_u) throw PreconditionFailed("unipotent factors are not in exp(u^-) and exp(u); input is not in the group");
  return CellFactors{GroupElement::unchecked(alg, std::move(vm)), GroupElement::unchecked(alg, std::move(lm)),
                     GroupElement::unchecked(alg, std::move(um)), *log_v, *log_u};
}

}  // namespace horolib
