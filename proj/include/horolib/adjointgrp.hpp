#pragma once

#include <optional>
#include <vector>

#include "horolib/splitlie.hpp"

namespace horolib {

// Element of the adjoint group, stored as its matrix Ad g on the basis of g.
class GroupElement {
 public:
  GroupElement() = default;
  static GroupElement identity(const AlgebraPtr& alg);
  // Rejects singular matrices and, when asked, non-automorphisms.
  static GroupElement from_matrix(const AlgebraPtr& alg, Matrix m, bool check_automorphism = true);
  // No validation; for products of elements already known to be in the group.
  static GroupElement unchecked(const AlgebraPtr& alg, Matrix m);

  const AlgebraPtr& algebra() const { return alg_; }
  const Matrix& matrix() const { return m_; }
  AlgElement apply(const AlgElement& x) const;
  GroupElement operator*(const GroupElement& other) const;
  GroupElement inverse() const;
  // g[X,Y] = [gX,gY] on basis pairs (all pairs when dim <= 40, else 300 random pairs).
  bool is_automorphism() const;
  bool operator==(const GroupElement& other) const { return m_ == other.m_; }

 private:
  AlgebraPtr alg_;
  Matrix m_;
};

// exp(ad X); throws PreconditionFailed if ad X is not nilpotent.
GroupElement exp_ad(const AlgElement& x);
// Acts by t^alpha(h) on g_alpha; h in the Cartan subalgebra with integral alpha(h).
GroupElement torus_element(const AlgElement& h, const Rational& t);
// n_{i1} ... n_{ik} with n_i = exp(e_i) exp(-f_i) exp(e_i).
GroupElement weyl_representative(const AlgebraPtr& alg, const std::vector<int>& word);
GroupElement w0_representative(const AlgebraPtr& alg);

struct CellFactors {
  GroupElement v;  // in exp(u^-)
  GroupElement l;  // preserves every g_j
  GroupElement u;  // in exp(u)
  AlgElement log_v;
  AlgElement log_u;
};

// g = v l u when g lies in the opposite big cell, otherwise nullopt.
// Supported depths: s in {1, 2}.
std::optional<CellFactors> opposite_cell_factor(const GroupElement& g, const GradedDecomposition& dec);

// True when the matrix of g maps every g_j into itself.
bool preserves_grading(const GroupElement& g, const GradedDecomposition& dec);

}  // namespace horolib
