#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "horolib/adjointgrp.hpp"
#include "horolib/report.hpp"
#include "horolib/unipoly.hpp"

namespace horolib {

enum class ContextKind { reflexive_commutative, heisenberg };

// Algebra plus a theta that is reflexive commutative (s = 1, iota(theta) = theta)
// or Heisenberg, with the data shared by all invariants.
class InvariantContext {
 public:
  static InvariantContext create(const AlgebraPtr& alg, const ThetaSet& theta);

  ContextKind kind() const { return data_->kind; }
  bool is_commutative() const { return data_->kind == ContextKind::reflexive_commutative; }
  const AlgebraPtr& algebra() const { return data_->dec.algebra(); }
  const ThetaSet& theta() const { return data_->dec.theta(); }
  const GradedDecomposition& decomposition() const { return data_->dec; }
  int depth() const { return data_->dec.depth(); }
  // d = dim z.
  int d() const { return static_cast<int>(data_->dec.z_indices().size()); }
  const GroupElement& w0rep() const { return data_->w0; }
  const AlgElement& h_theta() const { return data_->h; }
  // "sl4{2}".
  std::string name() const;

 private:
  struct Data {
    ContextKind kind;
    GradedDecomposition dec;
    GroupElement w0;
    AlgElement h;
  };
  std::shared_ptr<const Data> data_;
};

// z-block of Ad g.
Matrix M(const InvariantContext& ctx, const GroupElement& g);
Rational phi(const InvariantContext& ctx, const GroupElement& g);
// det_z(Ad l); l must preserve the grading.
Rational chi(const InvariantContext& ctx, const GroupElement& l);
// d chi(h) = tr_z(ad h).
Rational dchi(const InvariantContext& ctx, const AlgElement& h);

// F(X) = Phi(e^X w0), X in u.
Rational F(const InvariantContext& ctx, const AlgElement& x);
// G(X, Y) = Phi(e^X e^Y), X in u, Y in u^-.
Rational G(const InvariantContext& ctx, const AlgElement& x, const AlgElement& y);
// tr_z(pi ad X ad Y pi).
Rational G2(const InvariantContext& ctx, const AlgElement& x, const AlgElement& y);
// Entries G2(e_a, e_b), a over u and b over u^- basis indices.
Matrix G2_gram(const InvariantContext& ctx);

// det_z(1/2 (ad X)^2 w0); equals F on reflexive commutative contexts.
Rational F_quadratic(const InvariantContext& ctx, const AlgElement& x);

struct HeisenbergTerms {
  Rational full;  // F(V + Z) by the three-term expansion
  Rational f2d;   // det_z(1/2 (ad Z)^2 w0)
  Rational f4d;   // det_z(1/24 (ad V)^4 w0)
};
HeisenbergTerms heisenberg_F_terms(const InvariantContext& ctx, const AlgElement& v, const AlgElement& z);

// t -> F(X + tY) as an exact polynomial, by interpolation at deg + 1 nodes.
UniPoly F_along_line(const InvariantContext& ctx, const AlgElement& x, const AlgElement& y);
// t -> G(tX, tY).
UniPoly G_along_scaling(const InvariantContext& ctx, const AlgElement& x, const AlgElement& y);

// dF(X)(e_k) for k over u basis indices.
Vector differential_dF(const InvariantContext& ctx, const AlgElement& x);
// Y in u^- with B(Y, e_k) = covector[k] for k over u basis indices.
AlgElement killing_dual_in_um(const InvariantContext& ctx, const Vector& covector);

struct Sl2Triple {
  AlgElement x, h, y;
};
// x'0 in u found by box search with F(x'0) != 0, y'0 from the differential of F,
// h'0 = [x'0, y'0] = 2 h_theta. Reflexive commutative contexts only.
Sl2Triple sl2_triple_commutative(const InvariantContext& ctx, int box = 2);
// x0 in g2, y0 in g-2, [x0, y0] = h_theta. Heisenberg contexts only.
Sl2Triple sl2_triple_center(const InvariantContext& ctx, int box = 2);

// Levi block of M, bi-semi-invariance of Phi, semi-invariance of F, invariance
// of G and chi under w0 conjugation, on random samples.
Report semiinvariance_check(const InvariantContext& ctx, int samples, std::uint64_t seed);
// g in the opposite cell iff Phi(g) != 0, on a mix of cell products and
// translates by w0 and other Weyl representatives.
Report omega_criterion_check(const InvariantContext& ctx, int samples, std::uint64_t seed);
// Closed forms of F and G for the rows of the reflexive commutative table.
Report table1_closed_form_check(const InvariantContext& ctx, std::uint64_t seed, int points = 20);

}  // namespace horolib
