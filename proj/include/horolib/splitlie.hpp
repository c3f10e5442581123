#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "horolib/linalg.hpp"
#include "horolib/report.hpp"
#include "horolib/rootsys.hpp"

namespace horolib {

enum class Family { sl, so_odd, so_even, sp };

// Family plus the size N of the defining matrices.
struct AlgebraDescriptor {
  Family family = Family::sl;
  int size = 0;

  // "sl3", "sp6", "so7", "so8".
  std::string short_name() const;
  std::string family_name() const;
  // Accepts short names ("so7") and "family:size" ("so_odd:7").
  static AlgebraDescriptor parse(const std::string& text);
  bool operator==(const AlgebraDescriptor&) const = default;
};

struct BasisLabel {
  bool is_cartan = false;
  int cartan_index = -1;
  Root root;          // zero for Cartan elements
  std::string name;   // "E[i,j]" (pivot entry, 1-based) or "H[i]"
};

struct SparseEntry {
  int index;
  Rational value;
};
using SparseVector = std::vector<SparseEntry>;

struct MatrixEntry {
  int row;
  int col;
  Rational value;
};

// Test fixtures: perturb one structure constant c_ab^c or one Cartan entry.
struct StructureFault {
  int a = 0, b = 0, c = 0;
  Rational delta = 1;
  // Also apply -delta to c_ba^c, so the table stays antisymmetric.
  bool paired = false;
};
struct CartanFault {
  int i = 0, j = 0;
  int delta = 1;
};

// Split real form in its defining representation, with Chevalley-type basis
// ordered as negative root vectors (highest first), coroots, positive root vectors.
class SplitLieAlgebra {
 public:
  const AlgebraDescriptor& descriptor() const { return desc_; }
  std::string name() const { return desc_.short_name(); }
  Family family() const { return desc_.family; }
  int size() const { return desc_.size; }
  int dim() const { return static_cast<int>(labels_.size()); }
  int rank() const { return rank_; }

  const RootSystem& root_system() const { return rs_; }
  // False when the realized weights are not the roots of root_system().
  bool realization_consistent() const { return consistent_; }
  const std::vector<BasisLabel>& labels() const { return labels_; }
  std::optional<int> find_label(const std::string& name) const;
  // Basis index of the root vector for a (possibly negative) root.
  int index_of_root(const Root& r) const;
  const std::vector<int>& cartan_indices() const { return cartan_idx_; }
  std::vector<int> positive_indices() const;
  std::vector<int> negative_indices() const;

  // Coordinates of [e_a, e_b].
  const SparseVector& bracket_basis(int a, int b) const { return table_[a * dim() + b]; }
  const Matrix& killing_matrix() const { return killing_; }
  // alpha(H_i) for a root basis index.
  int root_value(int root_index, int cartan) const;

  Matrix defining_matrix(int basis_index) const;
  // Throws InvalidInput if m is not in the algebra.
  Vector coordinates(const Matrix& m) const;

 private:
  friend std::shared_ptr<const SplitLieAlgebra> build_algebra_with_faults(
      const AlgebraDescriptor&, const std::optional<StructureFault>&, const std::optional<CartanFault>&);
  Vector coordinates_sparse(const std::map<std::pair<int, int>, Rational>& entries, bool check) const;

  AlgebraDescriptor desc_;
  int rank_ = 0;
  RootSystem rs_;
  bool consistent_ = true;
  std::vector<BasisLabel> labels_;
  std::map<std::string, int> label_index_;
  std::map<Root, int> root_index_;
  std::vector<int> cartan_idx_;
  std::vector<std::vector<MatrixEntry>> mats_;
  std::map<std::pair<int, int>, int> pivot_;  // matrix position -> root basis index
  std::vector<int> cartan_rows_;              // diagonal positions used to solve for coroot coefficients
  Matrix cartan_solver_;
  std::vector<SparseVector> table_;
  Matrix killing_;
};

using AlgebraPtr = std::shared_ptr<const SplitLieAlgebra>;

// Supported: sl N>=2, sp N>=4 even, so_odd N>=5, so_even N>=8; rank <= 8.
AlgebraPtr build_algebra(const AlgebraDescriptor& desc);
AlgebraPtr build_algebra(Family family, int size);
AlgebraPtr build_algebra_with_faults(const AlgebraDescriptor& desc, const std::optional<StructureFault>& sf,
                                     const std::optional<CartanFault>& cf);

class AlgElement {
 public:
  AlgElement() = default;
  explicit AlgElement(AlgebraPtr alg);
  AlgElement(AlgebraPtr alg, Vector coeffs);
  static AlgElement basis(const AlgebraPtr& alg, int k, const Rational& c = 1);

  const AlgebraPtr& algebra() const { return alg_; }
  const Vector& coeffs() const { return c_; }
  Rational& operator[](int k) { return c_[k]; }
  const Rational& operator[](int k) const { return c_[k]; }
  bool is_zero() const { return horolib::is_zero(c_); }

  AlgElement& operator+=(const AlgElement& o);
  AlgElement& operator-=(const AlgElement& o);
  AlgElement& operator*=(const Rational& c);
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator*(const Rational& c, AlgElement a) { return a *= c; }
  AlgElement operator-() const { return Rational(-1) * *this; }
  bool operator==(const AlgElement& o) const { return c_ == o.c_; }

 private:
  AlgebraPtr alg_;
  Vector c_;
};

AlgElement bracket(const AlgElement& x, const AlgElement& y);
Matrix ad_matrix(const AlgElement& x);
Rational killing(const AlgElement& x, const AlgElement& y);
AlgElement h_theta_element(const AlgebraPtr& alg, const ThetaSet& theta);
Matrix to_defining_matrix(const AlgElement& x);
AlgElement from_defining_matrix(const AlgebraPtr& alg, const Matrix& m);

// Pieces g_j of the grading by n_theta, with the projection pi onto z = g_s.
class GradedDecomposition {
 public:
  GradedDecomposition(AlgebraPtr alg, ThetaSet theta);

  const AlgebraPtr& algebra() const { return alg_; }
  const ThetaSet& theta() const { return theta_; }
  int depth() const { return s_; }
  int level_of(int basis_index) const { return level_[basis_index]; }
  const std::vector<int>& levels() const { return level_; }
  const std::vector<int>& piece(int j) const;
  const std::vector<int>& z_indices() const { return piece(s_); }
  const std::vector<int>& u_indices() const { return u_; }
  const std::vector<int>& um_indices() const { return um_; }
  // Basis indices sorted by decreasing level (stable).
  const std::vector<int>& descending_order() const { return desc_order_; }
  Matrix pi() const;

  bool in_piece(const AlgElement& x, int j) const;
  bool in_u(const AlgElement& x) const;
  bool in_um(const AlgElement& x) const;
  AlgElement component(const AlgElement& x, int j) const;

 private:
  AlgebraPtr alg_;
  ThetaSet theta_;
  int s_ = 0;
  std::vector<int> level_;
  std::map<int, std::vector<int>> pieces_;
  std::vector<int> u_, um_, desc_order_;
};

GradedDecomposition graded_decomposition(const AlgebraPtr& alg, const ThetaSet& theta);

// Lie axioms and grading, then the four structural properties of u_theta:
// (a) [g1,gj] = g(j+1), (b) s-step nilpotent, (c) center = g_s,
// (d) g' = g_{-s} + [g_{-s},g_s] + g_s closed and simple.
Report verify_structure(const AlgebraPtr& alg, const ThetaSet& theta, unsigned long seed = 42);

}  // namespace horolib
