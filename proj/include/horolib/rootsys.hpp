#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace horolib {

// Cartan matrix with A(i, j) = <alpha_i, alpha_j^vee>.
class CartanMatrix {
 public:
  CartanMatrix() = default;

  // Validates: 2 on the diagonal, non-positive off-diagonal, A_ij = 0 iff A_ji = 0.
  static CartanMatrix from_rows(const std::vector<std::vector<int>>& rows);
  // Bourbaki numbering; type in A..G.
  static CartanMatrix of_type(char type, int rank);
  static CartanMatrix direct_sum(const CartanMatrix& a, const CartanMatrix& b);

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return a_[i * rank_ + j]; }
  CartanMatrix restrict_to(const std::vector<int>& nodes) const;
  std::vector<std::vector<int>> rows() const;

  bool operator==(const CartanMatrix&) const = default;

 private:
  int rank_ = 0;
  std::vector<int> a_;
};

// Root in simple-root coordinates.
struct Root {
  std::vector<int> coords;

  int height() const;
  bool is_positive() const;
  bool is_zero() const;
  Root operator-() const;
  Root operator+(const Root& other) const;
  Root operator-(const Root& other) const;
  auto operator<=>(const Root&) const = default;
};

// Subset of simple roots, stored as sorted 0-based indices.
class ThetaSet {
 public:
  ThetaSet() = default;
  explicit ThetaSet(std::vector<int> indices);
  static ThetaSet from_one_based(const std::vector<int>& indices);

  bool contains(int i) const;
  bool empty() const { return idx_.empty(); }
  std::size_t size() const { return idx_.size(); }
  const std::vector<int>& indices() const { return idx_; }
  std::vector<int> one_based() const;
  std::string to_string() const;  // "{1,3}"

  bool operator==(const ThetaSet&) const = default;
  auto operator<=>(const ThetaSet&) const = default;

 private:
  std::vector<int> idx_;
};

struct Component {
  std::vector<int> nodes;  // ascending
  char type = '?';
  int rank = 0;
  std::string label() const;  // e.g. "C3"
};

class RootSystem {
 public:
  const CartanMatrix& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank(); }
  const std::vector<Component>& components() const { return components_; }
  int component_of(int node) const;
  bool is_irreducible() const { return components_.size() == 1; }
  std::string type_label() const;  // components joined by 'x'

  // Ordered by height, then by coordinates in decreasing lexicographic order.
  const std::vector<Root>& positive_roots() const { return positive_; }
  std::optional<int> positive_index(const Root& r) const;
  bool is_root(const Root& r) const;
  Root simple_root(int i) const;
  Root reflect(int i, const Root& r) const;

  const std::vector<int>& w0_word() const { return w0_word_; }
  const std::vector<int>& iota() const { return iota_; }

 private:
  friend RootSystem generate_roots(const CartanMatrix& cartan);
  CartanMatrix cartan_;
  std::vector<Component> components_;
  std::vector<int> node_component_;
  std::vector<Root> positive_;
  std::map<Root, int> index_;
  std::vector<int> w0_word_;
  std::vector<int> iota_;
};

// Closure of the simple roots under simple reflections; throws NotFiniteType
// once more than 10000 roots appear.
RootSystem generate_roots(const CartanMatrix& cartan);
RootSystem root_system(char type, int rank);

Root highest_root(const RootSystem& rs, int component);
// Irreducible systems only.
Root highest_root(const RootSystem& rs);

int n_theta(const ThetaSet& theta, const Root& r);

struct LongestElement {
  std::vector<int> word;  // 0-based simple reflections
  std::vector<int> iota;  // -w0 on simple roots
};
LongestElement longest_element(const RootSystem& rs);

class ThetaGrading {
 public:
  ThetaGrading(const RootSystem& rs, ThetaSet theta);
  const ThetaSet& theta() const { return theta_; }
  int depth() const { return s_; }
  int level(const Root& r) const { return n_theta(theta_, r); }
  // Positive roots of the given level (level >= 1).
  const std::vector<Root>& roots_at(int level) const;

 private:
  ThetaSet theta_;
  int s_ = 0;
  std::vector<std::vector<Root>> by_level_;
};

ThetaGrading grading(const RootSystem& rs, const ThetaSet& theta);

bool is_reflexive(const RootSystem& rs, const ThetaSet& theta);
bool is_reflexive_commutative(const RootSystem& rs, const ThetaSet& theta);
bool is_heisenberg(const RootSystem& rs, const ThetaSet& theta);
ThetaSet heisenberg_theta(const RootSystem& rs, int component);
int check_heisenberg_sum(const RootSystem& rs, const ThetaSet& theta);
std::vector<ThetaSet> classify_reflexive_commutative(const RootSystem& rs);
ThetaSet reduction_step_theta(const RootSystem& rs, const ThetaSet& theta);
ThetaSet theta_zero_reduction(const RootSystem& rs, const ThetaSet& theta);

// { alpha_i : highest root minus alpha_i is a root } for one component.
ThetaSet theta_zero(const RootSystem& rs, int component);

nlohmann::json to_json(const RootSystem& rs);

}  // namespace horolib
