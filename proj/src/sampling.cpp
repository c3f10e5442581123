#include "horolib/sampling.hpp"

namespace horolib {

int Sampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rational Sampler::rational(int bound) { return make_rational(integer(-bound, bound), integer(1, bound)); }

Rational Sampler::nonzero_rational(int bound) {
  Rational q = 0;
  while (sgn(q) == 0) q = rational(bound);
  return q;
}

AlgElement Sampler::combination(const AlgebraPtr& alg, const std::vector<int>& indices, int bound) {
  AlgElement x(alg);
  for (int k : indices) x[k] = rational(bound);
  return x;
}

GroupElement Sampler::levi(const GradedDecomposition& dec, int factors) {
  const auto& alg = dec.algebra();
  std::vector<int> level0_roots;
  for (int k : dec.piece(0))
    if (!alg->labels()[k].is_cartan) level0_roots.push_back(k);
  std::vector<int> free_nodes;
  for (int i = 0; i < alg->rank(); ++i)
    if (!dec.theta().contains(i)) free_nodes.push_back(i);
  GroupElement g = GroupElement::identity(alg);
  for (int f = 0; f < factors; ++f) {
    int kind = integer(0, 2);
    if (kind == 1 && level0_roots.empty()) kind = 0;
    if (kind == 2 && free_nodes.empty()) kind = 0;
    if (kind == 0) {
      int i = integer(0, alg->rank() - 1);
      g = g * torus_element(AlgElement::basis(alg, alg->cartan_indices()[i]), nonzero_rational(3));
    } else if (kind == 1) {
      int k = level0_roots[integer(0, static_cast<int>(level0_roots.size()) - 1)];
      g = g * exp_ad(AlgElement::basis(alg, k, rational()));
    } else {
      int i = free_nodes[integer(0, static_cast<int>(free_nodes.size()) - 1)];
      g = g * weyl_representative(alg, {i});
    }
  }
  return g;
}

GroupElement Sampler::group_word(const AlgebraPtr& alg, int length) {
  GroupElement g = GroupElement::identity(alg);
  std::vector<int> roots = alg->positive_indices();
  auto neg = alg->negative_indices();
  roots.insert(roots.end(), neg.begin(), neg.end());
  for (int f = 0; f < length; ++f) {
    if (integer(0, 3) == 0) {
      g = g * weyl_representative(alg, {integer(0, alg->rank() - 1)});
    } else {
      int k = roots[integer(0, static_cast<int>(roots.size()) - 1)];
      g = g * exp_ad(AlgElement::basis(alg, k, rational(3)));
    }
  }
  return g;
}

std::vector<int> Sampler::weyl_word(int rank, int length) {
  std::vector<int> w;
  for (int k = 0; k < length; ++k) w.push_back(integer(0, rank - 1));
  return w;
}

}  // namespace horolib
