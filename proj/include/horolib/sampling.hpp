#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "horolib/adjointgrp.hpp"

namespace horolib {

constexpr std::uint64_t kDefaultSeed = 42;

// Seeded source of random exact test data. Rationals have |num|, den <= bound.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }
  int integer(int lo, int hi);
  Rational rational(int bound = 7);
  Rational nonzero_rational(int bound = 7);

  // Random combination of the given basis vectors.
  AlgElement combination(const AlgebraPtr& alg, const std::vector<int>& indices, int bound = 7);
  AlgElement in_u(const GradedDecomposition& dec) { return combination(dec.algebra(), dec.u_indices()); }
  AlgElement in_um(const GradedDecomposition& dec) { return combination(dec.algebra(), dec.um_indices()); }
  AlgElement in_piece(const GradedDecomposition& dec, int j) { return combination(dec.algebra(), dec.piece(j)); }

  // Product of torus elements on coroots, exponentials of level-0 root
  // vectors and Weyl representatives of simple roots outside theta.
  GroupElement levi(const GradedDecomposition& dec, int factors = 3);
  GroupElement unipotent_u(const GradedDecomposition& dec) { return exp_ad(in_u(dec)); }
  GroupElement unipotent_um(const GradedDecomposition& dec) { return exp_ad(in_um(dec)); }
  // Word of the given length in exp of random root vectors and Weyl representatives.
  GroupElement group_word(const AlgebraPtr& alg, int length);
  std::vector<int> weyl_word(int rank, int length);

 private:
  std::mt19937_64 rng_;
};

}  // namespace horolib
