#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "horolib/invariants.hpp"
#include "horolib/report.hpp"

namespace horolib {

struct VerifyOptions {
  std::string suite = "all";  // rootsys, structure, invariants, tables, all
  std::vector<std::string> scope = {"sl3", "sl4", "sp6", "so7"};
  std::uint64_t seed = 42;
  int semiinvariance_samples = 100;
  int omega_samples = 200;
  int heisenberg_samples = 50;
  int duality_samples = 50;
  int closed_form_points = 20;
  int classification_max_rank = 8;
  int reduction_max_rank = 6;
  std::optional<StructureFault> structure_fault;
  std::optional<CartanFault> cartan_fault;
};

// Reflexive commutative pattern, Heisenberg theta and its n_i sum, for every simple type up to max_rank.
Report classification_checks(int max_rank);
// Iterated reduction steps reach a reflexive theta' containing theta; the theta_0 reduction agrees with
// a root-level computation of the centralizer of C^{s-1}u in u.
Report reduction_checks(int max_rank);

// Structure checks use the context thetas plus the full simple system.
std::vector<ThetaSet> structure_thetas(const AlgebraPtr& alg);
// Reflexive commutative thetas and the Heisenberg theta of alg.
std::vector<InvariantContext> contexts_for(const AlgebraPtr& alg);

Report duality_checks(const InvariantContext& ctx, int samples, std::uint64_t seed);
Report sl2_triple_checks(const InvariantContext& ctx);
// F = three-term expansion on samples; F_4d nonzero when theta roots are as long as the highest
// root, identically zero on the sample grid otherwise.
Report heisenberg_expansion_checks(const InvariantContext& ctx, int samples, std::uint64_t seed);
// All invariant checks that apply to ctx.
Report context_checks(const InvariantContext& ctx, const VerifyOptions& opt);

AlgebraPtr build_scoped_algebra(const std::string& name, const VerifyOptions& opt);
Report run_verify(const VerifyOptions& opt);

}  // namespace horolib
