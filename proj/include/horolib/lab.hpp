#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "horolib/invariants.hpp"
#include "horolib/report.hpp"

namespace horolib {

struct LatticeSample {
  std::vector<AlgElement> basis;
  int height_bound = 0;
  bool lie_lattice = false;  // claims [b_i, b_j] lies in the integer span

  // Throws InvalidInput if the basis is dependent or a claimed Lie lattice is not bracket-closed.
  void validate() const;
};

// Integer span of the u (or u^-) basis vectors; flagged as a Lie lattice when bracket-closed.
LatticeSample integer_lattice(const GradedDecomposition& dec, int height, bool negative = false);

struct GroupSampler {
  std::vector<GroupElement> generators;
  int word_length = 0;
  std::uint64_t seed = 42;

  // Throws if a generator is not exactly invertible.
  void validate() const;
};

// exp(e_k) for the u and u^- basis vectors.
GroupSampler unit_generators(const GradedDecomposition& dec, int word_length, std::uint64_t seed);

// All sum c_i b_i with |c_i| <= height_bound, in lexicographic order of c.
std::vector<AlgElement> enumerate_lattice(const LatticeSample& lattice);

struct DiscretenessReport {
  std::size_t count = 0;
  std::size_t distinct = 0;
  std::optional<Rational> min_gap;     // absent with fewer than two distinct values
  Integer common_denominator = 1;      // least D with D * values integral
  Rational generator = 0;              // c with all values in c * Z, c >= 0
  bool within_cap = false;             // common_denominator <= cap
};
DiscretenessReport value_set_discreteness(const std::vector<Rational>& values, const Integer& cap = 1000000);
nlohmann::json to_json(const DiscretenessReport& r);

// Phi over count random words of length <= word_length in the generators and their inverses.
std::vector<Rational> phi_gamma_sampler(const InvariantContext& ctx, const GroupSampler& sampler, int count);
// F over every point of the lattice.
std::vector<Rational> F_on_lattice(const InvariantContext& ctx, const LatticeSample& lattice);

struct OrbitPoint {
  Rational t;
  double covolume = 0;             // sqrt of the Gram determinant, Euclidean in basis coordinates
  double normalized_covolume = 0;  // covolume / |det of Ad a on the span|
  double shortest = 0;             // shortest nonzero vector within the enumeration bound
  bool certified = false;          // no shorter vector outside the bound
};
// Ad(torus_element(h, t)) Lambda for each t; floating point, approximate.
std::vector<OrbitPoint> orbit_probe(const InvariantContext& ctx, const LatticeSample& lattice, const AlgElement& h,
                                    const std::vector<Rational>& ts, int enumeration_bound);
nlohmann::json to_json(const OrbitPoint& p);

// Runs the experiments described by a config
// {"algebra", "theta", "lattice": "integer", "height", "words", "word_length", "seed", "orbit": {"t": [...], "bound"}}.
nlohmann::json run_lab(const nlohmann::json& config);

}  // namespace horolib
