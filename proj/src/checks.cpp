#include "horolib/checks.hpp"

#include <set>

#include "horolib/error.hpp"
#include "horolib/sampling.hpp"
#include "horolib/serialize.hpp"
#include "horolib/tables.hpp"

namespace horolib {

using nlohmann::json;

namespace {

// Runs body, turning any exception into a failed check called name.
template <typename Body>
Report guarded(const std::string& name, Body&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    Report r;
    r.add(name, false, std::string("error: ") + e.what());
    return r;
  }
}

std::vector<std::pair<char, int>> simple_types(int max_rank) {
  std::vector<std::pair<char, int>> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({'A', r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({'B', r});
  for (int r = 3; r <= max_rank; ++r) out.push_back({'C', r});
  for (int r = 4; r <= max_rank; ++r) out.push_back({'D', r});
  for (int r : {6, 7, 8})
    if (r <= max_rank) out.push_back({'E', r});
  if (max_rank >= 4) out.push_back({'F', 4});
  if (max_rank >= 2) out.push_back({'G', 2});
  return out;
}

std::string label(char t, int r) { return std::string(1, t) + std::to_string(r); }

// Roots of u_theta as a set of coordinate vectors.
std::set<std::vector<int>> u_roots(const RootSystem& rs, const ThetaSet& theta) {
  std::set<std::vector<int>> out;
  for (const auto& r : rs.positive_roots())
    if (n_theta(theta, r) > 0) out.insert(r.coords);
  return out;
}

}  // namespace

Report classification_checks(int max_rank) {
  Report r;
  for (const auto& row : classification_tables(max_rank)) {
    if (row.table == "heisenberg_restricted") continue;
    CheckResult c{row.table + "/" + row.label, row.matches(), row.note, nullptr};
    if (!c.passed) c.counterexample = to_json(row);
    r.add(std::move(c));
  }
  for (auto [t, rank] : simple_types(max_rank)) {
    if (t == 'A' && rank == 1) continue;
    RootSystem rs = root_system(t, rank);
    ThetaSet th = heisenberg_theta(rs, 0);
    int sum = check_heisenberg_sum(rs, th);
    // Uniqueness: no other theta defines a Heisenberg grading.
    int others = 0;
    for (unsigned mask = 1; mask < (1u << rank); ++mask) {
      std::vector<int> idx;
      for (int i = 0; i < rank; ++i)
        if (mask & (1u << i)) idx.push_back(i);
      ThetaSet cand(idx);
      if (!(cand == th) && is_heisenberg(rs, cand)) ++others;
    }
    r.add("heisenberg_sum/" + label(t, rank), sum == 2 && others == 0,
          "theta " + th.to_string() + ", sum of n_i = " + std::to_string(sum) + ", other Heisenberg thetas: " +
              std::to_string(others));
  }
  return r;
}

Report reduction_checks(int max_rank) {
  Report r;
  for (auto [t, rank] : simple_types(max_rank)) {
    RootSystem rs = root_system(t, rank);
    int steps_ok = 0, total = 0, t0_ok = 0, t0_total = 0;
    json first_bad;
    Root top = highest_root(rs);
    for (unsigned mask = 1; mask < (1u << rank); ++mask) {
      std::vector<int> idx;
      for (int i = 0; i < rank; ++i)
        if (mask & (1u << i)) idx.push_back(i);
      ThetaSet theta(idx);
      ++total;
      ThetaSet cur = theta;
      bool ok = false;
      for (int it = 0; it <= rank; ++it) {
        ThetaSet next = reduction_step_theta(rs, cur);
        if (next == cur) {
          ok = is_reflexive(rs, cur);
          break;
        }
        cur = next;
      }
      for (int i : theta.indices()) ok = ok && cur.contains(i);
      if (ok) {
        ++steps_ok;
      } else if (first_bad.is_null()) {
        first_bad = {{"theta", theta.one_based()}, {"reached", cur.one_based()}};
      }

      // Where the theta_0 reduction is defined, compare with the centralizer of g_{s-1} + g_s in u.
      int s = n_theta(theta, top);
      ThetaSet t0 = theta_zero(rs, 0);
      bool defined = s >= 3;
      for (int i : t0.indices()) defined = defined && theta.contains(i);
      if (!defined) continue;
      ++t0_total;
      std::set<std::vector<int>> centralizer;
      for (const auto& a : rs.positive_roots()) {
        if (n_theta(theta, a) <= 0) continue;
        bool commutes = true;
        for (const auto& b : rs.positive_roots())
          if (n_theta(theta, b) >= s - 1 && rs.is_root(a + b)) commutes = false;
        if (commutes) centralizer.insert(a.coords);
      }
      ThetaSet reduced = theta_zero_reduction(rs, theta);
      if (u_roots(rs, reduced) == centralizer) {
        ++t0_ok;
      } else if (first_bad.is_null()) {
        first_bad = {{"theta", theta.one_based()}, {"theta_zero_reduction", reduced.one_based()}};
      }
    }
    r.add("reduction_fixed_point/" + label(t, rank), steps_ok == total,
          std::to_string(steps_ok) + "/" + std::to_string(total) + " thetas", steps_ok == total ? json() : first_bad);
    r.add("theta_zero_reduction/" + label(t, rank), t0_ok == t0_total,
          std::to_string(t0_ok) + "/" + std::to_string(t0_total) + " thetas where defined",
          t0_ok == t0_total ? json() : first_bad);
  }
  return r;
}

std::vector<ThetaSet> structure_thetas(const AlgebraPtr& alg) {
  const auto& rs = alg->root_system();
  std::vector<ThetaSet> out = classify_reflexive_commutative(rs);
  if (alg->rank() >= 2) out.push_back(heisenberg_theta(rs, 0));
  std::vector<int> all;
  for (int i = 0; i < alg->rank(); ++i) all.push_back(i);
  ThetaSet pi(all);
  if (std::find(out.begin(), out.end(), pi) == out.end()) out.push_back(pi);
  return out;
}

std::vector<InvariantContext> contexts_for(const AlgebraPtr& alg) {
  std::vector<InvariantContext> out;
  const auto& rs = alg->root_system();
  for (const auto& th : classify_reflexive_commutative(rs)) out.push_back(InvariantContext::create(alg, th));
  if (alg->rank() >= 2) out.push_back(InvariantContext::create(alg, heisenberg_theta(rs, 0)));
  return out;
}

Report duality_checks(const InvariantContext& ctx, int samples, std::uint64_t seed) {
  Report r;
  const auto& dec = ctx.decomposition();
  Matrix gram = G2_gram(ctx);
  std::size_t n = dec.u_indices().size();
  std::size_t rk = rank(gram);
  r.add("G2_full_rank", rk == n && dec.um_indices().size() == n,
        "rank " + std::to_string(rk) + " on " + std::to_string(n) + " x " + std::to_string(dec.um_indices().size()));
  if (ctx.is_commutative()) {
    Sampler smp(seed);
    int good = 0;
    json witness;
    for (int k = 0; k < samples; ++k) {
      AlgElement x = smp.in_u(dec), y = smp.in_um(dec);
      Rational c2 = G_along_scaling(ctx, x, y).coeff(2), g2 = G2(ctx, x, y);
      if (c2 == g2) {
        ++good;
      } else if (witness.is_null()) {
        witness = {{"sample", k}, {"t2_coefficient", to_string(c2)}, {"G2", to_string(g2)}};
      }
    }
    r.add("G_second_order_term", good == samples,
          "t^2 coefficient of G(tX, tY) = G2(X, Y) on " + std::to_string(good) + "/" + std::to_string(samples), witness);
  }
  return r;
}

Report sl2_triple_checks(const InvariantContext& ctx) {
  auto check = [](Report& r, const std::string& name, const Sl2Triple& tr, const AlgElement& expected_h) {
    bool hx = bracket(tr.h, tr.x) == Rational(2) * tr.x;
    bool hy = bracket(tr.h, tr.y) == Rational(-2) * tr.y;
    bool xy = bracket(tr.x, tr.y) == tr.h;
    bool h = tr.h == expected_h;
    bool ok = hx && hy && xy && h;
    json w;
    if (!ok) w = {{"x", to_json(tr.x)}, {"h", to_json(tr.h)}, {"y", to_json(tr.y)}};
    r.add(name, ok,
          std::string("[h,x] = 2x ") + (hx ? "ok" : "fails") + ", [h,y] = -2y " + (hy ? "ok" : "fails") + ", [x,y] = h " +
              (xy ? "ok" : "fails") + ", h " + (h ? "matches" : "differs"),
          w);
  };
  if (ctx.is_commutative()) {
    return guarded("commutative_triple", [&] {
      Report r;
      check(r, "commutative_triple", sl2_triple_commutative(ctx), Rational(2) * ctx.h_theta());
      return r;
    });
  }
  return guarded("center_triple", [&] {
    Report r;
    auto tr = sl2_triple_center(ctx);
    check(r, "center_triple", tr, ctx.h_theta());
    Matrix ad = ad_matrix(tr.h);
    bool graded = true;
    int dim = ctx.algebra()->dim();
    for (int k = 0; k < dim; ++k)
      for (int m = 0; m < dim; ++m)
        if (ad(m, k) != (m == k ? Rational(ctx.decomposition().level_of(k)) : Rational(0))) graded = false;
    r.add("center_triple_eigenvalues", graded, "ad h0 = j on g_j");
    return r;
  });
}

Report heisenberg_expansion_checks(const InvariantContext& ctx, int samples, std::uint64_t seed) {
  Report r;
  const auto& dec = ctx.decomposition();
  const auto& alg = ctx.algebra();
  Sampler smp(seed);
  int good = 0, f4_nonzero = 0;
  json witness;
  for (int k = 0; k < samples; ++k) {
    AlgElement v = smp.in_piece(dec, 1), z = smp.in_piece(dec, 2);
    auto terms = heisenberg_F_terms(ctx, v, z);
    Rational f = F(ctx, v + z);
    if (terms.full == f) {
      ++good;
    } else if (witness.is_null()) {
      witness = {{"sample", k}, {"expansion", to_string(terms.full)}, {"F", to_string(f)}};
    }
    if (sgn(terms.f4d) != 0) ++f4_nonzero;
  }
  r.add("expansion_equals_F", good == samples,
        "three-term expansion = F(V + Z) on " + std::to_string(good) + "/" + std::to_string(samples), witness);

  // Ratio |alpha~|^2 / |alpha_i|^2 = <alpha~, alpha_i^vee> for alpha_i in theta.
  const auto& rs = alg->root_system();
  Root top = highest_root(rs);
  bool same_length = true;
  for (int i : ctx.theta().indices()) {
    int pairing = 0;
    for (int j = 0; j < alg->rank(); ++j) pairing += top.coords[j] * rs.cartan()(j, i);
    if (pairing != 1) same_length = false;
  }
  if (same_length) {
    r.add("F4d_nonzero", f4_nonzero > 0,
          "F_4d nonzero at " + std::to_string(f4_nonzero) + "/" + std::to_string(samples) + " samples");
  } else {
    // Sample grid: all g_1 basis vectors and their pairwise sums, plus the random samples above.
    const auto& g1 = dec.piece(1);
    AlgElement zero(alg);
    int nonzero = f4_nonzero;
    for (std::size_t a = 0; a < g1.size(); ++a)
      for (std::size_t b = a; b < g1.size(); ++b) {
        AlgElement v = AlgElement::basis(alg, g1[a]) + AlgElement::basis(alg, g1[b]);
        if (sgn(heisenberg_F_terms(ctx, v, zero).f4d) != 0) ++nonzero;
      }
    r.add("F4d_vanishes", nonzero == 0,
          "theta has roots shorter than the highest root; F_4d nonzero at " + std::to_string(nonzero) + " grid points");
  }
  return r;
}

Report context_checks(const InvariantContext& ctx, const VerifyOptions& opt) {
  Report r;
  r.merge(guarded("semiinvariance", [&] { return semiinvariance_check(ctx, opt.semiinvariance_samples, opt.seed); }),
          "semiinvariance");
  r.merge(guarded("omega", [&] { return omega_criterion_check(ctx, opt.omega_samples, opt.seed); }), "omega");
  r.merge(guarded("duality", [&] { return duality_checks(ctx, opt.duality_samples, opt.seed); }), "duality");
  r.merge(sl2_triple_checks(ctx), "sl2");
  if (!ctx.is_commutative())
    r.merge(guarded("expansion", [&] { return heisenberg_expansion_checks(ctx, opt.heisenberg_samples, opt.seed); }),
            "heisenberg");
  if (ctx.is_commutative()) {
    try {
      r.merge(table1_closed_form_check(ctx, opt.seed, opt.closed_form_points), "closed_form");
    } catch (const Unsupported&) {
      // Not one of the realized closed-form rows.
    } catch (const std::exception& e) {
      r.add("closed_form", false, std::string("error: ") + e.what());
    }
  }
  return r;
}

AlgebraPtr build_scoped_algebra(const std::string& name, const VerifyOptions& opt) {
  AlgebraDescriptor desc = AlgebraDescriptor::parse(name);
  if (!opt.structure_fault && !opt.cartan_fault) return build_algebra(desc);
  return build_algebra_with_faults(desc, opt.structure_fault, opt.cartan_fault);
}

Report run_verify(const VerifyOptions& opt) {
  static const std::set<std::string> suites = {"rootsys", "structure", "invariants", "tables", "all"};
  if (!suites.count(opt.suite)) throw InvalidInput("unknown suite \"" + opt.suite + "\"");
  bool all = opt.suite == "all";
  Report r;
  if (all || opt.suite == "rootsys") {
    r.merge(classification_checks(opt.classification_max_rank), "rootsys/classification");
    r.merge(reduction_checks(opt.reduction_max_rank), "rootsys/reduction");
  }
  if (all || opt.suite == "tables") r.merge(tables_report(classification_tables(opt.classification_max_rank)), "tables");
  if (all || opt.suite == "structure" || opt.suite == "invariants") {
    for (const auto& name : opt.scope) {
      AlgebraPtr alg;
      try {
        alg = build_scoped_algebra(name, opt);
      } catch (const std::exception& e) {
        r.add(name + "/build", false, std::string("error: ") + e.what());
        continue;
      }
      if (all || opt.suite == "structure") {
        r.merge(guarded("thetas", [&] {
          Report sub;
          for (const auto& th : structure_thetas(alg))
            sub.merge(verify_structure(alg, th, opt.seed), th.to_string());
          return sub;
        }), "structure/" + name);
      }
      if (all || opt.suite == "invariants") {
        r.merge(guarded("contexts", [&] {
          Report sub;
          for (const auto& ctx : contexts_for(alg)) sub.merge(context_checks(ctx, opt), ctx.name());
          return sub;
        }), "invariants");
      }
    }
  }
  return r;
}

}  // namespace horolib
