#include "horolib/invariants.hpp"

#include <functional>

#include "horolib/error.hpp"
#include "horolib/sampling.hpp"

namespace horolib {

InvariantContext InvariantContext::create(const AlgebraPtr& alg, const ThetaSet& theta) {
  const auto& rs = alg->root_system();
  if (theta.empty()) throw PreconditionFailed("theta must be non-empty");
  for (int i : theta.indices())
    if (i >= alg->rank()) throw InvalidInput("theta index " + std::to_string(i + 1) + " exceeds the rank of " + alg->name());
  ContextKind kind;
  if (is_reflexive_commutative(rs, theta)) {
    kind = ContextKind::reflexive_commutative;
  } else if (is_heisenberg(rs, theta)) {
    kind = ContextKind::heisenberg;
  } else {
    throw PreconditionFailed("theta = " + theta.to_string() + " on " + alg->name() +
                             " is neither reflexive commutative (s = 1 and iota(theta) = theta) nor Heisenberg");
  }
  InvariantContext ctx;
  ctx.data_ = std::make_shared<const Data>(
      Data{kind, GradedDecomposition(alg, theta), w0_representative(alg), h_theta_element(alg, theta)});
  return ctx;
}

std::string InvariantContext::name() const { return algebra()->name() + theta().to_string(); }

namespace {

void require_u(const InvariantContext& ctx, const AlgElement& x, const char* what) {
  if (x.algebra() != ctx.algebra()) throw InvalidInput(std::string(what) + " belongs to a different algebra");
  const auto& dec = ctx.decomposition();
  for (int k = 0; k < ctx.algebra()->dim(); ++k)
    if (dec.level_of(k) <= 0 && sgn(x[k]) != 0)
      throw InvalidInput(std::string(what) + " must lie in u; it has a component on " + ctx.algebra()->labels()[k].name);
}

void require_um(const InvariantContext& ctx, const AlgElement& y, const char* what) {
  if (y.algebra() != ctx.algebra()) throw InvalidInput(std::string(what) + " belongs to a different algebra");
  const auto& dec = ctx.decomposition();
  for (int k = 0; k < ctx.algebra()->dim(); ++k)
    if (dec.level_of(k) >= 0 && sgn(y[k]) != 0)
      throw InvalidInput(std::string(what) + " must lie in u^-; it has a component on " + ctx.algebra()->labels()[k].name);
}

void require_piece(const InvariantContext& ctx, const AlgElement& x, int j, const char* what) {
  if (x.algebra() != ctx.algebra()) throw InvalidInput(std::string(what) + " belongs to a different algebra");
  const auto& dec = ctx.decomposition();
  for (int k = 0; k < ctx.algebra()->dim(); ++k)
    if (dec.level_of(k) != j && sgn(x[k]) != 0)
      throw InvalidInput(std::string(what) + " must lie in g_" + std::to_string(j) + "; it has a component on " +
                         ctx.algebra()->labels()[k].name);
}

std::vector<int> all_indices(int dim) {
  std::vector<int> v(dim);
  for (int k = 0; k < dim; ++k) v[k] = k;
  return v;
}

// z-rows of a times z-columns of b.
Rational det_z_product(const InvariantContext& ctx, const Matrix& a, const Matrix& b) {
  const auto& z = ctx.decomposition().z_indices();
  auto all = all_indices(ctx.algebra()->dim());
  return determinant(a.submatrix(z, all) * b.submatrix(all, z));
}

}  // namespace

Matrix M(const InvariantContext& ctx, const GroupElement& g) {
  const auto& z = ctx.decomposition().z_indices();
  return g.matrix().submatrix(z, z);
}

Rational phi(const InvariantContext& ctx, const GroupElement& g) { return determinant(M(ctx, g)); }

Rational chi(const InvariantContext& ctx, const GroupElement& l) {
  if (!preserves_grading(l, ctx.decomposition()))
    throw PreconditionFailed("chi needs a grading-preserving element of L");
  return phi(ctx, l);
}

Rational dchi(const InvariantContext& ctx, const AlgElement& h) {
  Matrix ad = ad_matrix(h);
  Rational t = 0;
  for (int k : ctx.decomposition().z_indices()) t += ad(k, k);
  return t;
}

Rational F(const InvariantContext& ctx, const AlgElement& x) {
  require_u(ctx, x, "X");
  return det_z_product(ctx, exp_ad(x).matrix(), ctx.w0rep().matrix());
}

Rational G(const InvariantContext& ctx, const AlgElement& x, const AlgElement& y) {
  require_u(ctx, x, "X");
  require_um(ctx, y, "Y");
  return det_z_product(ctx, exp_ad(x).matrix(), exp_ad(y).matrix());
}

Rational G2(const InvariantContext& ctx, const AlgElement& x, const AlgElement& y) {
  require_u(ctx, x, "X");
  require_um(ctx, y, "Y");
  Matrix ax = ad_matrix(x), ay = ad_matrix(y);
  Rational t = 0;
  int dim = ctx.algebra()->dim();
  for (int k : ctx.decomposition().z_indices())
    for (int m = 0; m < dim; ++m)
      if (sgn(ax(k, m)) != 0 && sgn(ay(m, k)) != 0) t += ax(k, m) * ay(m, k);
  return t;
}

Matrix G2_gram(const InvariantContext& ctx) {
  const auto& dec = ctx.decomposition();
  const auto& alg = ctx.algebra();
  const auto& u = dec.u_indices();
  const auto& um = dec.um_indices();
  Matrix gram(u.size(), um.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < um.size(); ++j) {
      Rational t = 0;
      for (int k : dec.z_indices())
        for (const auto& [m, v] : alg->bracket_basis(um[j], k))
          for (const auto& e : alg->bracket_basis(u[i], m))
            if (e.index == k) t += v * e.value;
      gram(i, j) = t;
    }
  return gram;
}

Rational F_quadratic(const InvariantContext& ctx, const AlgElement& x) {
  require_u(ctx, x, "X");
  Matrix a = ad_matrix(x);
  return det_z_product(ctx, make_rational(1, 2) * (a * a), ctx.w0rep().matrix());
}

HeisenbergTerms heisenberg_F_terms(const InvariantContext& ctx, const AlgElement& v, const AlgElement& z) {
  if (ctx.kind() != ContextKind::heisenberg) throw PreconditionFailed("heisenberg_F_terms needs a Heisenberg context");
  require_piece(ctx, v, 1, "V");
  require_piece(ctx, z, 2, "Z");
  const auto& zi = ctx.decomposition().z_indices();
  auto all = all_indices(ctx.algebra()->dim());
  Matrix w = ctx.w0rep().matrix().submatrix(all, zi);
  Matrix av = ad_matrix(v), az = ad_matrix(z);
  Matrix vw = av * w;
  Matrix v2w = av * vw;
  Matrix v4w = av * (av * v2w);
  Matrix zw = az * w;
  Matrix t1 = make_rational(1, 2) * (az * zw);
  Matrix t2 = make_rational(1, 2) * (az * v2w);
  Matrix t3 = make_rational(1, 24) * v4w;
  auto zrows = [&](const Matrix& m) { return m.submatrix(zi, all_indices(static_cast<int>(zi.size()))); };
  HeisenbergTerms out;
  out.full = determinant(zrows(t1 + t2 + t3));
  out.f2d = determinant(zrows(t1));
  out.f4d = determinant(zrows(t3));
  return out;
}

namespace {

UniPoly interpolate_on_naturals(int degree, const std::function<Rational(const Rational&)>& f) {
  std::vector<Rational> nodes, values;
  for (int t = 0; t <= degree; ++t) {
    nodes.emplace_back(t);
    values.push_back(f(Rational(t)));
  }
  return interpolate(nodes, values);
}

}  // namespace

UniPoly F_along_line(const InvariantContext& ctx, const AlgElement& x, const AlgElement& y) {
  require_u(ctx, x, "X");
  require_u(ctx, y, "Y");
  int degree = 2 * ctx.depth() * ctx.d();
  return interpolate_on_naturals(degree, [&](const Rational& t) { return F(ctx, x + t * y); });
}

UniPoly G_along_scaling(const InvariantContext& ctx, const AlgElement& x, const AlgElement& y) {
  int degree = 4 * ctx.depth() * ctx.d();
  return interpolate_on_naturals(degree, [&](const Rational& t) { return G(ctx, t * x, t * y); });
}

Vector differential_dF(const InvariantContext& ctx, const AlgElement& x) {
  const auto& u = ctx.decomposition().u_indices();
  Vector out(u.size());
  for (std::size_t k = 0; k < u.size(); ++k)
    out[k] = F_along_line(ctx, x, AlgElement::basis(ctx.algebra(), u[k])).coeff(1);
  return out;
}

namespace {

AlgElement killing_dual(const InvariantContext& ctx, const std::vector<int>& domain, const std::vector<int>& target,
                        const Vector& covector) {
  // Solve sum_b y_b B(e_b, e_k) = c_k for k in domain, y supported on target.
  Matrix k = ctx.algebra()->killing_matrix().submatrix(domain, target);
  auto y = solve(k, covector);
  if (!y) throw Error("Killing form does not identify the pieces as dual spaces");
  AlgElement out(ctx.algebra());
  for (std::size_t b = 0; b < target.size(); ++b) out[target[b]] = (*y)[b];
  return out;
}

// Points of {-box..box}^n ordered by sup-norm, then lexicographically.
template <typename Visit>
bool box_search(int n, int box, Visit&& visit) {
  for (int r = 1; r <= box; ++r) {
    std::vector<int> p(n, -r);
    for (;;) {
      int sup = 0;
      for (int c : p) sup = std::max(sup, std::abs(c));
      if (sup == r && visit(p)) return true;
      int k = n - 1;
      while (k >= 0 && p[k] == r) p[k--] = -r;
      if (k < 0) break;
      ++p[k];
    }
  }
  return false;
}

}  // namespace

AlgElement killing_dual_in_um(const InvariantContext& ctx, const Vector& covector) {
  const auto& dec = ctx.decomposition();
  return killing_dual(ctx, dec.u_indices(), dec.um_indices(), covector);
}

Sl2Triple sl2_triple_commutative(const InvariantContext& ctx, int box) {
  if (!ctx.is_commutative()) throw PreconditionFailed("sl2_triple_commutative needs a reflexive commutative context");
  const auto& alg = ctx.algebra();
  const auto& u = ctx.decomposition().u_indices();
  AlgElement x(alg);
  Rational fx = 0;
  bool found = box_search(static_cast<int>(u.size()), box, [&](const std::vector<int>& p) {
    AlgElement cand(alg);
    for (std::size_t k = 0; k < u.size(); ++k) cand[u[k]] = p[k];
    Rational f = F(ctx, cand);
    if (sgn(f) == 0) return false;
    x = cand;
    fx = f;
    return true;
  });
  if (!found) throw Error("no point with F != 0 in the search box");
  const AlgElement& h0 = ctx.h_theta();
  Rational scale = killing(h0, h0) / dchi(ctx, h0) / fx;
  AlgElement y = scale * killing_dual_in_um(ctx, differential_dF(ctx, x));
  AlgElement h = bracket(x, y);
  if (!(h == Rational(2) * h0)) throw Error("[x'0, y'0] differs from 2 h_theta");
  if (!(bracket(h, x) == Rational(2) * x) || !(bracket(h, y) == Rational(-2) * y))
    throw Error("(x'0, h'0, y'0) is not an sl2-triple");
  return {x, h, y};
}

Sl2Triple sl2_triple_center(const InvariantContext& ctx, int box) {
  if (ctx.kind() != ContextKind::heisenberg) throw PreconditionFailed("sl2_triple_center needs a Heisenberg context");
  const auto& alg = ctx.algebra();
  const auto& dec = ctx.decomposition();
  const auto& g2 = dec.piece(2);
  AlgElement zero(alg);
  auto f2d = [&](const AlgElement& z) { return heisenberg_F_terms(ctx, zero, z).f2d; };
  AlgElement x(alg);
  bool found = box_search(static_cast<int>(g2.size()), box, [&](const std::vector<int>& p) {
    AlgElement cand(alg);
    for (std::size_t k = 0; k < g2.size(); ++k) cand[g2[k]] = p[k];
    if (sgn(f2d(cand)) == 0) return false;
    x = cand;
    return true;
  });
  if (!found) throw Error("no point with F_2d != 0 in the search box");
  Vector grad(g2.size());
  for (std::size_t k = 0; k < g2.size(); ++k) {
    AlgElement dir = AlgElement::basis(alg, g2[k]);
    grad[k] = interpolate_on_naturals(2 * ctx.d(), [&](const Rational& t) { return f2d(x + t * dir); }).coeff(1);
  }
  AlgElement y = killing_dual(ctx, g2, dec.piece(-2), grad);
  AlgElement hp = bracket(x, y);
  const AlgElement& h0 = ctx.h_theta();
  // hp is a multiple of h0; find the ratio on any nonzero coordinate.
  Rational ratio = 0;
  for (int k = 0; k < alg->dim(); ++k)
    if (sgn(h0[k]) != 0) {
      ratio = hp[k] / h0[k];
      break;
    }
  if (sgn(ratio) == 0 || !(hp == ratio * h0)) throw Error("[x0, dual of dF_2d] is not a multiple of h_theta");
  y *= Rational(1) / ratio;
  AlgElement h = bracket(x, y);
  if (!(bracket(h, x) == Rational(2) * x) || !(bracket(h, y) == Rational(-2) * y))
    throw Error("(x0, h0, y0) is not an sl2-triple");
  return {x, h, y};
}

// ---------------------------------------------------------------- sample checks

namespace {

struct Tally {
  std::string name;
  std::string what;
  int total = 0;
  int failed = 0;
  nlohmann::json first;

  void record(bool ok, const std::function<nlohmann::json()>& witness) {
    ++total;
    if (!ok && failed++ == 0) first = witness();
  }
  CheckResult result() const {
    std::string detail = what + ": " + std::to_string(total - failed) + "/" + std::to_string(total) + " samples";
    return {name, failed == 0 && total > 0, detail, failed ? first : nlohmann::json()};
  }
};

}  // namespace

Report semiinvariance_check(const InvariantContext& ctx, int samples, std::uint64_t seed) {
  Sampler smp(seed);
  const auto& dec = ctx.decomposition();
  const auto& alg = ctx.algebra();
  GroupElement w0inv = ctx.w0rep().inverse();
  Tally e32{"levi_block", "M(v l u) = Ad l on z"};
  Tally e39{"phi_biinvariance", "Phi(v l g l' u) = chi(l) chi(l') Phi(g)"};
  Tally e311{"F_semiinvariance", "F(Ad l X) = chi(l)^2 F(X)"};
  Tally e312{"G_invariance", "G(Ad l X, Ad l Y) = G(X, Y)"};
  Tally e313{"chi_w0_conjugation", "chi(w0 l w0^-1) = chi(l)^-1"};
  for (int s = 0; s < samples; ++s) {
    GroupElement v = smp.unipotent_um(dec);
    GroupElement l = smp.levi(dec);
    GroupElement lp = smp.levi(dec);
    GroupElement u = smp.unipotent_u(dec);
    GroupElement g = smp.integer(0, 1) ? smp.group_word(alg, 2) * ctx.w0rep() : smp.group_word(alg, 3);
    Rational cl = chi(ctx, l), clp = chi(ctx, lp);
    e32.record(M(ctx, v * l * u) == M(ctx, l), [&] { return nlohmann::json{{"sample", s}}; });
    Rational lhs = phi(ctx, v * l * g * lp * u);
    Rational rhs = cl * clp * phi(ctx, g);
    e39.record(lhs == rhs, [&] { return nlohmann::json{{"sample", s}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}}; });
    AlgElement x = smp.in_u(dec), y = smp.in_um(dec);
    Rational fl = F(ctx, l.apply(x)), f = F(ctx, x);
    e311.record(fl == cl * cl * f, [&] { return nlohmann::json{{"sample", s}, {"F(Ad l X)", to_string(fl)}, {"F(X)", to_string(f)}}; });
    Rational gl = G(ctx, l.apply(x), l.apply(y)), g0 = G(ctx, x, y);
    e312.record(gl == g0, [&] { return nlohmann::json{{"sample", s}, {"G(Ad l X, Ad l Y)", to_string(gl)}, {"G(X, Y)", to_string(g0)}}; });
    Rational cw = chi(ctx, ctx.w0rep() * l * w0inv);
    e313.record(cw * cl == 1, [&] { return nlohmann::json{{"sample", s}, {"chi(w0 l w0^-1)", to_string(cw)}, {"chi(l)", to_string(cl)}}; });
  }
  Report r;
  for (const auto* t : {&e32, &e39, &e311, &e312, &e313}) r.add(t->result());
  return r;
}

Report omega_criterion_check(const InvariantContext& ctx, int samples, std::uint64_t seed) {
  Sampler smp(seed);
  const auto& dec = ctx.decomposition();
  const auto& alg = ctx.algebra();
  int n_pos = static_cast<int>(alg->root_system().positive_roots().size());
  Tally present{"cell_products_factor", "v l u factors with matching pieces"};
  Tally absent{"w0_translates_do_not_factor", "v l w0 l' u has no factorization"};
  Tally agree{"factorization_iff_phi_nonzero", "factorization exists iff Phi != 0"};
  for (int s = 0; s < samples; ++s) {
    GroupElement v = smp.unipotent_um(dec);
    GroupElement l = smp.levi(dec);
    GroupElement u = smp.unipotent_u(dec);
    GroupElement g;
    int kind = s % 4;
    if (kind == 0) {
      g = v * l * u;
    } else if (kind == 1) {
      g = v * l * ctx.w0rep() * smp.levi(dec) * u;
    } else if (kind == 2) {
      g = v * l * weyl_representative(alg, smp.weyl_word(alg->rank(), smp.integer(1, n_pos))) * u;
    } else {
      g = smp.group_word(alg, 4);
    }
    auto f = opposite_cell_factor(g, dec);
    Rational p = phi(ctx, g);
    agree.record(f.has_value() == (sgn(p) != 0),
                 [&] { return nlohmann::json{{"sample", s}, {"kind", kind}, {"phi", to_string(p)}, {"factored", f.has_value()}}; });
    if (kind == 0) {
      bool ok = f && f->v * f->l * f->u == g && dec.in_um(f->log_v) && dec.in_u(f->log_u) &&
                preserves_grading(f->l, dec) && M(ctx, g) == M(ctx, f->l) && f->l == l;
      present.record(ok, [&] { return nlohmann::json{{"sample", s}, {"factored", f.has_value()}}; });
    } else if (kind == 1) {
      absent.record(!f && sgn(p) == 0, [&] { return nlohmann::json{{"sample", s}, {"phi", to_string(p)}}; });
    }
  }
  Report r;
  for (const auto* t : {&present, &absent, &agree}) r.add(t->result());
  return r;
}

}  // namespace horolib
