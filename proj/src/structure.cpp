#include <algorithm>
#include <random>

#include "horolib/error.hpp"
#include "horolib/splitlie.hpp"

namespace horolib {

GradedDecomposition::GradedDecomposition(AlgebraPtr alg, ThetaSet theta) : alg_(std::move(alg)), theta_(std::move(theta)) {
  for (int i : theta_.indices())
    if (i >= alg_->rank()) throw InvalidInput("theta index " + std::to_string(i + 1) + " exceeds the rank of " + alg_->name());
  int dim = alg_->dim();
  level_.assign(dim, 0);
  for (int k = 0; k < dim; ++k) {
    const auto& l = alg_->labels()[k];
    level_[k] = l.is_cartan ? 0 : n_theta(theta_, l.root);
    s_ = std::max(s_, level_[k]);
    pieces_[level_[k]].push_back(k);
    if (level_[k] > 0) u_.push_back(k);
    if (level_[k] < 0) um_.push_back(k);
  }
  desc_order_.resize(dim);
  for (int k = 0; k < dim; ++k) desc_order_[k] = k;
  std::stable_sort(desc_order_.begin(), desc_order_.end(), [&](int a, int b) { return level_[a] > level_[b]; });
}

const std::vector<int>& GradedDecomposition::piece(int j) const {
  static const std::vector<int> none;
  auto it = pieces_.find(j);
  return it == pieces_.end() ? none : it->second;
}

Matrix GradedDecomposition::pi() const {
  Matrix p(alg_->dim(), alg_->dim());
  for (int k : z_indices()) p(k, k) = 1;
  return p;
}

bool GradedDecomposition::in_piece(const AlgElement& x, int j) const {
  for (int k = 0; k < alg_->dim(); ++k)
    if (level_[k] != j && sgn(x[k]) != 0) return false;
  return true;
}

bool GradedDecomposition::in_u(const AlgElement& x) const {
  for (int k = 0; k < alg_->dim(); ++k)
    if (level_[k] <= 0 && sgn(x[k]) != 0) return false;
  return true;
}

bool GradedDecomposition::in_um(const AlgElement& x) const {
  for (int k = 0; k < alg_->dim(); ++k)
    if (level_[k] >= 0 && sgn(x[k]) != 0) return false;
  return true;
}

AlgElement GradedDecomposition::component(const AlgElement& x, int j) const {
  AlgElement y(alg_);
  for (int k : piece(j)) y[k] = x[k];
  return y;
}

GradedDecomposition graded_decomposition(const AlgebraPtr& alg, const ThetaSet& theta) {
  return GradedDecomposition(alg, theta);
}

// ---------------------------------------------------------------- verify_structure

namespace {

using nlohmann::json;

Vector dense(const SparseVector& v, int dim) {
  Vector out(dim);
  for (const auto& e : v) out[e.index] += e.value;
  return out;
}

// [e_a, v] for a coordinate vector v.
Vector bracket_with_basis(const SplitLieAlgebra& alg, int a, const Vector& v) {
  Vector out(alg.dim());
  for (int k = 0; k < alg.dim(); ++k) {
    if (sgn(v[k]) == 0) continue;
    for (const auto& e : alg.bracket_basis(a, k)) out[e.index] += v[k] * e.value;
  }
  return out;
}

Vector bracket_vectors(const AlgebraPtr& alg, const Vector& x, const Vector& y) {
  return bracket(AlgElement(alg, x), AlgElement(alg, y)).coeffs();
}

Subspace span_of(const std::vector<int>& indices, int dim) {
  Subspace s(dim);
  for (int k : indices) {
    Vector v(dim);
    v[k] = 1;
    s.add(v);
  }
  return s;
}

bool same_span(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return false;
  for (const auto& v : a.basis())
    if (!b.contains(v)) return false;
  return true;
}

std::string label(const SplitLieAlgebra& alg, int k) { return alg.labels()[k].name; }

CheckResult check_axioms(const AlgebraPtr& alg, unsigned long seed) {
  int dim = alg->dim();
  for (int a = 0; a < dim; ++a)
    for (int b = a; b < dim; ++b) {
      Vector ab = dense(alg->bracket_basis(a, b), dim);
      Vector ba = dense(alg->bracket_basis(b, a), dim);
      for (int k = 0; k < dim; ++k)
        if (ab[k] != -ba[k])
          return {"lie_axioms", false, "antisymmetry fails",
                  json{{"pair", {label(*alg, a), label(*alg, b)}}, {"coefficient_of", label(*alg, k)}}};
    }
  auto jacobi = [&](int a, int b, int c) {
    Vector sum = bracket_with_basis(*alg, a, dense(alg->bracket_basis(b, c), dim));
    Vector t2 = bracket_with_basis(*alg, b, dense(alg->bracket_basis(c, a), dim));
    Vector t3 = bracket_with_basis(*alg, c, dense(alg->bracket_basis(a, b), dim));
    for (int k = 0; k < dim; ++k) sum[k] += t2[k] + t3[k];
    return is_zero(sum);
  };
  auto fail = [&](int a, int b, int c) {
    return CheckResult{"lie_axioms", false, "Jacobi identity fails",
                       json{{"triple", {label(*alg, a), label(*alg, b), label(*alg, c)}}}};
  };
  if (dim <= 40) {
    for (int a = 0; a < dim; ++a)
      for (int b = a; b < dim; ++b)
        for (int c = b; c < dim; ++c)
          if (!jacobi(a, b, c)) return fail(a, b, c);
    return {"lie_axioms", true, "antisymmetry and Jacobi on all basis triples", nullptr};
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, dim - 1);
  for (int t = 0; t < 1000; ++t) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (!jacobi(a, b, c)) return fail(a, b, c);
  }
  return {"lie_axioms", true, "antisymmetry on all pairs, Jacobi on 1000 random basis triples", nullptr};
}

CheckResult check_grading(const AlgebraPtr& alg, const GradedDecomposition& dec) {
  Matrix ad = ad_matrix(h_theta_element(alg, dec.theta()));
  for (int a = 0; a < alg->dim(); ++a)
    for (int b = 0; b < alg->dim(); ++b) {
      Rational expect = a == b ? Rational(dec.level_of(a)) : Rational(0);
      if (ad(a, b) != expect)
        return {"grading", false, "ad h_theta does not act by the level",
                json{{"row", label(*alg, a)}, {"column", label(*alg, b)}, {"entry", to_string(ad(a, b))}}};
    }
  return {"grading", true, "ad h_theta acts by j on g_j", nullptr};
}

CheckResult check_killing_pairing(const AlgebraPtr& alg, const GradedDecomposition& dec) {
  for (int j = 0; j <= dec.depth(); ++j) {
    auto m = alg->killing_matrix().submatrix(dec.piece(j), dec.piece(-j));
    if (determinant(m) == 0)
      return {"killing_pairing", false, "Killing form degenerate on g_j x g_-j", json{{"j", j}}};
  }
  return {"killing_pairing", true, "Killing form nondegenerate on every g_j x g_-j", nullptr};
}

CheckResult check_generation(const AlgebraPtr& alg, const GradedDecomposition& dec) {
  int dim = alg->dim();
  for (int j = 1; j < dec.depth(); ++j) {
    Subspace target = span_of(dec.piece(j + 1), dim);
    Subspace got(dim);
    for (int a : dec.piece(1))
      for (int b : dec.piece(j)) {
        Vector v = dense(alg->bracket_basis(a, b), dim);
        if (!target.contains(v))
          return {"a_bracket_generation", false, "[g1,gj] leaves g(j+1)",
                  json{{"j", j}, {"pair", {label(*alg, a), label(*alg, b)}}}};
        got.add(v);
      }
    if (got.dim() != target.dim())
      return {"a_bracket_generation", false, "[g1,gj] is a proper subspace of g(j+1)",
              json{{"j", j}, {"span_dim", got.dim()}, {"target_dim", target.dim()}}};
  }
  return {"a_bracket_generation", true, "[g1,gj] = g(j+1) for 1 <= j < s", nullptr};
}

CheckResult check_nilpotency(const AlgebraPtr& alg, const GradedDecomposition& dec) {
  int dim = alg->dim();
  const auto& u = dec.u_indices();
  Subspace term = span_of(u, dim);
  std::vector<std::size_t> dims{term.dim()};
  for (int step = 1; step <= dec.depth() && term.dim() > 0; ++step) {
    Subspace next(dim);
    for (int a : u)
      for (const auto& v : term.basis()) next.add(bracket_with_basis(*alg, a, v));
    term = next;
    dims.push_back(term.dim());
  }
  // dims[k] is the dimension of the (k+1)-th lower central term.
  int s = dec.depth();
  bool ok = static_cast<int>(dims.size()) == s + 1 && dims[s] == 0 && dims[s - 1] > 0;
  if (!ok) return {"b_nilpotency_step", false, "u is not exactly s-step nilpotent", json{{"s", s}, {"dims", dims}}};
  return {"b_nilpotency_step", true, "u is " + std::to_string(s) + "-step nilpotent", nullptr};
}

CheckResult check_center(const AlgebraPtr& alg, const GradedDecomposition& dec) {
  int dim = alg->dim();
  const auto& u = dec.u_indices();
  int m = static_cast<int>(u.size());
  Matrix sys(static_cast<std::size_t>(m) * dim, m);
  for (int bi = 0; bi < m; ++bi)
    for (int ai = 0; ai < m; ++ai)
      for (const auto& e : alg->bracket_basis(u[ai], u[bi])) sys(bi * dim + e.index, ai) += e.value;
  Subspace center(dim);
  for (const auto& k : kernel(sys)) {
    Vector v(dim);
    for (int ai = 0; ai < m; ++ai) v[u[ai]] = k[ai];
    center.add(v);
  }
  Subspace z = span_of(dec.z_indices(), dim);
  if (!same_span(center, z))
    return {"c_center", false, "center of u differs from g_s",
            json{{"center_dim", center.dim()}, {"g_s_dim", z.dim()}}};
  return {"c_center", true, "center of u equals g_s", nullptr};
}

CheckResult check_simple_subalgebra(const AlgebraPtr& alg, const GradedDecomposition& dec) {
  int dim = alg->dim();
  int s = dec.depth();
  Subspace gp(dim);
  for (int k : dec.piece(-s)) gp.add(dense({{k, Rational(1)}}, dim));
  for (int k : dec.piece(s)) gp.add(dense({{k, Rational(1)}}, dim));
  for (int a : dec.piece(-s))
    for (int b : dec.piece(s)) gp.add(dense(alg->bracket_basis(a, b), dim));
  auto basis = gp.basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!gp.contains(bracket_vectors(alg, basis[i], basis[j])))
        return {"d_simple_subalgebra", false, "g' is not closed under the bracket", json{{"pair", {i, j}}}};
  // Each basis vector of g' must generate all of g' as an ideal. Since g' is
  // generated by g_-s and g_s, stability under those suffices.
  std::vector<int> gens = dec.piece(-s);
  gens.insert(gens.end(), dec.piece(s).begin(), dec.piece(s).end());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Subspace ideal(dim);
    ideal.add(basis[i]);
    std::size_t done = 0;
    while (done < ideal.dim() && ideal.dim() < gp.dim()) {
      Vector v = ideal.basis()[done++];
      for (int g : gens) ideal.add(bracket_with_basis(*alg, g, v));
    }
    if (ideal.dim() != gp.dim())
      return {"d_simple_subalgebra", false, "a basis vector of g' generates a proper ideal",
              json{{"basis_vector", i}, {"ideal_dim", ideal.dim()}, {"g_prime_dim", gp.dim()}}};
  }
  return {"d_simple_subalgebra", true, "g' of dimension " + std::to_string(gp.dim()) + " is closed and simple", nullptr};
}

}  // namespace

Report verify_structure(const AlgebraPtr& alg, const ThetaSet& theta, unsigned long seed) {
  Report r;
  if (theta.empty()) throw InvalidInput("theta must be non-empty");
  r.add("root_realization", alg->realization_consistent(),
        alg->realization_consistent() ? "weights of the realization are the roots"
                                      : "weights of the realization differ from the roots of the Cartan matrix");
  auto guarded = [&](auto&& fn, const std::string& name) {
    try {
      r.add(fn());
    } catch (const std::exception& e) {
      r.add(name, false, std::string("exception: ") + e.what());
    }
  };
  guarded([&] { return check_axioms(alg, seed); }, "lie_axioms");
  GradedDecomposition dec(alg, theta);
  guarded([&] { return check_grading(alg, dec); }, "grading");
  guarded([&] { return check_killing_pairing(alg, dec); }, "killing_pairing");
  guarded([&] { return check_generation(alg, dec); }, "a_bracket_generation");
  guarded([&] { return check_nilpotency(alg, dec); }, "b_nilpotency_step");
  guarded([&] { return check_center(alg, dec); }, "c_center");
  guarded([&] { return check_simple_subalgebra(alg, dec); }, "d_simple_subalgebra");
  return r;
}

}  // namespace horolib
