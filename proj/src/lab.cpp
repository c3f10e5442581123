#include "horolib/lab.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "horolib/error.hpp"
#include "horolib/serialize.hpp"

namespace horolib {

using nlohmann::json;

namespace {

Matrix basis_columns(const std::vector<AlgElement>& basis) {
  int dim = basis.front().algebra()->dim();
  Matrix m(dim, basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (int k = 0; k < dim; ++k) m(k, i) = basis[i][k];
  return m;
}

// Coordinates of x in the lattice basis, if x lies in its rational span.
std::optional<Vector> lattice_coordinates(const Matrix& cols, const AlgElement& x) {
  // The columns are independent, so the normal equations have a unique solution.
  Matrix t = cols.transpose();
  return solve(t * cols, t * x.coeffs());
}

double to_double(const Rational& q) { return q.get_d(); }

// Determinant of a small dense double matrix by partial pivoting.
double det_double(std::vector<std::vector<double>> a) {
  std::size_t n = a.size();
  double det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    if (a[p][c] == 0) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

// Frobenius norm of the inverse, an upper bound for the spectral norm.
double inverse_frobenius(std::vector<std::vector<double>> a) {
  std::size_t n = a.size();
  std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    if (a[p][c] == 0) return INFINITY;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    double d = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] /= d;
      inv[c][k] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      double f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  double s = 0;
  for (const auto& row : inv)
    for (double v : row) s += v * v;
  return std::sqrt(s);
}

}  // namespace

void LatticeSample::validate() const {
  if (basis.empty()) throw InvalidInput("lattice basis is empty");
  Matrix cols = basis_columns(basis);
  if (rank(cols) != basis.size()) throw InvalidInput("lattice basis is linearly dependent");
  if (height_bound < 0) throw InvalidInput("height bound must be non-negative");
  if (!lie_lattice) return;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      auto c = lattice_coordinates(cols, bracket(basis[i], basis[j]));
      bool integral = c.has_value();
      if (c) {
        AlgElement back(basis[i].algebra(), cols * *c);
        integral = back == bracket(basis[i], basis[j]);
        for (const auto& v : *c) integral = integral && is_integer(v);
      }
      if (!integral)
        throw InvalidInput("lattice is flagged as a Lie lattice but [b" + std::to_string(i + 1) + ", b" +
                           std::to_string(j + 1) + "] is not in its integer span");
    }
}

LatticeSample integer_lattice(const GradedDecomposition& dec, int height, bool negative) {
  LatticeSample l;
  for (int k : negative ? dec.um_indices() : dec.u_indices()) l.basis.push_back(AlgElement::basis(dec.algebra(), k));
  l.height_bound = height;
  l.lie_lattice = true;
  try {
    l.validate();
  } catch (const InvalidInput&) {
    l.lie_lattice = false;
  }
  return l;
}

void GroupSampler::validate() const {
  if (word_length < 0) throw InvalidInput("word length must be non-negative");
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (determinant(generators[i].matrix()) == 0)
      throw InvalidInput("generator " + std::to_string(i + 1) + " is not invertible");
}

GroupSampler unit_generators(const GradedDecomposition& dec, int word_length, std::uint64_t seed) {
  GroupSampler s;
  for (int k : dec.u_indices()) s.generators.push_back(exp_ad(AlgElement::basis(dec.algebra(), k)));
  for (int k : dec.um_indices()) s.generators.push_back(exp_ad(AlgElement::basis(dec.algebra(), k)));
  s.word_length = word_length;
  s.seed = seed;
  return s;
}

std::vector<AlgElement> enumerate_lattice(const LatticeSample& lattice) {
  lattice.validate();
  int n = static_cast<int>(lattice.basis.size());
  int b = lattice.height_bound;
  std::vector<AlgElement> out;
  std::vector<int> c(n, -b);
  for (;;) {
    AlgElement x(lattice.basis.front().algebra());
    for (int i = 0; i < n; ++i)
      if (c[i] != 0) x += Rational(c[i]) * lattice.basis[i];
    out.push_back(std::move(x));
    int k = n - 1;
    while (k >= 0 && c[k] == b) c[k--] = -b;
    if (k < 0) break;
    ++c[k];
  }
  return out;
}

DiscretenessReport value_set_discreteness(const std::vector<Rational>& values, const Integer& cap) {
  DiscretenessReport r;
  r.count = values.size();
  std::set<Rational> distinct(values.begin(), values.end());
  r.distinct = distinct.size();
  Integer d = 1;
  for (const auto& v : distinct) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
  r.common_denominator = d;
  r.within_cap = d <= cap;
  Integer g = 0;
  for (const auto& v : distinct) {
    Integer scaled = v.get_num() * (d / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
  }
  r.generator = make_rational(g, d);
  for (auto it = distinct.begin(); it != distinct.end() && std::next(it) != distinct.end(); ++it) {
    Rational gap = *std::next(it) - *it;
    if (!r.min_gap || gap < *r.min_gap) r.min_gap = gap;
  }
  return r;
}

json to_json(const DiscretenessReport& r) {
  json j{{"count", r.count},
         {"distinct", r.distinct},
         {"common_denominator", r.common_denominator.get_str()},
         {"generator", to_string(r.generator)},
         {"within_cap", r.within_cap}};
  j["min_gap"] = r.min_gap ? json(to_string(*r.min_gap)) : json();
  return j;
}

std::vector<Rational> phi_gamma_sampler(const InvariantContext& ctx, const GroupSampler& sampler, int count) {
  sampler.validate();
  const auto& alg = ctx.algebra();
  std::vector<GroupElement> letters = sampler.generators;
  for (const auto& g : sampler.generators) letters.push_back(g.inverse());
  std::mt19937_64 rng(sampler.seed);
  std::vector<Rational> out;
  for (int k = 0; k < count; ++k) {
    int len = letters.empty() ? 0 : std::uniform_int_distribution<int>(0, sampler.word_length)(rng);
    GroupElement g = GroupElement::identity(alg);
    for (int i = 0; i < len; ++i)
      g = g * letters[std::uniform_int_distribution<std::size_t>(0, letters.size() - 1)(rng)];
    out.push_back(phi(ctx, g));
  }
  return out;
}

std::vector<Rational> F_on_lattice(const InvariantContext& ctx, const LatticeSample& lattice) {
  std::vector<Rational> out;
  for (const auto& x : enumerate_lattice(lattice)) out.push_back(F(ctx, x));
  return out;
}

std::vector<OrbitPoint> orbit_probe(const InvariantContext& ctx, const LatticeSample& lattice, const AlgElement& h,
                                    const std::vector<Rational>& ts, int enumeration_bound) {
  lattice.validate();
  if (h.algebra() != ctx.algebra()) throw InvalidInput("torus direction belongs to a different algebra");
  Matrix cols = basis_columns(lattice.basis);
  std::size_t n = lattice.basis.size();
  int dim = ctx.algebra()->dim();
  std::vector<OrbitPoint> out;
  for (const auto& t : ts) {
    GroupElement a = torus_element(h, t);
    Matrix moved = a.matrix() * cols;
    // Exact determinant of Ad a on the span of the lattice.
    auto normal_inv = inverse(cols.transpose() * cols);
    std::optional<Matrix> action;
    if (normal_inv) action = *normal_inv * (cols.transpose() * moved);
    if (!action || !(cols * *action == moved)) throw PreconditionFailed("torus direction does not preserve the lattice span");
    double det_a = std::abs(to_double(determinant(*action)));

    std::vector<std::vector<double>> v(n, std::vector<double>(dim));
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < dim; ++k) v[i][k] = to_double(moved(k, i));
    std::vector<std::vector<double>> gram(n, std::vector<double>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (int k = 0; k < dim; ++k) gram[i][j] += v[i][k] * v[j][k];

    OrbitPoint p;
    p.t = t;
    p.covolume = std::sqrt(std::max(0.0, det_double(gram)));
    p.normalized_covolume = p.covolume / det_a;
    double best = INFINITY;
    std::vector<int> c(n, -enumeration_bound);
    for (;;) {
      bool nonzero = false;
      for (int x : c) nonzero = nonzero || x != 0;
      if (nonzero) {
        double len2 = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) len2 += c[i] * c[j] * gram[i][j];
        best = std::min(best, len2);
      }
      int k = static_cast<int>(n) - 1;
      while (k >= 0 && c[k] == enumeration_bound) c[k--] = -enumeration_bound;
      if (k < 0) break;
      ++c[k];
    }
    p.shortest = std::sqrt(best);
    // Outside the box |c|_2 >= bound + 1, so |v|^2 >= lambda_min (bound + 1)^2.
    double lambda_min = 1.0 / inverse_frobenius(gram);
    double reach = lambda_min * (enumeration_bound + 1) * (enumeration_bound + 1);
    p.certified = reach >= best;
    out.push_back(p);
  }
  return out;
}

json to_json(const OrbitPoint& p) {
  return {{"t", to_string(p.t)},
          {"covolume", p.covolume},
          {"normalized_covolume", p.normalized_covolume},
          {"shortest", p.shortest},
          {"certified", p.certified},
          {"approximate", true}};
}

json run_lab(const json& config) {
  InvariantContext ctx = context_from_json(config);
  auto get_int = [&](const char* key, int fallback) {
    if (!config.contains(key)) return fallback;
    if (!config[key].is_number_integer()) throw InvalidInput(std::string("lab config: \"") + key + "\" must be an integer");
    return config[key].get<int>();
  };
  std::uint64_t seed = config.contains("seed") ? config["seed"].get<std::uint64_t>() : 42;
  std::string kind = config.value("lattice", std::string("integer"));
  if (kind != "integer") throw InvalidInput("lab config: only the \"integer\" lattice is supported");
  int height = get_int("height", 3);
  int words = get_int("words", 100);
  int word_length = get_int("word_length", 6);

  LatticeSample lattice = integer_lattice(ctx.decomposition(), height);
  json out;
  out["context"] = to_json(ctx);
  out["seed"] = seed;
  out["lattice"] = {{"kind", kind}, {"rank", lattice.basis.size()}, {"height", height}, {"lie_lattice", lattice.lie_lattice}};
  out["F_on_lattice"] = to_json(value_set_discreteness(F_on_lattice(ctx, lattice)));
  GroupSampler sampler = unit_generators(ctx.decomposition(), word_length, seed);
  out["phi_on_words"] = to_json(value_set_discreteness(phi_gamma_sampler(ctx, sampler, words)));
  out["phi_on_words"]["word_length"] = word_length;
  if (config.contains("orbit")) {
    const auto& o = config["orbit"];
    std::vector<Rational> ts;
    for (const auto& t : o.at("t")) ts.push_back(rational_from_json(t, "orbit.t"));
    int bound = o.value("bound", 2);
    LatticeSample small = integer_lattice(ctx.decomposition(), bound);
    json pts = json::array();
    for (const auto& p : orbit_probe(ctx, small, ctx.h_theta(), ts, bound)) pts.push_back(to_json(p));
    out["orbit"] = pts;
  }
  return out;
}

}  // namespace horolib
