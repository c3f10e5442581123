#include "horolib/splitlie.hpp"

#include <algorithm>
#include <regex>

#include "horolib/error.hpp"

namespace horolib {

// ---------------------------------------------------------------- descriptor

std::string AlgebraDescriptor::family_name() const {
  switch (family) {
    case Family::sl: return "sl";
    case Family::so_odd: return "so_odd";
    case Family::so_even: return "so_even";
    case Family::sp: return "sp";
  }
  return "?";
}

std::string AlgebraDescriptor::short_name() const {
  std::string f = family == Family::sl ? "sl" : family == Family::sp ? "sp" : "so";
  return f + std::to_string(size);
}

AlgebraDescriptor AlgebraDescriptor::parse(const std::string& text) {
  static const std::regex re(R"(^\s*(sl|sp|so|so_odd|so_even)\s*[:_]?\s*(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw InvalidInput("unknown algebra '" + text + "'");
  AlgebraDescriptor d;
  d.size = std::stoi(m[2]);
  std::string f = m[1];
  if (f == "sl") {
    d.family = Family::sl;
  } else if (f == "sp") {
    d.family = Family::sp;
  } else if (f == "so_odd") {
    d.family = Family::so_odd;
  } else if (f == "so_even") {
    d.family = Family::so_even;
  } else {
    d.family = d.size % 2 ? Family::so_odd : Family::so_even;
  }
  return d;
}

// ---------------------------------------------------------------- construction

namespace {

using EntryMap = std::map<std::pair<int, int>, Rational>;

void validate(const AlgebraDescriptor& d) {
  int n = d.size;
  bool ok = false;
  int rank = 0;
  switch (d.family) {
    case Family::sl:
      ok = n >= 2;
      rank = n - 1;
      break;
    case Family::sp:
      ok = n >= 4 && n % 2 == 0;
      rank = n / 2;
      break;
    case Family::so_odd:
      ok = n >= 5 && n % 2 == 1;
      rank = (n - 1) / 2;
      break;
    case Family::so_even:
      ok = n >= 8 && n % 2 == 0;
      rank = n / 2;
      break;
  }
  if (!ok) throw Unsupported("unsupported matrix size " + std::to_string(n) + " for family " + d.family_name());
  if (rank > 8) throw Unsupported("rank " + std::to_string(rank) + " exceeds the supported bound 8");
}

EntryMap sparse_product(const std::vector<MatrixEntry>& a, const std::vector<MatrixEntry>& b) {
  EntryMap out;
  for (const auto& x : a)
    for (const auto& y : b)
      if (x.col == y.row) out[{x.row, y.col}] += x.value * y.value;
  return out;
}

EntryMap commutator(const std::vector<MatrixEntry>& a, const std::vector<MatrixEntry>& b) {
  EntryMap ab = sparse_product(a, b);
  for (auto& [pos, v] : sparse_product(b, a)) ab[pos] -= v;
  for (auto it = ab.begin(); it != ab.end();) it = sgn(it->second) == 0 ? ab.erase(it) : std::next(it);
  return ab;
}

std::vector<MatrixEntry> to_entries(const EntryMap& m) {
  std::vector<MatrixEntry> out;
  for (const auto& [pos, v] : m)
    if (sgn(v) != 0) out.push_back({pos.first, pos.second, v});
  return out;
}

}  // namespace

AlgebraPtr build_algebra_with_faults(const AlgebraDescriptor& desc, const std::optional<StructureFault>& sf,
                                     const std::optional<CartanFault>& cf) {
  validate(desc);
  auto alg = std::shared_ptr<SplitLieAlgebra>(new SplitLieAlgebra());
  alg->desc_ = desc;
  const int N = desc.size;
  const Family fam = desc.family;
  const int n = fam == Family::sl ? N - 1 : fam == Family::so_odd ? (N - 1) / 2 : N / 2;
  alg->rank_ = n;
  const char type = fam == Family::sl ? 'A' : fam == Family::so_odd ? 'B' : fam == Family::sp ? 'C' : 'D';

  auto cartan_rows = CartanMatrix::of_type(type, n).rows();
  if (cf) {
    if (cf->i < 0 || cf->i >= n || cf->j < 0 || cf->j >= n) throw InvalidInput("Cartan fault index out of range");
    cartan_rows[cf->i][cf->j] += cf->delta;
  }
  alg->rs_ = generate_roots(CartanMatrix::from_rows(cartan_rows));

  // J e_k = sign[k] e_{perm[k]}; the algebra is { X : X^T J + J X = 0 }.
  std::vector<int> perm(N), sign(N, 1), inv(N);
  for (int k = 0; k < N; ++k) {
    if (fam == Family::sp) {
      perm[k] = k < n ? n + k : k - n;
      sign[k] = k < n ? -1 : 1;
    } else {
      perm[k] = N - 1 - k;
    }
  }
  for (int k = 0; k < N; ++k) inv[perm[k]] = k;

  const int m = fam == Family::sl ? N : n;
  auto eps = [&](int a) {
    std::vector<int> v(m, 0);
    if (fam == Family::sl) {
      v[a] = 1;
    } else if (a < n) {
      v[a] = 1;
    } else if (fam == Family::sp) {
      v[a - n] = -1;
    } else if (!(fam == Family::so_odd && a == n)) {
      v[N - 1 - a] = -1;
    }
    return v;
  };
  // Simple roots in epsilon coordinates, as columns.
  Matrix simple(m, n);
  for (int i = 0; i + 1 < (fam == Family::sl ? N : n); ++i) {
    simple(i, i) = 1;
    simple(i + 1, i) = -1;
  }
  if (fam == Family::so_odd) simple(n - 1, n - 1) = 1;
  if (fam == Family::sp) simple(n - 1, n - 1) = 2;
  if (fam == Family::so_even) {
    simple(n - 2, n - 1) = 1;
    simple(n - 1, n - 1) = 1;
  }

  struct RootVector {
    Root root;
    std::pair<int, int> pivot;
    std::vector<MatrixEntry> entries;
  };
  std::map<Root, RootVector> found;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      if (a == b) continue;
      auto ea = eps(a), eb = eps(b);
      Vector w(m);
      bool zero = true;
      for (int k = 0; k < m; ++k) {
        w[k] = ea[k] - eb[k];
        zero = zero && ea[k] == eb[k];
      }
      if (zero) continue;
      EntryMap mat;
      mat[{a, b}] += 1;
      if (fam != Family::sl) mat[{inv[b], inv[a]}] += -sign[inv[b]] * sign[inv[a]];
      Rational lead = mat[{a, b}];
      if (sgn(lead) == 0) continue;
      auto k = solve(simple, w);
      if (!k) throw Error("weight outside the root lattice");
      Root r;
      for (const auto& x : *k) {
        if (!is_integer(x)) throw Error("non-integral weight coordinates");
        r.coords.push_back(static_cast<int>(x.get_num().get_si()));
      }
      if (found.count(r)) continue;
      for (auto& [pos, v] : mat) v /= lead;
      found[r] = {r, {a, b}, to_entries(mat)};
    }

  // Basis: negative roots (highest first), coroots, positive roots.
  std::vector<Root> positives;
  for (const auto& [r, rv] : found) {
    if (r.is_positive()) {
      positives.push_back(r);
    } else if (!(-r).is_positive()) {
      alg->consistent_ = false;
    }
  }
  std::sort(positives.begin(), positives.end(), [](const Root& x, const Root& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x.coords > y.coords;
  });
  if (positives != alg->rs_.positive_roots() || found.size() != 2 * positives.size()) alg->consistent_ = false;
  if (!alg->consistent_ && !cf) throw Error("realized weights do not match the root system");

  auto add_root_vector = [&](const Root& r) {
    const auto& rv = found.at(r);
    BasisLabel l;
    l.root = r;
    l.name = "E[" + std::to_string(rv.pivot.first + 1) + "," + std::to_string(rv.pivot.second + 1) + "]";
    int idx = static_cast<int>(alg->labels_.size());
    alg->labels_.push_back(l);
    alg->mats_.push_back(rv.entries);
    alg->pivot_[rv.pivot] = idx;
    alg->root_index_[r] = idx;
  };
  for (auto it = positives.rbegin(); it != positives.rend(); ++it) add_root_vector(-*it);

  // Coroots H_i = 2 [e_i, f_i] / alpha_i([e_i, f_i]).
  for (int i = 0; i < n; ++i) {
    Root a{std::vector<int>(n, 0)};
    a.coords[i] = 1;
    if (!found.count(a) || !found.count(-a)) throw Error("missing simple root vector");
    EntryMap h = commutator(found.at(a).entries, found.at(-a).entries);
    Rational value = 0;
    for (const auto& [pos, v] : h) {
      if (pos.first != pos.second) throw Error("[e_i, f_i] is not diagonal");
      if (pos.first < m) value += simple(pos.first, i) * v;
    }
    if (sgn(value) == 0) throw Error("degenerate coroot");
    for (auto& [pos, v] : h) v *= Rational(2) / value;
    BasisLabel l;
    l.is_cartan = true;
    l.cartan_index = i;
    l.root = Root{std::vector<int>(n, 0)};
    l.name = "H[" + std::to_string(i + 1) + "]";
    alg->cartan_idx_.push_back(static_cast<int>(alg->labels_.size()));
    alg->labels_.push_back(l);
    alg->mats_.push_back(to_entries(h));
  }
  for (const auto& r : positives) add_root_vector(r);
  for (int k = 0; k < alg->dim(); ++k) alg->label_index_[alg->labels_[k].name] = k;

  // Diagonal positions 0..n-1 determine the coroot coefficients.
  Matrix c(n, n);
  for (int i = 0; i < n; ++i)
    for (const auto& e : alg->mats_[alg->cartan_idx_[i]])
      if (e.row < n) c(e.row, i) = e.value;
  auto solver = inverse(c);
  if (!solver) throw Error("coroot diagonal block is singular");
  alg->cartan_solver_ = *solver;
  for (int r = 0; r < n; ++r) alg->cartan_rows_.push_back(r);

  const int dim = alg->dim();
  alg->table_.assign(static_cast<std::size_t>(dim) * dim, {});
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) {
      Vector v = alg->coordinates_sparse(commutator(alg->mats_[a], alg->mats_[b]), true);
      SparseVector sv, neg;
      for (int k = 0; k < dim; ++k)
        if (sgn(v[k]) != 0) {
          sv.push_back({k, v[k]});
          neg.push_back({k, -v[k]});
        }
      alg->table_[a * dim + b] = std::move(sv);
      alg->table_[b * dim + a] = std::move(neg);
    }
  if (sf) {
    if (sf->a < 0 || sf->a >= dim || sf->b < 0 || sf->b >= dim || sf->c < 0 || sf->c >= dim)
      throw InvalidInput("structure fault index out of range");
    auto bump = [&](int a, int b, const Rational& delta) {
      auto& entry = alg->table_[a * dim + b];
      auto it = std::find_if(entry.begin(), entry.end(), [&](const SparseEntry& e) { return e.index == sf->c; });
      if (it == entry.end()) {
        entry.push_back({sf->c, delta});
        std::sort(entry.begin(), entry.end(), [](const SparseEntry& x, const SparseEntry& y) { return x.index < y.index; });
      } else {
        it->value += delta;
        if (sgn(it->value) == 0) entry.erase(it);
      }
    };
    bump(sf->a, sf->b, sf->delta);
    if (sf->paired && sf->a != sf->b) bump(sf->b, sf->a, -sf->delta);
  }

  // Killing form tr(ad e_a ad e_b); only pairs of opposite weight can pair.
  alg->killing_ = Matrix(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = a; b < dim; ++b) {
      if (!(alg->labels_[a].root + alg->labels_[b].root).is_zero()) continue;
      if (alg->labels_[a].is_cartan != alg->labels_[b].is_cartan) continue;
      Rational tr = 0;
      for (int d = 0; d < dim; ++d)
        for (const auto& [cidx, v] : alg->table_[b * dim + d])
          for (const auto& [e, w] : alg->table_[a * dim + cidx])
            if (e == d) tr += v * w;
      alg->killing_(a, b) = tr;
      alg->killing_(b, a) = tr;
    }
  return alg;
}

AlgebraPtr build_algebra(const AlgebraDescriptor& desc) { return build_algebra_with_faults(desc, {}, {}); }

AlgebraPtr build_algebra(Family family, int size) { return build_algebra(AlgebraDescriptor{family, size}); }

// ---------------------------------------------------------------- queries

std::optional<int> SplitLieAlgebra::find_label(const std::string& name) const {
  auto it = label_index_.find(name);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

int SplitLieAlgebra::index_of_root(const Root& r) const {
  auto it = root_index_.find(r);
  if (it == root_index_.end()) throw InvalidInput("not a root of " + name());
  return it->second;
}

std::vector<int> SplitLieAlgebra::positive_indices() const {
  std::vector<int> out;
  for (int k = 0; k < dim(); ++k)
    if (!labels_[k].is_cartan && labels_[k].root.is_positive()) out.push_back(k);
  return out;
}

std::vector<int> SplitLieAlgebra::negative_indices() const {
  std::vector<int> out;
  for (int k = 0; k < dim(); ++k)
    if (!labels_[k].is_cartan && !labels_[k].root.is_positive()) out.push_back(k);
  return out;
}

int SplitLieAlgebra::root_value(int root_index, int cartan) const {
  for (const auto& e : bracket_basis(cartan_idx_[cartan], root_index))
    if (e.index == root_index) return static_cast<int>(e.value.get_num().get_si());
  return 0;
}

Matrix SplitLieAlgebra::defining_matrix(int k) const {
  Matrix m(size(), size());
  for (const auto& e : mats_[k]) m(e.row, e.col) = e.value;
  return m;
}

Vector SplitLieAlgebra::coordinates_sparse(const EntryMap& entries, bool check) const {
  Vector v(dim());
  Vector diag(rank_);
  for (const auto& [pos, x] : entries) {
    if (sgn(x) == 0) continue;
    if (pos.first == pos.second) {
      if (pos.first < rank_) diag[pos.first] = x;
      continue;
    }
    auto it = pivot_.find(pos);
    if (it != pivot_.end()) v[it->second] = x;
  }
  Vector h = cartan_solver_ * diag;
  for (int i = 0; i < rank_; ++i) v[cartan_idx_[i]] = h[i];
  if (check) {
    EntryMap rebuilt;
    for (int k = 0; k < dim(); ++k)
      if (sgn(v[k]) != 0)
        for (const auto& e : mats_[k]) rebuilt[{e.row, e.col}] += v[k] * e.value;
    for (auto it = rebuilt.begin(); it != rebuilt.end();) it = sgn(it->second) == 0 ? rebuilt.erase(it) : std::next(it);
    EntryMap target;
    for (const auto& [pos, x] : entries)
      if (sgn(x) != 0) target[pos] = x;
    if (rebuilt != target) {
      for (const auto& [pos, x] : target)
        if (!rebuilt.count(pos) || rebuilt.at(pos) != x)
          throw InvalidInput("matrix is not in " + name() + ": entry (" + std::to_string(pos.first + 1) + "," +
                             std::to_string(pos.second + 1) + ")");
      throw InvalidInput("matrix is not in " + name());
    }
  }
  return v;
}

Vector SplitLieAlgebra::coordinates(const Matrix& m) const {
  if (static_cast<int>(m.rows()) != size() || static_cast<int>(m.cols()) != size())
    throw InvalidInput("matrix size does not match " + name());
  EntryMap entries;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (sgn(m(i, j)) != 0) entries[{i, j}] = m(i, j);
  return coordinates_sparse(entries, true);
}

// ---------------------------------------------------------------- elements

AlgElement::AlgElement(AlgebraPtr alg) : alg_(std::move(alg)), c_(alg_->dim()) {}

AlgElement::AlgElement(AlgebraPtr alg, Vector coeffs) : alg_(std::move(alg)), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != alg_->dim()) throw InvalidInput("coefficient vector has the wrong length");
}

AlgElement AlgElement::basis(const AlgebraPtr& alg, int k, const Rational& c) {
  AlgElement x(alg);
  x.c_.at(k) = c;
  return x;
}

namespace {

void same_algebra(const AlgElement& x, const AlgElement& y) {
  if (x.algebra() != y.algebra()) throw InvalidInput("elements belong to different algebras");
}

}  // namespace

AlgElement& AlgElement::operator+=(const AlgElement& o) {
  same_algebra(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (sgn(o.c_[k]) != 0) c_[k] += o.c_[k];
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
  same_algebra(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (sgn(o.c_[k]) != 0) c_[k] -= o.c_[k];
  return *this;
}

AlgElement& AlgElement::operator*=(const Rational& c) {
  for (auto& x : c_)
    if (sgn(x) != 0) x *= c;
  return *this;
}

AlgElement bracket(const AlgElement& x, const AlgElement& y) {
  same_algebra(x, y);
  const auto& alg = x.algebra();
  AlgElement out(alg);
  int dim = alg->dim();
  for (int a = 0; a < dim; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (int b = 0; b < dim; ++b) {
      if (sgn(y[b]) == 0) continue;
      Rational f = x[a] * y[b];
      for (const auto& e : alg->bracket_basis(a, b)) out[e.index] += f * e.value;
    }
  }
  return out;
}

Matrix ad_matrix(const AlgElement& x) {
  const auto& alg = x.algebra();
  int dim = alg->dim();
  Matrix m(dim, dim);
  for (int a = 0; a < dim; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (int k = 0; k < dim; ++k)
      for (const auto& e : alg->bracket_basis(a, k)) m(e.index, k) += x[a] * e.value;
  }
  return m;
}

Rational killing(const AlgElement& x, const AlgElement& y) {
  same_algebra(x, y);
  return dot(x.coeffs(), x.algebra()->killing_matrix() * y.coeffs());
}

AlgElement h_theta_element(const AlgebraPtr& alg, const ThetaSet& theta) {
  int n = alg->rank();
  for (int i : theta.indices())
    if (i >= n) throw InvalidInput("theta index " + std::to_string(i + 1) + " exceeds the rank of " + alg->name());
  Matrix a(n, n);
  Vector rhs(n);
  for (int i = 0; i < n; ++i) {
    Root r{std::vector<int>(n, 0)};
    r.coords[i] = 1;
    int k = alg->index_of_root(r);
    for (int j = 0; j < n; ++j) a(i, j) = alg->root_value(k, j);
    rhs[i] = theta.contains(i) ? 1 : 0;
  }
  auto c = solve(a, rhs);
  if (!c) throw Error("h_theta is not determined by the simple roots");
  AlgElement h(alg);
  for (int j = 0; j < n; ++j) h[alg->cartan_indices()[j]] = (*c)[j];
  return h;
}

Matrix to_defining_matrix(const AlgElement& x) {
  const auto& alg = x.algebra();
  Matrix m(alg->size(), alg->size());
  for (int k = 0; k < alg->dim(); ++k)
    if (sgn(x[k]) != 0) m += x[k] * alg->defining_matrix(k);
  return m;
}

AlgElement from_defining_matrix(const AlgebraPtr& alg, const Matrix& m) { return AlgElement(alg, alg->coordinates(m)); }

}  // namespace horolib
