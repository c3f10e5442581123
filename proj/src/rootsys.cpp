#include "horolib/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>

#include "horolib/error.hpp"

namespace horolib {

// ---------------------------------------------------------------- Cartan

CartanMatrix CartanMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  CartanMatrix c;
  c.rank_ = static_cast<int>(rows.size());
  if (c.rank_ == 0) throw InvalidInput("Cartan matrix of rank 0");
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c.rank_) throw InvalidInput("Cartan matrix is not square");
    c.a_.insert(c.a_.end(), row.begin(), row.end());
  }
  for (int i = 0; i < c.rank_; ++i) {
    if (c(i, i) != 2) throw InvalidInput("Cartan matrix diagonal entry " + std::to_string(i + 1) + " is not 2");
    for (int j = 0; j < c.rank_; ++j) {
      if (i == j) continue;
      if (c(i, j) > 0)
        throw InvalidInput("Cartan matrix entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ") is positive");
      if ((c(i, j) == 0) != (c(j, i) == 0))
        throw InvalidInput("Cartan matrix zero pattern is not symmetric at (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ")");
    }
  }
  return c;
}

CartanMatrix CartanMatrix::of_type(char type, int rank) {
  std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  switch (type) {
    case 'A':
      if (rank < 1) throw InvalidInput("A_r needs r >= 1");
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
      break;
    case 'B':
      if (rank < 2) throw InvalidInput("B_r needs r >= 2");
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
      a[rank - 2][rank - 1] = -2;
      break;
    case 'C':
      if (rank < 2) throw InvalidInput("C_r needs r >= 2");
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
      a[rank - 1][rank - 2] = -2;
      break;
    case 'D':
      if (rank < 4) throw InvalidInput("D_r needs r >= 4");
      for (int i = 0; i + 2 < rank; ++i) link(i, i + 1);
      link(rank - 3, rank - 1);
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw InvalidInput("E_r needs 6 <= r <= 8");
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < rank; ++i) link(i, i + 1);
      break;
    case 'F':
      if (rank != 4) throw InvalidInput("F_r needs r = 4");
      link(0, 1);
      link(2, 3);
      a[1][2] = -2;
      a[2][1] = -1;
      break;
    case 'G':
      if (rank != 2) throw InvalidInput("G_r needs r = 2");
      a[0][1] = -1;
      a[1][0] = -3;
      break;
    default:
      throw InvalidInput(std::string("unknown Cartan type '") + type + "'");
  }
  return from_rows(a);
}

CartanMatrix CartanMatrix::direct_sum(const CartanMatrix& x, const CartanMatrix& y) {
  int n = x.rank() + y.rank();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < x.rank(); ++i)
    for (int j = 0; j < x.rank(); ++j) a[i][j] = x(i, j);
  for (int i = 0; i < y.rank(); ++i)
    for (int j = 0; j < y.rank(); ++j) a[x.rank() + i][x.rank() + j] = y(i, j);
  return from_rows(a);
}

CartanMatrix CartanMatrix::restrict_to(const std::vector<int>& nodes) const {
  CartanMatrix c;
  c.rank_ = static_cast<int>(nodes.size());
  for (int i : nodes)
    for (int j : nodes) c.a_.push_back((*this)(i, j));
  return c;
}

std::vector<std::vector<int>> CartanMatrix::rows() const {
  std::vector<std::vector<int>> r(rank_);
  for (int i = 0; i < rank_; ++i) r[i].assign(a_.begin() + i * rank_, a_.begin() + (i + 1) * rank_);
  return r;
}

// ---------------------------------------------------------------- Root

int Root::height() const {
  int h = 0;
  for (int k : coords) h += k;
  return h;
}

bool Root::is_positive() const {
  bool any = false;
  for (int k : coords) {
    if (k < 0) return false;
    any = any || k > 0;
  }
  return any;
}

bool Root::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int k) { return k == 0; });
}

Root Root::operator-() const {
  Root r = *this;
  for (int& k : r.coords) k = -k;
  return r;
}

Root Root::operator+(const Root& other) const {
  Root r = *this;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += other.coords[i];
  return r;
}

Root Root::operator-(const Root& other) const { return *this + (-other); }

// ---------------------------------------------------------------- ThetaSet

ThetaSet::ThetaSet(std::vector<int> indices) : idx_(std::move(indices)) {
  std::sort(idx_.begin(), idx_.end());
  idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
  if (!idx_.empty() && idx_.front() < 0) throw InvalidInput("negative simple root index");
}

ThetaSet ThetaSet::from_one_based(const std::vector<int>& indices) {
  std::vector<int> z;
  for (int i : indices) {
    if (i < 1) throw InvalidInput("simple root indices start at 1");
    z.push_back(i - 1);
  }
  return ThetaSet(z);
}

bool ThetaSet::contains(int i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }

std::vector<int> ThetaSet::one_based() const {
  std::vector<int> v;
  for (int i : idx_) v.push_back(i + 1);
  return v;
}

std::string ThetaSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < idx_.size(); ++k) os << (k ? "," : "") << idx_[k] + 1;
  os << '}';
  return os.str();
}

std::string Component::label() const { return std::string(1, type) + std::to_string(rank); }

// ---------------------------------------------------------------- RootSystem

int RootSystem::component_of(int node) const {
  if (node < 0 || node >= rank()) throw InvalidInput("simple root index out of range");
  return node_component_[node];
}

std::string RootSystem::type_label() const {
  std::string s;
  for (std::size_t c = 0; c < components_.size(); ++c) s += (c ? "x" : "") + components_[c].label();
  return s;
}

std::optional<int> RootSystem::positive_index(const Root& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const Root& r) const {
  if (r.is_zero()) return false;
  return index_.count(r.is_positive() ? r : -r) > 0;
}

Root RootSystem::simple_root(int i) const {
  Root r{std::vector<int>(rank(), 0)};
  r.coords[i] = 1;
  return r;
}

Root RootSystem::reflect(int i, const Root& r) const {
  int pairing = 0;
  for (int j = 0; j < rank(); ++j) pairing += r.coords[j] * cartan_(j, i);
  Root out = r;
  out.coords[i] -= pairing;
  return out;
}

namespace {

constexpr std::size_t kRootCap = 10000;

std::vector<std::vector<int>> connected_components(const CartanMatrix& c) {
  int n = c.rank();
  std::vector<int> seen(n, -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s] >= 0) continue;
    std::vector<int> nodes;
    std::deque<int> q{s};
    seen[s] = static_cast<int>(comps.size());
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      nodes.push_back(i);
      for (int j = 0; j < n; ++j)
        if (j != i && c(i, j) != 0 && seen[j] < 0) {
          seen[j] = seen[s];
          q.push_back(j);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    comps.push_back(nodes);
  }
  return comps;
}

char detect_type(const CartanMatrix& sub, std::size_t positive_count) {
  int r = sub.rank();
  std::size_t n = positive_count;
  if (r == 1) return 'A';
  int lace = 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j) lace = std::max(lace, sub(i, j) * sub(j, i));
  if (lace == 3) return 'G';
  if (lace == 1) {
    auto ur = static_cast<std::size_t>(r);
    if (n == ur * (ur + 1) / 2) return 'A';
    if (r >= 4 && n == ur * (ur - 1)) return 'D';
    if (n == 36 || n == 63 || n == 120) return 'E';
    return '?';
  }
  if (r == 4 && n == 24) return 'F';
  // Relative squared lengths from A_ij |a_j|^2 = A_ji |a_i|^2.
  std::vector<double> len(r, 0.0);
  len[0] = 1.0;
  std::deque<int> q{0};
  while (!q.empty()) {
    int i = q.front();
    q.pop_front();
    for (int j = 0; j < r; ++j)
      if (j != i && sub(i, j) != 0 && len[j] == 0.0) {
        len[j] = len[i] * sub(j, i) / sub(i, j);
        q.push_back(j);
      }
  }
  double shortest = *std::min_element(len.begin(), len.end());
  int short_count = 0;
  for (double l : len)
    if (std::abs(l - shortest) < 1e-9) ++short_count;
  if (r == 2) return std::abs(len[1] - shortest) < 1e-9 ? 'B' : 'C';
  return short_count == 1 ? 'B' : 'C';
}

std::vector<std::vector<int>> reflection_matrix(const CartanMatrix& c, int i) {
  // Column j holds s_i(alpha_j) = alpha_j - A_ji alpha_i.
  int n = c.rank();
  std::vector<std::vector<int>> s(n, std::vector<int>(n, 0));
  for (int j = 0; j < n; ++j) {
    s[j][j] = 1;
    s[i][j] -= c(j, i);
  }
  return s;
}

}  // namespace

RootSystem generate_roots(const CartanMatrix& cartan) {
  RootSystem rs;
  rs.cartan_ = cartan;
  int n = cartan.rank();
  std::set<Root> all;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root r{std::vector<int>(n, 0)};
    r.coords[i] = 1;
    all.insert(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root b = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Root g = rs.reflect(i, b);
      if (all.count(g)) continue;
      if (!g.is_positive() && !(-g).is_positive())
        throw NotFiniteType("Cartan matrix is not of finite type: mixed-sign root");
      if (all.size() >= kRootCap) throw NotFiniteType("Cartan matrix is not of finite type: more than 10000 roots");
      all.insert(g);
      queue.push_back(std::move(g));
    }
  }
  for (const auto& r : all)
    if (r.is_positive()) rs.positive_.push_back(r);
  std::sort(rs.positive_.begin(), rs.positive_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords > b.coords;
  });
  for (std::size_t k = 0; k < rs.positive_.size(); ++k) rs.index_[rs.positive_[k]] = static_cast<int>(k);

  rs.node_component_.assign(n, 0);
  for (const auto& nodes : connected_components(cartan)) {
    Component comp;
    comp.nodes = nodes;
    comp.rank = static_cast<int>(nodes.size());
    std::size_t count = 0;
    for (const auto& r : rs.positive_) {
      bool inside = true;
      for (int i = 0; i < n && inside; ++i)
        if (r.coords[i] != 0 && !std::binary_search(nodes.begin(), nodes.end(), i)) inside = false;
      if (inside) ++count;
    }
    comp.type = detect_type(cartan.restrict_to(nodes), count);
    for (int i : nodes) rs.node_component_[i] = static_cast<int>(rs.components_.size());
    rs.components_.push_back(comp);
  }

  // Greedy reduced word: append the lowest s_i with w(alpha_i) > 0.
  std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) w[i][i] = 1;
  for (;;) {
    int pick = -1;
    for (int i = 0; i < n && pick < 0; ++i) {
      bool positive = true;
      for (int k = 0; k < n; ++k)
        if (w[k][i] < 0) positive = false;
      if (positive) pick = i;
    }
    if (pick < 0) break;
    auto s = reflection_matrix(cartan, pick);
    std::vector<std::vector<int>> next(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int k = 0; k < n; ++k) next[a][b] += w[a][k] * s[k][b];
    w = std::move(next);
    rs.w0_word_.push_back(pick);
  }
  if (rs.w0_word_.size() != rs.positive_.size())
    throw Error("longest element word length differs from the number of positive roots");
  rs.iota_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int nonzero = 0;
    for (int k = 0; k < n; ++k) {
      if (w[k][i] == 0) continue;
      ++nonzero;
      if (w[k][i] == -1) rs.iota_[i] = k;
    }
    if (nonzero != 1 || rs.iota_[i] < 0) throw Error("-w0 does not permute the simple roots");
  }
  return rs;
}

RootSystem root_system(char type, int rank) { return generate_roots(CartanMatrix::of_type(type, rank)); }

Root highest_root(const RootSystem& rs, int component) {
  if (component < 0 || component >= static_cast<int>(rs.components().size()))
    throw InvalidInput("component index out of range");
  const auto& nodes = rs.components()[component].nodes;
  const Root* best = nullptr;
  std::vector<const Root*> members;
  for (const auto& r : rs.positive_roots()) {
    bool inside = true;
    for (int i = 0; i < rs.rank() && inside; ++i)
      if (r.coords[i] != 0 && rs.component_of(i) != component) inside = false;
    if (!inside) continue;
    members.push_back(&r);
    if (!best || r.height() > best->height()) best = &r;
  }
  for (const Root* r : members)
    for (int i : nodes)
      if (r->coords[i] > best->coords[i]) throw Error("highest root does not dominate the component");
  return *best;
}

Root highest_root(const RootSystem& rs) {
  if (!rs.is_irreducible())
    throw PreconditionFailed("root system " + rs.type_label() + " is reducible; pass a component");
  return highest_root(rs, 0);
}

int n_theta(const ThetaSet& theta, const Root& r) {
  int s = 0;
  for (int i : theta.indices()) {
    if (i >= static_cast<int>(r.coords.size())) throw InvalidInput("theta index exceeds the rank");
    s += r.coords[i];
  }
  return s;
}

LongestElement longest_element(const RootSystem& rs) { return {rs.w0_word(), rs.iota()}; }

ThetaGrading::ThetaGrading(const RootSystem& rs, ThetaSet theta) : theta_(std::move(theta)) {
  for (int i : theta_.indices())
    if (i >= rs.rank()) throw InvalidInput("theta index " + std::to_string(i + 1) + " exceeds the rank");
  for (const auto& r : rs.positive_roots()) s_ = std::max(s_, level(r));
  by_level_.assign(s_ + 1, {});
  for (const auto& r : rs.positive_roots()) by_level_[level(r)].push_back(r);
}

const std::vector<Root>& ThetaGrading::roots_at(int lvl) const {
  static const std::vector<Root> none;
  if (lvl < 0 || lvl >= static_cast<int>(by_level_.size())) return none;
  return by_level_[lvl];
}

ThetaGrading grading(const RootSystem& rs, const ThetaSet& theta) { return ThetaGrading(rs, theta); }

bool is_reflexive(const RootSystem& rs, const ThetaSet& theta) {
  std::vector<int> image;
  for (int i : theta.indices()) {
    if (i >= rs.rank()) throw InvalidInput("theta index exceeds the rank");
    image.push_back(rs.iota()[i]);
  }
  return ThetaSet(image) == theta;
}

bool is_reflexive_commutative(const RootSystem& rs, const ThetaSet& theta) {
  return !theta.empty() && grading(rs, theta).depth() == 1 && is_reflexive(rs, theta);
}

namespace {

std::optional<int> common_component(const RootSystem& rs, const ThetaSet& theta) {
  if (theta.empty()) return std::nullopt;
  int c = rs.component_of(theta.indices().front());
  for (int i : theta.indices())
    if (rs.component_of(i) != c) return std::nullopt;
  return c;
}

}  // namespace

bool is_heisenberg(const RootSystem& rs, const ThetaSet& theta) {
  auto c = common_component(rs, theta);
  if (!c) return false;
  ThetaGrading g(rs, theta);
  if (g.depth() != 2) return false;
  const auto& top = g.roots_at(2);
  return top.size() == 1 && top.front() == highest_root(rs, *c);
}

ThetaSet theta_zero(const RootSystem& rs, int component) {
  Root top = highest_root(rs, component);
  std::vector<int> out;
  for (int i : rs.components()[component].nodes)
    if (rs.is_root(top - rs.simple_root(i))) out.push_back(i);
  return ThetaSet(out);
}

ThetaSet heisenberg_theta(const RootSystem& rs, int component) {
  if (component < 0 || component >= static_cast<int>(rs.components().size()))
    throw InvalidInput("component index out of range");
  if (rs.components()[component].rank == 1)
    throw PreconditionFailed("type A1 has no Heisenberg grading: the largest root is also a simple root");
  ThetaSet t = theta_zero(rs, component);
  if (!is_heisenberg(rs, t)) throw Error("theta_0 does not define a Heisenberg grading");
  return t;
}

int check_heisenberg_sum(const RootSystem& rs, const ThetaSet& theta) {
  auto c = common_component(rs, theta);
  if (!c) throw PreconditionFailed("theta must be non-empty and inside one simple component");
  return n_theta(theta, highest_root(rs, *c));
}

std::vector<ThetaSet> classify_reflexive_commutative(const RootSystem& rs) {
  std::vector<ThetaSet> out;
  for (int c = 0; c < static_cast<int>(rs.components().size()); ++c) {
    Root top = highest_root(rs, c);
    for (int i : rs.components()[c].nodes)
      if (top.coords[i] == 1 && rs.iota()[i] == i) out.push_back(ThetaSet({i}));
  }
  return out;
}

ThetaSet reduction_step_theta(const RootSystem& rs, const ThetaSet& theta) {
  if (is_reflexive(rs, theta)) return theta;
  std::vector<int> complement;
  for (int i = 0; i < rs.rank(); ++i)
    if (!theta.contains(i)) complement.push_back(i);
  std::vector<int> result = theta.indices();
  if (complement.empty()) return theta;
  RootSystem levi = generate_roots(rs.cartan().restrict_to(complement));
  for (int i : theta.indices()) {
    int k = rs.iota()[i];
    if (theta.contains(k)) continue;
    auto pos = std::find(complement.begin(), complement.end(), k) - complement.begin();
    result.push_back(complement[levi.iota()[pos]]);
  }
  return ThetaSet(result);
}

ThetaSet theta_zero_reduction(const RootSystem& rs, const ThetaSet& theta) {
  auto c = common_component(rs, theta);
  if (!c) throw PreconditionFailed("theta must be non-empty and inside one simple component");
  int s = grading(rs, theta).depth();
  if (s < 3) throw PreconditionFailed("theta_0 reduction needs depth s >= 3, got " + std::to_string(s));
  ThetaSet t0 = theta_zero(rs, *c);
  std::vector<int> rest;
  for (int i : t0.indices())
    if (!theta.contains(i)) throw PreconditionFailed("theta_0 = " + t0.to_string() + " is not contained in theta");
  for (int i : theta.indices())
    if (!t0.contains(i)) rest.push_back(i);
  return ThetaSet(rest);
}

nlohmann::json to_json(const RootSystem& rs) {
  nlohmann::json j;
  j["type"] = rs.is_irreducible() ? std::string(1, rs.components()[0].type) : rs.type_label();
  j["rank"] = rs.rank();
  auto roots = nlohmann::json::array();
  for (const auto& r : rs.positive_roots()) roots.push_back(r.coords);
  j["positive_roots"] = roots;
  std::vector<int> perm;
  for (int k : rs.iota()) perm.push_back(k + 1);
  j["w0_perm"] = perm;
  return j;
}

}  // namespace horolib
