#include <functional>

#include "horolib/error.hpp"
#include "horolib/invariants.hpp"
#include "horolib/sampling.hpp"

namespace horolib {

namespace {

enum class Row { sl_middle, so_first, sp_last, so_even_end };

Row identify_row(const InvariantContext& ctx) {
  const auto& alg = ctx.algebra();
  const auto& th = ctx.theta().indices();
  int r = alg->rank();
  if (ctx.is_commutative() && th.size() == 1) {
    int i = th[0];
    switch (alg->family()) {
      case Family::sl:
        if (alg->size() % 2 == 0 && i == alg->size() / 2 - 1) return Row::sl_middle;
        break;
      case Family::sp:
        if (i == r - 1) return Row::sp_last;
        break;
      case Family::so_odd:
        if (i == 0) return Row::so_first;
        break;
      case Family::so_even:
        if (i == 0) return Row::so_first;
        if (i == r - 1 && r % 2 == 0) return Row::so_even_end;
        break;
    }
  }
  throw Unsupported(ctx.name() + " is not one of the realized closed-form rows");
}

Matrix square_block(const Matrix& m, int r0, int c0, int n) {
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = m(r0 + i, c0 + j);
  return out;
}

// Zero outside rows [r0, r0+nr) x cols [c0, c0+nc).
bool supported_in(const Matrix& m, int r0, int nr, int c0, int nc) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      bool inside = static_cast<int>(i) >= r0 && static_cast<int>(i) < r0 + nr && static_cast<int>(j) >= c0 &&
                    static_cast<int>(j) < c0 + nc;
      if (!inside && sgn(m(i, j)) != 0) return false;
    }
  return true;
}

Matrix antidiagonal(int n) {
  Matrix k(n, n);
  for (int i = 0; i < n; ++i) k(i, n - 1 - i) = 1;
  return k;
}

struct RowModel {
  std::string label;
  // Closed forms of F and G, up to a constant; nullopt if X, Y do not have the expected shape.
  std::function<std::optional<Rational>(const Matrix&)> f;
  std::function<std::optional<Rational>(const Matrix&, const Matrix&)> g;
  int power = 0;  // exponent n of the so row
};

RowModel model_for(Row row, int size) {
  RowModel m;
  switch (row) {
    case Row::sl_middle:
    case Row::sp_last:
    case Row::so_even_end: {
      int n = size / 2;
      int e = row == Row::sl_middle ? 2 * n : row == Row::sp_last ? n + 1 : n - 1;
      m.label = row == Row::sl_middle   ? "(det X)^" + std::to_string(e)
                : row == Row::sp_last   ? "(det S)^" + std::to_string(e) + ", S symmetric"
                                        : "(det X)^" + std::to_string(e) + ", KX antisymmetric";
      auto shape_ok = [row, n](const Matrix& b) {
        if (row == Row::sp_last) return b == b.transpose();
        if (row == Row::so_even_end) {
          Matrix c = antidiagonal(n) * b;
          return c == Rational(-1) * c.transpose();
        }
        return true;
      };
      m.f = [=](const Matrix& x) -> std::optional<Rational> {
        if (!supported_in(x, 0, n, n, n)) return std::nullopt;
        Matrix b = square_block(x, 0, n, n);
        if (!shape_ok(b)) return std::nullopt;
        return pow(determinant(b), e);
      };
      m.g = [=](const Matrix& x, const Matrix& y) -> std::optional<Rational> {
        if (!supported_in(x, 0, n, n, n) || !supported_in(y, n, n, 0, n)) return std::nullopt;
        Matrix b = square_block(x, 0, n, n), c = square_block(y, n, 0, n);
        if (!shape_ok(b)) return std::nullopt;
        return pow(determinant(Matrix::identity(n) + b * c), e);
      };
      break;
    }
    case Row::so_first: {
      int k = size - 2;
      m.power = k;
      m.label = "q(X)^" + std::to_string(k) + ", q split on the first row";
      auto q = [k](const std::vector<Rational>& v) {
        Rational s = 0;
        for (int a = 0; a < k; ++a) s += v[a] * v[k - 1 - a];
        return s;
      };
      m.f = [=](const Matrix& x) -> std::optional<Rational> {
        std::vector<Rational> xs(k);
        for (int a = 0; a < k; ++a) xs[a] = x(0, a + 1);
        return pow(q(xs), k);
      };
      m.g = [=](const Matrix& x, const Matrix& y) -> std::optional<Rational> {
        std::vector<Rational> xs(k), ys(k);
        Rational b = 0;
        for (int a = 0; a < k; ++a) {
          xs[a] = x(0, a + 1);
          ys[a] = y(a + 1, 0);
          b += xs[a] * ys[a];
        }
        return pow(1 + b + make_rational(1, 4) * q(xs) * q(ys), k);
      };
      break;
    }
  }
  return m;
}

struct Proportionality {
  std::string name;
  std::string form;
  Rational ratio = 0;
  int total = 0;
  bool ok = true;
  nlohmann::json witness;

  void add(const std::optional<Rational>& closed, const Rational& value, int sample) {
    ++total;
    if (!ok) return;
    auto fail = [&](const std::string& why) {
      ok = false;
      witness = {{"sample", sample}, {"reason", why}, {"value", to_string(value)}};
      if (closed) witness["closed_form"] = to_string(*closed);
    };
    if (!closed) return fail("sample does not have the expected block shape");
    if (sgn(ratio) == 0) {
      if (sgn(*closed) == 0) {
        if (sgn(value) != 0) fail("closed form vanishes but the invariant does not");
        return;
      }
      ratio = value / *closed;
      if (sgn(ratio) == 0) fail("invariant vanishes at a point where the closed form does not");
      return;
    }
    if (value != ratio * *closed) fail("value differs from ratio * closed form (ratio " + to_string(ratio) + ")");
  }
  CheckResult result() const {
    bool passed = ok && sgn(ratio) != 0;
    std::string detail = form + " on " + std::to_string(total) + " points";
    if (sgn(ratio) != 0) detail += ", ratio " + to_string(ratio);
    nlohmann::json w = witness;
    if (ok && !passed) w = {{"reason", "closed form vanished at every sample"}};
    return {name, passed, detail, passed ? nlohmann::json() : w};
  }
};

}  // namespace

Report table1_closed_form_check(const InvariantContext& ctx, std::uint64_t seed, int points) {
  Row row = identify_row(ctx);
  RowModel model = model_for(row, ctx.algebra()->size());
  const auto& dec = ctx.decomposition();
  Sampler smp(seed);
  Proportionality pf{"F_closed_form", "F ~ " + model.label};
  Proportionality pg{"G_closed_form", "G ~ closed form"};
  for (int k = 0; k < points; ++k) {
    AlgElement x = smp.in_u(dec), y = smp.in_um(dec);
    Matrix xm = to_defining_matrix(x), ym = to_defining_matrix(y);
    pf.add(model.f(xm), F(ctx, x), k);
    pg.add(model.g(xm, ym), G(ctx, x, y), k);
  }
  Report r;
  r.add(pf.result());
  r.add(pg.result());
  if (row == Row::so_first) {
    int n = model.power;
    int good = 0;
    nlohmann::json witness;
    for (int k = 0; k < points; ++k) {
      AlgElement x = smp.in_u(dec), y = smp.in_u(dec);
      Rational fx = F(ctx, x);
      bool ok = false;
      if (sgn(fx) != 0) {
        UniPoly p = F_along_line(ctx, x, y);
        UniPoly root;
        ok = p.degree() <= 2 * n && is_perfect_power(p * (Rational(1) / fx), static_cast<unsigned>(n), &root) && root.degree() <= 2;
      }
      if (ok) {
        ++good;
      } else if (witness.is_null()) {
        witness = {{"sample", k}, {"F(X)", to_string(fx)}};
      }
    }
    r.add({"F_line_perfect_power", good == points,
           "t -> F(X + tY)/F(X) is a quadratic to the power " + std::to_string(n) + " on " + std::to_string(good) +
               "/" + std::to_string(points) + " lines",
           witness});
  }
  return r;
}

}  // namespace horolib
