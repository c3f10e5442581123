#include "horolib/rational.hpp"

#include "horolib/error.hpp"

namespace horolib {

Rational make_rational(long num, long den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_int_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer to_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int_token(num) || !is_int_token(den) || den[0] == '-' || den[0] == '+')
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  return make_rational(to_integer(num), to_integer(den));
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational pow(const Rational& q, long e) {
  if (e < 0) {
    if (q == 0) throw InvalidInput("zero to a negative power");
    return pow(Rational(1) / q, -e);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

}  // namespace horolib
