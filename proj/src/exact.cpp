#include "lcylab/exact.hpp"

#include <stdexcept>

namespace lcylab {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text))
    throw std::invalid_argument("bad rational literal: " + std::string(text));
  if (slash == std::string_view::npos) return Rational(parse_integer(num_text));
  auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text) || den_text[0] == '-' || den_text[0] == '+')
    throw std::invalid_argument("bad rational literal: " + std::string(text));
  Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return make_rational(parse_integer(num_text), den);
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace lcylab
