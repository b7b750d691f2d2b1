#include "pencillab/rational.hpp"

#include <cctype>

namespace pencillab {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw InputError("zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(num_text));
  }
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(den_text)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  return make_rational(parse_integer(num_text), parse_integer(den_text));
}

std::string to_string(const Rational& r) { return r.get_str(); }

int sign(const Rational& r) { return sgn(r); }

Integer common_denominator(const Rational* first, const Rational* last) {
  Integer l = 1;
  for (; first != last; ++first) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), first->get_den_mpz_t());
  }
  return l;
}

}  // namespace pencillab
