#include "pencillab/bivariate.hpp"

#include <algorithm>
#include <sstream>

namespace pencillab {

int Degree::value() const {
  if (is_minus_infinity()) {
    throw std::logic_error("degree of the zero polynomial has no integer value");
  }
  return value_;
}

std::string to_string(const Degree& d) {
  return d.is_minus_infinity() ? "-inf" : std::to_string(d.value());
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return {std::max(a.x, b.x), std::max(a.y, b.y)};
}

std::string to_string(const Monomial& m) {
  if (m.x == 0 && m.y == 0) return "1";
  std::string s;
  if (m.x > 0) s += m.x == 1 ? "x" : "x^" + std::to_string(m.x);
  if (m.y > 0) {
    if (!s.empty()) s += "*";
    s += m.y == 1 ? "y" : "y^" + std::to_string(m.y);
  }
  return s;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // Same total degree: the larger power of the last variable is smaller.
  return a.y > b.y;
}

std::vector<Monomial> monomials_up_to(int n) {
  std::vector<Monomial> out;
  for (int k = 0; k <= n; ++k) {
    for (int x = 0; x <= k; ++x) out.push_back({x, k - x});
  }
  return out;
}

BivariatePoly::BivariatePoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{0, 0}, c);
}

BivariatePoly BivariatePoly::x() { return term({1, 0}, 1); }
BivariatePoly BivariatePoly::y() { return term({0, 1}, 1); }

BivariatePoly BivariatePoly::term(const Monomial& m, const Rational& c) {
  BivariatePoly p;
  p.add_term(m, c);
  return p;
}

BivariatePoly BivariatePoly::affine(const Rational& a, const Rational& b, const Rational& c) {
  BivariatePoly p;
  p.add_term({1, 0}, a);
  p.add_term({0, 1}, b);
  p.add_term({0, 0}, c);
  return p;
}

bool BivariatePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Degree BivariatePoly::degree() const {
  if (terms_.empty()) return Degree::minus_infinity();
  // Leading term in a graded order has maximal total degree.
  return Degree(terms_.begin()->first.degree());
}

Rational BivariatePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const Monomial& BivariatePoly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
  return terms_.begin()->first;
}

const Rational& BivariatePoly::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

BivariatePoly BivariatePoly::homogeneous_part(int k) const {
  BivariatePoly out;
  for (const auto& [m, c] : terms_) {
    if (m.degree() == k) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

BivariatePoly BivariatePoly::dx() const {
  BivariatePoly out;
  for (const auto& [m, c] : terms_) {
    if (m.x > 0) out.terms_.emplace_hint(out.terms_.end(), Monomial{m.x - 1, m.y}, c * m.x);
  }
  return out;
}

BivariatePoly BivariatePoly::dy() const {
  BivariatePoly out;
  for (const auto& [m, c] : terms_) {
    if (m.y > 0) out.terms_.emplace_hint(out.terms_.end(), Monomial{m.x, m.y - 1}, c * m.y);
  }
  return out;
}

Rational BivariatePoly::evaluate(const Rational& x, const Rational& y) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < m.x; ++i) v *= x;
    for (int j = 0; j < m.y; ++j) v *= y;
    total += v;
  }
  return total;
}

BivariatePoly BivariatePoly::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading_coefficient());
}

BivariatePoly BivariatePoly::pow(int n) const {
  BivariatePoly result(1);
  BivariatePoly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::optional<BivariatePoly> BivariatePoly::divide_exact(const BivariatePoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  BivariatePoly rest = *this;
  BivariatePoly quotient;
  const Monomial& lm = divisor.leading_monomial();
  const Rational& lc = divisor.leading_coefficient();
  while (!rest.is_zero()) {
    const Monomial m = rest.leading_monomial();
    if (!lm.divides(m)) return std::nullopt;
    const Rational c = rest.leading_coefficient() / lc;
    quotient.add_term(m / lm, c);
    rest.add_scaled(-c, m / lm, divisor);
  }
  return quotient;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BivariatePoly& BivariatePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

void BivariatePoly::add_scaled(const Rational& c, const Monomial& shift, const BivariatePoly& p) {
  if (c == 0) return;
  for (const auto& [m, v] : p.terms_) add_term(m * shift, c * v);
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly out;
  const BivariatePoly& small = a.size() <= b.size() ? a : b;
  const BivariatePoly& large = a.size() <= b.size() ? b : a;
  for (const auto& [m, c] : small.terms_) out.add_scaled(c, m, large);
  return out;
}

std::string to_string(const BivariatePoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit_monomial = m.degree() == 0;
    if (unit_monomial) {
      os << to_string(mag);
    } else if (mag == 1) {
      os << to_string(m);
    } else {
      os << to_string(mag) << "*" << to_string(m);
    }
  }
  return os.str();
}

}  // namespace pencillab
