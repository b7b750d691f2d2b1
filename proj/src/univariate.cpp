#include "pencillab/univariate.hpp"

#include <sstream>
#include <stdexcept>

namespace pencillab {

UnivariatePoly::UnivariatePoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

UnivariatePoly::UnivariatePoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

UnivariatePoly UnivariatePoly::t() { return UnivariatePoly(std::vector<Rational>{0, 1}); }

UnivariatePoly UnivariatePoly::linear(const Rational& root) {
  return UnivariatePoly(std::vector<Rational>{-root, 1});
}

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree UnivariatePoly::degree() const {
  if (coeffs_.empty()) return Degree::minus_infinity();
  return Degree(static_cast<int>(coeffs_.size()) - 1);
}

Rational UnivariatePoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

const Rational& UnivariatePoly::leading_coefficient() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

UnivariatePoly UnivariatePoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * static_cast<long>(k));
  return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::monic() const {
  if (is_zero()) return *this;
  UnivariatePoly out = *this;
  const Rational lc = leading_coefficient();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

Rational UnivariatePoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

BivariatePoly UnivariatePoly::compose(const BivariatePoly& f) const {
  BivariatePoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * f;
    acc += BivariatePoly(*it);
  }
  return acc;
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UnivariatePoly& UnivariatePoly::operator-=(const UnivariatePoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UnivariatePoly UnivariatePoly::operator-() const {
  UnivariatePoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePoly(std::move(out));
}

std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  if (rem.size() < bc.size()) return {UnivariatePoly(), a};
  std::vector<Rational> quot(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    const Rational c = rem[k] / bc[db];
    quot[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= c * bc[j];
  }
  return {UnivariatePoly(std::move(quot)), UnivariatePoly(std::move(rem))};
}

UnivariatePoly operator%(const UnivariatePoly& a, const UnivariatePoly& b) { return divmod(a, b).second; }

UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
  UnivariatePoly u = a;
  UnivariatePoly v = b;
  while (!v.is_zero()) {
    UnivariatePoly r = u % v;
    u = std::move(v);
    v = r.monic();
  }
  return u.monic();
}

bool divides(const UnivariatePoly& divisor, const UnivariatePoly& p) {
  return (p % divisor).is_zero();
}

UnivariatePoly squarefree_part(const UnivariatePoly& p) {
  if (p.is_zero()) return p;
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::vector<std::pair<UnivariatePoly, int>> squarefree_decomposition(const UnivariatePoly& p) {
  std::vector<std::pair<UnivariatePoly, int>> out;
  if (p.is_zero() || p.degree() == Degree(0)) return out;
  const UnivariatePoly monic = p.monic();
  const UnivariatePoly dp = monic.derivative();
  UnivariatePoly a = gcd(monic, dp);
  UnivariatePoly b = divmod(monic, a).first;
  UnivariatePoly c = divmod(dp, a).first;
  UnivariatePoly e = c - b.derivative();
  for (int k = 1; !(b.degree() == Degree(0)); ++k) {
    UnivariatePoly g = gcd(b, e);
    if (g.degree() > Degree(0)) out.emplace_back(g, k);
    b = divmod(b, g).first;
    c = divmod(e, g).first;
    e = c - b.derivative();
  }
  return out;
}

std::string to_string(const UnivariatePoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& cs = p.coefficients();
  for (std::size_t k = cs.size(); k-- > 0;) {
    const Rational& c = cs[k];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string power = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (k == 0) {
      os << to_string(mag);
    } else if (mag == 1) {
      os << power;
    } else {
      os << to_string(mag) << "*" << power;
    }
  }
  return os.str();
}

}  // namespace pencillab
