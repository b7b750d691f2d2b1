#include "pencillab/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace pencillab {

Degree OneForm::degree() const { return std::max(a.degree(), b.degree()); }

OneForm& OneForm::operator+=(const OneForm& o) {
  a += o.a;
  b += o.b;
  return *this;
}

OneForm& OneForm::operator-=(const OneForm& o) {
  a -= o.a;
  b -= o.b;
  return *this;
}

OneForm dx_form() { return {BivariatePoly(1), BivariatePoly()}; }
OneForm dy_form() { return {BivariatePoly(), BivariatePoly(1)}; }

OneForm exterior_derivative(const BivariatePoly& p) { return {p.dx(), p.dy()}; }

TwoForm exterior_derivative(const OneForm& w) { return {w.b.dx() - w.a.dy()}; }

TwoForm wedge(const OneForm& u, const OneForm& v) { return {u.a * v.b - u.b * v.a}; }

int deg1(const OneForm& w) {
  if (w.is_zero()) throw std::domain_error("undefined degree");
  const int n = w.degree().value();
  // After x = X/Z, y = Y/Z the top homogeneous parts contribute
  // -(X a_n + Y b_n) dZ / Z^(n+2); when that vanishes the pole drops by one.
  const BivariatePoly radial =
      BivariatePoly::x() * w.a.homogeneous_part(n) + BivariatePoly::y() * w.b.homogeneous_part(n);
  return radial.is_zero() ? n - 1 : n;
}

namespace {

BivariatePoly antiderivative_x(const BivariatePoly& p) {
  BivariatePoly out;
  for (const auto& [m, c] : p.terms()) out.add_term({m.x + 1, m.y}, c / (m.x + 1));
  return out;
}

BivariatePoly antiderivative_y(const BivariatePoly& p) {
  BivariatePoly out;
  for (const auto& [m, c] : p.terms()) out.add_term({m.x, m.y + 1}, c / (m.y + 1));
  return out;
}

}  // namespace

std::optional<BivariatePoly> integrate_closed(const OneForm& w) {
  if (!exterior_derivative(w).is_zero()) return std::nullopt;
  BivariatePoly p = antiderivative_x(w.a);
  // Closedness makes this x-free.
  const BivariatePoly rest = w.b - p.dy();
  p += antiderivative_y(rest);
  return p;
}

std::string to_string(const OneForm& w) {
  return "(" + to_string(w.a) + ") dx + (" + to_string(w.b) + ") dy";
}

}  // namespace pencillab
