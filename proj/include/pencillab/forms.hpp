#ifndef PENCILLAB_FORMS_HPP
#define PENCILLAB_FORMS_HPP

#include <string>

#include "pencillab/bivariate.hpp"

namespace pencillab {

/// a dx + b dy
struct OneForm {
  BivariatePoly a;
  BivariatePoly b;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  /// max(deg a, deg b)
  Degree degree() const;

  OneForm& operator+=(const OneForm& o);
  OneForm& operator-=(const OneForm& o);
  OneForm operator-() const { return {-a, -b}; }
  friend OneForm operator+(OneForm u, const OneForm& v) { return u += v; }
  friend OneForm operator-(OneForm u, const OneForm& v) { return u -= v; }
  friend OneForm operator*(const BivariatePoly& p, const OneForm& w) { return {p * w.a, p * w.b}; }
  friend OneForm operator*(const Rational& c, const OneForm& w) { return {c * w.a, c * w.b}; }
  friend OneForm operator*(int c, const OneForm& w) { return Rational(c) * w; }
  friend bool operator==(const OneForm&, const OneForm&) = default;
};

/// g dx^dy
struct TwoForm {
  BivariatePoly g;

  bool is_zero() const { return g.is_zero(); }
  friend TwoForm operator-(const TwoForm& u, const TwoForm& v) { return {u.g - v.g}; }
  friend bool operator==(const TwoForm&, const TwoForm&) = default;
};

OneForm dx_form();
OneForm dy_form();

OneForm exterior_derivative(const BivariatePoly& p);
TwoForm exterior_derivative(const OneForm& w);
TwoForm wedge(const OneForm& u, const OneForm& v);

/// Pole order of w along the line at infinity, minus two. Throws
/// std::domain_error("undefined degree") on the zero form.
int deg1(const OneForm& w);

/// A P with dP = w when w is closed; nullopt otherwise. The constant term
/// of P is zero.
std::optional<BivariatePoly> integrate_closed(const OneForm& w);

std::string to_string(const OneForm& w);

}  // namespace pencillab

#endif  // PENCILLAB_FORMS_HPP
