#ifndef PENCILLAB_BIVARIATE_HPP
#define PENCILLAB_BIVARIATE_HPP

#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pencillab/rational.hpp"

namespace pencillab {

/// Total degree with a distinguished value for the zero polynomial. The
/// sentinel orders below every finite degree and absorbs addition; asking
/// it for an integer value throws.
class Degree {
 public:
  static constexpr Degree minus_infinity() { return Degree(); }
  constexpr explicit Degree(int d) : value_(d) {}

  constexpr bool is_minus_infinity() const { return value_ == kSentinel; }
  int value() const;

  constexpr auto operator<=>(const Degree&) const = default;
  friend bool operator<=(const Degree& a, int b) { return a <= Degree(b); }
  friend bool operator<(const Degree& a, int b) { return a < Degree(b); }
  friend Degree operator+(const Degree& a, const Degree& b) {
    if (a.is_minus_infinity() || b.is_minus_infinity()) return minus_infinity();
    return Degree(a.value_ + b.value_);
  }

 private:
  static constexpr int kSentinel = std::numeric_limits<int>::min();
  constexpr Degree() : value_(kSentinel) {}
  int value_;
};

std::string to_string(const Degree& d);

/// x^x * y^y.
struct Monomial {
  int x = 0;
  int y = 0;

  int degree() const { return x + y; }
  bool divides(const Monomial& other) const { return x <= other.x && y <= other.y; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.x + b.x, a.y + b.y};
  }
  /// Requires divisor.divides(*this).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    return {a.x - b.x, a.y - b.y};
  }
};

Monomial lcm(const Monomial& a, const Monomial& b);
std::string to_string(const Monomial& m);

/// Graded reverse lexicographic order with x > y.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

/// All monomials of total degree <= n, ascending in grevlex.
std::vector<Monomial> monomials_up_to(int n);

/// Sparse polynomial in x, y over Q. Terms are kept in descending grevlex
/// order, so the first term is the leading term. Zero coefficients are never
/// stored.
class BivariatePoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

  BivariatePoly() = default;
  BivariatePoly(const Rational& c);  // NOLINT: constants convert implicitly
  BivariatePoly(int c) : BivariatePoly(Rational(c)) {}  // NOLINT

  static BivariatePoly x();
  static BivariatePoly y();
  static BivariatePoly term(const Monomial& m, const Rational& c);
  /// a*x + b*y + c
  static BivariatePoly affine(const Rational& a, const Rational& b, const Rational& c);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Degree degree() const;
  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  /// Precondition: nonzero.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  BivariatePoly homogeneous_part(int k) const;
  BivariatePoly dx() const;
  BivariatePoly dy() const;
  Rational evaluate(const Rational& x, const Rational& y) const;
  BivariatePoly monic() const;
  BivariatePoly pow(int n) const;

  /// Quotient when `divisor` divides *this exactly; nullopt otherwise.
  std::optional<BivariatePoly> divide_exact(const BivariatePoly& divisor) const;

  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  BivariatePoly& operator*=(const Rational& c);
  BivariatePoly operator-() const;

  /// Adds c * m * p in place. The workhorse of every reduction loop.
  void add_scaled(const Rational& c, const Monomial& m, const BivariatePoly& p);

  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(BivariatePoly a, const Rational& c) { return a *= c; }
  friend BivariatePoly operator*(const Rational& c, BivariatePoly a) { return a *= c; }
  friend BivariatePoly operator*(BivariatePoly a, int c) { return a *= Rational(c); }
  friend BivariatePoly operator*(int c, BivariatePoly a) { return a *= Rational(c); }
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  TermMap terms_;
};

/// Canonical text form, terms in descending grevlex, e.g. "x^2*y - 1/2*y + 3".
std::string to_string(const BivariatePoly& p);

}  // namespace pencillab

#endif  // PENCILLAB_BIVARIATE_HPP
