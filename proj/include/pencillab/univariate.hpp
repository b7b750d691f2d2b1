#ifndef PENCILLAB_UNIVARIATE_HPP
#define PENCILLAB_UNIVARIATE_HPP

#include <string>
#include <utility>
#include <vector>

#include "pencillab/bivariate.hpp"
#include "pencillab/rational.hpp"

namespace pencillab {

/// Polynomial in t over Q. Coefficients are stored from the constant term
/// up; the highest stored coefficient is nonzero.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  UnivariatePoly(const Rational& c);  // NOLINT
  UnivariatePoly(int c) : UnivariatePoly(Rational(c)) {}  // NOLINT
  explicit UnivariatePoly(std::vector<Rational> coefficients);

  static UnivariatePoly t();
  /// (t - root)
  static UnivariatePoly linear(const Rational& root);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Degree degree() const;
  Rational coefficient(int k) const;
  const Rational& leading_coefficient() const;

  UnivariatePoly derivative() const;
  UnivariatePoly monic() const;
  Rational evaluate(const Rational& t) const;

  /// p(f): substitute t -> f.
  BivariatePoly compose(const BivariatePoly& f) const;

  UnivariatePoly& operator+=(const UnivariatePoly& o);
  UnivariatePoly& operator-=(const UnivariatePoly& o);
  UnivariatePoly operator-() const;
  friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
  friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& a, const UnivariatePoly& b);
UnivariatePoly operator%(const UnivariatePoly& a, const UnivariatePoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b);
bool divides(const UnivariatePoly& divisor, const UnivariatePoly& p);

/// Monic product of the distinct irreducible factors of p.
UnivariatePoly squarefree_part(const UnivariatePoly& p);

/// Yun's algorithm: p = lc * prod_k factor_k^k with factors monic, square
/// free, pairwise coprime. Trivial factors are omitted.
std::vector<std::pair<UnivariatePoly, int>> squarefree_decomposition(const UnivariatePoly& p);

/// e.g. "t^3 - 4/27*t"
std::string to_string(const UnivariatePoly& p, const std::string& var = "t");

}  // namespace pencillab

#endif  // PENCILLAB_UNIVARIATE_HPP
