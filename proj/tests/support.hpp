// Shared helpers for the test binaries: seeded generators and the
// independent oracles the implementation is checked against.
#ifndef PENCILLAB_TESTS_SUPPORT_HPP
#define PENCILLAB_TESTS_SUPPORT_HPP

#include <optional>
#include <random>
#include <vector>

#include "pencillab/bivariate.hpp"
#include "pencillab/forms.hpp"
#include "pencillab/linear.hpp"
#include "pencillab/poly_system.hpp"
#include "pencillab/univariate.hpp"

namespace pencillab::testing {

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// Small rational, zero with probability about zero_weight.
  Rational rational(int bound = 5, double zero_weight = 0.0) {
    if (zero_weight > 0 && std::uniform_real_distribution<double>(0, 1)(rng_) < zero_weight) return 0;
    return make_rational(integer(-bound, bound), integer(1, bound));
  }

  Rational nonzero_rational(int bound = 5) {
    Rational r = 0;
    while (r == 0) r = rational(bound);
    return r;
  }

  BivariatePoly poly(int max_degree, double density = 0.7, int bound = 5) {
    BivariatePoly p;
    for (const auto& m : monomials_up_to(max_degree)) {
      if (std::uniform_real_distribution<double>(0, 1)(rng_) < density) p.add_term(m, rational(bound));
    }
    return p;
  }

  BivariatePoly homogeneous(int degree, int bound = 5) {
    BivariatePoly p;
    for (int i = 0; i <= degree; ++i) p.add_term({i, degree - i}, rational(bound));
    return p;
  }

  OneForm form(int max_degree, double density = 0.7) { return {poly(max_degree, density), poly(max_degree, density)}; }

  RationalMatrix matrix(std::size_t rows, std::size_t cols, double zero_weight = 0.3) {
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(7, zero_weight);
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Textbook Gauss-Jordan elimination over exact rationals, dense, first
/// nonzero pivot. Returns a particular solution or nullopt.
struct NaiveSolution {
  std::optional<RationalVector> particular;
  std::size_t rank = 0;
};

inline NaiveSolution naive_solve(RationalMatrix m, RationalVector rhs) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    std::swap(rhs[p], rhs[r]);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < cols; ++j) m(r, j) *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  NaiveSolution out;
  out.rank = r;
  for (std::size_t i = r; i < rows; ++i)
    if (rhs[i] != 0) return out;
  RationalVector x(cols, Rational(0));
  for (std::size_t k = 0; k < r; ++k) x[pivot_col[k]] = rhs[k];
  out.particular = std::move(x);
  return out;
}

/// Faddeev-LeVerrier: det(tI - A) from traces, independent of the
/// Hessenberg route.
inline UnivariatePoly leverrier_char_poly(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix am = a * m;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k + 1];
    m = am;
    RationalMatrix prod = a * m;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += prod(i, i);
    c[n - k] = -trace / static_cast<long>(k);
  }
  return UnivariatePoly(std::move(c));
}

/// Membership of w in d Omega^0 + Omega^0 df by solving directly for the
/// coefficients of both P and Q, with degree bounds `scale` times the
/// deg1-based ones. Independent of the Q-only route in the library.
inline bool oracle_relative_member(const OneForm& w, const BivariatePoly& f, int scale = 2) {
  if (w.is_zero()) return true;
  const int p_bound = scale * (deg1(w) + 2);
  const int q_bound = p_bound - f.degree().value();
  const OneForm df = exterior_derivative(f);
  PolySystem sys(2);
  for (const auto& m : monomials_up_to(p_bound))
    if (m.degree() > 0) sys.add_unknown(exterior_derivative(BivariatePoly::term(m, 1)));
  if (q_bound >= 0)
    for (const auto& m : monomials_up_to(q_bound)) sys.add_unknown(BivariatePoly::term(m, 1) * df);
  return sys.solve(w).feasible;
}

inline BivariatePoly X() { return BivariatePoly::x(); }
inline BivariatePoly Y() { return BivariatePoly::y(); }

}  // namespace pencillab::testing

#endif  // PENCILLAB_TESTS_SUPPORT_HPP
