// Generators for logarithmic deformations, shared by the melnikov tests and
// the acceptance suite.
#ifndef PENCILLAB_TESTS_DEFORMATION_SUPPORT_HPP
#define PENCILLAB_TESTS_DEFORMATION_SUPPORT_HPP

#include "pencillab/melnikov.hpp"
#include "support.hpp"

namespace pencillab::testing {

/// Per-line lambdas of a grouping with group values mu, shifted to sum 0.
inline RationalVector normalized_lambdas(const melnikov::Grouping& g, const std::vector<Rational>& mu,
                                         std::size_t lines) {
  RationalVector out(lines);
  Rational total = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (int p : g.groups[i]) {
      out[p] = mu[i];
      total += mu[i];
    }
  for (auto& v : out) v -= total / Rational(static_cast<long>(lines));
  return out;
}

/// Distinct group values mu_i = 5i + noise in [-2, 2], random h_i of degree D_i.
inline melnikov::Deformation random_log_deformation(Generator& gen, const melnikov::Grouping& g, int k,
                                                    std::vector<Rational>& mu) {
  mu.clear();
  std::vector<BivariatePoly> h;
  for (std::size_t i = 0; i < g.size(); ++i) {
    mu.push_back(Rational(static_cast<long>(5 * i)) + gen.rational(2));
    h.push_back(gen.poly(g.degrees[i], 0.8));
  }
  return melnikov::log_deformation(g, mu, h, k);
}

inline BivariatePoly without_constant(BivariatePoly p) {
  p.add_term({0, 0}, -p.coefficient({0, 0}));
  return p;
}

}  // namespace pencillab::testing

#endif  // PENCILLAB_TESTS_DEFORMATION_SUPPORT_HPP
