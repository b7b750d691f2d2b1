#ifndef PENCILLAB_STURM_HPP
#define PENCILLAB_STURM_HPP

#include <utility>
#include <vector>

#include "pencillab/univariate.hpp"

namespace pencillab {

/// Distinct real roots split by sign.
struct SignCounts {
  int negative = 0;
  int zero = 0;
  int positive = 0;
  friend bool operator==(const SignCounts&, const SignCounts&) = default;
};

struct RootSigns {
  SignCounts distinct;
  int zero_multiplicity = 0;
  /// Square-free decomposition of p (Yun), factor and multiplicity.
  std::vector<std::pair<UnivariatePoly, int>> squarefree_factors;
};

std::vector<UnivariatePoly> sturm_sequence(const UnivariatePoly& p);

/// Counts distinct real roots of p in (-inf, 0), {0}, (0, inf). Throws
/// std::domain_error on the zero polynomial.
RootSigns sturm_sign_counts(const UnivariatePoly& p);

}  // namespace pencillab

#endif  // PENCILLAB_STURM_HPP
