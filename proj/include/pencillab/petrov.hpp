#ifndef PENCILLAB_PETROV_HPP
#define PENCILLAB_PETROV_HPP

#include <optional>
#include <vector>

#include "pencillab/forms.hpp"
#include "pencillab/milnor.hpp"
#include "pencillab/univariate.hpp"

namespace pencillab::petrov {

/// A class in H = Omega^1 / (d Omega^0 + Omega^0 df), by representative.
struct HElement {
  OneForm form;
  BivariatePoly f;
};

/// numerator / denominator(t), an element of the localized module.
struct RationalSection {
  OneForm numerator;
  UnivariatePoly denominator = UnivariatePoly(1);
};

/// w = dP + Q df.
struct RelExactWitness {
  BivariatePoly P;
  BivariatePoly Q;
};

/// Degree bound for Q in a witness of w: deg1(w) + 2 - deg f, or nullopt
/// when w = 0.
std::optional<int> q_degree_bound(const OneForm& w, const BivariatePoly& f);

/// Solves dw = dQ ^ df for Q within the degree bound, then integrates
/// w - Q df. The witness always re-expands exactly; nullopt means w is not
/// in d Omega^0 + Omega^0 df.
std::optional<RelExactWitness> relative_exact_decompose(const OneForm& w, const BivariatePoly& f);

/// w = sum_j c_j gens_j + dP + Q df.
struct SpanWitness {
  RationalVector c;
  RelExactWitness rest;
};

/// Membership of w in span(gens) + d Omega^0 + Omega^0 df, degree bounds
/// taken from the largest deg1 among w and gens.
std::optional<SpanWitness> decompose_in_span(const OneForm& w, const std::vector<OneForm>& gens,
                                             const BivariatePoly& f);

/// Dimension of span(forms) in H.
std::size_t h_dimension(const std::vector<OneForm>& forms, const BivariatePoly& f);

/// span(a) == span(b) in H.
bool h_span_equal(const std::vector<OneForm>& a, const std::vector<OneForm>& b, const BivariatePoly& f);

enum class AnnihilatorPolicy {
  MinimalPolynomial,  // p = minimal polynomial of A
  ClassAnnihilator,   // p = monic annihilator of the class of dw in V
};

/// f with its Milnor algebra and spectral data, computed once.
struct Context {
  BivariatePoly f;
  milnor::MilnorAlgebra ma;
  milnor::SpectralData sd;
  AnnihilatorPolicy policy = AnnihilatorPolicy::ClassAnnihilator;
};

Context make_context(const BivariatePoly& f, AnnihilatorPolicy policy = AnnihilatorPolicy::ClassAnnihilator);

struct GaussManinResult {
  OneForm eta;
  UnivariatePoly p;
};

/// p(f) dw = df ^ eta; nabla w = eta / p(t). Throws
/// InvariantViolation("nonzero remainder") if p(f) dw is not in the
/// Jacobian ideal.
GaussManinResult gauss_manin(const OneForm& w, const milnor::MilnorAlgebra& ma, const milnor::SpectralData& sd,
                             AnnihilatorPolicy policy = AnnihilatorPolicy::MinimalPolynomial);
GaussManinResult gauss_manin(const OneForm& w, const Context& ctx);

/// nabla(w / q) = (q nabla w - q' w) / q^2.
RationalSection nabla_tilde(const RationalSection& s, const Context& ctx);
/// nabla^n (w / 1), n >= 1.
RationalSection nabla_power(const OneForm& w, int n, const Context& ctx);

/// a2(f) w1 - a1(f) w2 in d Omega^0 + Omega^0 df.
bool htilde_equal(const RationalSection& s1, const RationalSection& s2, const BivariatePoly& f);
bool htilde_is_zero(const RationalSection& s, const BivariatePoly& f);

/// Generators of ker(nabla^n) in H for f whose only reducible critical
/// fiber is f = 0 with the given irreducible factors: n = 2 gives
/// (f/g_i) dg_i, n = 3 adds f (f/g_i) dg_i, in both cases omitting the last
/// factor (the full sum is df, zero in H). n = 1 gives nothing. Throws
/// UnsupportedInput("unsupported fiber structure") when the factors do not
/// multiply to a constant times f, and InputError for n outside 1..3.
std::vector<OneForm> kernel_basis(const BivariatePoly& f, int n, const std::vector<BivariatePoly>& factors);

}  // namespace pencillab::petrov

#endif  // PENCILLAB_PETROV_HPP
