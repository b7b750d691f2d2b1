#include "pencillab/petrov.hpp"

#include <algorithm>

#include "pencillab/poly_system.hpp"

namespace pencillab::petrov {

std::optional<int> q_degree_bound(const OneForm& w, const BivariatePoly& f) {
  if (w.is_zero()) return std::nullopt;
  return deg1(w) + 2 - f.degree().value();
}

namespace {

// Coefficient of dQ ^ df for Q = m.
BivariatePoly wedge_with_df(const Monomial& m, const BivariatePoly& fx, const BivariatePoly& fy) {
  const BivariatePoly q = BivariatePoly::term(m, 1);
  return q.dx() * fy - q.dy() * fx;
}

}  // namespace

std::optional<SpanWitness> decompose_in_span(const OneForm& w, const std::vector<OneForm>& gens,
                                             const BivariatePoly& f) {
  if (f.degree() < 1) throw InputError("Hamiltonian must be nonconstant");
  std::optional<int> top;
  auto raise = [&](const OneForm& form) {
    if (form.is_zero()) return;
    const int k = deg1(form);
    top = top ? std::max(*top, k) : k;
  };
  raise(w);
  for (const auto& g : gens) raise(g);

  SpanWitness out;
  out.c.assign(gens.size(), Rational(0));
  if (!top) return out;

  const int q_bound = *top + 2 - f.degree().value();
  const BivariatePoly fx = f.dx();
  const BivariatePoly fy = f.dy();
  PolySystem sys(1);
  for (const auto& g : gens) sys.add_unknown(exterior_derivative(g).g);
  std::vector<Monomial> q_monomials;
  if (q_bound >= 1) {
    for (const auto& m : monomials_up_to(q_bound)) {
      if (m.degree() == 0) continue;  // constant Q only adds an exact term
      q_monomials.push_back(m);
      sys.add_unknown(wedge_with_df(m, fx, fy));
    }
  }
  const LinearSolution sol = sys.solve(exterior_derivative(w).g);
  if (!sol.feasible) return std::nullopt;

  OneForm rest = w;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    out.c[j] = sol.particular[j];
    if (out.c[j] != 0) rest -= out.c[j] * gens[j];
  }
  out.rest.Q = combine(q_monomials, sol.particular, gens.size());
  rest -= out.rest.Q * exterior_derivative(f);
  const auto P = integrate_closed(rest);
  if (!P) throw InvariantViolation("closed form failed to integrate");
  out.rest.P = *P;

  OneForm check = exterior_derivative(out.rest.P) + out.rest.Q * exterior_derivative(f);
  for (std::size_t j = 0; j < gens.size(); ++j) check += out.c[j] * gens[j];
  if (check != w) throw InvariantViolation("relative exactness witness does not re-expand");
  return out;
}

std::optional<RelExactWitness> relative_exact_decompose(const OneForm& w, const BivariatePoly& f) {
  const auto s = decompose_in_span(w, {}, f);
  if (!s) return std::nullopt;
  return s->rest;
}

std::size_t h_dimension(const std::vector<OneForm>& forms, const BivariatePoly& f) {
  std::vector<OneForm> basis;
  for (const auto& w : forms)
    if (!decompose_in_span(w, basis, f)) basis.push_back(w);
  return basis.size();
}

bool h_span_equal(const std::vector<OneForm>& a, const std::vector<OneForm>& b, const BivariatePoly& f) {
  for (const auto& w : a)
    if (!decompose_in_span(w, b, f)) return false;
  for (const auto& w : b)
    if (!decompose_in_span(w, a, f)) return false;
  return true;
}

Context make_context(const BivariatePoly& f, AnnihilatorPolicy policy) {
  Context ctx;
  ctx.f = f;
  ctx.ma = milnor::milnor_algebra(f);
  ctx.sd = milnor::multiplication_matrix(ctx.ma);
  ctx.policy = policy;
  return ctx;
}

GaussManinResult gauss_manin(const OneForm& w, const milnor::MilnorAlgebra& ma, const milnor::SpectralData& sd,
                             AnnihilatorPolicy policy) {
  const TwoForm dw = exterior_derivative(w);
  GaussManinResult out;
  out.p = policy == AnnihilatorPolicy::MinimalPolynomial ? sd.min_poly
                                                         : milnor::annihilator(sd.A, ma.coordinates(dw.g));
  const BivariatePoly G = out.p.compose(ma.f) * dw.g;
  const milnor::NormalForm nf = milnor::normal_form(G, ma.ideal);
  if (!nf.remainder.is_zero()) throw InvariantViolation("nonzero remainder");
  out.eta = OneForm{-nf.b, nf.a};
  if (wedge(exterior_derivative(ma.f), out.eta).g != G) throw InvariantViolation("p(f) dw != df ^ eta");
  return out;
}

GaussManinResult gauss_manin(const OneForm& w, const Context& ctx) {
  return gauss_manin(w, ctx.ma, ctx.sd, ctx.policy);
}

RationalSection nabla_tilde(const RationalSection& s, const Context& ctx) {
  const GaussManinResult gm = gauss_manin(s.numerator, ctx);
  const BivariatePoly q = s.denominator.compose(ctx.f);
  const BivariatePoly pq1 = (gm.p * s.denominator.derivative()).compose(ctx.f);
  RationalSection out;
  out.numerator = q * gm.eta - pq1 * s.numerator;
  out.denominator = gm.p * s.denominator * s.denominator;
  return out;
}

RationalSection nabla_power(const OneForm& w, int n, const Context& ctx) {
  if (n < 1) throw InputError("connection power must be at least 1");
  RationalSection s{w, UnivariatePoly(1)};
  for (int k = 0; k < n; ++k) s = nabla_tilde(s, ctx);
  return s;
}

bool htilde_equal(const RationalSection& s1, const RationalSection& s2, const BivariatePoly& f) {
  const OneForm diff = s2.denominator.compose(f) * s1.numerator - s1.denominator.compose(f) * s2.numerator;
  return relative_exact_decompose(diff, f).has_value();
}

bool htilde_is_zero(const RationalSection& s, const BivariatePoly& f) {
  return relative_exact_decompose(s.numerator, f).has_value();
}

std::vector<OneForm> kernel_basis(const BivariatePoly& f, int n, const std::vector<BivariatePoly>& factors) {
  if (n < 1 || n > 3) throw InputError("kernel order must be 1, 2 or 3");
  if (factors.empty()) throw UnsupportedInput("unsupported fiber structure");
  BivariatePoly product(1);
  std::vector<BivariatePoly> cofactors;
  for (const auto& g : factors) {
    if (g.degree() < 1) throw UnsupportedInput("unsupported fiber structure");
    const auto q = f.divide_exact(g);
    if (!q) throw UnsupportedInput("unsupported fiber structure");
    cofactors.push_back(*q);
    product = product * g;
  }
  const auto ratio = f.divide_exact(product);
  if (!ratio || !ratio->is_constant()) throw UnsupportedInput("unsupported fiber structure");

  std::vector<OneForm> out;
  if (n == 1) return out;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) out.push_back(cofactors[i] * exterior_derivative(factors[i]));
  if (n == 3)
    for (std::size_t i = 0; i + 1 < factors.size(); ++i)
      out.push_back((f * cofactors[i]) * exterior_derivative(factors[i]));
  return out;
}

}  // namespace pencillab::petrov
