#include "pencillab/milnor.hpp"

#include <algorithm>
#include <optional>

namespace pencillab::milnor {

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

// Deterministic pair selection: smallest lcm in grevlex, then indices.
bool pair_before(const Pair& p, const Pair& q) {
  if (p.lcm != q.lcm) return grevlex_less(p.lcm, q.lcm);
  if (p.j != q.j) return p.j < q.j;
  return p.i < q.i;
}

// Subtracts c*m*g from h, keeping h.poly = h.a*f_x + h.b*f_y.
void subtract(Cofactored& h, const Rational& c, const Monomial& m, const Cofactored& g) {
  h.poly.add_scaled(-c, m, g.poly);
  h.a.add_scaled(-c, m, g.a);
  h.b.add_scaled(-c, m, g.b);
}

const Cofactored* find_reducer(const std::vector<Cofactored>& basis, const Monomial& m,
                               std::optional<std::size_t> skip = std::nullopt) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (skip && *skip == k) continue;
    if (basis[k].poly.leading_monomial().divides(m)) return &basis[k];
  }
  return nullptr;
}

// Full reduction of h against basis (all terms).
Cofactored reduce_fully(Cofactored h, const std::vector<Cofactored>& basis,
                        std::optional<std::size_t> skip = std::nullopt) {
  Cofactored rem{BivariatePoly(), BivariatePoly(), BivariatePoly()};
  while (!h.poly.is_zero()) {
    const Monomial m = h.poly.leading_monomial();
    const Rational c = h.poly.leading_coefficient();
    if (const Cofactored* g = find_reducer(basis, m, skip)) {
      subtract(h, c / g->poly.leading_coefficient(), m / g->poly.leading_monomial(), *g);
    } else {
      rem.poly.add_term(m, c);
      h.poly.add_term(m, -c);
    }
  }
  rem.a = std::move(h.a);
  rem.b = std::move(h.b);
  return rem;
}

Cofactored s_polynomial(const Cofactored& g, const Cofactored& h, const Monomial& l) {
  Cofactored s{BivariatePoly(), BivariatePoly(), BivariatePoly()};
  subtract(s, Rational(-1) / g.poly.leading_coefficient(), l / g.poly.leading_monomial(), g);
  subtract(s, Rational(1) / h.poly.leading_coefficient(), l / h.poly.leading_monomial(), h);
  return s;
}

bool coprime(const Monomial& a, const Monomial& b) {
  return (a.x == 0 || b.x == 0) && (a.y == 0 || b.y == 0);
}

}  // namespace

std::vector<BivariatePoly> JacobianIdeal::groebner_basis() const {
  std::vector<BivariatePoly> out;
  out.reserve(basis.size());
  for (const auto& g : basis) out.push_back(g.poly);
  return out;
}

bool JacobianIdeal::zero_dimensional() const {
  bool pure_x = false;
  bool pure_y = false;
  for (const auto& g : basis) {
    const Monomial& m = g.poly.leading_monomial();
    if (m.y == 0) pure_x = true;
    if (m.x == 0) pure_y = true;
  }
  return pure_x && pure_y;
}

JacobianIdeal jacobian_groebner(const BivariatePoly& f) {
  if (f.is_constant()) throw InputError("jacobian ideal of a constant polynomial");
  JacobianIdeal ideal;
  ideal.fx = f.dx();
  ideal.fy = f.dy();

  std::vector<Cofactored> g;
  if (!ideal.fx.is_zero()) g.push_back({ideal.fx, BivariatePoly(1), BivariatePoly()});
  if (!ideal.fy.is_zero()) g.push_back({ideal.fy, BivariatePoly(), BivariatePoly(1)});

  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& a = g[i].poly.leading_monomial();
      const Monomial& b = g[j].poly.leading_monomial();
      if (coprime(a, b)) continue;  // Buchberger's first criterion
      pairs.push_back({i, j, lcm(a, b)});
    }
  };
  for (std::size_t j = 1; j < g.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), pair_before);
    const Pair p = *best;
    pairs.erase(best);
    Cofactored h = reduce_fully(s_polynomial(g[p.i], g[p.j], p.lcm), g);
    if (h.poly.is_zero()) continue;
    g.push_back(std::move(h));
    add_pairs_for(g.size() - 1);
  }

  // Minimal basis: drop elements whose leading monomial is divisible by
  // another's (keep the earliest among equal leading monomials).
  std::vector<Cofactored> minimal;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Monomial& m = g[k].poly.leading_monomial();
    bool redundant = false;
    for (std::size_t o = 0; o < g.size() && !redundant; ++o) {
      if (o == k) continue;
      const Monomial& n = g[o].poly.leading_monomial();
      if (n.divides(m) && (n != m || o < k)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[k]);
  }
  std::sort(minimal.begin(), minimal.end(), [](const Cofactored& a, const Cofactored& b) {
    return grevlex_less(a.poly.leading_monomial(), b.poly.leading_monomial());
  });

  // Interreduce and normalize.
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    Cofactored r = reduce_fully(minimal[k], minimal, k);
    const Rational lc = r.poly.leading_coefficient();
    const Rational inv = 1 / lc;
    r.poly *= inv;
    r.a *= inv;
    r.b *= inv;
    minimal[k] = std::move(r);
  }
  ideal.basis = std::move(minimal);
  return ideal;
}

NormalForm normal_form(const BivariatePoly& g, const JacobianIdeal& ideal) {
  NormalForm nf;
  BivariatePoly rest = g;
  while (!rest.is_zero()) {
    const Monomial m = rest.leading_monomial();
    const Rational c = rest.leading_coefficient();
    if (const Cofactored* r = find_reducer(ideal.basis, m)) {
      const Rational q = c / r->poly.leading_coefficient();
      const Monomial shift = m / r->poly.leading_monomial();
      rest.add_scaled(-q, shift, r->poly);
      nf.a.add_scaled(q, shift, r->a);
      nf.b.add_scaled(q, shift, r->b);
    } else {
      nf.remainder.add_term(m, c);
      rest.add_term(m, -c);
    }
  }
  return nf;
}

RationalVector MilnorAlgebra::coordinates(const BivariatePoly& g) const {
  const BivariatePoly r = normal_form(g, ideal).remainder;
  RationalVector v(basis.size(), Rational(0));
  for (std::size_t k = 0; k < basis.size(); ++k) v[k] = r.coefficient(basis[k]);
  return v;
}

BivariatePoly MilnorAlgebra::from_coordinates(std::span<const Rational> v) const {
  BivariatePoly p;
  for (std::size_t k = 0; k < basis.size(); ++k) p.add_term(basis[k], v[k]);
  return p;
}

MilnorAlgebra milnor_algebra(const BivariatePoly& f) {
  MilnorAlgebra ma;
  ma.f = f;
  ma.ideal = jacobian_groebner(f);
  if (!ma.ideal.zero_dimensional()) throw InputError("non-isolated singularities");
  int max_x = 0;
  int max_y = 0;
  for (const auto& g : ma.ideal.basis) {
    const Monomial& m = g.poly.leading_monomial();
    if (m.y == 0) max_x = m.x;
    if (m.x == 0) max_y = m.y;
  }
  for (int i = 0; i < max_x; ++i) {
    for (int j = 0; j < max_y; ++j) {
      const Monomial m{i, j};
      const bool standard = std::none_of(ma.ideal.basis.begin(), ma.ideal.basis.end(),
                                         [&](const Cofactored& g) { return g.poly.leading_monomial().divides(m); });
      if (standard) ma.basis.push_back(m);
    }
  }
  std::sort(ma.basis.begin(), ma.basis.end(), grevlex_less);
  ma.mu = static_cast<int>(ma.basis.size());
  return ma;
}

UnivariatePoly characteristic_polynomial(const RationalMatrix& input) {
  const std::size_t n = input.rows();
  RationalMatrix h = input;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, j + 1));
    }
    for (std::size_t k = j + 2; k < n; ++k) {
      if (h(k, j) == 0) continue;
      const Rational u = h(k, j) / h(j + 1, j);
      for (std::size_t c = 0; c < n; ++c) h(k, c) -= u * h(j + 1, c);
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) += u * h(r, k);
    }
  }
  // p_m = (t - h_mm) p_{m-1} - sum_i h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
  std::vector<UnivariatePoly> p(n + 1);
  p[0] = UnivariatePoly(1);
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = UnivariatePoly::linear(h(m - 1, m - 1)) * p[m - 1];
    Rational prod = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      if (prod == 0) break;
      p[m] -= UnivariatePoly(prod * h(i - 1, m - 1)) * p[i - 1];
    }
  }
  return p[n];
}

RationalMatrix evaluate(const UnivariatePoly& p, const RationalMatrix& m) {
  const std::size_t n = m.rows();
  RationalMatrix acc(n, n);
  const auto& cs = p.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

namespace {

// Smallest k with v_k in span(v_0..v_{k-1}), returned as the monic
// polynomial t^k - sum c_i t^i.
template <class Next>
UnivariatePoly first_dependence(RationalVector v0, std::size_t max_steps, Next next) {
  std::vector<RationalVector> seq{std::move(v0)};
  const std::size_t len = seq.front().size();
  for (std::size_t k = 1; k <= max_steps + 1; ++k) {
    RationalVector vk = next(seq.back());
    SparseMatrix mat(len, k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < len; ++i)
        if (seq[j][i] != 0) mat.add(i, j, seq[j][i]);
    const LinearSolution sol = solve_linear(mat, vk);
    if (sol.feasible) {
      std::vector<Rational> coeffs(k + 1);
      for (std::size_t j = 0; j < k; ++j) coeffs[j] = -sol.particular[j];
      coeffs[k] = 1;
      return UnivariatePoly(std::move(coeffs));
    }
    seq.push_back(std::move(vk));
  }
  throw InvariantViolation("Krylov sequence did not become dependent");
}

RationalVector flatten(const RationalMatrix& m) {
  RationalVector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& x : m.row(i)) v.push_back(x);
  return v;
}

}  // namespace

UnivariatePoly minimal_polynomial(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return UnivariatePoly(1);
  RationalMatrix power = RationalMatrix::identity(n);
  return first_dependence(flatten(power), n, [&](const RationalVector&) {
    power = power * m;
    return flatten(power);
  });
}

UnivariatePoly annihilator(const RationalMatrix& m, std::span<const Rational> v) {
  if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) return UnivariatePoly(1);
  return first_dependence(RationalVector(v.begin(), v.end()), m.rows(),
                          [&](const RationalVector& prev) { return m.apply(prev); });
}

SpectralData multiplication_matrix(const MilnorAlgebra& ma) {
  SpectralData sd;
  const std::size_t n = ma.basis.size();
  sd.A = RationalMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const RationalVector col = ma.coordinates(ma.f * BivariatePoly::term(ma.basis[j], 1));
    for (std::size_t i = 0; i < n; ++i) sd.A(i, j) = col[i];
  }
  sd.char_poly = characteristic_polynomial(sd.A);
  sd.min_poly = minimal_polynomial(sd.A);
  sd.squarefree_part = squarefree_part(sd.char_poly);
  return sd;
}

SignCounts critical_value_signs(const SpectralData& sd) {
  return sturm_sign_counts(sd.squarefree_part).distinct;
}

}  // namespace pencillab::milnor
