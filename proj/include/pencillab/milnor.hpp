#ifndef PENCILLAB_MILNOR_HPP
#define PENCILLAB_MILNOR_HPP

#include <vector>

#include "pencillab/bivariate.hpp"
#include "pencillab/linear.hpp"
#include "pencillab/sturm.hpp"
#include "pencillab/univariate.hpp"

namespace pencillab::milnor {

/// An element of <f_x, f_y> together with its expression a*f_x + b*f_y.
struct Cofactored {
  BivariatePoly poly;
  BivariatePoly a;
  BivariatePoly b;
};

/// Reduced, monic Groebner basis of the Jacobian ideal in grevlex(x > y),
/// sorted by ascending leading monomial, with cofactors for each element.
struct JacobianIdeal {
  BivariatePoly fx;
  BivariatePoly fy;
  std::vector<Cofactored> basis;

  std::vector<BivariatePoly> groebner_basis() const;
  /// Leading terms contain a pure power of x and a pure power of y.
  bool zero_dimensional() const;
};

/// Buchberger's algorithm with cofactor propagation. Throws InputError when
/// f is constant.
JacobianIdeal jacobian_groebner(const BivariatePoly& f);

/// g = remainder + a*f_x + b*f_y with the remainder supported on standard
/// monomials. Divisors are tried in stored basis order.
struct NormalForm {
  BivariatePoly remainder;
  BivariatePoly a;
  BivariatePoly b;
};
NormalForm normal_form(const BivariatePoly& g, const JacobianIdeal& ideal);

/// V = Q[x,y] / <f_x, f_y> with its standard-monomial basis.
struct MilnorAlgebra {
  BivariatePoly f;
  JacobianIdeal ideal;
  std::vector<Monomial> basis;  // ascending grevlex
  int mu = 0;

  /// Coordinates of the class of g in the standard-monomial basis.
  RationalVector coordinates(const BivariatePoly& g) const;
  BivariatePoly from_coordinates(std::span<const Rational> v) const;
};

/// Throws InputError("non-isolated singularities") when dim V is infinite.
MilnorAlgebra milnor_algebra(const BivariatePoly& f);

struct SpectralData {
  RationalMatrix A;  // column j = class of f * basis_j
  UnivariatePoly char_poly;
  UnivariatePoly min_poly;
  UnivariatePoly squarefree_part;
};

SpectralData multiplication_matrix(const MilnorAlgebra& ma);

/// det(t I - m) via reduction to Hessenberg form.
UnivariatePoly characteristic_polynomial(const RationalMatrix& m);
/// Monic minimal polynomial from the first linear dependence among powers.
UnivariatePoly minimal_polynomial(const RationalMatrix& m);
/// Monic minimal polynomial of m restricted to the cyclic subspace of v.
UnivariatePoly annihilator(const RationalMatrix& m, std::span<const Rational> v);
RationalMatrix evaluate(const UnivariatePoly& p, const RationalMatrix& m);

/// Distinct critical values by sign.
SignCounts critical_value_signs(const SpectralData& sd);

}  // namespace pencillab::milnor

#endif  // PENCILLAB_MILNOR_HPP
