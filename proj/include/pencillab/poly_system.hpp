#ifndef PENCILLAB_POLY_SYSTEM_HPP
#define PENCILLAB_POLY_SYSTEM_HPP

#include <utility>
#include <vector>

#include "pencillab/bivariate.hpp"
#include "pencillab/forms.hpp"
#include "pencillab/linear.hpp"

namespace pencillab {

/// A polynomial identity sum_j c_j * column_j = target, where every column
/// and the target are tuples of bivariate polynomials of a fixed length.
/// Coefficient matching turns it into a sparse linear system in the c_j.
class PolySystem {
 public:
  explicit PolySystem(std::size_t components) : components_(components) {}

  /// Returns the index of the new unknown.
  std::size_t add_unknown(std::vector<BivariatePoly> column);
  std::size_t add_unknown(const OneForm& w) { return add_unknown(std::vector<BivariatePoly>{w.a, w.b}); }
  std::size_t add_unknown(const BivariatePoly& p) { return add_unknown(std::vector<BivariatePoly>{p}); }

  /// Extra scalar equation sum coeff_j * c_j = rhs.
  void add_constraint(std::vector<std::pair<std::size_t, Rational>> coeffs, const Rational& rhs);

  std::size_t unknowns() const { return columns_.size(); }

  LinearSolution solve(const std::vector<BivariatePoly>& target) const;
  LinearSolution solve(const OneForm& w) const { return solve(std::vector<BivariatePoly>{w.a, w.b}); }
  LinearSolution solve(const BivariatePoly& p) const { return solve(std::vector<BivariatePoly>{p}); }
  /// Rank of the column set (constraints excluded).
  std::size_t rank() const;

 private:
  struct Constraint {
    std::vector<std::pair<std::size_t, Rational>> coeffs;
    Rational rhs;
  };
  std::size_t components_;
  std::vector<std::vector<BivariatePoly>> columns_;
  std::vector<Constraint> constraints_;
};

/// sum_j c_j * p_j over a set of monomials, e.g. a generic polynomial of
/// bounded degree.
BivariatePoly combine(const std::vector<Monomial>& monomials, std::span<const Rational> coeffs,
                      std::size_t offset);

}  // namespace pencillab

#endif  // PENCILLAB_POLY_SYSTEM_HPP
