#include "pencillab/poly_system.hpp"

#include <map>
#include <stdexcept>

namespace pencillab {

std::size_t PolySystem::add_unknown(std::vector<BivariatePoly> column) {
  if (column.size() != components_) throw std::invalid_argument("column has wrong component count");
  columns_.push_back(std::move(column));
  return columns_.size() - 1;
}

void PolySystem::add_constraint(std::vector<std::pair<std::size_t, Rational>> coeffs, const Rational& rhs) {
  constraints_.push_back({std::move(coeffs), rhs});
}

namespace {

struct RowKey {
  std::size_t component;
  Monomial m;
  bool operator<(const RowKey& o) const {
    if (component != o.component) return component < o.component;
    return grevlex_less(m, o.m);
  }
};

}  // namespace

LinearSolution PolySystem::solve(const std::vector<BivariatePoly>& target) const {
  if (target.size() != components_) throw std::invalid_argument("target has wrong component count");
  std::map<RowKey, std::size_t> rows;
  auto index_of = [&rows](std::size_t comp, const Monomial& m) {
    auto [it, inserted] = rows.try_emplace(RowKey{comp, m}, rows.size());
    return it->second;
  };
  for (const auto& col : columns_)
    for (std::size_t c = 0; c < components_; ++c)
      for (const auto& [m, v] : col[c].terms()) index_of(c, m);
  for (std::size_t c = 0; c < components_; ++c)
    for (const auto& [m, v] : target[c].terms()) index_of(c, m);

  const std::size_t poly_rows = rows.size();
  SparseMatrix mat(poly_rows + constraints_.size(), columns_.size());
  RationalVector rhs(poly_rows + constraints_.size(), Rational(0));
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (std::size_t c = 0; c < components_; ++c)
      for (const auto& [m, v] : columns_[j][c].terms()) mat.add(rows.at({c, m}), j, v);
  for (std::size_t c = 0; c < components_; ++c)
    for (const auto& [m, v] : target[c].terms()) rhs[rows.at({c, m})] = v;
  for (std::size_t k = 0; k < constraints_.size(); ++k) {
    for (const auto& [j, v] : constraints_[k].coeffs) mat.add(poly_rows + k, j, v);
    rhs[poly_rows + k] = constraints_[k].rhs;
  }
  return solve_linear(mat, rhs);
}

std::size_t PolySystem::rank() const {
  std::map<RowKey, std::size_t> rows;
  for (const auto& col : columns_)
    for (std::size_t c = 0; c < components_; ++c)
      for (const auto& [m, v] : col[c].terms()) rows.try_emplace(RowKey{c, m}, rows.size());
  SparseMatrix mat(rows.size(), columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (std::size_t c = 0; c < components_; ++c)
      for (const auto& [m, v] : columns_[j][c].terms()) mat.add(rows.at({c, m}), j, v);
  return pencillab::rank(mat);
}

BivariatePoly combine(const std::vector<Monomial>& monomials, std::span<const Rational> coeffs,
                      std::size_t offset) {
  BivariatePoly p;
  for (std::size_t k = 0; k < monomials.size(); ++k) p.add_term(monomials[k], coeffs[offset + k]);
  return p;
}

}  // namespace pencillab
