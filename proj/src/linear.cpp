#include "pencillab/linear.hpp"

#include <algorithm>
#include <numeric>

namespace pencillab {

void SparseMatrix::add(std::size_t i, std::size_t j, const Rational& v) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("sparse matrix index");
  if (v == 0) return;
  auto& r = data_[i];
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != r.end() && it->first == j) {
    it->second += v;
    if (it->second == 0) r.erase(it);
  } else {
    r.insert(it, {j, v});
  }
}

SparseMatrix SparseMatrix::from_dense(const RationalMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) s.data_[i].emplace_back(j, m(i, j));
  return s;
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [col, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& [col, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_integer_row(const std::vector<SparseMatrix::Entry>& row, const Rational* rhs,
                      std::size_t rhs_col) {
  Integer l = 1;
  for (const auto& [col, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  if (rhs != nullptr && *rhs != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs->get_den_mpz_t());
  IntRow out;
  out.reserve(row.size() + 1);
  for (const auto& [col, v] : row) {
    Integer scaled = l / v.get_den() * v.get_num();
    out.emplace_back(col, std::move(scaled));
  }
  if (rhs != nullptr && *rhs != 0) out.emplace_back(rhs_col, l / rhs->get_den() * rhs->get_num());
  make_primitive(out);
  return out;
}

const Integer* find_entry(const IntRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// row <- a*row - b*pivot, where a = pivot[col] and b = row[col].
void eliminate(IntRow& row, const IntRow& pivot, std::size_t col) {
  const Integer* bp = find_entry(row, col);
  if (bp == nullptr) return;
  const Integer a = *find_entry(pivot, col);
  Integer b = *bp;
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const Integer as = a / g;
  const Integer bs = b / g;
  IntRow out;
  out.reserve(row.size() + pivot.size());
  auto i = row.begin();
  auto j = pivot.begin();
  while (i != row.end() || j != pivot.end()) {
    if (j == pivot.end() || (i != row.end() && i->first < j->first)) {
      out.emplace_back(i->first, as * i->second);
      ++i;
    } else if (i == row.end() || j->first < i->first) {
      out.emplace_back(j->first, -bs * j->second);
      ++j;
    } else {
      Integer v = as * i->second - bs * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  row = std::move(out);
}

struct Echelon {
  std::vector<IntRow> rows;
  std::vector<std::size_t> pivot_rows;  // indices into rows, ascending pivot column
  std::vector<std::size_t> pivot_cols;
  bool inconsistent = false;
};

// Forward elimination over columns [0, ncols). Column `ncols` (if present)
// is the right-hand side and is never chosen as a pivot.
Echelon forward_eliminate(std::vector<IntRow> rows, std::size_t ncols) {
  Echelon e;
  e.rows = std::move(rows);
  std::vector<std::vector<std::size_t>> bucket(ncols + 1);
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (!e.rows[r].empty()) bucket[e.rows[r].front().first].push_back(r);
  }
  for (std::size_t col = 0; col < ncols; ++col) {
    auto& cand = bucket[col];
    if (cand.empty()) continue;
    std::sort(cand.begin(), cand.end());
    std::size_t best = cand.front();
    for (std::size_t r : cand) {
      if (e.rows[r].size() < e.rows[best].size()) best = r;
    }
    for (std::size_t r : cand) {
      if (r == best) continue;
      eliminate(e.rows[r], e.rows[best], col);
      if (!e.rows[r].empty()) bucket[e.rows[r].front().first].push_back(r);
    }
    e.pivot_rows.push_back(best);
    e.pivot_cols.push_back(col);
    cand.clear();
  }
  e.inconsistent = !bucket[ncols].empty();
  return e;
}

}  // namespace

LinearSolution solve_linear(const SparseMatrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
  const std::size_t n = m.cols();
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_integer_row(m.row(i), &rhs[i], n));

  Echelon e = forward_eliminate(std::move(rows), n);
  LinearSolution sol;
  sol.rank = e.pivot_cols.size();
  if (e.inconsistent) return sol;
  sol.feasible = true;

  // Back elimination to reduced echelon form.
  for (std::size_t k = e.pivot_rows.size(); k-- > 0;) {
    const IntRow& piv = e.rows[e.pivot_rows[k]];
    for (std::size_t j = 0; j < k; ++j) eliminate(e.rows[e.pivot_rows[j]], piv, e.pivot_cols[k]);
  }

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  sol.particular.assign(n, Rational(0));
  for (std::size_t k = 0; k < e.pivot_rows.size(); ++k) {
    const IntRow& row = e.rows[e.pivot_rows[k]];
    const Integer& pv = *find_entry(row, e.pivot_cols[k]);
    if (const Integer* r = find_entry(row, n)) sol.particular[e.pivot_cols[k]] = make_rational(*r, pv);
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(n, Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivot_rows.size(); ++k) {
      const IntRow& row = e.rows[e.pivot_rows[k]];
      if (const Integer* a = find_entry(row, free)) {
        v[e.pivot_cols[k]] = -make_rational(*a, *find_entry(row, e.pivot_cols[k]));
      }
    }
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

LinearSolution solve_linear(const RationalMatrix& m, std::span<const Rational> rhs) {
  return solve_linear(SparseMatrix::from_dense(m), rhs);
}

std::size_t rank(const SparseMatrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_integer_row(m.row(i), nullptr, 0));
  return forward_eliminate(std::move(rows), m.cols()).pivot_cols.size();
}

std::size_t rank(const RationalMatrix& m) { return rank(SparseMatrix::from_dense(m)); }

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  RationalVector zero(m.rows(), Rational(0));
  return solve_linear(m, zero).nullspace;
}

std::vector<Integer> primitive_integer_vector(std::span<const Rational> v) {
  Integer l = common_denominator(v.data(), v.data() + v.size());
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& r : v) {
    out.push_back(l / r.get_den() * r.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

Integer determinant(const IntegerMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntegerMatrix m = input;
  Integer prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(v);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sgn * m(n - 1, n - 1);
}

RationalVector EchelonBasis::reduce(RationalVector v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational c = v[pivots_[i]];
    if (c == 0) continue;
    const auto& r = rows_[i];
    for (std::size_t j = pivots_[i]; j < dim_; ++j) {
      if (r[j] != 0) v[j] -= c * r[j];
    }
  }
  return v;
}

bool EchelonBasis::contains(std::span<const Rational> v) const {
  const RationalVector r = reduce(RationalVector(v.begin(), v.end()));
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

bool EchelonBasis::insert(std::span<const Rational> v) {
  RationalVector r = reduce(RationalVector(v.begin(), v.end()));
  auto it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return x != 0; });
  if (it == r.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - r.begin());
  const Rational lead = r[p];
  for (std::size_t j = p; j < dim_; ++j) r[j] /= lead;
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

}  // namespace pencillab
