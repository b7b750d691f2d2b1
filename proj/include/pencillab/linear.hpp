#ifndef PENCILLAB_LINEAR_HPP
#define PENCILLAB_LINEAR_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pencillab/rational.hpp"

namespace pencillab {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& v : a.data_) v *= s;
    return a;
  }

  std::vector<T> apply(std::span<const T> v) const {
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;
using RationalVector = std::vector<Rational>;

/// Row-oriented sparse matrix used to assemble the structured systems
/// (coefficient matching of polynomial identities).
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  /// Accumulates into (i, j).
  void add(std::size_t i, std::size_t j, const Rational& v);
  const std::vector<Entry>& row(std::size_t i) const { return data_[i]; }
  void add_row() {
    data_.emplace_back();
    ++rows_;
  }

  static SparseMatrix from_dense(const RationalMatrix& m);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Entry>> data_;  // each row sorted by column
};

struct LinearSolution {
  bool feasible = false;
  RationalVector particular;               // free variables set to zero
  std::vector<RationalVector> nullspace;   // one vector per free column, ascending
  std::size_t rank = 0;
};

/// Exact solution set of m * x = rhs. Elimination is fraction free on
/// primitive integer rows. Columns are eliminated left to right; within a
/// column the pivot is the candidate row with the fewest nonzeros, ties
/// broken by lowest row index.
LinearSolution solve_linear(const SparseMatrix& m, std::span<const Rational> rhs);
LinearSolution solve_linear(const RationalMatrix& m, std::span<const Rational> rhs);

std::size_t rank(const SparseMatrix& m);
std::size_t rank(const RationalMatrix& m);
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Scales a rational vector to a primitive integer vector with the same
/// direction (first nonzero entry keeps its sign).
std::vector<Integer> primitive_integer_vector(std::span<const Rational> v);

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(const IntegerMatrix& m);

/// Incrementally maintained row-echelon basis of a subspace of Q^n.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  /// Reduces v against the basis; returns the remainder.
  RationalVector reduce(RationalVector v) const;
  bool contains(std::span<const Rational> v) const;
  /// Adds v when independent; returns whether it was added.
  bool insert(std::span<const Rational> v);
  const std::vector<RationalVector>& rows() const { return rows_; }

 private:
  std::size_t dim_;
  std::vector<RationalVector> rows_;  // pivot entry normalized to 1
  std::vector<std::size_t> pivots_;
};

}  // namespace pencillab

#endif  // PENCILLAB_LINEAR_HPP
