#pragma once

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bzeta/errors.hpp"
#include "bzeta/qrational.hpp"
#include "bzeta/rational.hpp"

namespace bzeta {

inline bool is_zero_value(const Rational& x) { return x == 0; }
inline bool is_zero_value(const BigInt& x) { return x == 0; }
inline bool is_zero_value(const QRational& x) { return x.is_zero(); }

/// Sparse row: (column, value) pairs sorted by column, no stored zeros.
template <class T>
using SparseRow = std::vector<std::pair<std::size_t, T>>;

/// Dense exact matrix over Rational or QRational.
template <class T>
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  ExactMatrix(std::initializer_list<std::initializer_list<long>> init);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  SparseRow<T> sparse_row(std::size_t i) const {
    SparseRow<T> r;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!is_zero_value((*this)(i, j))) r.emplace_back(j, (*this)(i, j));
    }
    return r;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
ExactMatrix<T>::ExactMatrix(std::initializer_list<std::initializer_list<long>> init)
    : rows_(init.size()), cols_(init.size() == 0 ? 0 : init.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_) throw InvalidArgument("ragged matrix initializer");
    for (long v : row) data_.push_back(T(v));
  }
}

/// Rank over Q: rows are cleared of denominators and reduced by fraction-free
/// (Bareiss) elimination, pivoting on the first nonzero entry of each column.
std::size_t exact_rank(const ExactMatrix<Rational>& m);
/// Rank over Q(q) by classical elimination with QRational pivots.
std::size_t exact_rank(const ExactMatrix<QRational>& m);

struct LinearSolution {
  std::vector<Rational> particular;  // free variables set to zero
  std::size_t free_dimension = 0;    // dimension of the affine solution set
};

/// Throws NoSolution when the system is inconsistent.
LinearSolution solve_linear(const ExactMatrix<Rational>& a, const std::vector<Rational>& rhs);
/// Sparse variant: rows[i] . x = rhs[i], with `cols` unknowns.
LinearSolution solve_sparse(const std::vector<SparseRow<Rational>>& rows, const std::vector<Rational>& rhs,
                            std::size_t cols);

/// Row-echelon basis over a field, built one row at a time. Each stored row
/// has a distinct leading column (its pivot).
template <class F>
class EchelonBasis {
 public:
  /// Reduces `row` against the basis and keeps it if independent.
  bool insert(SparseRow<F> row);
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseRow<F>>& rows() const { return rows_; }
  /// The stored row whose leading column is `col`, or nullptr.
  const SparseRow<F>* row_with_pivot(std::size_t col) const {
    auto it = pivot_of_column_.find(col);
    return it == pivot_of_column_.end() ? nullptr : &rows_[it->second];
  }

 private:
  std::vector<SparseRow<F>> rows_;
  std::unordered_map<std::size_t, std::size_t> pivot_of_column_;
};

/// Echelon basis of integer rows using fraction-free elimination: each
/// reduction forms a*r - b*p and divides out the row content, so stored rows
/// are primitive with a positive leading entry. Spans the same Q-row space.
class IntegerEchelonBasis {
 public:
  bool insert(SparseRow<BigInt> row);
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseRow<BigInt>>& rows() const { return rows_; }

 private:
  std::vector<SparseRow<BigInt>> rows_;
  std::unordered_map<std::size_t, std::size_t> pivot_of_column_;
};

/// Multiply a rational row by the lcm of its denominators and divide by the
/// content, giving a primitive integer row with the same span.
SparseRow<BigInt> primitive_integer_row(const SparseRow<Rational>& row);

extern template class EchelonBasis<Rational>;
extern template class EchelonBasis<QRational>;

}  // namespace bzeta
