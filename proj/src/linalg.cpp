#include "bzeta/linalg.hpp"

#include <algorithm>
#include <map>

namespace bzeta {

namespace {

// out = a*r - b*p on sorted sparse rows.
template <class T>
SparseRow<T> combine(const T& a, const SparseRow<T>& r, const T& b, const SparseRow<T>& p) {
  SparseRow<T> out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      T v = a * r[i].second;
      if (!is_zero_value(v)) out.emplace_back(r[i].first, std::move(v));
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      T v = -(b * p[j].second);
      if (!is_zero_value(v)) out.emplace_back(p[j].first, std::move(v));
      ++j;
    } else {
      T v = a * r[i].second - b * p[j].second;
      if (!is_zero_value(v)) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void make_primitive(SparseRow<BigInt>& row) {
  if (row.empty()) return;
  BigInt g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

template <class F>
bool EchelonBasis<F>::insert(SparseRow<F> row) {
  while (!row.empty()) {
    auto it = pivot_of_column_.find(row.front().first);
    if (it == pivot_of_column_.end()) {
      F inv = F(1) / row.front().second;
      for (auto& [c, v] : row) v = v * inv;
      pivot_of_column_.emplace(row.front().first, rows_.size());
      rows_.push_back(std::move(row));
      return true;
    }
    const SparseRow<F>& p = rows_[it->second];
    F factor = row.front().second;  // pivot rows are normalized to leading 1
    row = combine(F(1), row, factor, p);
  }
  return false;
}

template class EchelonBasis<Rational>;
template class EchelonBasis<QRational>;

bool IntegerEchelonBasis::insert(SparseRow<BigInt> row) {
  make_primitive(row);
  while (!row.empty()) {
    auto it = pivot_of_column_.find(row.front().first);
    if (it == pivot_of_column_.end()) {
      pivot_of_column_.emplace(row.front().first, rows_.size());
      rows_.push_back(std::move(row));
      return true;
    }
    const SparseRow<BigInt>& p = rows_[it->second];
    BigInt g;
    mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), row.front().second.get_mpz_t());
    BigInt a = p.front().second / g;
    BigInt b = row.front().second / g;
    row = combine(a, row, b, p);
    make_primitive(row);
  }
  return false;
}

SparseRow<BigInt> primitive_integer_row(const SparseRow<Rational>& row) {
  BigInt l = 1;
  for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  SparseRow<BigInt> out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    BigInt x = v.get_num() * (l / v.get_den());
    out.emplace_back(c, std::move(x));
  }
  make_primitive(out);
  return out;
}

std::size_t exact_rank(const ExactMatrix<Rational>& m) {
  const std::size_t n = m.rows();
  const std::size_t w = m.cols();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(w));
  for (std::size_t i = 0; i < n; ++i) {
    SparseRow<BigInt> r = primitive_integer_row(m.sparse_row(i));
    for (auto& [c, v] : r) a[i][c] = std::move(v);
  }
  // Fraction-free Gaussian elimination; after each step every entry is a
  // minor of the input, so the division by the previous pivot is exact.
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t k = 0; k < w && rank < n; ++k) {
    std::size_t p = rank;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[rank]);
    const BigInt& piv = a[rank][k];
    for (std::size_t i = rank + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < w; ++j) {
        BigInt v = piv * a[i][j] - a[i][k] * a[rank][j];
        if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t())) throw InternalError("Bareiss step lost exactness");
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

std::size_t exact_rank(const ExactMatrix<QRational>& m) {
  EchelonBasis<QRational> basis;
  for (std::size_t i = 0; i < m.rows(); ++i) basis.insert(m.sparse_row(i));
  return basis.rank();
}

LinearSolution solve_sparse(const std::vector<SparseRow<Rational>>& rows, const std::vector<Rational>& rhs,
                            std::size_t cols) {
  if (rows.size() != rhs.size()) throw InvalidArgument("right-hand side length does not match the row count");
  EchelonBasis<Rational> basis;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseRow<Rational> r = rows[i];
    for (const auto& [c, v] : r) {
      if (c >= cols) throw InvalidArgument("row entry beyond the declared column count");
    }
    if (rhs[i] != 0) r.emplace_back(cols, rhs[i]);
    basis.insert(std::move(r));
  }
  // Back substitution over pivots in descending column order.
  std::map<std::size_t, const SparseRow<Rational>*, std::greater<>> by_pivot;
  for (const auto& r : basis.rows()) {
    if (r.front().first == cols) throw NoSolution("inconsistent linear system");
    by_pivot.emplace(r.front().first, &r);
  }
  std::vector<Rational> x(cols);
  for (const auto& [pc, row] : by_pivot) {
    Rational acc = 0;
    for (std::size_t k = 1; k < row->size(); ++k) {
      const auto& [c, v] = (*row)[k];
      if (c == cols) acc += v;
      else acc -= v * x[c];
    }
    x[pc] = acc / row->front().second;
  }
  return {std::move(x), cols - by_pivot.size()};
}

LinearSolution solve_linear(const ExactMatrix<Rational>& a, const std::vector<Rational>& rhs) {
  std::vector<SparseRow<Rational>> rows;
  rows.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.sparse_row(i));
  return solve_sparse(rows, rhs, a.cols());
}

}  // namespace bzeta
