#include "bzeta/rmatrix.hpp"

#include <algorithm>
#include <functional>

#include "bzeta/errors.hpp"

namespace bzeta {

namespace {

void accumulate(TensorVector& v, std::size_t index, const QLaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

std::size_t ipow(std::size_t base, int e) {
  std::size_t out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

const QLaurent& q_minus_qinv() {
  static const QLaurent value = QLaurent::q_power(1) - QLaurent::q_power(-1);
  return value;
}

}  // namespace

RHat::RHat(int n) : n_(n) {
  if (n < 1) throw InvalidArgument("R-matrix needs n >= 1");
  const auto nn = static_cast<std::size_t>(n);
  images_.resize(nn * nn);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto& img = images_[static_cast<std::size_t>(a) * nn + static_cast<std::size_t>(b)];
      const std::size_t flipped = static_cast<std::size_t>(b) * nn + static_cast<std::size_t>(a);
      const std::size_t same = static_cast<std::size_t>(a) * nn + static_cast<std::size_t>(b);
      if (a == b) {
        img.emplace_back(same, QLaurent::q_power(1));
      } else if (a < b) {
        img.emplace_back(flipped, QLaurent(1));
      } else {
        img.emplace_back(flipped, QLaurent(1));
        img.emplace_back(same, q_minus_qinv());
      }
      std::sort(img.begin(), img.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    }
  }
  if (!satisfies_hecke()) throw InternalError("R-matrix fails the Hecke relation");
  if (!satisfies_braid()) throw InternalError("R-matrix fails the braid relation");
}

const std::vector<std::pair<std::size_t, QLaurent>>& RHat::image(int a, int b) const {
  return images_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
}

ExactMatrix<QRational> RHat::matrix() const {
  const auto nn = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
  ExactMatrix<QRational> m(nn, nn);
  for (std::size_t col = 0; col < nn; ++col) {
    for (const auto& [row, c] : images_[col]) m(row, col) = QRational(c);
  }
  return m;
}

TensorVector RHat::apply(const TensorVector& v, int slot, int len) const {
  const auto nn = static_cast<std::size_t>(n_);
  // Word index is big-endian in base n: slot 0 is the most significant digit.
  const std::size_t low = ipow(nn, len - slot - 2);
  TensorVector out;
  for (const auto& [index, c] : v) {
    const std::size_t pair = (index / low) % (nn * nn);
    const std::size_t base = index - pair * low;
    for (const auto& [target, r] : images_[pair]) accumulate(out, base + target * low, c * r);
  }
  return out;
}

bool RHat::satisfies_hecke() const {
  // R^2 - (q - q^-1) R - 1 = 0
  const auto nn = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
  for (std::size_t i = 0; i < nn; ++i) {
    TensorVector e{{i, QLaurent(1)}};
    TensorVector r1 = apply(e, 0, 2);
    TensorVector r2 = apply(r1, 0, 2);
    TensorVector total = r2;
    for (const auto& [k, c] : r1) accumulate(total, k, -(c * q_minus_qinv()));
    accumulate(total, i, QLaurent(-1));
    if (!total.empty()) return false;
  }
  return true;
}

bool RHat::satisfies_braid() const {
  const std::size_t cube = ipow(static_cast<std::size_t>(n_), 3);
  for (std::size_t i = 0; i < cube; ++i) {
    TensorVector e{{i, QLaurent(1)}};
    TensorVector lhs = apply(apply(apply(e, 0, 3), 1, 3), 0, 3);
    TensorVector rhs = apply(apply(apply(e, 1, 3), 0, 3), 1, 3);
    if (lhs != rhs) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<int>> contents(int n, int j) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == j) {
      out.push_back(cur);
      return;
    }
    for (int a = start; a <= n; ++a) {
      cur.push_back(a);
      rec(a);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

std::size_t block_symmetric_dim(const RHat& r, const std::vector<int>& content, std::size_t& block_size) {
  const int j = static_cast<int>(content.size());
  const auto nn = static_cast<std::size_t>(r.n());
  std::vector<std::size_t> words;
  std::vector<int> perm = content;
  do {
    std::size_t idx = 0;
    for (int a : perm) idx = idx * nn + static_cast<std::size_t>(a - 1);
    words.push_back(idx);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(words.begin(), words.end());
  block_size = words.size();
  auto column_of = [&](std::size_t word) {
    auto it = std::lower_bound(words.begin(), words.end(), word);
    if (it == words.end() || *it != word) throw InternalError("braiding left its content block");
    return static_cast<std::size_t>(it - words.begin());
  };
  EchelonBasis<QRational> basis;
  const QLaurent q = QLaurent::q_power(1);
  for (int slot = 0; slot + 1 < j; ++slot) {
    // Rows of (R_slot - q) restricted to the block: row u collects the
    // coefficient of e_u in (R_slot - q) e_w over the block words w.
    std::map<std::size_t, std::map<std::size_t, QLaurent>> rows;
    for (std::size_t w = 0; w < words.size(); ++w) {
      TensorVector img = r.apply(TensorVector{{words[w], QLaurent(1)}}, slot, j);
      accumulate(img, words[w], -q);
      for (const auto& [u, c] : img) rows[column_of(u)][w] = c;
    }
    for (const auto& [u, entries] : rows) {
      SparseRow<QRational> row;
      for (const auto& [w, c] : entries) row.emplace_back(w, QRational(c));
      basis.insert(std::move(row));
    }
  }
  return words.size() - basis.rank();
}

}  // namespace

std::vector<ContentBlock> sym_subspace_dims(int n, int j, std::size_t budget) {
  if (n < 1) throw InvalidArgument("R-matrix oracle needs n >= 1");
  if (j < 0) throw InvalidArgument("tensor degree must be non-negative");
  const std::size_t dim = ipow(static_cast<std::size_t>(n), j);
  if (dim > budget) {
    throw BudgetExceeded("R-matrix oracle budget exceeded: n^j = " + std::to_string(dim) + " > " +
                         std::to_string(budget));
  }
  const RHat r(n);
  std::vector<ContentBlock> blocks;
  for (auto& c : contents(n, j)) blocks.push_back({std::move(c), 0, 0});
  std::vector<std::string> failures(blocks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    try {
      blocks[b].symmetric_dim = block_symmetric_dim(r, blocks[b].content, blocks[b].block_size);
    } catch (const std::exception& e) {
      failures[b] = e.what();
    }
  }
  for (const auto& f : failures) {
    if (!f.empty()) throw InternalError(f);
  }
  return blocks;
}

QLaurent quantum_trace_sym(int n, int j, std::size_t budget) {
  QLaurent trace;
  for (const auto& block : sym_subspace_dims(n, j, budget)) {
    long weight = 0;
    for (int a : block.content) weight += n + 1 - 2 * a;
    trace.add_term(Rational(static_cast<long>(block.symmetric_dim)), Rational(weight));
  }
  return trace;
}

}  // namespace bzeta
