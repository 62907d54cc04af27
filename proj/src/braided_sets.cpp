#include "bzeta/braided_sets.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <map>
#include <numeric>

#include "bzeta/errors.hpp"
#include "bzeta/qcombinatorics.hpp"
#include "json.hpp"

namespace bzeta {

namespace {

// Words of length j over {0..n-1}, big-endian: position 0 is the most
// significant digit.
class WordSpace {
 public:
  WordSpace(const BraidedSet& x, int j) : x_(x), n_(x.size()), place_(static_cast<std::size_t>(j)) {
    std::size_t p = 1;
    for (int pos = j - 1; pos >= 0; --pos) {
      place_[static_cast<std::size_t>(pos)] = p;
      p *= n_;
    }
    total_ = p;
  }

  std::size_t total() const { return total_; }

  // The underlying bijection on the letters at positions (slot, slot+1).
  std::size_t forward(std::size_t w, std::size_t slot) const {
    const std::size_t a = (w / place_[slot]) % n_;
    const std::size_t b = (w / place_[slot + 1]) % n_;
    return replace(w, slot, a, b, x_.left(a, b), x_.right(a, b));
  }

  std::size_t backward(std::size_t w, std::size_t slot) const {
    const std::size_t a = (w / place_[slot]) % n_;
    const std::size_t b = (w / place_[slot + 1]) % n_;
    const std::size_t pre = x_.inverse_pair(a, b);
    return replace(w, slot, a, b, pre / n_, pre % n_);
  }

 private:
  std::size_t replace(std::size_t w, std::size_t slot, std::size_t a, std::size_t b, std::size_t na,
                      std::size_t nb) const {
    return w - a * place_[slot] - b * place_[slot + 1] + na * place_[slot] + nb * place_[slot + 1];
  }

  const BraidedSet& x_;
  std::size_t n_;
  std::vector<std::size_t> place_;
  std::size_t total_ = 1;
};

void check_budget(const BraidedSet& x, int j, const SymmetrizerOptions& opts) {
  if (j < 0) throw InvalidArgument("degree must be non-negative");
  std::size_t words = 1;
  for (int k = 0; k < j; ++k) {
    if (words > opts.max_words / std::max<std::size_t>(x.size(), 1)) {
      throw BudgetExceeded("degree " + std::to_string(j) + " needs " + std::to_string(x.size()) + "^" +
                           std::to_string(j) + " words, over the budget of " + std::to_string(opts.max_words));
    }
    words *= x.size();
  }
}

// Row of (C (x) id) T_k for one row of C and one appended letter. Pulling a
// row vector back through Psi_i moves the entry at word v to the preimage of
// v and multiplies it by the cocycle.
SparseRow<BigInt> streamed_row(const SparseRow<BigInt>& r, std::size_t letter, int k, const WordSpace& ws,
                               const BraidedSet& x) {
  const std::size_t n = x.size();
  SparseRow<BigInt> u;
  u.reserve(r.size());
  for (const auto& [v, c] : r) u.emplace_back(v * n + letter, c);
  SparseRow<BigInt> acc = u;
  acc.reserve(r.size() * static_cast<std::size_t>(k));
  for (int c = 1; c < k; ++c) {
    const auto slot = static_cast<std::size_t>(k - 1 - c);
    for (auto& [v, coeff] : u) {
      v = ws.backward(v, slot);
      if (x.sign() < 0) coeff = -coeff;
    }
    acc.insert(acc.end(), u.begin(), u.end());
  }
  std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow<BigInt> out;
  out.reserve(acc.size());
  for (auto& [col, val] : acc) {
    if (!out.empty() && out.back().first == col) {
      out.back().second += val;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.emplace_back(col, std::move(val));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  return out;
}

// Union-find over words, merging w with its image under each Psi_i. Roots
// are the smallest word of each orbit.
std::vector<std::size_t> orbit_roots(const WordSpace& ws, int j) {
  std::vector<std::size_t> parent(ws.total());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  for (std::size_t w = 0; w < ws.total(); ++w) {
    for (int slot = 0; slot + 1 < j; ++slot) {
      std::size_t a = find(w);
      std::size_t b = find(ws.forward(w, static_cast<std::size_t>(slot)));
      if (a == b) continue;
      if (a < b) parent[b] = a;
      else parent[a] = b;
    }
  }
  for (std::size_t w = 0; w < ws.total(); ++w) parent[w] = find(w);
  return parent;
}

std::vector<SparseRow<BigInt>> next_level_serial(const std::vector<SparseRow<BigInt>>& basis, int k,
                                                 const BraidedSet& x) {
  const WordSpace ws(x, k);
  IntegerEchelonBasis out;
  for (const auto& r : basis) {
    for (std::size_t letter = 0; letter < x.size(); ++letter) out.insert(streamed_row(r, letter, k, ws, x));
  }
  return out.rows();
}

// Every streamed row lives in a single braid orbit (the orbit of its words
// of length k-1 extended by the appended letter, closed under Psi_{k-1}), so
// elimination splits into independent per-orbit problems.
std::vector<SparseRow<BigInt>> next_level_parallel(const std::vector<SparseRow<BigInt>>& basis, int k,
                                                   const BraidedSet& x) {
  const WordSpace ws(x, k);
  const std::vector<std::size_t> root = orbit_roots(ws, k);
  std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> groups;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t letter = 0; letter < x.size(); ++letter) {
      groups[root[basis[i].front().first * x.size() + letter]].emplace_back(i, letter);
    }
  }
  std::vector<const std::vector<std::pair<std::size_t, std::size_t>>*> work;
  work.reserve(groups.size());
  for (const auto& [r, g] : groups) work.push_back(&g);
  std::vector<std::vector<SparseRow<BigInt>>> results(work.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t g = 0; g < work.size(); ++g) {
    try {
      IntegerEchelonBasis local;
      for (const auto& [i, letter] : *work[g]) local.insert(streamed_row(basis[i], letter, k, ws, x));
      results[g] = local.rows();
    } catch (...) {
#pragma omp critical(bzeta_symmetrizer_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<SparseRow<BigInt>> out;
  for (auto& part : results) {
    for (auto& r : part) out.push_back(std::move(r));
  }
  return out;
}

std::vector<SparseRow<BigInt>> symmetrizer_row_basis(const BraidedSet& x, int j, const SymmetrizerOptions& opts) {
  check_budget(x, j, opts);
  std::vector<SparseRow<BigInt>> basis;
  if (j == 0) {
    basis.push_back({{0, BigInt(1)}});
    return basis;
  }
  for (std::size_t letter = 0; letter < x.size(); ++letter) basis.push_back({{letter, BigInt(1)}});
  for (int k = 2; k <= j; ++k) {
    basis = opts.kernel == SymmetrizerKernel::serial ? next_level_serial(basis, k, x)
                                                      : next_level_parallel(basis, k, x);
  }
  return basis;
}

std::vector<std::uint32_t> invert_perm(const std::vector<std::uint32_t>& p) {
  std::vector<std::uint32_t> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<std::uint32_t>(i);
  return inv;
}

std::vector<int> cycle_type(const std::vector<std::uint32_t>& p) {
  std::vector<int> lengths;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t c = i; !seen[c]; c = p[c]) {
      seen[c] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string cycle_notation(const std::vector<std::uint32_t>& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    for (std::size_t c = i; !seen[c]; c = p[c]) {
      seen[c] = true;
      if (out.back() != '(') out += " ";
      out += std::to_string(c + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// Reduce a vector modulo an echelon basis until no entry sits on a pivot column.
SparseRow<Rational> normal_form(std::map<std::size_t, Rational> acc, const EchelonBasis<Rational>& rel) {
  for (auto it = acc.begin(); it != acc.end();) {
    const SparseRow<Rational>* row = rel.row_with_pivot(it->first);
    if (row == nullptr) {
      ++it;
      continue;
    }
    const Rational factor = it->second;  // pivot rows have leading coefficient 1
    const std::size_t col = it->first;
    for (const auto& [c, v] : *row) {
      Rational& slot = acc[c];
      slot -= factor * v;
    }
    acc.erase(col);
    for (auto jt = acc.begin(); jt != acc.end();) jt = jt->second == 0 ? acc.erase(jt) : std::next(jt);
    it = acc.upper_bound(col);
  }
  return {acc.begin(), acc.end()};
}

}  // namespace

BraidedSet::BraidedSet(std::size_t n, std::vector<std::uint32_t> left, std::vector<std::uint32_t> right, int sign,
                       std::vector<std::string> labels)
    : n_(n), left_(std::move(left)), right_(std::move(right)), sign_(sign), labels_(std::move(labels)) {
  if (n == 0) throw InvalidArgument("a braided set needs at least one element");
  if (sign != 1 && sign != -1) throw InvalidArgument("the cocycle must be +1 or -1");
  if (!labels_.empty() && labels_.size() != n) throw InvalidArgument("one label per element expected");
  if (!check_braid_relation(n, left_, right_)) {
    throw InvalidArgument("table is not a bijection of X x X satisfying the braid relation");
  }
  inverse_.assign(n * n, 0);
  for (std::size_t p = 0; p < n * n; ++p) inverse_[left_[p] * n + right_[p]] = p;
}

bool BraidedSet::is_involutive() const {
  for (std::size_t p = 0; p < n_ * n_; ++p) {
    const std::size_t q = left_[p] * n_ + right_[p];
    if (left_[q] * n_ + right_[q] != p) return false;
  }
  return true;
}

bool check_braid_relation(std::size_t n, const std::vector<std::uint32_t>& left,
                          const std::vector<std::uint32_t>& right) {
  if (left.size() != n * n || right.size() != n * n) return false;
  std::vector<bool> hit(n * n, false);
  for (std::size_t p = 0; p < n * n; ++p) {
    if (left[p] >= n || right[p] >= n) return false;
    const std::size_t q = left[p] * n + right[p];
    if (hit[q]) return false;
    hit[q] = true;
  }
  auto psi1 = [&](std::array<std::size_t, 3> t) {
    const std::size_t p = t[0] * n + t[1];
    return std::array<std::size_t, 3>{left[p], right[p], t[2]};
  };
  auto psi2 = [&](std::array<std::size_t, 3> t) {
    const std::size_t p = t[1] * n + t[2];
    return std::array<std::size_t, 3>{t[0], left[p], right[p]};
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const std::array<std::size_t, 3> t{a, b, c};
        if (psi1(psi2(psi1(t))) != psi2(psi1(psi2(t)))) return false;
      }
    }
  }
  return true;
}

BraidedSet from_conjugacy_class(int k, const std::vector<int>& representative, Cocycle cocycle) {
  if (k < 2) throw InvalidArgument("conjugacy classes are taken in S_k with k >= 2");
  if (k > 9) throw BudgetExceeded("enumerating S_k is limited to k <= 9");
  if (representative.size() != static_cast<std::size_t>(k)) {
    throw InvalidArgument("representative must list the images of 1.." + std::to_string(k));
  }
  std::vector<std::uint32_t> rep(static_cast<std::size_t>(k));
  std::vector<bool> used(static_cast<std::size_t>(k), false);
  for (std::size_t i = 0; i < rep.size(); ++i) {
    const int v = representative[i];
    if (v < 1 || v > k || used[static_cast<std::size_t>(v - 1)]) {
      throw InvalidArgument("representative is not a permutation of 1.." + std::to_string(k));
    }
    used[static_cast<std::size_t>(v - 1)] = true;
    rep[i] = static_cast<std::uint32_t>(v - 1);
  }
  const std::vector<int> type = cycle_type(rep);
  std::vector<std::vector<std::uint32_t>> elements;
  std::vector<std::uint32_t> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0U);
  do {
    if (cycle_type(perm) == type) elements.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<std::uint32_t>(i));
  const std::size_t n = elements.size();
  std::vector<std::uint32_t> left(n * n);
  std::vector<std::uint32_t> right(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto& x = elements[a];
    const auto xinv = invert_perm(x);
    for (std::size_t b = 0; b < n; ++b) {
      const auto& y = elements[b];
      std::vector<std::uint32_t> conj(static_cast<std::size_t>(k));
      for (std::size_t i = 0; i < conj.size(); ++i) conj[i] = x[y[xinv[i]]];  // (x y x^-1)(i)
      left[a * n + b] = index.at(conj);
      right[a * n + b] = static_cast<std::uint32_t>(a);
    }
  }
  std::vector<std::string> labels;
  for (const auto& e : elements) labels.push_back(cycle_notation(e));
  if (!check_braid_relation(n, left, right)) throw InternalError("conjugation braiding fails the braid relation");
  return {n, std::move(left), std::move(right), cocycle == Cocycle::sign ? -1 : 1, std::move(labels)};
}

BraidedSet transpositions(int k, Cocycle cocycle) {
  if (k < 2) throw InvalidArgument("transpositions need k >= 2");
  std::vector<int> rep(static_cast<std::size_t>(k));
  std::iota(rep.begin(), rep.end(), 1);
  std::swap(rep[0], rep[1]);
  return from_conjugacy_class(k, rep, cocycle);
}

BraidedSet flip_set(std::size_t n) {
  if (n == 0) throw InvalidArgument("flip set needs n >= 1");
  std::vector<std::uint32_t> left(n * n);
  std::vector<std::uint32_t> right(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      left[a * n + b] = static_cast<std::uint32_t>(b);
      right[a * n + b] = static_cast<std::uint32_t>(a);
    }
  }
  return {n, std::move(left), std::move(right), 1};
}

std::size_t symmetrizer_rank(const BraidedSet& x, int j, const SymmetrizerOptions& opts) {
  return symmetrizer_row_basis(x, j, opts).size();
}

ExactMatrix<Rational> symmetrizer_matrix(const BraidedSet& x, int j) {
  if (j < 0) throw InvalidArgument("degree must be non-negative");
  SymmetrizerOptions small;
  small.max_words = 4096;
  check_budget(x, j, small);
  const std::size_t n = x.size();
  if (j == 0) return ExactMatrix<Rational>{{1}};
  ExactMatrix<Rational> s(n, n);
  for (std::size_t i = 0; i < n; ++i) s(i, i) = 1;
  std::size_t dim = n;
  for (int k = 2; k <= j; ++k) {
    const WordSpace ws(x, k);
    const std::size_t big = dim * n;
    ExactMatrix<Rational> next(big, big);
    for (std::size_t w = 0; w < big; ++w) {
      // T_k e_w = sum_c Psi_{k-1} ... Psi_{k-c} e_w, Psi_{k-c} acting first
      Rational sign = 1;
      for (int c = 0; c < k; ++c) {
        std::size_t v = w;
        for (int slot = k - 1 - c; slot <= k - 2; ++slot) v = ws.forward(v, static_cast<std::size_t>(slot));
        if (c > 0) sign *= x.sign();
        // column v of S_{k-1} (x) id is column v/n of S_{k-1} on the prefix, letter v%n kept
        const std::size_t prefix = v / n;
        const std::size_t letter = v % n;
        for (std::size_t r = 0; r < dim; ++r) {
          const Rational& e = s(r, prefix);
          if (e != 0) next(r * n + letter, w) += sign * e;
        }
      }
    }
    s = std::move(next);
    dim = big;
  }
  return s;
}

ExactMatrix<Rational> symmetrizer_matrix_literal(const BraidedSet& x, int j) {
  if (j < 0) throw InvalidArgument("degree must be non-negative");
  if (j > 6) throw BudgetExceeded("the literal symmetrizer sums j! words; j <= 6");
  SymmetrizerOptions small;
  small.max_words = 4096;
  check_budget(x, j, small);
  const WordSpace ws(x, j);
  ExactMatrix<Rational> out(ws.total(), ws.total());
  std::vector<int> perm(static_cast<std::size_t>(j));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // insertion sort records a reduced word of the permutation
    std::vector<int> p = perm;
    std::vector<std::size_t> word;
    for (int i = 1; i < j; ++i) {
      for (int k = i; k > 0 && p[static_cast<std::size_t>(k - 1)] > p[static_cast<std::size_t>(k)]; --k) {
        std::swap(p[static_cast<std::size_t>(k - 1)], p[static_cast<std::size_t>(k)]);
        word.push_back(static_cast<std::size_t>(k - 1));
      }
    }
    const int sign = (word.size() % 2 == 1 && x.sign() < 0) ? -1 : 1;
    for (std::size_t w = 0; w < ws.total(); ++w) {
      std::size_t v = w;
      for (std::size_t slot : word) v = ws.forward(v, slot);
      out(v, w) += sign;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

GradedDims hilbert_dims(const BraidedSet& x, int max_degree, const SymmetrizerOptions& opts) {
  if (max_degree < 0) throw InvalidArgument("degree must be non-negative");
  GradedDims out;
  out.requested_degree = max_degree;
  out.dims.push_back(1);
  if (max_degree == 0) return out;
  std::vector<SparseRow<BigInt>> basis;
  for (std::size_t letter = 0; letter < x.size(); ++letter) basis.push_back({{letter, BigInt(1)}});
  out.dims.push_back(basis.size());
  for (int k = 2; k <= max_degree; ++k) {
    try {
      check_budget(x, k, opts);
    } catch (const BudgetExceeded& e) {
      out.complete = false;
      out.stop_reason = e.what();
      return out;
    }
    if (basis.empty()) {
      out.dims.push_back(0);
      continue;
    }
    basis = opts.kernel == SymmetrizerKernel::serial ? next_level_serial(basis, k, x)
                                                      : next_level_parallel(basis, k, x);
    out.dims.push_back(basis.size());
  }
  return out;
}

GradedDims quadratic_hilbert_dims(const BraidedSet& x, int max_degree, const SymmetrizerOptions& opts) {
  if (max_degree < 0) throw InvalidArgument("degree must be non-negative");
  const std::size_t n = x.size();
  GradedDims out;
  out.requested_degree = max_degree;
  out.dims.push_back(1);
  if (max_degree == 0) return out;
  out.dims.push_back(n);
  if (max_degree == 1) return out;

  // Relations R = ker S_2 in coordinates a*n + b.
  EchelonBasis<Rational> s2;
  {
    const ExactMatrix<Rational> m = symmetrizer_matrix(x, 2);
    for (std::size_t i = 0; i < m.rows(); ++i) s2.insert(m.sparse_row(i));
  }
  std::vector<SparseRow<Rational>> relations;
  for (std::size_t f = 0; f < n * n; ++f) {
    if (s2.row_with_pivot(f) != nullptr) continue;
    // kernel vector with free coordinate f: reduce -e_f... solve S v = 0 with v_f = 1
    std::map<std::size_t, Rational> v;
    v[f] = 1;
    std::vector<const SparseRow<Rational>*> pivots;
    for (const auto& r : s2.rows()) pivots.push_back(&r);
    std::sort(pivots.begin(), pivots.end(), [](auto a, auto b) { return a->front().first > b->front().first; });
    for (const auto* r : pivots) {
      Rational acc = 0;
      for (std::size_t i = 1; i < r->size(); ++i) {
        auto it = v.find((*r)[i].first);
        if (it != v.end()) acc -= (*r)[i].second * it->second;
      }
      if (acc != 0) v[r->front().first] = acc;
    }
    relations.emplace_back(v.begin(), v.end());
  }

  // Normal forms: nf[c] for each coordinate c = s*n + letter of std_{k-1} x V,
  // as a sparse row over positions of std_k.
  std::vector<SparseRow<Rational>> nf_prev;  // degree k-1, indexed by coordinate of std_{k-2} x V
  std::size_t std_prev = n;                  // |std_{k-1}|
  std::size_t std_prev2 = 1;                 // |std_{k-2}|
  // degree 1: std_0 = {empty word}, coordinates = letters, nf = identity
  for (std::size_t a = 0; a < n; ++a) nf_prev.push_back({{a, Rational(1)}});
  for (int k = 2; k <= max_degree; ++k) {
    try {
      check_budget(x, k, opts);
    } catch (const BudgetExceeded& e) {
      out.complete = false;
      out.stop_reason = e.what();
      return out;
    }
    const std::size_t cols = std_prev * n;
    EchelonBasis<Rational> rel;
    for (std::size_t u = 0; u < std_prev2; ++u) {
      for (const auto& r : relations) {
        std::map<std::size_t, Rational> acc;
        for (const auto& [ab, c] : r) {
          const std::size_t a = ab / n;
          const std::size_t b = ab % n;
          for (const auto& [s, v] : nf_prev[u * n + a]) acc[s * n + b] += c * v;
        }
        SparseRow<Rational> row;
        for (auto& [col, v] : acc) {
          if (v != 0) row.emplace_back(col, v);
        }
        if (!row.empty()) rel.insert(std::move(row));
      }
    }
    std::vector<std::size_t> position(cols, 0);
    std::size_t count = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      if (rel.row_with_pivot(c) == nullptr) position[c] = count++;
    }
    std::vector<SparseRow<Rational>> nf(cols);
    for (std::size_t c = 0; c < cols; ++c) {
      SparseRow<Rational> reduced = normal_form({{c, Rational(1)}}, rel);
      for (auto& [col, v] : reduced) col = position[col];
      nf[c] = std::move(reduced);
    }
    out.dims.push_back(count);
    nf_prev = std::move(nf);
    std_prev2 = std_prev;
    std_prev = count;
  }
  return out;
}

std::vector<std::vector<std::size_t>> braid_orbits(const BraidedSet& x, int j) {
  if (j < 0) throw InvalidArgument("degree must be non-negative");
  const WordSpace ws(x, j);
  const std::vector<std::size_t> root = orbit_roots(ws, j);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t w = 0; w < ws.total(); ++w) groups[root[w]].push_back(w);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [r, g] : groups) out.push_back(std::move(g));
  return out;
}

std::size_t invariant_dims(const BraidedSet& x, int j, const SymmetrizerOptions& opts) {
  check_budget(x, j, opts);
  if (j <= 1) return j == 0 ? 1 : x.size();
  const WordSpace ws(x, j);
  const auto orbits = braid_orbits(x, j);
  std::vector<std::size_t> dims(orbits.size(), 0);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    try {
      const auto& words = orbits[o];
      std::map<std::size_t, std::size_t> local;
      for (std::size_t i = 0; i < words.size(); ++i) local.emplace(words[i], i);
      EchelonBasis<Rational> rows;
      // (Psi_i v)(sigma(w)) = sign v(w), so Psi_i v = v reads sign v_w - v_{sigma(w)} = 0.
      for (std::size_t w : words) {
        for (int slot = 0; slot + 1 < j; ++slot) {
          const std::size_t a = local.at(w);
          const std::size_t b = local.at(ws.forward(w, static_cast<std::size_t>(slot)));
          SparseRow<Rational> row;
          if (a == b) {
            if (x.sign() != 1) row.emplace_back(a, Rational(x.sign() - 1));
          } else {
            row.emplace_back(std::min(a, b), a < b ? Rational(x.sign()) : Rational(-1));
            row.emplace_back(std::max(a, b), a < b ? Rational(-1) : Rational(x.sign()));
          }
          if (!row.empty()) rows.insert(std::move(row));
        }
      }
      dims[o] = words.size() - rows.rank();
    } catch (...) {
#pragma omp critical(bzeta_invariant_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
}

UPoly fk_reference_series(int n) {
  auto br = [](long m) { return t_bracket(m); };
  auto power = [](const UPoly& p, int e) {
    UPoly out(1);
    for (int i = 0; i < e; ++i) out = out * p;
    return out;
  };
  switch (n) {
    case 2: return br(2);
    case 3: return power(br(2), 2) * br(3);
    case 4: return power(br(2), 2) * power(br(3), 2) * power(br(4), 2);
    case 5: return power(br(4), 4) * power(br(5), 2) * power(br(6), 4);
    default: throw InvalidArgument("reference Hilbert series exist for n = 2..5");
  }
}

std::string braided_set_to_json(const BraidedSet& x) {
  nlohmann::ordered_json doc;
  const std::size_t n = x.size();
  doc["size"] = n;
  doc["sign"] = x.sign();
  auto table = [&](bool left_side) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t a = 0; a < n; ++a) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t b = 0; b < n; ++b) row.push_back((left_side ? x.left(a, b) : x.right(a, b)) + 1);
      rows.push_back(row);
    }
    return rows;
  };
  doc["left"] = table(true);
  doc["right"] = table(false);
  doc["labels"] = x.labels();
  return doc.dump();
}

BraidedSet braided_set_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("braided set JSON does not parse: ") + e.what());
  }
  try {
    const std::size_t n = doc.at("size").get<std::size_t>();
    const int sign = doc.contains("sign") ? doc.at("sign").get<int>() : 1;
    auto read = [&](const char* key) {
      const auto& rows = doc.at(key);
      if (rows.size() != n) throw InvalidArgument(std::string(key) + " table must have size rows");
      std::vector<std::uint32_t> out;
      for (const auto& row : rows) {
        if (row.size() != n) throw InvalidArgument(std::string(key) + " table must be square");
        for (const auto& v : row) {
          const long e = v.get<long>();
          if (e < 1 || static_cast<std::size_t>(e) > n) throw InvalidArgument("table entries are 1-based indices");
          out.push_back(static_cast<std::uint32_t>(e - 1));
        }
      }
      return out;
    };
    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
    return {n, read("left"), read("right"), sign, std::move(labels)};
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed braided set JSON: ") + e.what());
  }
}

}  // namespace bzeta
