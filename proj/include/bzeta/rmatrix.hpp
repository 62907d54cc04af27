#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "bzeta/linalg.hpp"
#include "bzeta/qlaurent.hpp"

namespace bzeta {

/// Sparse vector in a tensor power of C^n: basis-word index -> coefficient.
using TensorVector = std::map<std::size_t, QLaurent>;

/// Braiding of the fundamental U_q(sl_n) module on C^n (x) C^n:
///   e_i (x) e_i -> q e_i (x) e_i
///   e_i (x) e_j -> e_j (x) e_i                       (i < j)
///   e_i (x) e_j -> e_j (x) e_i + (q - q^-1) e_i (x) e_j   (i > j)
/// Eigenvalues are q on the symmetric part and -q^-1 on the antisymmetric part.
/// The constructor checks the Hecke and braid relations exactly.
class RHat {
 public:
  explicit RHat(int n);

  int n() const { return n_; }
  /// Image of e_a (x) e_b (0-based letters) as pairs (a' * n + b', coeff).
  const std::vector<std::pair<std::size_t, QLaurent>>& image(int a, int b) const;
  ExactMatrix<QRational> matrix() const;

  /// Apply the braiding in slots (slot, slot+1) of a word of length `len`.
  TensorVector apply(const TensorVector& v, int slot, int len) const;

  /// (R - q)(R + q^-1) = 0
  bool satisfies_hecke() const;
  /// R1 R2 R1 = R2 R1 R2 on the cube.
  bool satisfies_braid() const;

 private:
  int n_;
  std::vector<std::vector<std::pair<std::size_t, QLaurent>>> images_;
};

/// Content block of (C^n)^{(x) j}: a multiset of letters (1-based, sorted).
struct ContentBlock {
  std::vector<int> content;
  std::size_t block_size = 0;       // number of words with this content
  std::size_t symmetric_dim = 0;    // dim over Q(q) of the intersection of ker(R_i - q)
};

/// Dimension of the q-symmetric subspace, the intersection of ker(R_i - q id)
/// over adjacent slots, block by block. Blocks are processed in parallel and
/// returned in lexicographic content order. Requires n^j <= budget.
std::vector<ContentBlock> sym_subspace_dims(int n, int j, std::size_t budget = 1024);

/// Trace of K_{2rho}^{(x) j} = diag(q^{n-1}, q^{n-3}, ..., q^{1-n})^{(x) j}
/// on the q-symmetric subspace.
QLaurent quantum_trace_sym(int n, int j, std::size_t budget = 1024);

}  // namespace bzeta
