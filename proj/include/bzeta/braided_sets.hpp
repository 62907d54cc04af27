#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bzeta/linalg.hpp"
#include "bzeta/upoly.hpp"

namespace bzeta {

/// Constant cocycle multiplying the set-theoretic braiding. The sign version
/// Psi(x (x) y) = -(xyx^-1 (x) x) is the one whose symmetric algebras have the
/// Fomin-Kirillov Hilbert series.
enum class Cocycle { trivial, sign };

/// Finite set X = {0..n-1} with Psi(x (x) y) = sign * (left(x,y) (x) right(x,y)).
class BraidedSet {
 public:
  /// Tables are row-major n*n, 0-based. Throws InvalidArgument unless the
  /// table is a bijection of X x X satisfying the braid relation.
  BraidedSet(std::size_t n, std::vector<std::uint32_t> left, std::vector<std::uint32_t> right, int sign = 1,
             std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  int sign() const { return sign_; }
  std::uint32_t left(std::size_t x, std::size_t y) const { return left_[x * n_ + y]; }
  std::uint32_t right(std::size_t x, std::size_t y) const { return right_[x * n_ + y]; }
  const std::vector<std::uint32_t>& left_table() const { return left_; }
  const std::vector<std::uint32_t>& right_table() const { return right_; }
  /// Preimage of the pair (a, b) under the underlying bijection, as a*n+b -> x*n+y.
  std::size_t inverse_pair(std::size_t a, std::size_t b) const { return inverse_[a * n_ + b]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool is_involutive() const;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> right_;
  std::vector<std::size_t> inverse_;
  int sign_;
  std::vector<std::string> labels_;
};

/// Bijective on pairs and Psi1 Psi2 Psi1 = Psi2 Psi1 Psi2 on all triples.
bool check_braid_relation(std::size_t n, const std::vector<std::uint32_t>& left,
                          const std::vector<std::uint32_t>& right);

/// Conjugacy class of `representative` (1-based images of 1..k) in S_k with
/// Psi(x, y) = (xyx^-1, x); elements indexed in lexicographic order of their
/// image lists.
BraidedSet from_conjugacy_class(int k, const std::vector<int>& representative, Cocycle cocycle = Cocycle::sign);
/// Transpositions of S_k.
BraidedSet transpositions(int k, Cocycle cocycle = Cocycle::sign);
/// Psi(x, y) = (y, x).
BraidedSet flip_set(std::size_t n);

enum class SymmetrizerKernel { parallel_orbits, serial };

struct SymmetrizerOptions {
  std::size_t max_words = std::size_t{1} << 20;  // n^j budget per degree
  SymmetrizerKernel kernel = SymmetrizerKernel::parallel_orbits;
};

/// Rank over Q of the braided symmetrizer S_j on the n^j-dimensional tensor
/// space, from the recursion S_j = (S_{j-1} (x) id)(id + Psi_{j-1} + ... +
/// Psi_{j-1}...Psi_1), keeping only a row basis of each S_{j-1}.
std::size_t symmetrizer_rank(const BraidedSet& x, int j, const SymmetrizerOptions& opts = {});

/// Dense S_j built by the same recursion (small j only; tests and fixtures).
ExactMatrix<Rational> symmetrizer_matrix(const BraidedSet& x, int j);
/// Dense S_j as the literal sum over all j! permutations, each applied along
/// one reduced word (reference for the recursion; j <= 6).
ExactMatrix<Rational> symmetrizer_matrix_literal(const BraidedSet& x, int j);

struct GradedDims {
  std::vector<std::size_t> dims;  // d_0..d_J for the degrees reached
  int requested_degree = 0;
  bool complete = true;
  std::string stop_reason;  // set when the budget stopped the computation
};

/// dim BS(A)^j for j = 0..max_degree. Stops at the first degree over budget
/// and returns what was reached.
GradedDims hilbert_dims(const BraidedSet& x, int max_degree, const SymmetrizerOptions& opts = {});
/// Same for the algebra with only the quadratic relations ker S_2.
GradedDims quadratic_hilbert_dims(const BraidedSet& x, int max_degree, const SymmetrizerOptions& opts = {});

/// dim of the intersection of ker(Psi_i - id) on the n^j space.
std::size_t invariant_dims(const BraidedSet& x, int j, const SymmetrizerOptions& opts = {});

/// Orbits of the braid group on words of length j, as lists of word indices
/// (big-endian base n), ordered by smallest word.
std::vector<std::vector<std::size_t>> braid_orbits(const BraidedSet& x, int j);

/// Published Hilbert series for the transposition classes X_2..X_5.
UPoly fk_reference_series(int n);

/// {"size", "sign", "left", "right", "labels"} with 1-based entries.
std::string braided_set_to_json(const BraidedSet& x);
BraidedSet braided_set_from_json(const std::string& text);

}  // namespace bzeta
