#pragma once

#include <map>
#include <tuple>

#include "bzeta/qlaurent.hpp"
#include "bzeta/upoly.hpp"

namespace bzeta {

/// Symmetric q-integer (n)_q = q^{n-1} + q^{n-3} + ... + q^{1-n}; zero for n = 0.
QLaurent q_int_sym(long n);
/// (n)_q (n-1)_q ... (1)_q.
QLaurent q_factorial_sym(long n);
/// Symmetric q-binomial (n)_q! / ((k)_q! (n-k)_q!), by exact division.
QLaurent q_binom_sym(long n, long k);
/// Gaussian binomial built from [n]_q = (1 - q^n)/(1 - q), non-negative powers only.
QLaurent q_binom_asym(long n, long k);

/// [m]_t = 1 + t + ... + t^{m-1}.
UPoly t_bracket(long m);

/// Memoized counts p(r, j, m) of partitions of r into at most j parts, each
/// at most m. Not safe for concurrent use; give each thread its own table.
class PartitionTable {
 public:
  BigInt count(long r, long j, long m);

 private:
  std::map<std::tuple<long, long, long>, BigInt> memo_;
};

BigInt bounded_partitions(long r, long j, long m);

}  // namespace bzeta
