#include "bzeta/qcombinatorics.hpp"

#include "bzeta/errors.hpp"

namespace bzeta {

QLaurent q_int_sym(long n) {
  if (n < 0) throw InvalidArgument("symmetric q-integer of a negative number");
  QLaurent out;
  for (long e = n - 1; e >= 1 - n; e -= 2) out.add_term(1, Rational(e));
  return out;
}

QLaurent q_factorial_sym(long n) {
  if (n < 0) throw InvalidArgument("q-factorial of a negative number");
  QLaurent out(1);
  for (long i = 2; i <= n; ++i) out *= q_int_sym(i);
  return out;
}

QLaurent q_binom_sym(long n, long k) {
  if (n < 0 || k < 0 || k > n) {
    throw InvalidArgument("q-binomial (" + std::to_string(n) + " choose " + std::to_string(k) + ") out of range");
  }
  k = std::min(k, n - k);
  // (n)(n-1)...(n-k+1) / (k)! keeps the intermediate degree small.
  QLaurent num(1);
  for (long i = 0; i < k; ++i) num *= q_int_sym(n - i);
  return num.divide_exact(q_factorial_sym(k));
}

QLaurent q_binom_asym(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw InvalidArgument("q-binomial out of range");
  auto bracket = [](long m) {
    QLaurent out;
    for (long e = 0; e < m; ++e) out.add_term(1, Rational(e));
    return out;
  };
  k = std::min(k, n - k);
  QLaurent num(1);
  QLaurent den(1);
  for (long i = 0; i < k; ++i) {
    num *= bracket(n - i);
    den *= bracket(i + 1);
  }
  return num.divide_exact(den);
}

UPoly t_bracket(long m) {
  if (m < 1) throw InvalidArgument("t-bracket needs m >= 1");
  return UPoly(std::vector<Rational>(static_cast<std::size_t>(m), Rational(1)));
}

BigInt PartitionTable::count(long r, long j, long m) {
  if (j < 0 || m < 0) throw InvalidArgument("partition bounds must be non-negative");
  if (r < 0) return 0;
  if (r == 0) return 1;
  if (j == 0 || m == 0 || r > j * m) return 0;
  const auto key = std::make_tuple(r, j, m);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  // Either fewer than j parts, or exactly j parts: remove one from each.
  BigInt value = count(r, j - 1, m) + count(r - j, j, m - 1);
  memo_.emplace(key, value);
  return value;
}

BigInt bounded_partitions(long r, long j, long m) {
  PartitionTable table;
  return table.count(r, j, m);
}

}  // namespace bzeta
