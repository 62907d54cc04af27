#pragma once

#include <map>
#include <string>

#include "bzeta/qlaurent.hpp"

namespace bzeta {

/// Finite direct sum of sl2 irreducibles: highest weight m -> multiplicity.
class Sl2Decomposition {
 public:
  using Parts = std::map<long, BigInt>;

  Sl2Decomposition() = default;
  static Sl2Decomposition irreducible(long m);

  const Parts& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  BigInt multiplicity(long m) const;
  void add(long m, const BigInt& mult);
  BigInt dimension() const;

  friend bool operator==(const Sl2Decomposition&, const Sl2Decomposition&) = default;

  /// "V4 + V0", "2 V2"
  std::string to_string() const;

 private:
  Parts parts_;
};

/// Weight character sum_w N(w) q^w of a decomposition.
QLaurent character(const Sl2Decomposition& d);
/// Split a character into irreducibles via mult(V_p) = N(p) - N(p+2).
/// Throws InternalError when a multiplicity comes out negative.
Sl2Decomposition peel_character(const QLaurent& chi);

/// S^j(V_m) by the Cayley-Sylvester partition-difference formula.
Sl2Decomposition cs_sym_power(long m, long j);
/// S^j(V_m) by counting size-j multisets of weights; requires j*m <= budget.
Sl2Decomposition sym_power_weight_oracle(long m, long j, long budget = 200);
/// S^j(V_m) from Newton's identity with Adams operations psi^i(chi)(q) = chi(q^i).
Sl2Decomposition adams_sym_power(long m, long j);

/// Clebsch-Gordan, extended bilinearly.
Sl2Decomposition tensor_decompose(const Sl2Decomposition& a, const Sl2Decomposition& b);

/// sum mult (m+1)_q
QLaurent dimq_prime(const Sl2Decomposition& d);
/// sum mult q^{-m(m+2)/2} (m+1)_q
QLaurent dimq(const Sl2Decomposition& d);

}  // namespace bzeta
