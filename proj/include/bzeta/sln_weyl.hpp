#pragma once

#include <vector>

#include "bzeta/factored.hpp"
#include "bzeta/qlaurent.hpp"
#include "bzeta/tseries.hpp"

namespace bzeta {

/// Dominant weight of sl_n written in the fundamental-weight basis.
class DominantWeightA {
 public:
  DominantWeightA(int n, std::vector<long> coeffs);
  /// j * omega_1
  static DominantWeightA symmetric_power(int n, long j);

  int n() const { return n_; }
  const std::vector<long>& coeffs() const { return coeffs_; }

 private:
  int n_;
  std::vector<long> coeffs_;
};

/// Positive root alpha_i + ... + alpha_k of A_{n-1} (1-based, i <= k).
struct PositiveRootA {
  int first;
  int last;
};

std::vector<PositiveRootA> positive_roots(int n);

/// prod over positive roots of ((alpha, Lambda+rho))_q / ((alpha, rho))_q.
QLaurent weyl_qdim_prime(const DominantWeightA& w);

/// prod_{j=-(n-1), step 2}^{n-1} 1/(1 - q^j t).
FactoredRatQT zeta_cn_closed(int n);
/// sum_j t^j (n+j-1 choose j)_q.
TSeries zeta_cn_series(int n, int order);

}  // namespace bzeta
