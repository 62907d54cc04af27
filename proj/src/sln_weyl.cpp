#include "bzeta/sln_weyl.hpp"

#include "bzeta/errors.hpp"
#include "bzeta/qcombinatorics.hpp"

namespace bzeta {

DominantWeightA::DominantWeightA(int n, std::vector<long> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  if (n < 2) throw InvalidArgument("sl_n weights need n >= 2");
  if (coeffs_.size() != static_cast<std::size_t>(n - 1)) {
    throw InvalidArgument("an sl_" + std::to_string(n) + " weight has " + std::to_string(n - 1) + " coordinates");
  }
  for (long c : coeffs_) {
    if (c < 0) throw InvalidArgument("dominant weights have non-negative coordinates");
  }
}

DominantWeightA DominantWeightA::symmetric_power(int n, long j) {
  std::vector<long> c(static_cast<std::size_t>(n > 1 ? n - 1 : 0), 0);
  if (!c.empty()) c[0] = j;
  return {n, std::move(c)};
}

std::vector<PositiveRootA> positive_roots(int n) {
  std::vector<PositiveRootA> roots;
  for (int i = 1; i <= n - 1; ++i) {
    for (int k = i; k <= n - 1; ++k) roots.push_back({i, k});
  }
  return roots;
}

QLaurent weyl_qdim_prime(const DominantWeightA& w) {
  QLaurent num(1);
  QLaurent den(1);
  for (const auto& root : positive_roots(w.n())) {
    // (alpha, Lambda + rho) = sum over the interval of (lambda_l + 1); (alpha, rho) is the height.
    long pairing = 0;
    for (int l = root.first; l <= root.last; ++l) pairing += w.coeffs()[static_cast<std::size_t>(l - 1)] + 1;
    num *= q_int_sym(pairing);
    den *= q_int_sym(root.last - root.first + 1);
  }
  return num.divide_exact(den);
}

FactoredRatQT zeta_cn_closed(int n) {
  if (n < 1) throw InvalidArgument("zeta of C^n needs n >= 1");
  std::vector<DenominatorFactor> fs;
  for (int j = -(n - 1); j <= n - 1; j += 2) fs.push_back({Rational(j), 1, 1});
  return {QTPoly(1), std::move(fs)};
}

TSeries zeta_cn_series(int n, int order) {
  if (n < 1) throw InvalidArgument("zeta of C^n needs n >= 1");
  TSeries out(order);
  for (int j = 0; j <= order; ++j) out.at(j) = q_binom_sym(n + j - 1, j);
  return out;
}

}  // namespace bzeta
