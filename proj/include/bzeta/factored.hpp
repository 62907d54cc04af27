#pragma once

#include <string>
#include <vector>

#include "bzeta/qrational.hpp"
#include "bzeta/qtpoly.hpp"
#include "bzeta/tseries.hpp"

namespace bzeta {

/// The factor (1 - q^q_exp t^t_exp)^multiplicity.
struct DenominatorFactor {
  Rational q_exp;
  int t_exp = 1;
  int multiplicity = 1;

  friend bool operator==(const DenominatorFactor&, const DenominatorFactor&) = default;
};

/// Closed-form rational function numerator / prod (1 - q^a t^b)^k, kept
/// factored. Factors are merged and sorted by (t_exp, q_exp).
class FactoredRatQT {
 public:
  FactoredRatQT() : numerator_(1) {}
  FactoredRatQT(QTPoly numerator, std::vector<DenominatorFactor> factors);

  const QTPoly& numerator() const { return numerator_; }
  const std::vector<DenominatorFactor>& factors() const { return factors_; }

  /// Exact truncated expansion in t.
  TSeries expand(int order) const;
  /// prod (1 - q^a t^b)^k as a polynomial.
  QTPoly denominator_poly() const;
  /// Equality as rational functions, decided by cross-multiplication.
  bool equals(const FactoredRatQT& other) const;
  FactoredRatQT operator*(const FactoredRatQT& other) const;
  /// Value at a rational t as a rational function of q.
  QRational eval_t(const Rational& t) const;

  /// "1/((1-q t)(1-q^-1 t))"
  std::string to_string() const;

 private:
  QTPoly numerator_;
  std::vector<DenominatorFactor> factors_;
};

}  // namespace bzeta
