#pragma once

#include <string>
#include <vector>

#include "bzeta/qlaurent.hpp"

namespace bzeta {

/// Power series in t with QLaurent coefficients, known exactly through t^order.
/// Binary operations truncate to the smaller order; reading past the order throws.
class TSeries {
 public:
  explicit TSeries(int order = 0);
  TSeries(int order, std::vector<QLaurent> coeffs);

  static TSeries constant(const QLaurent& c, int order);
  static TSeries one(int order) { return constant(QLaurent(1), order); }
  /// 1 / (1 - coeff * t^t_power) expanded to the given order.
  static TSeries geometric(const QLaurent& coeff, int t_power, int order);
  /// coeff * t^t_power.
  static TSeries monomial(const QLaurent& coeff, int t_power, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const QLaurent& operator[](int j) const;
  QLaurent& at(int j);
  const std::vector<QLaurent>& coeffs() const { return coeffs_; }

  TSeries& operator+=(const TSeries& other);
  TSeries& operator-=(const TSeries& other);
  TSeries operator-() const;
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend TSeries operator*(TSeries a, const QLaurent& c);
  friend bool operator==(const TSeries& a, const TSeries& b) { return a.coeffs_ == b.coeffs_; }

  /// Multiplicative inverse. The constant term must be a nonzero monomial c q^e.
  TSeries invert_unit() const;
  /// t -> q^k t, i.e. the coefficient of t^j is multiplied by q^{k j}.
  TSeries scale_t(const Rational& k) const;
  TSeries invert_q() const;
  TSeries truncated(int order) const;
  /// Divide every coefficient exactly by d (InternalError on a remainder).
  TSeries divide_coeffs_exact(const QLaurent& d) const;

  /// "1 + (q+q^-1) t + (q^2+1+q^-2) t^2"
  std::string to_string() const;

 private:
  std::vector<QLaurent> coeffs_;
};

}  // namespace bzeta
