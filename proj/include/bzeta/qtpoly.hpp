#pragma once

#include <map>
#include <string>
#include <string_view>

#include "bzeta/qlaurent.hpp"
#include "bzeta/tseries.hpp"
#include "bzeta/upoly.hpp"

namespace bzeta {

/// Polynomial in t (non-negative integer powers) with QLaurent coefficients.
class QTPoly {
 public:
  using Terms = std::map<int, QLaurent>;

  QTPoly() = default;
  QTPoly(const QLaurent& constant);  // NOLINT(google-explicit-constructor)
  QTPoly(long constant) : QTPoly(QLaurent(constant)) {}  // NOLINT

  static QTPoly monomial(const QLaurent& coeff, int t_power);
  /// Embed a polynomial in t with rational coefficients.
  static QTPoly from_upoly(const UPoly& p);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QLaurent coeff(int t_power) const;
  int t_degree() const;  // -1 for zero

  QTPoly& operator+=(const QTPoly& o);
  QTPoly& operator-=(const QTPoly& o);
  QTPoly operator-() const;
  friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
  friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
  friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
  friend bool operator==(const QTPoly& a, const QTPoly& b) { return a.terms_ == b.terms_; }

  QTPoly invert_q() const;
  /// Multiply every coefficient by q^e.
  QTPoly shifted_q(const Rational& e) const;
  TSeries to_series(int order) const;
  /// Value at a rational t, as a Laurent object in q.
  QLaurent eval_t(const Rational& t) const;
  /// Coefficients when the polynomial does not involve q; InvalidArgument otherwise.
  UPoly as_upoly_in_t() const;
  /// Coefficient of q^e viewed as a polynomial in t.
  UPoly q_slice(const Rational& e) const;

  /// "1 - (q+q^3) t + (q^2+q^4+q^6) t^2", ascending in t.
  std::string to_string() const;

 private:
  void add_coeff(int t_power, const QLaurent& c);
  Terms terms_;
};

/// Parse polynomials written as "1 - (q + q^3) t + 2 q^2 t^5" or
/// "(1-t^4)(1-t^6)": numbers, q, t, ^, +, -, *, parentheses and
/// implicit multiplication. Exponents of q may be negative or fractional.
QTPoly parse_qt_poly(std::string_view text);

}  // namespace bzeta
