#pragma once

#include <map>
#include <optional>
#include <string>

#include "bzeta/rational.hpp"

namespace bzeta {

/// Restriction of a Laurent object to part of its exponent range.
enum class QPart { strictly_positive, non_negative, zero, strictly_negative };

/// Finitely supported map from rational exponents of q to rational
/// coefficients. Zero coefficients are never stored, so structural equality
/// is mathematical equality.
class QLaurent {
 public:
  using Terms = std::map<Rational, Rational>;

  QLaurent() = default;
  QLaurent(const Rational& constant);  // NOLINT(google-explicit-constructor)
  QLaurent(long constant) : QLaurent(Rational(constant)) {}  // NOLINT

  static QLaurent monomial(const Rational& coeff, const Rational& exponent);
  static QLaurent q_power(const Rational& exponent) { return monomial(1, exponent); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const Rational& exponent) const;
  // Precondition: nonzero.
  const Rational& lowest_exponent() const;
  const Rational& highest_exponent() const;
  const Rational& leading_coefficient() const;   // at the highest exponent
  const Rational& trailing_coefficient() const;  // at the lowest exponent

  void add_term(const Rational& coeff, const Rational& exponent);

  QLaurent& operator+=(const QLaurent& other);
  QLaurent& operator-=(const QLaurent& other);
  QLaurent& operator*=(const QLaurent& other);
  QLaurent& operator*=(const Rational& scalar);
  QLaurent operator-() const;

  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend QLaurent operator*(QLaurent a, const Rational& s) { return a *= s; }
  friend QLaurent operator*(const Rational& s, QLaurent a) { return a *= s; }
  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }

  /// Multiply by q^e.
  QLaurent shifted(const Rational& e) const;
  /// q -> q^-1.
  QLaurent invert_q() const;
  /// q -> q^k.
  QLaurent q_to_power(const Rational& k) const;
  /// Exact value at q = r. Throws DivisionByZero for r = 0 with negative
  /// exponents, InvalidArgument for non-integral exponents.
  Rational eval_at(const Rational& r) const;

  QLaurent part(QPart which) const;

  /// Quotient when `divisor` divides exactly, nullopt otherwise.
  std::optional<QLaurent> try_divide(const QLaurent& divisor) const;
  /// As try_divide, but a nonzero remainder throws InternalError.
  QLaurent divide_exact(const QLaurent& divisor) const;

  bool is_palindromic() const { return *this == invert_q(); }

  /// Caret notation sorted by descending exponent, e.g. "q^2+1+q^-2".
  std::string to_string() const;

 private:
  Terms terms_;
};

QLaurent pow(const QLaurent& base, unsigned exponent);

}  // namespace bzeta
