#pragma once

#include <string>

#include "bzeta/qlaurent.hpp"

namespace bzeta {

/// Rational function of q, stored as a ratio of Laurent objects in canonical
/// form: common polynomial factors removed, the denominator's lowest
/// exponent is 0 and its coefficient there is 1. Equal values therefore have
/// identical representations.
class QRational {
 public:
  QRational() : den_(1) {}
  QRational(const QLaurent& value);  // NOLINT(google-explicit-constructor)
  QRational(const Rational& value) : QRational(QLaurent(value)) {}  // NOLINT
  QRational(long value) : QRational(QLaurent(value)) {}  // NOLINT
  QRational(const QLaurent& num, const QLaurent& den);

  const QLaurent& num() const { return num_; }
  const QLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QRational& operator+=(const QRational& o);
  QRational& operator-=(const QRational& o);
  QRational& operator*=(const QRational& o);
  QRational& operator/=(const QRational& o);
  QRational operator-() const;
  friend QRational operator+(QRational a, const QRational& b) { return a += b; }
  friend QRational operator-(QRational a, const QRational& b) { return a -= b; }
  friend QRational operator*(QRational a, const QRational& b) { return a *= b; }
  friend QRational operator/(QRational a, const QRational& b) { return a /= b; }
  friend bool operator==(const QRational& a, const QRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  QRational inverse() const;
  QRational invert_q() const;
  Rational eval_at(const Rational& q) const;

  std::string to_string() const;

 private:
  void canonicalize();
  QLaurent num_;
  QLaurent den_;
};

QRational pow(const QRational& base, int exponent);

}  // namespace bzeta
