#include "bzeta/qrational.hpp"

#include <numeric>

#include "bzeta/errors.hpp"
#include "bzeta/upoly.hpp"

namespace bzeta {

namespace {

// Least common multiple of the exponent denominators, so exponents * L are integers.
BigInt exponent_scale(const QLaurent& a, const QLaurent& b) {
  BigInt l = 1;
  for (const auto* p : {&a, &b}) {
    for (const auto& [e, c] : p->terms()) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
    }
  }
  return l;
}

// Requires integer exponents with lowest exponent 0.
UPoly to_upoly(const QLaurent& a) {
  std::vector<Rational> v(static_cast<std::size_t>(a.highest_exponent().get_num().get_si()) + 1);
  for (const auto& [e, c] : a.terms()) v[static_cast<std::size_t>(e.get_num().get_si())] = c;
  return UPoly(std::move(v));
}

QLaurent from_upoly(const UPoly& p) {
  QLaurent out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out.add_term(p.coeffs()[i], Rational(static_cast<long>(i)));
  return out;
}

}  // namespace

QRational::QRational(const QLaurent& value) : num_(value), den_(1) {}

QRational::QRational(const QLaurent& num, const QLaurent& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  canonicalize();
}

void QRational::canonicalize() {
  if (num_.is_zero()) {
    den_ = QLaurent(1);
    return;
  }
  const BigInt scale = exponent_scale(num_, den_);
  const Rational k(scale);
  QLaurent n = num_.q_to_power(k);
  QLaurent d = den_.q_to_power(k);
  Rational shift = n.lowest_exponent() - d.lowest_exponent();
  n = n.shifted(Rational(-n.lowest_exponent()));
  d = d.shifted(Rational(-d.lowest_exponent()));
  if (!n.is_monomial() && !d.is_monomial()) {
    UPoly pn = to_upoly(n);
    UPoly pd = to_upoly(d);
    UPoly g = gcd(pn, pd);
    if (g.degree() > 0) {
      pn = divmod(pn, g).first;
      pd = divmod(pd, g).first;
      n = from_upoly(pn);
      d = from_upoly(pd);
    }
  }
  Rational norm = 1 / d.trailing_coefficient();
  n *= norm;
  d *= norm;
  n = n.shifted(shift);
  Rational inv_k = 1 / k;
  num_ = n.q_to_power(inv_k);
  den_ = d.q_to_power(inv_k);
}

QRational& QRational::operator+=(const QRational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

QRational& QRational::operator-=(const QRational& o) { return *this += -o; }

QRational& QRational::operator*=(const QRational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

QRational& QRational::operator/=(const QRational& o) { return *this *= o.inverse(); }

QRational QRational::operator-() const {
  QRational out = *this;
  out.num_ = -out.num_;
  return out;
}

QRational QRational::inverse() const {
  if (num_.is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return QRational(den_, num_);
}

QRational QRational::invert_q() const { return QRational(num_.invert_q(), den_.invert_q()); }

Rational QRational::eval_at(const Rational& q) const {
  Rational d = den_.eval_at(q);
  if (d == 0) throw DivisionByZero("rational function has a pole at q = " + bzeta::to_string(q));
  Rational value = num_.eval_at(q) / d;
  return value;
}

std::string QRational::to_string() const {
  if (den_ == QLaurent(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QRational pow(const QRational& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  QRational out(1);
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace bzeta
