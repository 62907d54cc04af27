#include "bzeta/qlaurent.hpp"

#include "bzeta/errors.hpp"

namespace bzeta {

namespace {

std::string exponent_text(const Rational& e) {
  // "q", "q^2", "q^-1", "q^-3/2"
  if (e == 1) return "q";
  return "q^" + to_string(e);
}

}  // namespace

QLaurent::QLaurent(const Rational& constant) {
  if (constant != 0) terms_.emplace(Rational(0), constant);
}

QLaurent QLaurent::monomial(const Rational& coeff, const Rational& exponent) {
  QLaurent out;
  if (coeff != 0) out.terms_.emplace(exponent, coeff);
  return out;
}

Rational QLaurent::coeff(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Rational& QLaurent::lowest_exponent() const {
  if (terms_.empty()) throw InvalidArgument("lowest exponent of zero");
  return terms_.begin()->first;
}

const Rational& QLaurent::highest_exponent() const {
  if (terms_.empty()) throw InvalidArgument("highest exponent of zero");
  return terms_.rbegin()->first;
}

const Rational& QLaurent::leading_coefficient() const {
  if (terms_.empty()) throw InvalidArgument("leading coefficient of zero");
  return terms_.rbegin()->second;
}

const Rational& QLaurent::trailing_coefficient() const {
  if (terms_.empty()) throw InvalidArgument("trailing coefficient of zero");
  return terms_.begin()->second;
}

void QLaurent::add_term(const Rational& coeff, const Rational& exponent) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

QLaurent& QLaurent::operator+=(const QLaurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(c, e);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& other) {
  for (const auto& [e, c] : other.terms_) {
    Rational neg = -c;
    add_term(neg, e);
  }
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Rational e = ea + eb;
      Rational c = ca * cb;
      out.add_term(c, e);
    }
  }
  return out;
}

QLaurent& QLaurent::operator*=(const QLaurent& other) {
  *this = *this * other;
  return *this;
}

QLaurent& QLaurent::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

QLaurent QLaurent::operator-() const {
  QLaurent out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

QLaurent QLaurent::shifted(const Rational& shift) const {
  QLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), Rational(e + shift), c);
  return out;
}

QLaurent QLaurent::invert_q() const {
  QLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Rational(-e), c);
  return out;
}

QLaurent QLaurent::q_to_power(const Rational& k) const {
  QLaurent out;
  for (const auto& [e, c] : terms_) out.add_term(c, Rational(e * k));
  return out;
}

Rational QLaurent::eval_at(const Rational& r) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    if (!is_integer(e)) throw InvalidArgument("cannot evaluate a fractional power of q at a rational point");
    if (r == 0) {
      if (e < 0) throw DivisionByZero("evaluating a negative power of q at q = 0");
      if (e == 0) total += c;
      continue;
    }
    total += c * pow(r, e.get_num().get_si());
  }
  return total;
}

QLaurent QLaurent::part(QPart which) const {
  QLaurent out;
  for (const auto& [e, c] : terms_) {
    bool keep = false;
    switch (which) {
      case QPart::strictly_positive: keep = e > 0; break;
      case QPart::non_negative: keep = e >= 0; break;
      case QPart::zero: keep = e == 0; break;
      case QPart::strictly_negative: keep = e < 0; break;
    }
    if (keep) out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

std::optional<QLaurent> QLaurent::try_divide(const QLaurent& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("Laurent division by zero");
  QLaurent quotient;
  if (is_zero()) return quotient;
  QLaurent rem = *this;
  const Rational floor_exp = lowest_exponent() - divisor.lowest_exponent();
  const Rational& lead_exp = divisor.highest_exponent();
  const Rational& lead = divisor.leading_coefficient();
  while (!rem.is_zero()) {
    Rational e = rem.highest_exponent() - lead_exp;
    if (e < floor_exp) return std::nullopt;
    Rational c = rem.leading_coefficient() / lead;
    QLaurent step = monomial(c, e);
    quotient += step;
    rem -= step * divisor;
  }
  return quotient;
}

QLaurent QLaurent::divide_exact(const QLaurent& divisor) const {
  auto q = try_divide(divisor);
  if (!q) throw InternalError("inexact Laurent division of " + to_string() + " by " + divisor.to_string());
  return *q;
}

std::string QLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& e = it->first;
    Rational c = it->second;
    if (c < 0) {
      out += "-";
      c = -c;
    } else if (!first) {
      out += "+";
    }
    first = false;
    if (e == 0) {
      out += bzeta::to_string(c);
    } else if (c == 1) {
      out += exponent_text(e);
    } else if (is_integer(c)) {
      out += bzeta::to_string(c) + exponent_text(e);
    } else {
      out += "(" + bzeta::to_string(c) + ")" + exponent_text(e);
    }
  }
  return out;
}

QLaurent pow(const QLaurent& base, unsigned exponent) {
  QLaurent out(1);
  QLaurent b = base;
  while (exponent > 0) {
    if (exponent & 1U) out *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return out;
}

}  // namespace bzeta
