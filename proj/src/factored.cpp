#include "bzeta/factored.hpp"

#include <algorithm>

#include "bzeta/errors.hpp"

namespace bzeta {

FactoredRatQT::FactoredRatQT(QTPoly numerator, std::vector<DenominatorFactor> factors)
    : numerator_(std::move(numerator)) {
  for (const auto& f : factors) {
    if (f.t_exp <= 0) throw InvalidArgument("denominator factor needs a positive t-exponent");
    if (f.multiplicity < 1) throw InvalidArgument("denominator factor multiplicity must be >= 1");
  }
  std::sort(factors.begin(), factors.end(), [](const DenominatorFactor& a, const DenominatorFactor& b) {
    if (a.t_exp != b.t_exp) return a.t_exp < b.t_exp;
    return a.q_exp > b.q_exp;
  });
  for (const auto& f : factors) {
    if (!factors_.empty() && factors_.back().t_exp == f.t_exp && factors_.back().q_exp == f.q_exp) {
      factors_.back().multiplicity += f.multiplicity;
    } else {
      factors_.push_back(f);
    }
  }
}

TSeries FactoredRatQT::expand(int order) const {
  if (order < 0) throw InvalidArgument("expansion order must be non-negative");
  TSeries out = numerator_.to_series(order);
  for (const auto& f : factors_) {
    TSeries g = TSeries::geometric(QLaurent::q_power(f.q_exp), f.t_exp, order);
    for (int k = 0; k < f.multiplicity; ++k) out = out * g;
  }
  return out;
}

QTPoly FactoredRatQT::denominator_poly() const {
  QTPoly out(1);
  for (const auto& f : factors_) {
    QTPoly lin = QTPoly(1) - QTPoly::monomial(QLaurent::q_power(f.q_exp), f.t_exp);
    for (int k = 0; k < f.multiplicity; ++k) out = out * lin;
  }
  return out;
}

bool FactoredRatQT::equals(const FactoredRatQT& other) const {
  return numerator_ * other.denominator_poly() == other.numerator_ * denominator_poly();
}

FactoredRatQT FactoredRatQT::operator*(const FactoredRatQT& other) const {
  std::vector<DenominatorFactor> fs = factors_;
  fs.insert(fs.end(), other.factors_.begin(), other.factors_.end());
  return {numerator_ * other.numerator_, std::move(fs)};
}

QRational FactoredRatQT::eval_t(const Rational& t) const {
  QRational value(numerator_.eval_t(t));
  for (const auto& f : factors_) {
    QLaurent lin = QLaurent(1) - QLaurent::monomial(pow(t, static_cast<long>(f.t_exp)), f.q_exp);
    if (lin.is_zero()) throw DivisionByZero("closed form has a pole at t = " + bzeta::to_string(t));
    value /= pow(QRational(lin), f.multiplicity);
  }
  return value;
}

std::string FactoredRatQT::to_string() const {
  std::string num = numerator_.to_string();
  if (factors_.empty()) return num;
  std::string den;
  for (const auto& f : factors_) {
    std::string tpart = f.t_exp == 1 ? "t" : "t^" + std::to_string(f.t_exp);
    std::string qpart = f.q_exp == 0 ? "" : QLaurent::q_power(f.q_exp).to_string() + " ";
    std::string lin = "(1-" + qpart + tpart + ")";
    if (f.multiplicity > 1) lin += "^" + std::to_string(f.multiplicity);
    den += lin;
  }
  bool simple_num = numerator_.terms().size() <= 1 && (numerator_.is_zero() || numerator_.terms().begin()->second.size() <= 1);
  if (!simple_num) num = "(" + num + ")";
  if (factors_.size() == 1 && factors_[0].multiplicity == 1) return num + "/" + den;
  return num + "/(" + den + ")";
}

}  // namespace bzeta
