#include "bzeta/tseries.hpp"

#include <algorithm>

#include "bzeta/errors.hpp"

namespace bzeta {

TSeries::TSeries(int order) {
  if (order < 0) throw InvalidArgument("series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TSeries::TSeries(int order, std::vector<QLaurent> coeffs) : coeffs_(std::move(coeffs)) {
  if (order < 0) throw InvalidArgument("series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TSeries TSeries::constant(const QLaurent& c, int order) {
  TSeries out(order);
  out.coeffs_[0] = c;
  return out;
}

TSeries TSeries::geometric(const QLaurent& coeff, int t_power, int order) {
  if (t_power <= 0) throw InvalidArgument("geometric factor needs a positive t-power");
  TSeries out(order);
  QLaurent c(1);
  for (int j = 0; j <= order; j += t_power) {
    out.coeffs_[static_cast<std::size_t>(j)] = c;
    c *= coeff;
  }
  return out;
}

TSeries TSeries::monomial(const QLaurent& coeff, int t_power, int order) {
  TSeries out(order);
  if (t_power < 0) throw InvalidArgument("negative t-power");
  if (t_power <= order) out.coeffs_[static_cast<std::size_t>(t_power)] = coeff;
  return out;
}

const QLaurent& TSeries::operator[](int j) const {
  if (j < 0 || j > order()) {
    throw OutOfOrder("coefficient t^" + std::to_string(j) + " requested from a series known to order " +
                     std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(j)];
}

QLaurent& TSeries::at(int j) {
  if (j < 0 || j > order()) {
    throw OutOfOrder("coefficient t^" + std::to_string(j) + " requested from a series known to order " +
                     std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(j)];
}

TSeries& TSeries::operator+=(const TSeries& other) {
  coeffs_.resize(static_cast<std::size_t>(std::min(order(), other.order())) + 1);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& other) {
  coeffs_.resize(static_cast<std::size_t>(std::min(order(), other.order())) + 1);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  return *this;
}

TSeries TSeries::operator-() const {
  TSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  const int n = std::min(a.order(), b.order());
  TSeries out(n);
  for (int i = 0; i <= n; ++i) {
    const QLaurent& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai.is_zero()) continue;
    for (int k = 0; i + k <= n; ++k) {
      const QLaurent& bk = b.coeffs_[static_cast<std::size_t>(k)];
      if (bk.is_zero()) continue;
      out.coeffs_[static_cast<std::size_t>(i + k)] += ai * bk;
    }
  }
  return out;
}

TSeries operator*(TSeries a, const QLaurent& c) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

TSeries TSeries::invert_unit() const {
  const QLaurent& a0 = coeffs_[0];
  if (!a0.is_monomial()) throw NotAUnit("constant term " + a0.to_string() + " is not an invertible monomial");
  const auto& [e, c] = *a0.terms().begin();
  QLaurent inv0 = QLaurent::monomial(Rational(1 / c), Rational(-e));
  TSeries out(order());
  out.coeffs_[0] = inv0;
  for (int k = 1; k <= order(); ++k) {
    QLaurent acc;
    for (int i = 1; i <= k; ++i) {
      const QLaurent& ai = coeffs_[static_cast<std::size_t>(i)];
      if (ai.is_zero()) continue;
      acc += ai * out.coeffs_[static_cast<std::size_t>(k - i)];
    }
    out.coeffs_[static_cast<std::size_t>(k)] = -(acc * inv0);
  }
  return out;
}

TSeries TSeries::scale_t(const Rational& k) const {
  TSeries out = *this;
  for (int j = 0; j <= order(); ++j) out.coeffs_[static_cast<std::size_t>(j)] = coeffs_[static_cast<std::size_t>(j)].shifted(Rational(k * j));
  return out;
}

TSeries TSeries::invert_q() const {
  TSeries out = *this;
  for (auto& c : out.coeffs_) c = c.invert_q();
  return out;
}

TSeries TSeries::truncated(int new_order) const {
  if (new_order > order()) {
    throw OutOfOrder("cannot extend a series of order " + std::to_string(order()) + " to order " +
                     std::to_string(new_order));
  }
  TSeries out = *this;
  out.coeffs_.resize(static_cast<std::size_t>(new_order) + 1);
  return out;
}

TSeries TSeries::divide_coeffs_exact(const QLaurent& d) const {
  TSeries out = *this;
  for (auto& c : out.coeffs_) c = c.divide_exact(d);
  return out;
}

std::string TSeries::to_string() const {
  std::string out;
  for (int j = 0; j <= order(); ++j) {
    const QLaurent& c = coeffs_[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    std::string body;
    bool negative = false;
    if (c.is_monomial()) {
      QLaurent abs = c;
      if (c.trailing_coefficient() < 0) {
        negative = true;
        abs = -c;
      }
      body = abs.to_string();
    } else {
      body = "(" + c.to_string() + ")";
    }
    std::string tpow = j == 0 ? "" : (j == 1 ? "t" : "t^" + std::to_string(j));
    std::string term;
    if (j == 0) {
      term = body;
    } else if (body == "1") {
      term = tpow;
    } else {
      term = body + " " + tpow;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace bzeta
