#include "bzeta/upoly.hpp"

#include "bzeta/errors.hpp"

namespace bzeta {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

UPoly UPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(v));
}

UPoly UPoly::scaled(const Rational& s) const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c *= s;
  return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return scaled(inv);
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string UPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Rational c = coeffs_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    std::string mono = i == 0 ? "" : (i == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(i));
    if (i == 0) out += bzeta::to_string(c);
    else if (c == 1) out += mono;
    else out += bzeta::to_string(c) + " " + mono;
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational& lead = b.leading();
  for (long k = a.degree(); k >= db; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] / lead;
    if (c == 0) continue;
    quo[static_cast<std::size_t>(k - db)] = c;
    for (long i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= c * b.coeffs()[static_cast<std::size_t>(i)];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    // Keep the remainder sequence monic so coefficient growth stays modest.
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

}  // namespace bzeta
