#include "bzeta/qtpoly.hpp"

#include <cctype>

#include "bzeta/errors.hpp"

namespace bzeta {

QTPoly::QTPoly(const QLaurent& constant) { add_coeff(0, constant); }

QTPoly QTPoly::monomial(const QLaurent& coeff, int t_power) {
  if (t_power < 0) throw InvalidArgument("negative t-power in a polynomial");
  QTPoly out;
  out.add_coeff(t_power, coeff);
  return out;
}

QTPoly QTPoly::from_upoly(const UPoly& p) {
  QTPoly out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out.add_coeff(static_cast<int>(i), QLaurent(p.coeffs()[i]));
  return out;
}

void QTPoly::add_coeff(int t_power, const QLaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(t_power, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QLaurent QTPoly::coeff(int t_power) const {
  auto it = terms_.find(t_power);
  return it == terms_.end() ? QLaurent() : it->second;
}

int QTPoly::t_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

QTPoly& QTPoly::operator+=(const QTPoly& o) {
  for (const auto& [k, c] : o.terms_) add_coeff(k, c);
  return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
  for (const auto& [k, c] : o.terms_) add_coeff(k, -c);
  return *this;
}

QTPoly QTPoly::operator-() const {
  QTPoly out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
  QTPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_coeff(ka + kb, ca * cb);
  }
  return out;
}

QTPoly QTPoly::invert_q() const {
  QTPoly out = *this;
  for (auto& [k, c] : out.terms_) c = c.invert_q();
  return out;
}

QTPoly QTPoly::shifted_q(const Rational& e) const {
  QTPoly out = *this;
  for (auto& [k, c] : out.terms_) c = c.shifted(e);
  return out;
}

TSeries QTPoly::to_series(int order) const {
  TSeries out(order);
  for (const auto& [k, c] : terms_) {
    if (k <= order) out.at(k) = c;
  }
  return out;
}

QLaurent QTPoly::eval_t(const Rational& t) const {
  QLaurent out;
  for (const auto& [k, c] : terms_) out += c * pow(t, static_cast<long>(k));
  return out;
}

UPoly QTPoly::as_upoly_in_t() const {
  std::vector<Rational> v(static_cast<std::size_t>(t_degree() + 1));
  for (const auto& [k, c] : terms_) {
    if (c.size() != 1 || c.lowest_exponent() != 0) throw InvalidArgument("polynomial depends on q: " + to_string());
    v[static_cast<std::size_t>(k)] = c.trailing_coefficient();
  }
  return UPoly(std::move(v));
}

UPoly QTPoly::q_slice(const Rational& e) const {
  std::vector<Rational> v(static_cast<std::size_t>(t_degree() + 1));
  for (const auto& [k, c] : terms_) v[static_cast<std::size_t>(k)] = c.coeff(e);
  return UPoly(std::move(v));
}

std::string QTPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
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
    std::string tpow = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    std::string term = k == 0 ? body : (body == "1" ? tpow : body + " " + tpow);
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  QTPoly parse() {
    QTPoly v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                          std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  QTPoly expr() {
    QTPoly acc;
    bool first = true;
    for (;;) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      QTPoly t = term();
      if (sign < 0) acc -= t;
      else acc += t;
      first = false;
    }
    return acc;
  }

  bool starts_factor(char c) const {
    return c == '(' || c == 'q' || c == 't' || std::isdigit(static_cast<unsigned char>(c));
  }

  QTPoly term() {
    QTPoly acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Rational number() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return parse_rational(s_.substr(start, pos_ - start));
  }

  Rational exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    if (peek() == '{') {
      ++pos_;
      Rational e = number();
      if (peek() != '}') fail("expected '}'");
      ++pos_;
      return e;
    }
    return number();
  }

  QTPoly factor() {
    char c = peek();
    QTPoly base;
    if (c == '(') {
      ++pos_;
      base = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      Rational e = exponent();
      if (!is_integer(e) || e < 0) fail("power of a bracket must be a non-negative integer");
      QTPoly out(1);
      for (long i = 0; i < e.get_num().get_si(); ++i) out = out * base;
      return out;
    }
    if (c == 'q') {
      ++pos_;
      return QTPoly(QLaurent::q_power(exponent()));
    }
    if (c == 't') {
      ++pos_;
      Rational e = exponent();
      if (!is_integer(e) || e < 0) fail("t-exponent must be a non-negative integer");
      return QTPoly::monomial(QLaurent(1), static_cast<int>(e.get_num().get_si()));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return QTPoly(QLaurent(parse_rational(s_.substr(start, pos_ - start))));
    }
    fail("expected a factor");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

QTPoly parse_qt_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace bzeta
