#include "bzeta/rational.hpp"

#include "bzeta/errors.hpp"

namespace bzeta {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

BigInt floor(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

BigInt ceil(const Rational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidArgument("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw InvalidArgument("malformed rational literal '" + std::string(text) + "'");
  if (r.get_den() == 0) throw DivisionByZero("rational literal with zero denominator");
  r.canonicalize();
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational pow(const Rational& r, long e) {
  if (e < 0) {
    if (r == 0) throw DivisionByZero("zero raised to a negative power");
    Rational inv = 1 / r;
    return pow(inv, -e);
  }
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
  return make_rational(n, d);
}

}  // namespace bzeta
