#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bzeta {

using BigInt = mpz_class;
// mpq_class keeps numerator/denominator reduced with a positive denominator
// as long as every construction from a raw pair goes through make_rational.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den = 1);
Rational make_rational(long num, long den = 1);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Floor and ceiling of an exact rational.
BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);

// Textual form "a" or "a/b".
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);
Rational parse_rational(std::string_view text);

BigInt binomial(long n, long k);

// r^e for integer e (negative allowed when r != 0).
Rational pow(const Rational& r, long e);

}  // namespace bzeta
