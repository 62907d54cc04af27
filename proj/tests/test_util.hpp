#pragma once

#include <random>

#include "bzeta/qlaurent.hpp"
#include "bzeta/qtpoly.hpp"
#include "bzeta/tseries.hpp"

namespace bzeta::testing {

inline QLaurent q(long e) { return QLaurent::q_power(Rational(e)); }
inline QLaurent parse_q(const char* text) { return parse_qt_poly(text).coeff(0); }
inline TSeries series(const char* text, int order) { return parse_qt_poly(text).to_series(order); }

inline Rational random_rational(std::mt19937_64& rng, long range = 5) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, range);
  return make_rational(num(rng), den(rng));
}

inline QLaurent random_laurent(std::mt19937_64& rng, int terms = 4, long exp_range = 4) {
  std::uniform_int_distribution<long> ex(-exp_range, exp_range);
  QLaurent out;
  for (int i = 0; i < terms; ++i) out.add_term(random_rational(rng), Rational(ex(rng)));
  return out;
}

}  // namespace bzeta::testing
