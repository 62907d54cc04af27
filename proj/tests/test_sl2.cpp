#include <random>

#include "bzeta/errors.hpp"
#include "bzeta/qcombinatorics.hpp"
#include "bzeta/sl2.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bzeta;
using bzeta::testing::parse_q;

namespace {

Sl2Decomposition decomp(std::initializer_list<std::pair<long, long>> parts) {
  Sl2Decomposition d;
  for (const auto& [m, k] : parts) d.add(m, k);
  return d;
}

// Weight multiplicities of S^j(V_m) by brute force over multisets, written
// independently of the library's DP.
QLaurent brute_character(long m, long j) {
  QLaurent out;
  std::vector<long> idx(static_cast<std::size_t>(j), 0);
  if (j == 0) return QLaurent(1);
  for (;;) {
    long w = 0;
    for (long i : idx) w += m - 2 * i;
    out.add_term(1, Rational(w));
    long pos = j - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m) --pos;
    if (pos < 0) break;
    long v = idx[static_cast<std::size_t>(pos)] + 1;
    for (long k = pos; k < j; ++k) idx[static_cast<std::size_t>(k)] = v;
  }
  return out;
}

}  // namespace

TEST_CASE("Cayley-Sylvester") {
  for (long j = 0; j < 6; ++j) CHECK(cs_sym_power(1, j) == Sl2Decomposition::irreducible(j));
  CHECK(cs_sym_power(2, 2) == decomp({{4, 1}, {0, 1}}));
  CHECK(cs_sym_power(3, 2) == decomp({{6, 1}, {2, 1}}));
  CHECK(cs_sym_power(2, 2).to_string() == "V4 + V0");
}

TEST_CASE("weight oracle") {
  CHECK(sym_power_weight_oracle(2, 2) == decomp({{4, 1}, {0, 1}}));
  for (long j = 0; j < 5; ++j) CHECK(sym_power_weight_oracle(0, j) == Sl2Decomposition::irreducible(0));
  CHECK(sym_power_weight_oracle(2, 3) == decomp({{6, 1}, {2, 1}}));
  CHECK_THROWS_AS(sym_power_weight_oracle(20, 11), BudgetExceeded);
}

TEST_CASE("Adams operations") {
  CHECK(adams_sym_power(1, 2) == decomp({{2, 1}}));
  CHECK(adams_sym_power(2, 2) == decomp({{4, 1}, {0, 1}}));
  CHECK(adams_sym_power(3, 2) == decomp({{6, 1}, {2, 1}}));
}

TEST_CASE("Clebsch-Gordan") {
  auto v = [](long m) { return Sl2Decomposition::irreducible(m); };
  CHECK(tensor_decompose(v(1), v(1)) == decomp({{2, 1}, {0, 1}}));
  CHECK(tensor_decompose(v(2), v(2)) == decomp({{4, 1}, {2, 1}, {0, 1}}));
  Sl2Decomposition x = decomp({{3, 2}, {1, 1}});
  CHECK(tensor_decompose(v(0), x) == x);
}

TEST_CASE("braided dimensions") {
  CHECK(dimq_prime(Sl2Decomposition::irreducible(2)) == q_int_sym(3));
  CHECK(dimq_prime(decomp({{0, 1}, {2, 1}})) == QLaurent(1) + q_int_sym(3));
  CHECK(dimq_prime(Sl2Decomposition()).is_zero());
  CHECK(dimq(Sl2Decomposition::irreducible(2)) == parse_q("q^-2 + q^-4 + q^-6"));
  CHECK(dimq(Sl2Decomposition::irreducible(1)) ==
        QLaurent::q_power(make_rational(-3, 2)) * q_int_sym(2));
  CHECK(dimq(Sl2Decomposition::irreducible(0)) == QLaurent(1));
}

TEST_CASE("peeling rejects non-characters") {
  CHECK_THROWS(peel_character(parse_q("q^2 + 1")));
  CHECK_THROWS(peel_character(parse_q("q^2 + q^-2")));
  CHECK_THROWS_AS(Sl2Decomposition().add(1, -1), InvalidArgument);
}

TEST_CASE("property: three routes agree") {
  for (long m = 0; m <= 8; ++m) {
    for (long j = 0; j <= 10; ++j) {
      CAPTURE(m);
      CAPTURE(j);
      Sl2Decomposition cs = cs_sym_power(m, j);
      CHECK(cs == sym_power_weight_oracle(m, j));
      CHECK(cs == adams_sym_power(m, j));
      CHECK(cs.dimension() == binomial(m + j, j));
      CHECK(dimq_prime(cs).eval_at(1) == Rational(binomial(m + j, j)));
      if (m <= 4 && j <= 5) CHECK(character(cs) == brute_character(m, j));
    }
  }
}

TEST_CASE("property: braided dimension is multiplicative") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> hw(0, 6);
  std::uniform_int_distribution<long> mult(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Sl2Decomposition a;
    Sl2Decomposition b;
    for (int k = 0; k < 3; ++k) {
      a.add(hw(rng), mult(rng));
      b.add(hw(rng), mult(rng));
    }
    CHECK(dimq_prime(tensor_decompose(a, b)) == dimq_prime(a) * dimq_prime(b));
    CHECK(character(tensor_decompose(a, b)) == character(a) * character(b));
  }
}
