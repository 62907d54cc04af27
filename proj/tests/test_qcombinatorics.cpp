#include "bzeta/errors.hpp"
#include "bzeta/qcombinatorics.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bzeta;
using bzeta::testing::parse_q;

TEST_CASE("symmetric q-integers") {
  CHECK(q_int_sym(0).is_zero());
  CHECK(q_int_sym(1) == QLaurent(1));
  CHECK(q_int_sym(3) == parse_q("q^2 + 1 + q^-2"));
  CHECK_THROWS_AS(q_int_sym(-1), InvalidArgument);
}

TEST_CASE("symmetric q-binomials") {
  CHECK(q_binom_sym(3, 1) == q_int_sym(3));
  CHECK(q_binom_sym(4, 2) == parse_q("q^4 + q^2 + 2 + q^-2 + q^-4"));
  for (long n = 0; n < 6; ++n) CHECK(q_binom_sym(n, 0) == QLaurent(1));
  CHECK_THROWS_AS(q_binom_sym(3, 4), InvalidArgument);
  CHECK_THROWS_AS(q_binom_sym(3, -1), InvalidArgument);
}

TEST_CASE("t-brackets") {
  CHECK(t_bracket(1) == UPoly(1));
  CHECK(t_bracket(2) == UPoly(std::vector<Rational>{1, 1}));
  CHECK(t_bracket(3) == UPoly(std::vector<Rational>{1, 1, 1}));
}

TEST_CASE("bounded partitions") {
  CHECK(bounded_partitions(-1, 3, 3) == 0);
  for (long j = 0; j < 4; ++j) {
    for (long m = 0; m < 4; ++m) CHECK(bounded_partitions(0, j, m) == 1);
  }
  CHECK(bounded_partitions(2, 2, 2) == 2);
  CHECK(bounded_partitions(5, 2, 2) == 0);
}

TEST_CASE("property: q-binomial symmetries and classical limit") {
  for (long n = 0; n <= 10; ++n) {
    for (long k = 0; k <= n; ++k) {
      QLaurent b = q_binom_sym(n, k);
      CHECK(b.is_palindromic());
      CHECK(b == q_binom_sym(n, n - k));
      CHECK(b.eval_at(1) == Rational(binomial(n, k)));
    }
  }
}

TEST_CASE("property: bounded partitions total and Grassmannian coefficients") {
  PartitionTable table;
  for (long j = 0; j <= 8; ++j) {
    for (long m = 0; m <= 8; ++m) {
      BigInt total = 0;
      QLaurent binom = q_binom_sym(j + m, m);
      QLaurent gauss = q_binom_asym(j + m, m);
      for (long r = 0; r <= j * m; ++r) {
        BigInt p = table.count(r, j, m);
        total += p;
        CHECK(binom.coeff(Rational(j * m - 2 * r)) == Rational(p));
        CHECK(gauss.coeff(Rational(r)) == Rational(p));
        if (2 * r <= j * m) CHECK(p - table.count(r - 1, j, m) >= 0);
      }
      CHECK(table.count(j * m + 1, j, m) == 0);
      CHECK(total == binomial(j + m, m));
    }
  }
}

TEST_CASE("property: partition counts are monotone") {
  PartitionTable table;
  for (long r = 0; r <= 12; ++r) {
    for (long j = 0; j <= 6; ++j) {
      for (long m = 0; m <= 6; ++m) {
        CHECK(table.count(r, j + 1, m) >= table.count(r, j, m));
        CHECK(table.count(r, j, m + 1) >= table.count(r, j, m));
      }
    }
  }
}
