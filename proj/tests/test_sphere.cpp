#include <random>

#include "bzeta/errors.hpp"
#include "bzeta/qcombinatorics.hpp"
#include "bzeta/sphere.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bzeta;
using bzeta::testing::q;

namespace {

QRational qr(long e) { return QRational(q(e)); }
QRational qi(long n) { return QRational(q_int_sym(n)); }
const QRational one(1);

QRational q_minus_qinv() { return qr(1) - qr(-1); }

}  // namespace

TEST_CASE("sphere dimensions") {
  SphereDims d = sphere_dims();
  CHECK(d.dim_prime == QRational(2) / ((one - qr(-2)) * (one - qr(2))));
  CHECK(d.dim_prime == QRational(-2) * qr(2) / ((one - qr(2)) * (one - qr(2))));
  CHECK(d.dim_prime == QRational(-2) / pow(q_minus_qinv(), 2));
  CHECK(d.dim == one / (one - qr(-2)));
}

TEST_CASE("formal sums") {
  // sum_{s>=0} q^{2s+1}
  CHECK(full_sum(SExpr::term(qr(1), 0, 2)) == qr(1) / (one - qr(2)));
  // sum_{i=0}^{s} q^{4i+1} = (q - q^{4s+5}) / (1 - q^4)
  SExpr head = partial_sum(SExpr::term(qr(1), 0, 4), SumRange::from_0_to_s);
  SExpr expected = SExpr(qr(1) / (one - qr(4))) - SExpr::term(qr(5) / (one - qr(4)), 0, 4);
  CHECK(head == expected);
  CHECK(full_sum(SExpr::q_int_linear(2, 1)) == QRational(-2) * qr(2) / pow(one - qr(2), 2));
}

TEST_CASE("divergence and degree cap are errors") {
  CHECK_THROWS_AS(full_sum(SExpr(QRational(3))), DivergentSum);
  CHECK_THROWS_AS(partial_sum(SExpr::term(one, 1, 0), SumRange::from_splus1_to_inf), DivergentSum);
  CHECK_THROWS_AS(partial_sum(SExpr::term(one, 2, 0), SumRange::from_0_to_s), BudgetExceeded);
  CHECK_THROWS_AS(SExpr::term(one, 2, 1) * SExpr::term(one, 1, 1), BudgetExceeded);
  CHECK_THROWS_AS(SExpr::term(one, 3, 1), BudgetExceeded);
  try {
    full_sum(SExpr(QRational(3)));
  } catch (const DivergentSum& e) {
    CHECK(std::string(e.what()).find("s^0") != std::string::npos);
  }
}

TEST_CASE("even part of zeta at t = +-1") {
  QRational m3 = even_part_zeta_at_pm1(3);
  QRational num(QLaurent(q(-4) + q(-2) + QLaurent(4) + q(2) + q(4)));
  CHECK(m3 == num / ((one - qr(2)) * (one - qr(-2)) * (one - qr(6)) * (one - qr(-6))));
  QRational m1 = even_part_zeta_at_pm1(1);
  QRational half(make_rational(1, 2));
  CHECK(m1 == half * (one / ((one - qr(1)) * (one - qr(-1))) + one / ((one + qr(1)) * (one + qr(-1)))));
  CHECK(m3 == m3.invert_q());
  CHECK_THROWS_AS(even_part_zeta_at_pm1(2), InvalidArgument);
}

TEST_CASE("coefficients of the sphere zeta function") {
  CHECK(sphere_zeta_coeff(0) == one);
  CHECK(sphere_zeta_coeff(1) == QRational(-2) / pow(q_minus_qinv(), 2));
  QRational c2 = sphere_zeta_coeff(2);
  CHECK(c2 == QRational(4) / (pow(qi(2), 2) * pow(q_minus_qinv(), 4)));
  CHECK(c2 == QRational(4) / ((one - qr(2)) * (one - qr(-2)) * (one - qr(4)) * (one - qr(-4))));
  QRational c3 = sphere_zeta_coeff(3);
  CHECK(c3 == QRational(2) * (pow(qi(4), 2) - QRational(4)) / (pow(qi(2), 2) * pow(qi(3), 2) * pow(q_minus_qinv(), 6)));
  for (int k = 0; k <= 3; ++k) CHECK(sphere_zeta_coeff(k) == sphere_zeta_coeff(k).invert_q());
  CHECK_THROWS_AS(sphere_zeta_coeff(4), InvalidArgument);
}

TEST_CASE("property: finite ranges agree with direct summation") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> slope(-4, 4);
  std::uniform_int_distribution<int> deg(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    SExpr e;
    for (int k = 0; k < 3; ++k) {
      long a = slope(rng);
      if (a == 0) a = 3;
      e += SExpr::term(QRational(testing::random_laurent(rng, 2, 2)), deg(rng), a);
    }
    if (trial % 3 == 0) e += SExpr::term(QRational(2), deg(rng), 0);  // finite sums allow slope 0
    SExpr head = partial_sum(e, SumRange::from_0_to_s);
    SExpr below = partial_sum(e, SumRange::from_0_to_sminus1);
    for (const Rational& qv : {Rational(2), make_rational(-1, 3), make_rational(5, 2)}) {
      Rational running = 0;
      for (long s = 0; s < 6; ++s) {
        CHECK(below.eval(s, qv) == running);
        running += e.eval(s, qv);
        CHECK(head.eval(s, qv) == running);
      }
    }
    SExpr summable = e.slope_part(-1) + e.slope_part(1);
    // head + tail is the formal total, identically in s
    CHECK(partial_sum(summable, SumRange::from_0_to_s) + partial_sum(summable, SumRange::from_splus1_to_inf) ==
          partial_sum(summable, SumRange::all_s_from_0));
  }
}

TEST_CASE("numeric certificates") {
  for (const Rational& q0 : {make_rational(3, 2), Rational(2), make_rational(5, 2)}) {
    NumericCertificate d = certify_sphere_dim(q0);
    CHECK(d.ok);
    for (int k = 1; k <= 3; ++k) {
      auto [neg, pos] = certify_merged_sum(sphere_merged_summand(k), q0);
      CHECK(neg.ok);
      CHECK(pos.ok);
    }
  }
  // the two halves are summed at different points but add up to the total as functions of q
  for (int k = 1; k <= 3; ++k) {
    SExpr e = sphere_merged_summand(k);
    CHECK(full_sum(e.slope_part(-1)) + full_sum(e.slope_part(1)) == full_sum(e));
    CHECK(e.slope_part(0).is_zero());
  }
  CHECK_THROWS_AS(certify_sphere_dim(make_rational(1, 2)), InvalidArgument);
}
