#include <random>

#include "bzeta/errors.hpp"
#include "bzeta/qcombinatorics.hpp"
#include "bzeta/reference_data.hpp"
#include "bzeta/zeta.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bzeta;
using bzeta::testing::q;
using bzeta::testing::series;

TEST_CASE("zeta of V_m") {
  CHECK(zeta_vm_closed(1).to_string() == "1/((1-q t)(1-q^-1 t))");
  CHECK(zeta_vm_closed(0).to_string() == "1/(1-t)");
  CHECK(zeta_vm_closed(3).to_string() == "1/((1-q^3 t)(1-q t)(1-q^-1 t)(1-q^-3 t))");
}

TEST_CASE("c_m by Cayley-Sylvester") {
  CmSeries c1 = cm_series_cs(1, 6);
  for (int j = 0; j <= 6; ++j) CHECK(c1.table()[j] == q(j));
  CHECK(cm_series_cs(2, 2).table() == series("1 + q^2 t + (q^4 + 1) t^2", 2));
  CmSeries c0 = cm_series_cs(0, 5);
  for (int j = 0; j <= 5; ++j) CHECK(c0.table()[j] == QLaurent(1));
}

TEST_CASE("zeta from c_m") {
  TSeries z1 = zeta_from_cm(cm_series_cs(1, 8));
  for (int j = 0; j <= 8; ++j) CHECK(z1[j] == q_int_sym(j + 1));
  CHECK(zeta_from_cm(cm_series_cs(0, 6)) == series("1 + t + t^2 + t^3 + t^4 + t^5 + t^6", 6));
  CHECK(zeta_from_cm(cm_series_cs(2, 20)) == zeta_vm_closed(2).expand(20));
}

TEST_CASE("c_m from zeta") {
  CHECK(cm_from_zeta(1, zeta_vm_closed(1).expand(3)).table() == series("1 + q t + q^2 t^2 + q^3 t^3", 3));
  CmSeries c0 = cm_from_zeta(0, zeta_vm_closed(0).expand(4));
  for (int j = 0; j <= 4; ++j) CHECK(c0.table()[j] == QLaurent(1));
  CHECK(cm_from_zeta(2, zeta_vm_closed(2).expand(12)) == cm_series_cs(2, 12));
  // (q - q^-1) z has a q^0 term
  CHECK_THROWS_AS(cm_from_zeta(1, series("1 + q t", 1)), InvalidArgument);
  // palindromic, but the extracted multiplicities are q^2 - 1
  CHECK_THROWS_AS(cm_from_zeta(1, series("1 + (q^2 + q^-2) t", 1)), InvalidArgument);
  // not palindromic: the positive part cannot reproduce it
  CHECK_THROWS_AS(cm_from_zeta(1, series("1 + (q^3 + q) t", 1)), InvalidArgument);
}

TEST_CASE("recursion step") {
  CHECK(cm_recursion_step(2, cm_series_cs(0, 15), 15) == cm_series_cs(2, 15));
  CHECK(cm_recursion_step(3, cm_series_cs(1, 15), 15) == cm_series_cs(3, 15));
  CHECK(cm_recursion_step(4, cm_series_cs(2, 15), 15) == cm_series_cs(4, 15));
  CHECK_THROWS_AS(cm_recursion_step(4, cm_series_cs(2, 5), 10), InvalidArgument);
  CHECK_THROWS_AS(cm_recursion_step(4, cm_series_cs(1, 10), 10), InvalidArgument);
}

TEST_CASE("closed forms for c_3 and c_4") {
  // c2 = 1/((1 - t^2)(1 - q^2 t))
  CHECK(expand_gh(2, {QTPoly(1), UPoly(std::vector<Rational>{1, 0, -1})}, 20) == cm_series_cs(2, 20).table());
  for (long m : {3L, 4L}) {
    const ReferenceGH& ref = reference_gh(m);
    CHECK(expand_gh(m, ref.gh, 20) == cm_series_cs(m, 20).table());
    CHECK(verify_functional_eq(m, ref.gh));
  }
}

TEST_CASE("eta_m") {
  CHECK(eta_m(4) == parse_qt_poly("(1 - q^2 t)(1 - q^4 t)"));
  CHECK(eta_m(5) == parse_qt_poly("(1 - q t)(1 - q^3 t)(1 - q^5 t)"));
  CHECK(eta_m(0) == QTPoly(1));
}

TEST_CASE("functional equation") {
  CHECK(verify_functional_eq(1, {QTPoly(1), UPoly(1)}));
  CHECK(verify_functional_eq(2, {QTPoly(1), UPoly(std::vector<Rational>{1, 0, -1})}));
  CHECK(verify_functional_eq(5, reference_gh(5).gh));
  CHECK(verify_functional_eq(6, reference_gh(6).gh));
  CHECK_FALSE(verify_functional_eq(2, {QTPoly(1), UPoly(1)}));
  CHECK_FALSE(verify_functional_eq(3, {QTPoly(1), UPoly(std::vector<Rational>{1, 0, 0, 0, -1})}));
}

TEST_CASE("fitting g and h") {
  GHPair g3 = fit_gh(3);
  CHECK(g3.g == parse_qt_poly("1 - q t + q^2 t^2"));
  CHECK(g3.h == parse_qt_poly("1 - t^4").as_upoly_in_t());
  for (long m : {5L, 6L}) {
    CAPTURE(m);
    GHPair fitted = fit_gh(m);
    CHECK(fitted == reference_gh(m).gh);
  }
  CHECK(fit_gh(0) == GHPair{QTPoly(1), UPoly(std::vector<Rational>{1, -1})});
  CHECK(fit_gh(1) == GHPair{QTPoly(1), UPoly(1)});
  FitOptions tight;
  tight.max_h_degree = 3;
  CHECK_THROWS_AS(fit_gh(5, cm_series_cs(5, 30), tight), FitFailed);
}

TEST_CASE("finite sets") {
  CHECK(zeta_finite_set(3, false).to_string() == "1/((1-t)^3)");
  CHECK(zeta_finite_set(3, true).numerator() == parse_qt_poly("(1 + t)^3"));
  CHECK(zeta_finite_set(3, true).factors().empty());
  CHECK(zeta_finite_set(0, false).expand(3) == TSeries::one(3));
  CHECK(zeta_finite_set(0, true).expand(3) == TSeries::one(3));
  // regular points of X: (1+t)^n = [2]_t^n, coefficient of t^j is C(n, j)
  TSeries r = zeta_finite_set(4, true).expand(5);
  for (int j = 0; j <= 5; ++j) CHECK(r[j] == QLaurent(Rational(binomial(4, j))));
}

TEST_CASE("direct sums") {
  auto v = [](long m) { return Sl2Decomposition::irreducible(m); };
  CHECK(zeta_direct_sum({v(0)}, 6) == zeta_vm_closed(0).expand(6));
  TSeries z1 = zeta_vm_closed(1).expand(8);
  CHECK(zeta_direct_sum({v(1), v(1)}, 8) == z1 * z1);
  TSeries s = zeta_direct_sum({v(0), v(2)}, 1);
  CHECK(s[1] == QLaurent(1) + q_int_sym(3));
}

TEST_CASE("property: Theorem (c_m determines zeta)") {
  for (long m = 0; m <= 8; ++m) {
    CAPTURE(m);
    CHECK(zeta_from_cm(cm_series_cs(m, 20)) == zeta_vm_closed(m).expand(20));
  }
}

TEST_CASE("property: route equivalence and positivity") {
  for (long m = 0; m <= 6; ++m) {
    CAPTURE(m);
    CmSeries cs = cm_series_cs(m, 12);
    CHECK(cs.is_valid());
    CmSeries extracted = cm_from_zeta(m, zeta_vm_closed(m).expand(12));
    CHECK(extracted == cs);
    CmSeries rec = cm_series_recursive(m, 12);
    CHECK(rec == cs);
    CHECK(rec.is_valid());
  }
}

TEST_CASE("property: lambda-ring multiplicativity") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> hw(0, 4);
  std::uniform_int_distribution<int> len(1, 3);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Sl2Decomposition> a;
    std::vector<Sl2Decomposition> b;
    for (int k = len(rng); k > 0; --k) a.push_back(Sl2Decomposition::irreducible(hw(rng)));
    for (int k = len(rng); k > 0; --k) b.push_back(Sl2Decomposition::irreducible(hw(rng)));
    std::vector<Sl2Decomposition> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CHECK(zeta_direct_sum(ab, 8) == zeta_direct_sum(a, 8) * zeta_direct_sum(b, 8));
  }
}

TEST_CASE("property: degree claims") {
  for (long m = 2; m <= 6; ++m) {
    CAPTURE(m);
    GHPair gh = fit_gh(m);
    GHDegrees d = gh_degrees(m, gh);
    CHECK(d.q_degree_g == d.q_degree_eta - 2);
    CHECK(d.rational_t_degree == -(m + 1));
    CHECK(gh.g.coeff(0) == QLaurent(1));
    CHECK(gh.h.coeff(0) == 1);
  }
}
