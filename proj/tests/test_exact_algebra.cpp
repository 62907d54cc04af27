#include <algorithm>
#include <numeric>

#include "bzeta/errors.hpp"
#include "bzeta/factored.hpp"
#include "bzeta/linalg.hpp"
#include "bzeta/qcombinatorics.hpp"
#include "bzeta/qrational.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bzeta;
using bzeta::testing::parse_q;
using bzeta::testing::q;
using bzeta::testing::series;

TEST_CASE("rationals stay reduced") {
  Rational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(to_string(r) == "-3/2");
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK_THROWS_AS(make_rational(1, 0), DivisionByZero);
  CHECK(floor(make_rational(-3, 2)) == -2);
  CHECK(ceil(make_rational(-3, 2)) == -1);
  BigInt big = binomial(200, 100);
  CHECK(to_string(big).size() == 59);
}

TEST_CASE("qlaurent arithmetic") {
  CHECK((q(1) - q(-1)) * (q(1) + q(-1)) == q(2) - q(-2));
  QLaurent two = q_int_sym(2);
  CHECK(two * two == q(2) + QLaurent(2) + q(-2));
  QLaurent x = parse_q("3 q^2 - q^-1");
  CHECK(x + QLaurent() == x);
  CHECK((x - x).is_zero());
  CHECK((x - x).terms().empty());
}

TEST_CASE("qlaurent substitutions") {
  CHECK(parse_q("q^2 + 1").invert_q() == parse_q("q^-2 + 1"));
  CHECK(q_int_sym(2).q_to_power(3) == q(3) + q(-3));
  CHECK(q_int_sym(3).eval_at(2) == make_rational(21, 4));
  CHECK_THROWS_AS(q_int_sym(3).eval_at(0), DivisionByZero);
  CHECK(parse_q("q^2 + 5").eval_at(0) == 5);
  QLaurent half = QLaurent::q_power(make_rational(-3, 2));
  CHECK(half.lowest_exponent() == make_rational(-3, 2));
  CHECK(half.to_string() == "q^-3/2");
  CHECK_THROWS_AS(half.eval_at(2), InvalidArgument);
}

TEST_CASE("qlaurent parts") {
  QLaurent a = parse_q("q^2 - 3 + q^-1");
  CHECK(a.part(QPart::strictly_positive) == q(2));
  CHECK(a.part(QPart::zero) == QLaurent(-3));
  CHECK(a.part(QPart::strictly_negative) == q(-1));
  CHECK(q_int_sym(3).part(QPart::non_negative) == q(2) + QLaurent(1));
}

TEST_CASE("qlaurent text form") {
  CHECK(q_int_sym(3).to_string() == "q^2+1+q^-2");
  CHECK(QLaurent().to_string() == "0");
  CHECK(parse_q("-q + 2").to_string() == "-q+2");
}

TEST_CASE("exact division") {
  QLaurent num = q(3) - q(-3);
  CHECK(num.divide_exact(q(1) - q(-1)) == q_int_sym(3));
  CHECK_FALSE((q(2) + QLaurent(1)).try_divide(q(1) - q(-1)).has_value());
  CHECK_THROWS_AS((q(2) + QLaurent(1)).divide_exact(q(1) - q(-1)), InternalError);
}

TEST_CASE("series arithmetic") {
  TSeries one_minus_t = series("1 - t", 3);
  CHECK(one_minus_t.invert_unit() == series("1 + t + t^2 + t^3", 3));
  CHECK(series("1 - q t", 2).invert_unit() == series("1 + q t + q^2 t^2", 2));
  CHECK(series("1 + t", 3) * series("1 - t", 3) == series("1 - t^2", 3));
  CHECK_THROWS_AS(series("t", 2).invert_unit(), NotAUnit);
  CHECK_THROWS_AS(series("1 + q + t", 2).invert_unit(), NotAUnit);
  CHECK(series("2 q^3 - t", 2).invert_unit() * series("2 q^3 - t", 2) == TSeries::one(2));
}

TEST_CASE("series truncation is explicit") {
  TSeries a = series("1 + t", 5);
  TSeries b = series("1 + t", 2);
  CHECK((a * b).order() == 2);
  CHECK((a + b).order() == 2);
  CHECK_THROWS_AS(b[3], OutOfOrder);
  CHECK(series("1 + (q+q^-1) t + (q^2+1+q^-2) t^2", 2).to_string() == "1 + (q+q^-1) t + (q^2+1+q^-2) t^2");
}

TEST_CASE("factored expansion") {
  FactoredRatQT f(QTPoly(1), {{1, 1, 1}, {-1, 1, 1}});
  CHECK(f.expand(2) == series("1 + (q + q^-1) t + (q^2 + 1 + q^-2) t^2", 2));
  CHECK(FactoredRatQT(QTPoly(1), {{0, 1, 1}}).expand(1) == series("1 + t", 1));
  FactoredRatQT g(QTPoly(1), {{2, 1, 1}, {0, 1, 1}, {-2, 1, 1}});
  CHECK(g.expand(1) == series("1 + (q^2 + 1 + q^-2) t", 1));
  CHECK(f.to_string() == "1/((1-q t)(1-q^-1 t))");
}

TEST_CASE("factored equality is by cross multiplication") {
  // (1 + t)/(1 - t^2) == 1/(1 - t)
  FactoredRatQT a(parse_qt_poly("1 + t"), {{0, 2, 1}});
  FactoredRatQT b(QTPoly(1), {{0, 1, 1}});
  CHECK(a.equals(b));
  CHECK_FALSE(a.equals(FactoredRatQT(QTPoly(1), {{1, 1, 1}})));
  FactoredRatQT merged(QTPoly(1), {{0, 1, 1}, {0, 1, 2}});
  REQUIRE(merged.factors().size() == 1);
  CHECK(merged.factors()[0].multiplicity == 3);
}

TEST_CASE("qrational canonical form") {
  QRational a(q(2) - QLaurent(1), q(1) - QLaurent(1));  // q + 1
  CHECK(a == QRational(q(1) + QLaurent(1)));
  QRational b(QLaurent(1), q(1) - q(-1));
  CHECK(b == QRational(q(1), q(2) - QLaurent(1)));
  CHECK((b * (q(1) - q(-1))) == QRational(1));
  CHECK(b.eval_at(2) == make_rational(2, 3));
  CHECK_THROWS_AS(b.eval_at(1), DivisionByZero);
  CHECK(b.invert_q() == -b);
}

TEST_CASE("exact rank") {
  CHECK(exact_rank(ExactMatrix<Rational>{{1, 0}, {0, 1}}) == 2);
  CHECK(exact_rank(ExactMatrix<Rational>{{1, 2}, {2, 4}}) == 1);
  // id + flip on C^2 (x) C^2, basis 00, 01, 10, 11
  ExactMatrix<Rational> sym{{2, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 2}};
  CHECK(exact_rank(sym) == 3);
  ExactMatrix<QRational> qm(2, 2);
  qm(0, 0) = QRational(q(1));
  qm(0, 1) = QRational(QLaurent(1));
  qm(1, 0) = QRational(q(2));
  qm(1, 1) = QRational(q(1));
  CHECK(exact_rank(qm) == 1);
  qm(1, 1) = QRational(q(-1));
  CHECK(exact_rank(qm) == 2);
}

TEST_CASE("solve linear") {
  auto sol = solve_linear(ExactMatrix<Rational>{{1, 0}, {0, 1}}, {1, 0});
  CHECK(sol.particular == std::vector<Rational>{1, 0});
  CHECK(sol.free_dimension == 0);
  auto under = solve_linear(ExactMatrix<Rational>{{1, 1}}, {2});
  CHECK(under.free_dimension == 1);
  CHECK(under.particular[0] + under.particular[1] == 2);
  CHECK_THROWS_AS(solve_linear(ExactMatrix<Rational>{{1, 1}, {2, 2}}, {1, 3}), NoSolution);
}

TEST_CASE("property: parts reconstruct") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    QLaurent a = testing::random_laurent(rng, 6);
    CHECK(a.part(QPart::strictly_positive) + a.part(QPart::zero) + a.part(QPart::strictly_negative) == a);
  }
}

TEST_CASE("property: unit inverse") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const int order = 8;
    std::vector<QLaurent> c(order + 1);
    std::uniform_int_distribution<long> ex(-3, 3);
    Rational lead = testing::random_rational(rng);
    if (lead == 0) lead = 1;
    c[0] = QLaurent::monomial(lead, Rational(ex(rng)));
    for (int j = 1; j <= order; ++j) c[j] = testing::random_laurent(rng, 2, 3);
    TSeries s(order, c);
    CHECK(s * s.invert_unit() == TSeries::one(order));
  }
}

TEST_CASE("property: factored expansion matches factor products") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> nf(0, 4);
  std::uniform_int_distribution<int> qe(-3, 3);
  std::uniform_int_distribution<int> te(1, 3);
  std::uniform_int_distribution<int> mult(1, 2);
  std::uniform_int_distribution<int> order_dist(0, 20);
  for (int i = 0; i < 30; ++i) {
    std::vector<DenominatorFactor> factors;
    const int k = nf(rng);
    for (int f = 0; f < k; ++f) factors.push_back({Rational(qe(rng)), te(rng), mult(rng)});
    QTPoly num = parse_qt_poly("1 - q t^2") * QTPoly(QLaurent(Rational(i + 1)));
    FactoredRatQT fr(num, factors);
    const int order = order_dist(rng);
    TSeries expected = num.to_series(order);
    for (const auto& f : factors) {
      for (int r = 0; r < f.multiplicity; ++r) {
        expected = expected * TSeries::geometric(QLaurent::q_power(f.q_exp), f.t_exp, order);
      }
    }
    CHECK(fr.expand(order) == expected);
    // and dividing back by the denominator polynomial recovers the numerator
    CHECK(fr.expand(order) * fr.denominator_poly().to_series(order) == num.to_series(order));
  }
}

TEST_CASE("property: rank is permutation invariant") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> entry(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 3 + trial % 4;
    const std::size_t c = 4 + trial % 3;
    ExactMatrix<Rational> m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    }
    // force some dependence
    for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2 - m(1, j);
    std::vector<std::size_t> pr(r), pc(c);
    std::iota(pr.begin(), pr.end(), 0);
    std::iota(pc.begin(), pc.end(), 0);
    std::shuffle(pr.begin(), pr.end(), rng);
    std::shuffle(pc.begin(), pc.end(), rng);
    ExactMatrix<Rational> p(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) p(i, j) = m(pr[i], pc[j]);
    }
    const std::size_t rank = exact_rank(m);
    CHECK(exact_rank(p) == rank);
    CHECK(rank < r);
    // the sparse echelon route agrees with Bareiss
    EchelonBasis<Rational> basis;
    for (std::size_t i = 0; i < r; ++i) basis.insert(m.sparse_row(i));
    CHECK(basis.rank() == rank);
    IntegerEchelonBasis ibasis;
    for (std::size_t i = 0; i < r; ++i) ibasis.insert(primitive_integer_row(m.sparse_row(i)));
    CHECK(ibasis.rank() == rank);
  }
}

TEST_CASE("property: evaluation is a ring map") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    QLaurent a = testing::random_laurent(rng);
    QLaurent b = testing::random_laurent(rng);
    Rational r = testing::random_rational(rng);
    if (r == 0) r = make_rational(1, 3);
    CHECK((a * b).eval_at(r) == a.eval_at(r) * b.eval_at(r));
    CHECK((a + b).eval_at(r) == a.eval_at(r) + b.eval_at(r));
  }
}

TEST_CASE("polynomial parser") {
  QTPoly p = parse_qt_poly("(1-t^4)(1-t^6)");
  CHECK(p == parse_qt_poly("1 - t^4 - t^6 + t^10"));
  CHECK(parse_qt_poly("2 q^{-3/2} t").coeff(1) == QLaurent::monomial(2, make_rational(-3, 2)));
  CHECK(parse_qt_poly("- (q + q^3) t").coeff(1) == -(q(1) + q(3)));
  CHECK_THROWS_AS(parse_qt_poly("1 + * t"), InvalidArgument);
}
