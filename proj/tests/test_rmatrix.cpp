#include "bzeta/errors.hpp"
#include "bzeta/qcombinatorics.hpp"
#include "bzeta/rmatrix.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bzeta;
using bzeta::testing::q;

TEST_CASE("fundamental braiding") {
  RHat r(2);
  const auto& diag = r.image(0, 0);
  REQUIRE(diag.size() == 1);
  CHECK(diag[0].first == 0);
  CHECK(diag[0].second == q(1));
  CHECK(r.satisfies_hecke());
  CHECK(r.satisfies_braid());
  // q -> 1 gives the flip
  ExactMatrix<QRational> m = r.matrix();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const std::size_t flip_j = (j % 2) * 2 + j / 2;
      CHECK(m(i, j).eval_at(1) == (i == flip_j ? 1 : 0));
    }
  }
}

TEST_CASE("eigenvalues of the braiding") {
  // rank of R - q is 1 and rank of R + q^-1 is 3 on C^2 (x) C^2
  RHat r(2);
  ExactMatrix<QRational> m = r.matrix();
  ExactMatrix<QRational> minus_q = m;
  ExactMatrix<QRational> plus_qinv = m;
  for (std::size_t i = 0; i < 4; ++i) {
    minus_q(i, i) = minus_q(i, i) - QRational(q(1));
    plus_qinv(i, i) = plus_qinv(i, i) + QRational(q(-1));
  }
  CHECK(exact_rank(minus_q) == 1);
  CHECK(exact_rank(plus_qinv) == 3);
}

TEST_CASE("Hecke and braid relations") {
  for (int n = 2; n <= 4; ++n) {
    RHat r(n);
    CHECK(r.satisfies_hecke());
    CHECK(r.satisfies_braid());
  }
}

TEST_CASE("symmetric subspace by blocks") {
  auto blocks = sym_subspace_dims(2, 2);
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0].content == std::vector<int>{1, 1});
  CHECK(blocks[1].content == std::vector<int>{1, 2});
  CHECK(blocks[1].block_size == 2);
  CHECK(blocks[2].content == std::vector<int>{2, 2});
  for (const auto& b : blocks) CHECK(b.symmetric_dim == 1);
  std::size_t total = 0;
  for (const auto& b : sym_subspace_dims(2, 3)) total += b.symmetric_dim;
  CHECK(total == 4);
  for (int n = 2; n <= 4; ++n) CHECK(sym_subspace_dims(n, 1).size() == static_cast<std::size_t>(n));
  CHECK_THROWS_AS(sym_subspace_dims(4, 6), BudgetExceeded);
}

TEST_CASE("quantum trace") {
  CHECK(quantum_trace_sym(2, 2) == q_int_sym(3));
  CHECK(quantum_trace_sym(2, 0) == QLaurent(1));
  CHECK(quantum_trace_sym(3, 2) == q_binom_sym(4, 2));
}

TEST_CASE("property: one symmetric tensor per content, trace is the q-binomial") {
  for (int n = 2; n <= 4; ++n) {
    for (int j = 0; j <= 5; ++j) {
      CAPTURE(n);
      CAPTURE(j);
      auto blocks = sym_subspace_dims(n, j);
      CHECK(blocks.size() == static_cast<std::size_t>(binomial(n + j - 1, j).get_si()));
      for (const auto& b : blocks) CHECK(b.symmetric_dim == 1);
      QLaurent tr = quantum_trace_sym(n, j);
      CHECK(tr == q_binom_sym(n + j - 1, j));
      CHECK(tr.eval_at(1) == Rational(binomial(n + j - 1, j)));
    }
  }
}
