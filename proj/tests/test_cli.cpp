#include <sstream>

#include "bzeta/cli.hpp"
#include "bzeta/errors.hpp"
#include "bzeta/serialize.hpp"
#include "bzeta/sln_weyl.hpp"
#include "bzeta/sphere.hpp"
#include "bzeta/zeta.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bzeta;
using bzeta::testing::q;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string strip_newline(std::string s) {
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("documented examples") {
  Run r = run({"zeta", "cn", "--n", "2", "--order", "2", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 + (q+q^-1) t + (q^2+1+q^-2) t^2\n");

  r = run({"nichols", "--sym-group", "3", "--max-degree", "4"});
  CHECK(r.code == 0);
  const OutputDocument doc = parse_output_document(r.out);
  CHECK(doc.kind == OutputKind::graded_dims);
  CHECK(graded_dims_from_json(doc.payload).dims == std::vector<std::size_t>{1, 3, 4, 3, 1});
  CHECK(run({"--format", "text", "nichols", "--sym-group", "3", "--max-degree", "4"}).out == "1, 3, 4, 3, 1\n");
}

TEST_CASE("verify runs the acceptance table") {
  Run r = run({"verify", "--suite", "all", "--format", "text"});
  CHECK(r.code == 0);
  for (int id = 1; id <= 14; ++id) {
    const std::string tag = (id < 10 ? " " : "") + std::to_string(id) + "  PASS";
    CHECK(r.out.find(tag) != std::string::npos);
  }
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("14/14 criteria passed") != std::string::npos);

  Run j = run({"verify", "--suite", "sphere"});
  CHECK(j.code == 0);
  const OutputDocument doc = parse_output_document(j.out);
  CHECK(doc.kind == OutputKind::verdict);
  CHECK(doc.payload["passed"].get<bool>());
  CHECK(doc.payload["criteria"].size() == 2);
}

TEST_CASE("other subcommands") {
  CHECK(run({"zeta", "cn", "--n", "2", "--closed", "--format", "text"}).out == "1/((1-q t)(1-q^-1 t))\n");
  CHECK(run({"zeta", "vm", "--m", "1", "--format", "text"}).out == "1/((1-q t)(1-q^-1 t))\n");
  CHECK(run({"zeta", "vm", "--m", "0", "--order", "2", "--format", "text"}).out == "1 + t + t^2\n");
  for (const char* route : {"cs", "extract", "recursion"}) {
    CHECK(run({"cm", "--m", "2", "--order", "2", "--route", route, "--format", "text"}).out ==
          "1 + q^2 t + (q^4+1) t^2\n");
  }
  Run f = run({"fit", "--m", "3", "--format", "text"});
  CHECK(f.out.find("g = 1 - q t + q^2 t^2") != std::string::npos);
  CHECK(f.out.find("h = 1 - t^4") != std::string::npos);
  CHECK(run({"finite", "--n", "3", "--format", "text"}).out == "1/((1-t)^3)\n");
  CHECK(run({"finite", "--n", "2", "--regular", "--order", "3", "--format", "text"}).out == "1 + 2 t + t^2\n");
  Run s = run({"sphere", "--coeff", "1"});
  CHECK(s.code == 0);
  CHECK(qrational_from_json(parse_output_document(s.out).payload) == sphere_zeta_coeff(1));
  Run quad = run({"nichols", "--sym-group", "2", "--max-degree", "3", "--quadratic", "--format", "text"});
  CHECK(quad.out == "1, 1, 0, 0\n");
  Run triv = run({"nichols", "--sym-group", "3", "--max-degree", "2", "--cocycle", "trivial", "--invariants",
                  "--format", "text"});
  CHECK(triv.out == "1, 3, 9\ninvariants: 1, 3, 5\n");
}

TEST_CASE("exit codes") {
  Run r = run({"zeta", "cn", "--n", "2", "--frobnicate"});
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"nichols", "--sym-group", "3"}).code == 2);
  CHECK(run({"sphere", "--coeff", "4"}).code == 2);
  CHECK(run({"--format", "xml", "sphere", "--coeff", "1"}).code == 2);
  CHECK(run({"verify", "--suite", "everything"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  // budget: partial dims on stdout, diagnostic on stderr
  Run b = run({"nichols", "--sym-group", "6", "--max-degree", "6", "--format", "text"});
  CHECK(b.code == 1);
  CHECK(b.out == "1, 15, 125, 765, 3831, 16605\n");
  CHECK(b.err.find("budget") != std::string::npos);
}

TEST_CASE("JSON output re-serializes byte for byte") {
  const std::vector<std::vector<std::string>> commands{
      {"zeta", "cn", "--n", "3", "--order", "4"},
      {"zeta", "cn", "--n", "3"},
      {"zeta", "vm", "--m", "3"},
      {"cm", "--m", "3", "--order", "5"},
      {"fit", "--m", "4"},
      {"sphere", "--coeff", "3"},
      {"nichols", "--sym-group", "4", "--max-degree", "3", "--invariants"},
      {"finite", "--n", "2", "--regular"},
      {"verify", "--suite", "sphere"},
  };
  for (const auto& c : commands) {
    CAPTURE(c[0]);
    Run r = run(c);
    REQUIRE(r.code == 0);
    const std::string text = strip_newline(r.out);
    CHECK(to_json_text(parse_output_document(text)) == text);
  }
}

TEST_CASE("canonical JSON layout") {
  Run r = run({"zeta", "cn", "--n", "2", "--order", "1"});
  CHECK(strip_newline(r.out) ==
        R"({"kind":"series","payload":{"order":1,"coeffs":[[[["0","1"],["1","1"]]],)"
        R"([[["-1","1"],["1","1"]],[["1","1"],["1","1"]]]]},)"
        R"("metadata":{"command":"zeta cn","parameters":{"n":2,"order":1},"version":")" +
            library_version() + R"("}})");
}

TEST_CASE("payload decoders invert the encoders") {
  const TSeries s = zeta_cn_series(3, 6);
  CHECK(tseries_from_json(tseries_to_json(s)) == s);
  QLaurent half = q(2) + QLaurent::monomial(make_rational(-7, 3), make_rational(-3, 2));
  CHECK(qlaurent_from_json(qlaurent_to_json(half)) == half);
  CHECK(qlaurent_to_json(half).dump() == R"([[["-3","2"],["-7","3"]],[["2","1"],["1","1"]]])");
  const FactoredRatQT z = zeta_vm_closed(4);
  CHECK(factored_from_json(factored_to_json(z)).to_string() == z.to_string());
  const QRational c3 = sphere_zeta_coeff(3);
  CHECK(qrational_from_json(qrational_to_json(c3)) == c3);
  Sl2Decomposition d;
  d.add(4, BigInt(1));
  d.add(0, BigInt("123456789012345678901234567890"));
  CHECK(decomposition_from_json(decomposition_to_json(d)) == d);
  CHECK(rational_from_json(rational_to_json(make_rational(-22, 7))) == make_rational(-22, 7));
  CHECK(qtpoly_from_json(qtpoly_to_json(eta_m(5))) == eta_m(5));
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(parse_output_document("{"), InvalidArgument);
  CHECK_THROWS_AS(parse_output_document(R"({"kind":"poem","payload":1,"metadata":{}})"), InvalidArgument);
  CHECK_THROWS_AS(rational_from_json(Json::parse(R"(["2","4"])")), InvalidArgument);
  CHECK_THROWS_AS(rational_from_json(Json::parse(R"(["1","0"])")), InvalidArgument);
  CHECK_THROWS_AS(rational_from_json(Json::parse(R"([1,2])")), InvalidArgument);
  CHECK_THROWS_AS(qlaurent_from_json(Json::parse(R"([[["1","1"],["1","1"]],[["0","1"],["1","1"]]])")),
                  InvalidArgument);
  CHECK_THROWS_AS(qlaurent_from_json(Json::parse(R"([[["1","1"],["0","1"]]])")), InvalidArgument);
  CHECK_THROWS_AS(tseries_from_json(Json::parse(R"({"order":2,"coeffs":[[]]})")), InvalidArgument);
}
