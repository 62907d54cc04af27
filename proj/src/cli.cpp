#include "bzeta/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "bzeta/braided_sets.hpp"
#include "bzeta/errors.hpp"
#include "bzeta/serialize.hpp"
#include "bzeta/sln_weyl.hpp"
#include "bzeta/sphere.hpp"
#include "bzeta/verify.hpp"
#include "bzeta/zeta.hpp"

namespace bzeta {

namespace {

struct Options {
  std::string format = "json";
  int n = 0;
  long m = 0;
  int order = -1;
  bool closed = false;
  std::string route = "cs";
  int coeff = 0;
  int sym_group = 0;
  int max_degree = 0;
  bool quadratic = false;
  bool invariants = false;
  std::string cocycle = "sign";
  bool regular = false;
  std::string suite = "all";
};

// Result of a command before rendering.
struct Output {
  OutputDocument doc;
  std::string text;
  int exit_code = 0;
};

Output make(OutputKind kind, Json payload, std::string command, Json parameters, std::string text) {
  Output o;
  o.doc.kind = kind;
  o.doc.payload = std::move(payload);
  o.doc.command = std::move(command);
  o.doc.parameters = std::move(parameters);
  o.doc.version = library_version();
  o.text = std::move(text);
  return o;
}

std::string dims_text(const std::vector<std::size_t>& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? ", " : "") + std::to_string(dims[i]);
  return s;
}

Output zeta_cn(const Options& o) {
  Json params;
  params["n"] = o.n;
  if (o.closed || o.order < 0) {
    params["closed"] = true;
    const FactoredRatQT z = zeta_cn_closed(o.n);
    return make(OutputKind::rational, factored_to_json(z), "zeta cn", params, z.to_string());
  }
  params["order"] = o.order;
  const TSeries s = zeta_cn_series(o.n, o.order);
  return make(OutputKind::series, tseries_to_json(s), "zeta cn", params, s.to_string());
}

Output zeta_vm(const Options& o) {
  Json params;
  params["m"] = o.m;
  const FactoredRatQT z = zeta_vm_closed(o.m);
  if (o.order < 0) return make(OutputKind::rational, factored_to_json(z), "zeta vm", params, z.to_string());
  params["order"] = o.order;
  const TSeries s = z.expand(o.order);
  return make(OutputKind::series, tseries_to_json(s), "zeta vm", params, s.to_string());
}

Output cm(const Options& o) {
  Json params;
  params["m"] = o.m;
  params["order"] = o.order;
  params["route"] = o.route;
  CmSeries c = o.route == "cs"          ? cm_series_cs(o.m, o.order)
               : o.route == "extract" ? cm_from_zeta(o.m, zeta_vm_closed(o.m).expand(o.order))
                                        : cm_series_recursive(o.m, o.order);
  return make(OutputKind::series, tseries_to_json(c.table()), "cm", params, c.table().to_string());
}

Output fit(const Options& o) {
  Json params;
  params["m"] = o.m;
  const GHPair gh = fit_gh(o.m);
  const GHDegrees d = gh_degrees(o.m, gh);
  Json payload;
  payload["g"] = qtpoly_to_json(gh.g);
  payload["h"] = qtpoly_to_json(QTPoly::from_upoly(gh.h));
  payload["eta"] = qtpoly_to_json(eta_m(o.m));
  payload["rational_t_degree"] = d.rational_t_degree;
  payload["q_degree_g"] = d.q_degree_g;
  payload["q_degree_eta"] = d.q_degree_eta;
  std::string text = "g = " + gh.g.to_string() + "\nh = " + gh.h.to_string() + "\neta = " + eta_m(o.m).to_string();
  return make(OutputKind::rational, payload, "fit", params, text);
}

Output sphere(const Options& o) {
  Json params;
  params["coeff"] = o.coeff;
  const QRational c = sphere_zeta_coeff(o.coeff);
  return make(OutputKind::rational, qrational_to_json(c), "sphere", params, c.to_string());
}

Output nichols(const Options& o) {
  Json params;
  params["sym_group"] = o.sym_group;
  params["max_degree"] = o.max_degree;
  params["quadratic"] = o.quadratic;
  params["cocycle"] = o.cocycle;
  const BraidedSet x = transpositions(o.sym_group, o.cocycle == "sign" ? Cocycle::sign : Cocycle::trivial);
  const GradedDims g = o.quadratic ? quadratic_hilbert_dims(x, o.max_degree) : hilbert_dims(x, o.max_degree);
  Json payload = graded_dims_to_json(g);
  payload["variant"] = o.quadratic ? "quadratic" : "full";
  std::string text = dims_text(g.dims);
  if (o.invariants) {
    params["invariants"] = true;
    std::vector<std::size_t> inv;
    for (int j = 0; j < static_cast<int>(g.dims.size()); ++j) inv.push_back(invariant_dims(x, j));
    payload["invariant_dims"] = inv;
    text += "\ninvariants: " + dims_text(inv);
  }
  Output result = make(OutputKind::graded_dims, payload, "nichols", params, text);
  // the partial result is still printed, but the run did not reach the requested degree
  if (!g.complete) result.exit_code = 1;
  return result;
}

Output finite(const Options& o) {
  Json params;
  params["n"] = o.n;
  params["regular"] = o.regular;
  const FactoredRatQT z = zeta_finite_set(o.n, o.regular);
  if (o.order < 0) return make(OutputKind::rational, factored_to_json(z), "finite", params, z.to_string());
  params["order"] = o.order;
  const TSeries s = z.expand(o.order);
  return make(OutputKind::series, tseries_to_json(s), "finite", params, s.to_string());
}

Output verify(const Options& o, std::ostream& progress, bool stream_text) {
  Json params;
  params["suite"] = o.suite;
  const Suite suite = parse_suite(o.suite);
  auto line = [](const CriterionResult& r) {
    std::ostringstream s;
    s << std::setw(2) << r.id << "  " << (r.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(38) << r.title
      << "  " << r.detail << "  [" << r.milliseconds << " ms]";
    return s.str();
  };
  const auto results = run_suite(suite, [&](const CriterionResult& r) {
    if (stream_text) progress << line(r) << std::endl;
  });
  Json criteria = Json::array();
  bool all = true;
  for (const auto& r : results) {
    Json e;
    e["id"] = r.id;
    e["title"] = r.title;
    e["passed"] = r.passed;
    e["detail"] = r.detail;
    e["milliseconds"] = r.milliseconds;
    criteria.push_back(std::move(e));
    all = all && r.passed;
  }
  Json payload;
  payload["suite"] = o.suite;
  payload["passed"] = all;
  payload["criteria"] = std::move(criteria);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  Output out = make(OutputKind::verdict, payload, "verify", params,
                    std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed");
  out.exit_code = all ? 0 : 1;
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braided zeta functions and Hilbert series, computed exactly", "bzeta"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto* zeta = app.add_subcommand("zeta", "Zeta functions of C^n and V_m");
  zeta->require_subcommand(1);
  auto* cn = zeta->add_subcommand("cn", "zeta_t(C^n) in the U_q(sl_n) category");
  cn->add_option("--n", o.n, "Dimension n")->required()->check(CLI::Range(1, 64));
  cn->add_option("--order", o.order, "Expand to this t-order")->check(CLI::Range(0, 100000));
  cn->add_flag("--closed", o.closed, "Print the closed product form");
  auto* vm = zeta->add_subcommand("vm", "zeta_t(V_m) for the U_q(sl_2) irreducible V_m");
  vm->add_option("--m", o.m, "Highest weight m")->required()->check(CLI::Range(0L, 10000L));
  vm->add_option("--order", o.order, "Expand to this t-order")->check(CLI::Range(0, 100000));

  auto* cmc = app.add_subcommand("cm", "Generating function c_m(t, q) of multiplicities in S^j(V_m)");
  cmc->add_option("--m", o.m, "Highest weight m")->required()->check(CLI::Range(0L, 10000L));
  cmc->add_option("--order", o.order, "t-order")->required()->check(CLI::Range(0, 100000));
  cmc->add_option("--route", o.route, "cs (Cayley-Sylvester), extract (from zeta) or recursion")
      ->check(CLI::IsMember({"cs", "extract", "recursion"}));

  auto* fitc = app.add_subcommand("fit", "Fit c_m = g / (h eta_m)");
  fitc->add_option("--m", o.m, "Highest weight m")->required()->check(CLI::Range(0L, 10000L));

  auto* sph = app.add_subcommand("sphere", "Coefficient of t^k in the regularized zeta of the quantum sphere");
  sph->add_option("--coeff", o.coeff, "k in 0..3")->required()->check(CLI::Range(0, 3));

  auto* nich = app.add_subcommand("nichols", "Hilbert series of the braided symmetric algebra on transpositions of S_k");
  nich->add_option("--sym-group", o.sym_group, "k")->required()->check(CLI::Range(2, 9));
  nich->add_option("--max-degree", o.max_degree, "Highest degree")->required()->check(CLI::Range(0, 1000));
  nich->add_flag("--quadratic", o.quadratic, "Quotient by the quadratic relations only");
  nich->add_flag("--invariants", o.invariants, "Also report braid-invariant dimensions");
  nich->add_option("--cocycle", o.cocycle, "sign (default) or trivial")->check(CLI::IsMember({"sign", "trivial"}));

  auto* fin = app.add_subcommand("finite", "zeta_t of a finite set of n points");
  fin->add_option("--n", o.n, "Number of points")->required()->check(CLI::Range(0, 100000));
  fin->add_flag("--regular", o.regular, "Count regular points only");
  fin->add_option("--order", o.order, "Expand to this t-order")->check(CLI::Range(0, 100000));

  auto* ver = app.add_subcommand("verify", "Run the acceptance criteria");
  ver->add_option("--suite", o.suite, "all, zeta, cm, sphere or nichols")
      ->check(CLI::IsMember({"all", "zeta", "cm", "sphere", "nichols"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "bzeta: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    Output result;
    if (*cn) result = zeta_cn(o);
    else if (*vm) result = zeta_vm(o);
    else if (*cmc) result = cm(o);
    else if (*fitc) result = fit(o);
    else if (*sph) result = sphere(o);
    else if (*nich) result = nichols(o);
    else if (*fin) result = finite(o);
    else result = verify(o, out, o.format == "text");
    if (o.format == "json") out << to_json_text(result.doc) << "\n";
    else out << result.text << "\n";
    if (result.doc.kind == OutputKind::graded_dims && !result.doc.payload["complete"].get<bool>()) {
      err << "bzeta: stopped before degree " << result.doc.payload["dims"].size() << ": "
          << result.doc.payload["stop_reason"].get<std::string>() << "\n";
    }
    return result.exit_code;
  } catch (const Error& e) {
    err << "bzeta: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace bzeta
