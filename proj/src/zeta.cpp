#include "bzeta/zeta.hpp"

#include <set>

#include "bzeta/errors.hpp"
#include "bzeta/linalg.hpp"
#include "bzeta/sln_weyl.hpp"

namespace bzeta {

namespace {

const QLaurent& q_minus_qinv() {
  static const QLaurent value = QLaurent::q_power(1) - QLaurent::q_power(-1);
  return value;
}

long to_long(const Rational& r) {
  if (!is_integer(r)) throw InternalError("expected an integral exponent, got " + bzeta::to_string(r));
  return r.get_num().get_si();
}

}  // namespace

CmSeries::CmSeries(long m, TSeries table) : m_(m), table_(std::move(table)) {
  if (m < 0) throw InvalidArgument("c_m needs m >= 0");
}

bool CmSeries::is_valid() const {
  for (int j = 0; j <= order(); ++j) {
    for (const auto& [p, c] : table_[j].terms()) {
      if (!is_integer(p) || !is_integer(c) || c < 0) return false;
      const long e = p.get_num().get_si();
      if (e < 0 || e > j * m_ || (j * m_ - e) % 2 != 0) return false;
    }
  }
  return true;
}

FactoredRatQT zeta_vm_closed(long m) {
  if (m < 0) throw InvalidArgument("zeta of V_m needs m >= 0");
  return zeta_cn_closed(static_cast<int>(m + 1));
}

CmSeries cm_series_cs(long m, int order) {
  TSeries table(order);
  for (int j = 0; j <= order; ++j) {
    QLaurent row;
    const Sl2Decomposition d = cs_sym_power(m, j);
    for (const auto& [p, mult] : d.parts()) row.add_term(Rational(mult), Rational(p));
    table.at(j) = row;
  }
  return {m, std::move(table)};
}

TSeries zeta_from_cm(const CmSeries& c) {
  TSeries out(c.order());
  for (int j = 0; j <= c.order(); ++j) {
    const QLaurent& cj = c.table()[j];
    QLaurent num = cj.shifted(1) - cj.invert_q().shifted(-1);
    out.at(j) = num.divide_exact(q_minus_qinv());
  }
  return out;
}

CmSeries cm_from_zeta(long m, const TSeries& z) {
  TSeries table(z.order());
  for (int j = 0; j <= z.order(); ++j) {
    QLaurent x = z[j] * q_minus_qinv();
    if (!x.part(QPart::zero).is_zero()) {
      throw InvalidArgument("(q - q^-1) zeta has a q^0 term at t^" + std::to_string(j) + "; not a zeta expansion");
    }
    table.at(j) = x.part(QPart::strictly_positive).shifted(-1);
  }
  CmSeries c(m, std::move(table));
  if (!c.is_valid()) {
    throw InvalidArgument("extracted c_" + std::to_string(m) +
                          " has a negative, fractional or out-of-range multiplicity; not a zeta expansion of V_m");
  }
  if (!(zeta_from_cm(c) == z)) {
    throw InvalidArgument("series is not the zeta function of V_" + std::to_string(m) +
                          ": the extracted c_m does not reproduce it");
  }
  return c;
}

CmSeries cm_recursion_step(long m, const CmSeries& prev, int order) {
  if (m < 2) throw InvalidArgument("the recursion starts at m = 2");
  if (prev.m() != m - 2) throw InvalidArgument("recursion step needs c_{m-2}");
  if (prev.order() < order) {
    throw InvalidArgument("c_" + std::to_string(m - 2) + " is known to order " + std::to_string(prev.order()) +
                          ", need " + std::to_string(order));
  }
  const TSeries c_prev = prev.table().truncated(order);
  const QLaurent qm = QLaurent::q_power(Rational(m));
  const QLaurent qmm = QLaurent::q_power(Rational(-m));
  const TSeries geo_plus = TSeries::geometric(qm, 1, order);
  const TSeries geo_minus = TSeries::geometric(qmm, 1, order);

  // Split c_{m-2}(t, q) = sum_p c_{m-2}(t)_p q^p by q-power.
  std::map<long, TSeries> slices;
  for (int j = 0; j <= order; ++j) {
    for (const auto& [p, c] : c_prev[j].terms()) {
      auto it = slices.try_emplace(to_long(p), TSeries(order)).first;
      it->second.at(j) = QLaurent(c);
    }
  }
  TSeries first_sum(order);
  TSeries second_sum(order);
  for (const auto& [p, slice] : slices) {
    if (p < 0) throw InvalidArgument("c_m has a negative q-power");
    const long down = p / m;                 // floor(p/m)
    const long up = (p + 2 + m - 1) / m;     // ceil((p+2)/m)
    // q^p (q^-m t)^down and q^-p (q^m t)^up
    first_sum += slice * TSeries::monomial(QLaurent::q_power(Rational(p - m * down)), static_cast<int>(down), order);
    if (up <= order) {
      second_sum += slice * TSeries::monomial(QLaurent::q_power(Rational(m * up - p)), static_cast<int>(up), order);
    }
  }
  TSeries bracket = TSeries::monomial(qmm, 1, order) * geo_minus * first_sum +
                    geo_plus * second_sum * QLaurent::q_power(-2);
  TSeries result = c_prev * geo_plus * geo_minus - TSeries::geometric(QLaurent(1), 2, order) * bracket;
  return {m, std::move(result)};
}

CmSeries cm_series_recursive(long m, int order) {
  CmSeries c = cm_series_cs(m % 2, order);
  for (long k = m % 2 + 2; k <= m; k += 2) c = cm_recursion_step(k, c, order);
  return c;
}

QTPoly eta_m(long m) {
  if (m < 0) throw InvalidArgument("eta_m needs m >= 0");
  QTPoly out(1);
  const long start = m % 2 == 0 ? 2 : 1;
  for (long e = start; e <= m; e += 2) out = out * (QTPoly(1) - QTPoly::monomial(QLaurent::q_power(Rational(e)), 1));
  return out;
}

bool verify_functional_eq(long m, const GHPair& gh) {
  const QTPoly eta = eta_m(m);
  QTPoly lhs = (gh.g * eta.invert_q()).shifted_q(1) - (gh.g.invert_q() * eta).shifted_q(-1);
  if (m % 2 == 0) lhs = lhs * (QTPoly(1) - QTPoly::monomial(QLaurent(1), 1));
  QTPoly rhs = QTPoly::from_upoly(gh.h) * QTPoly(q_minus_qinv());
  return lhs == rhs;
}

TSeries expand_gh(long m, const GHPair& gh, int order) {
  QTPoly den = QTPoly::from_upoly(gh.h) * eta_m(m);
  return gh.g.to_series(order) * den.to_series(order).invert_unit();
}

namespace {

long q_degree(const QTPoly& p) {
  long d = 0;
  bool any = false;
  for (const auto& [k, c] : p.terms()) {
    long e = to_long(c.highest_exponent());
    d = any ? std::max(d, e) : e;
    any = true;
  }
  return d;
}

// Divide out any polynomial in t shared by h and every q-slice of g, then
// normalize h(0) = 1 and g(0, q) = 1.
GHPair reduce_and_normalize(const GHPair& in) {
  UPoly common = in.h;
  std::set<Rational> exps;
  for (const auto& [k, c] : in.g.terms()) {
    for (const auto& [e, v] : c.terms()) exps.insert(e);
  }
  for (const auto& e : exps) common = gcd(common, in.g.q_slice(e));
  GHPair out = in;
  if (common.degree() > 0) {
    out.h = divmod(in.h, common).first;
    QTPoly g;
    for (const auto& e : exps) {
      UPoly slice = divmod(in.g.q_slice(e), common).first;
      g += QTPoly::from_upoly(slice) * QTPoly(QLaurent::q_power(e));
    }
    out.g = g;
  }
  const Rational h0 = out.h.coeff(0);
  if (h0 == 0) throw FitFailed("fitted h vanishes at t = 0");
  out.h = out.h.scaled(Rational(1 / h0));
  out.g = out.g * QTPoly(QLaurent(Rational(1 / h0)));
  if (!(out.g.coeff(0) == QLaurent(1))) throw FitFailed("fitted g(0, q) is " + out.g.coeff(0).to_string() + ", not 1");
  return out;
}

}  // namespace

GHPair fit_gh(long m, const CmSeries& c, const FitOptions& opts) {
  if (c.m() != m) throw InvalidArgument("fit_gh: series is for a different m");
  const QTPoly eta = eta_m(m);
  const int eta_t = eta.t_degree();
  const long eta_q = q_degree(eta);
  const long gq = m >= 2 ? eta_q - 2 : 0;
  bool order_limited = false;
  std::string attempted;
  for (int d = 0; d <= opts.max_h_degree; ++d) {
    const int raw_gt = d + eta_t - static_cast<int>(m + 1);
    if (m >= 2 && raw_gt < 0) continue;
    const int gt = std::max(0, raw_gt);
    const int k_max = gt + d + static_cast<int>(m) + 4;
    if (k_max > c.order()) {
      order_limited = true;
      break;
    }
    attempted += (attempted.empty() ? "" : ", ") + std::string("deg_t h=") + std::to_string(d) +
                 "/deg_t g=" + std::to_string(gt);
    // Unknowns: h_1..h_d, then g_{k,p} for 0 <= k <= gt, 0 <= p <= gq.
    const std::size_t n_h = static_cast<std::size_t>(d);
    const std::size_t stride = static_cast<std::size_t>(gq + 1);
    const std::size_t cols = n_h + static_cast<std::size_t>(gt + 1) * stride;
    const TSeries prod = c.table().truncated(k_max) * eta.to_series(k_max);
    std::vector<SparseRow<Rational>> rows;
    std::vector<Rational> rhs;
    for (int k = 0; k <= k_max; ++k) {
      std::set<long> exps;
      for (int i = 0; i <= std::min(k, d); ++i) {
        for (const auto& [e, v] : prod[k - i].terms()) exps.insert(to_long(e));
      }
      if (k <= gt) {
        for (long p = 0; p <= gq; ++p) exps.insert(p);
      }
      for (long e : exps) {
        // coefficient of t^k q^e in prod * h - g
        SparseRow<Rational> row;
        for (int i = 1; i <= std::min(k, d); ++i) {
          Rational v = prod[k - i].coeff(Rational(e));
          if (v != 0) row.emplace_back(static_cast<std::size_t>(i - 1), v);
        }
        if (k <= gt && e >= 0 && e <= gq) {
          row.emplace_back(n_h + static_cast<std::size_t>(k) * stride + static_cast<std::size_t>(e), Rational(-1));
        }
        Rational b = -prod[k].coeff(Rational(e));
        if (row.empty()) {
          if (b != 0) {
            row.clear();
          } else {
            continue;
          }
        }
        rows.push_back(std::move(row));
        rhs.push_back(b);
      }
    }
    LinearSolution sol;
    try {
      sol = solve_sparse(rows, rhs, cols);
    } catch (const NoSolution&) {
      continue;
    }
    std::vector<Rational> hv(n_h + 1);
    hv[0] = 1;
    for (std::size_t i = 0; i < n_h; ++i) hv[i + 1] = sol.particular[i];
    QTPoly g;
    for (int k = 0; k <= gt; ++k) {
      QLaurent coeff;
      for (long p = 0; p <= gq; ++p) {
        coeff.add_term(sol.particular[n_h + static_cast<std::size_t>(k) * stride + static_cast<std::size_t>(p)],
                       Rational(p));
      }
      g += QTPoly::monomial(coeff, k);
    }
    GHPair candidate = reduce_and_normalize({g, UPoly(std::move(hv))});
    if (!verify_functional_eq(m, candidate)) continue;
    if (!(expand_gh(m, candidate, c.order()) == c.table())) continue;
    return candidate;
  }
  std::string why = order_limited ? "series order " + std::to_string(c.order()) + " too small to continue"
                                  : "degree cap " + std::to_string(opts.max_h_degree) + " reached";
  throw FitFailed("no (g, h) for m = " + std::to_string(m) + " (" + why + "); attempted " +
                  (attempted.empty() ? std::string("nothing") : attempted));
}

GHPair fit_gh(long m, const FitOptions& opts) {
  int order = 16;
  for (;;) {
    try {
      return fit_gh(m, cm_series_cs(m, order), opts);
    } catch (const FitFailed& e) {
      const int needed = 2 * opts.max_h_degree + static_cast<int>(2 * m) + 8;
      if (order >= needed) throw;
      order = std::min(order * 2, needed);
    }
  }
}

GHDegrees gh_degrees(long m, const GHPair& gh) {
  const QTPoly eta = eta_m(m);
  GHDegrees d;
  d.q_degree_g = q_degree(gh.g);
  d.q_degree_eta = q_degree(eta);
  d.rational_t_degree = gh.g.t_degree() - gh.h.degree() - eta.t_degree();
  return d;
}

FactoredRatQT zeta_finite_set(long n, bool regular) {
  if (n < 0) throw InvalidArgument("finite set size must be non-negative");
  if (regular) {
    QTPoly one_plus_t = QTPoly(1) + QTPoly::monomial(QLaurent(1), 1);
    QTPoly num(1);
    for (long i = 0; i < n; ++i) num = num * one_plus_t;
    return {num, {}};
  }
  if (n == 0) return {QTPoly(1), {}};
  return {QTPoly(1), {{Rational(0), 1, static_cast<int>(n)}}};
}

TSeries zeta_direct_sum(const std::vector<Sl2Decomposition>& parts, int order) {
  TSeries out = TSeries::one(order);
  for (const auto& part : parts) {
    for (const auto& [m, mult] : part.parts()) {
      TSeries z = zeta_vm_closed(m).expand(order);
      for (BigInt k = 0; k < mult; ++k) out = out * z;
    }
  }
  return out;
}

}  // namespace bzeta
