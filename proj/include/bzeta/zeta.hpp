#pragma once

#include <string>
#include <vector>

#include "bzeta/factored.hpp"
#include "bzeta/qtpoly.hpp"
#include "bzeta/sl2.hpp"
#include "bzeta/tseries.hpp"
#include "bzeta/upoly.hpp"

namespace bzeta {

/// Generating function c_m(t, q) = sum_{j,p} c_m^j_p t^j q^p of the
/// multiplicities of V_p in S^j(V_m), known through t^order.
class CmSeries {
 public:
  CmSeries(long m, TSeries table);

  long m() const { return m_; }
  int order() const { return table_.order(); }
  const TSeries& table() const { return table_; }
  /// Multiplicity of V_p in S^j(V_m).
  Rational multiplicity(int j, long p) const { return table_[j].coeff(Rational(p)); }

  /// Support of the t^j coefficient is {jm, jm-2, ..., >= 0} and all
  /// coefficients are non-negative integers.
  bool is_valid() const;

  friend bool operator==(const CmSeries& a, const CmSeries& b) { return a.m_ == b.m_ && a.table_ == b.table_; }

 private:
  long m_;
  TSeries table_;
};

/// Numerator g(t, q) and denominator factor h(t) of c_m = g / (h eta_m).
struct GHPair {
  QTPoly g;
  UPoly h;

  friend bool operator==(const GHPair& a, const GHPair& b) { return a.g == b.g && a.h == b.h; }
};

/// zeta_t(V_m): the sl_{m+1} product with m+1 factors.
FactoredRatQT zeta_vm_closed(long m);

CmSeries cm_series_cs(long m, int order);
/// (q c_m(t,q) - q^-1 c_m(t,q^-1)) / (q - q^-1), coefficientwise in t.
TSeries zeta_from_cm(const CmSeries& c);
/// Strictly positive q-part of (q - q^-1) z, divided by q. Throws
/// InvalidArgument when z is not the zeta function of some V_m.
CmSeries cm_from_zeta(long m, const TSeries& z);
/// c_m from c_{m-2} via the inductive formula, every 1/(1 - x) expanded as a
/// power series in t.
CmSeries cm_recursion_step(long m, const CmSeries& prev, int order);
/// c_m from c_0 or c_1 by repeated recursion steps.
CmSeries cm_series_recursive(long m, int order);

/// prod_{i=1}^{m/2} (1 - q^{2i} t) for even m, prod_{i=0}^{(m-1)/2} (1 - q^{2i+1} t) for odd m.
QTPoly eta_m(long m);
/// The g/h functional equation, cleared of the q - q^-1 and (for even m) 1 - t denominators.
bool verify_functional_eq(long m, const GHPair& gh);
/// Expansion of g / (h eta_m).
TSeries expand_gh(long m, const GHPair& gh, int order);

struct FitOptions {
  int max_h_degree = 40;
};

/// Solve c h eta_m = g for polynomial g, h over the rationals with
/// deg_q g = deg_q eta_m - 2 and the t-degrees tied to the rational t-degree
/// -(m+1); the degree of h is searched upwards. Throws FitFailed.
GHPair fit_gh(long m, const CmSeries& c, const FitOptions& opts = {});
/// As above, computing c_m by Cayley-Sylvester to whatever order is needed.
GHPair fit_gh(long m, const FitOptions& opts = {});

/// Degrees of a fitted pair: highest q-power of g and the rational t-degree
/// deg_t g - deg_t h - deg_t eta_m.
struct GHDegrees {
  long q_degree_g = 0;
  long q_degree_eta = 0;
  long rational_t_degree = 0;
};
GHDegrees gh_degrees(long m, const GHPair& gh);

/// (1/(1-t))^n, or (1+t)^n when only regular points are counted.
FactoredRatQT zeta_finite_set(long n, bool regular);

/// Product of zeta_t(V_m)^mult over all parts.
TSeries zeta_direct_sum(const std::vector<Sl2Decomposition>& parts, int order);

}  // namespace bzeta
