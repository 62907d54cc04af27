#pragma once

#include <map>
#include <string>
#include <utility>

#include "bzeta/qrational.hpp"

namespace bzeta {

/// Finite sum of c * s^d * q^{a s} with c in Q(q), 0 <= d <= 2 and integer
/// slope a. Keys (d, a) are unique and coefficients nonzero.
class SExpr {
 public:
  using Key = std::pair<int, long>;  // (s-degree, slope)
  using Terms = std::map<Key, QRational>;

  static constexpr int kMaxDegree = 2;

  SExpr() = default;
  SExpr(const QRational& constant);  // NOLINT(google-explicit-constructor)
  static SExpr term(const QRational& coeff, int s_degree, long slope);
  /// The symmetric q-integer (k s + c)_q as a function of s.
  static SExpr q_int_linear(long k, long c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  SExpr& operator+=(const SExpr& o);
  SExpr& operator-=(const SExpr& o);
  SExpr operator-() const;
  friend SExpr operator+(SExpr a, const SExpr& b) { return a += b; }
  friend SExpr operator-(SExpr a, const SExpr& b) { return a -= b; }
  /// Throws BudgetExceeded when an s-degree would exceed 2.
  friend SExpr operator*(const SExpr& a, const SExpr& b);
  friend bool operator==(const SExpr& a, const SExpr& b) { return a.terms_ == b.terms_; }

  /// Terms with negative (or positive) slope only.
  SExpr slope_part(int sign) const;
  /// Exact value at integer s and rational q.
  Rational eval(long s, const Rational& q) const;

  std::string to_string() const;

 private:
  void add_term(const QRational& c, int d, long a);
  Terms terms_;
};

enum class SumRange { from_0_to_s, from_splus1_to_inf, from_0_to_sminus1, all_s_from_0 };

/// Sum of e(i) over the range (the summation index replaces s). Infinite
/// ranges are summed formally as geometric series; a term with slope 0 and a
/// nonzero coefficient in an infinite range raises DivergentSum. The
/// all_s_from_0 result is a constant SExpr.
SExpr partial_sum(const SExpr& e, SumRange range);
/// sum_{s >= 0} e(s) as a rational function of q.
QRational full_sum(const SExpr& e);

struct SphereDims {
  QRational dim;        // 1/(1 - q^-2)
  QRational dim_prime;  // sum_s (2s+1)_q, summed formally
};
SphereDims sphere_dims();

/// (zeta_1(V_m) + zeta_{-1}(V_m)) / 2 for odd m.
QRational even_part_zeta_at_pm1(long m);

/// The merged summand over s whose formal sum is the t^k coefficient
/// (k = 1, 2, 3; for k = 3 the even-part piece is added separately).
SExpr sphere_merged_summand(int k);
/// t^k coefficient of zeta_t(C_q[S^2]) for k = 0..3.
QRational sphere_zeta_coeff(int k);

/// Exact-rational certificate that a series of terms converges to a value:
/// |partial - expected| <= tail_bound.
struct NumericCertificate {
  Rational q;
  long terms = 0;
  Rational partial;
  Rational expected;
  Rational tail_bound;
  bool ok = false;
};

/// sum_{s=0}^{terms-1} q0^{-2s(s+1)} (2s+1)_{q0} against 1/(1 - q0^-2), |q0| > 1.
NumericCertificate certify_sphere_dim(const Rational& q0, long terms = 200);
/// Each slope-signed half of an SExpr, summed numerically where it converges
/// (negative slopes at q0, positive slopes at 1/q0), against the formal sum
/// of that half. Requires |q0| > 1 and no slope-0 terms.
std::pair<NumericCertificate, NumericCertificate> certify_merged_sum(const SExpr& e, const Rational& q0,
                                                                      long terms = 200);

}  // namespace bzeta
