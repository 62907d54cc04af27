#include "bzeta/sphere.hpp"

#include <cstdlib>

#include "bzeta/errors.hpp"
#include "bzeta/zeta.hpp"

namespace bzeta {

namespace {

QRational qpow(long a) { return QRational(QLaurent::q_power(Rational(a))); }

// sum_{k>=0} k^d x^k
QRational moment_sum(int d, const QRational& x) {
  const QRational one(1);
  const QRational u = one - x;
  switch (d) {
    case 0: return one / u;
    case 1: return x / (u * u);
    case 2: return x * (one + x) / (u * u * u);
    default: throw BudgetExceeded("s-degree above 2 in a formal sum");
  }
}

// sum_{k>=0} (k+1)^r x^k
QRational shifted_moment_sum(int r, const QRational& x) {
  const QRational one(1);
  const QRational u = one - x;
  switch (r) {
    case 0: return one / u;
    case 1: return one / (u * u);
    case 2: return (one + x) / (u * u * u);
    default: throw BudgetExceeded("s-degree above 2 in a formal sum");
  }
}

std::string describe(const QRational& c, int d, long a) {
  return "(" + c.to_string() + ") s^" + std::to_string(d) + " q^(" + std::to_string(a) + " s)";
}

void require_summable(const SExpr& e) {
  for (const auto& [key, c] : e.terms()) {
    if (key.second == 0) throw DivergentSum("infinite sum over the s-constant term " + describe(c, key.first, 0));
  }
}

// sum_{i >= s+1} e(i)
SExpr tail_sum(const SExpr& e) {
  require_summable(e);
  SExpr out;
  for (const auto& [key, c] : e.terms()) {
    const auto [d, a] = key;
    const QRational x = qpow(a);
    // x^{s+1} sum_k (k + s + 1)^d x^k, expanded in powers of s
    for (int p = 0; p <= d; ++p) {
      QRational coeff = c * x * QRational(Rational(binomial(d, p))) * shifted_moment_sum(d - p, x);
      out += SExpr::term(coeff, p, a);
    }
  }
  return out;
}

// sum_{i=0}^{s} e(i)
SExpr head_sum(const SExpr& e) {
  SExpr summable;
  SExpr out;
  for (const auto& [key, c] : e.terms()) {
    const auto [d, a] = key;
    if (a != 0) {
      summable += SExpr::term(c, d, a);
      continue;
    }
    // Faulhaber: sum_{i=0}^s 1 = s + 1, sum_{i=0}^s i = (s^2 + s)/2
    if (d == 0) {
      out += SExpr::term(c, 1, 0) + SExpr::term(c, 0, 0);
    } else if (d == 1) {
      QRational half = c * QRational(make_rational(1, 2));
      out += SExpr::term(half, 2, 0) + SExpr::term(half, 1, 0);
    } else {
      throw BudgetExceeded("finite sum would raise the s-degree above 2");
    }
  }
  if (!summable.is_zero()) out += SExpr(full_sum(summable)) - tail_sum(summable);
  return out;
}

Rational abs_value(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Rational certificate_threshold() { return make_rational(BigInt(1), BigInt("1000000000000")); }

// Rigorous bound on sum_{s >= n} |c| s^d r^s for 0 < r < 1, from the ratio
// of consecutive terms being at most ((n+1)/n)^d r once s >= n.
Rational tail_bound(const Rational& c_abs, int d, const Rational& r, long n) {
  const Rational ratio = pow(make_rational(n + 1, n), static_cast<long>(d)) * r;
  if (ratio >= 1) throw InvalidArgument("tail ratio is not below 1; take more terms");
  return c_abs * pow(Rational(n), static_cast<long>(d)) * pow(r, n) / (Rational(1) - ratio);
}

NumericCertificate certify_half(const SExpr& half, const Rational& point, const Rational& q_label, long terms) {
  NumericCertificate cert;
  cert.q = q_label;
  cert.terms = terms;
  for (long s = 0; s < terms; ++s) cert.partial += half.eval(s, point);
  cert.expected = full_sum(half).eval_at(point);
  for (const auto& [key, c] : half.terms()) {
    const Rational r = abs_value(pow(point, key.second));
    cert.tail_bound += tail_bound(abs_value(c.eval_at(point)), key.first, r, terms);
  }
  cert.ok = abs_value(cert.partial - cert.expected) <= cert.tail_bound && cert.tail_bound < certificate_threshold();
  return cert;
}

}  // namespace

SExpr::SExpr(const QRational& constant) { add_term(constant, 0, 0); }

SExpr SExpr::term(const QRational& coeff, int s_degree, long slope) {
  SExpr out;
  out.add_term(coeff, s_degree, slope);
  return out;
}

SExpr SExpr::q_int_linear(long k, long c) {
  const QRational inv = QRational(1) / (qpow(1) - qpow(-1));
  return term(qpow(c) * inv, 0, k) - term(qpow(-c) * inv, 0, -k);
}

void SExpr::add_term(const QRational& c, int d, long a) {
  if (c.is_zero()) return;
  if (d < 0 || d > kMaxDegree) throw BudgetExceeded("s-degree " + std::to_string(d) + " exceeds the cap of 2");
  auto [it, inserted] = terms_.try_emplace({d, a}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SExpr& SExpr::operator+=(const SExpr& o) {
  for (const auto& [key, c] : o.terms_) add_term(c, key.first, key.second);
  return *this;
}

SExpr& SExpr::operator-=(const SExpr& o) {
  for (const auto& [key, c] : o.terms_) add_term(-c, key.first, key.second);
  return *this;
}

SExpr SExpr::operator-() const {
  SExpr out;
  for (const auto& [key, c] : terms_) out.add_term(-c, key.first, key.second);
  return out;
}

SExpr operator*(const SExpr& a, const SExpr& b) {
  SExpr out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
  }
  return out;
}

SExpr SExpr::slope_part(int sign) const {
  SExpr out;
  for (const auto& [key, c] : terms_) {
    if ((sign < 0 && key.second < 0) || (sign > 0 && key.second > 0) || (sign == 0 && key.second == 0)) {
      out.add_term(c, key.first, key.second);
    }
  }
  return out;
}

Rational SExpr::eval(long s, const Rational& q) const {
  Rational total = 0;
  for (const auto& [key, c] : terms_) total += c.eval_at(q) * pow(Rational(s), static_cast<long>(key.first)) * pow(q, key.second * s);
  return total;
}

std::string SExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (key.first == 1) out += " s";
    if (key.first > 1) out += " s^" + std::to_string(key.first);
    if (key.second != 0) out += " q^(" + std::to_string(key.second) + "s)";
  }
  return out;
}

SExpr partial_sum(const SExpr& e, SumRange range) {
  switch (range) {
    case SumRange::from_0_to_s: return head_sum(e);
    case SumRange::from_splus1_to_inf: return tail_sum(e);
    case SumRange::from_0_to_sminus1: return head_sum(e) - e;
    case SumRange::all_s_from_0: return SExpr(full_sum(e));
  }
  throw InvalidArgument("unknown summation range");
}

QRational full_sum(const SExpr& e) {
  require_summable(e);
  QRational total;
  for (const auto& [key, c] : e.terms()) total += c * moment_sum(key.first, qpow(key.second));
  return total;
}

SphereDims sphere_dims() {
  SphereDims d;
  d.dim = QRational(1) / (QRational(1) - qpow(-2));
  d.dim_prime = full_sum(SExpr::q_int_linear(2, 1));
  return d;
}

QRational even_part_zeta_at_pm1(long m) {
  if (m < 0 || m % 2 == 0) throw InvalidArgument("even part at t = +-1 needs odd m (even m has a pole at t = 1)");
  const FactoredRatQT z = zeta_vm_closed(m);
  return (z.eval_t(1) + z.eval_t(-1)) * QRational(make_rational(1, 2));
}

SExpr sphere_merged_summand(int k) {
  const SExpr f = SExpr::q_int_linear(2, 1);  // dim' V_{2s}
  const SExpr g = SExpr::q_int_linear(4, 1);  // dim' V_{4i}, summed over i <= s gives dim' S^2(V_{2s})
  switch (k) {
    case 1: return f;
    case 2:
      // sum_s dim' S^2(V_{2s}) + sum_{s < s'} f(s) f(s')
      return partial_sum(g, SumRange::from_0_to_s) + f * partial_sum(f, SumRange::from_splus1_to_inf);
    case 3: {
      const SExpr below = partial_sum(f, SumRange::from_0_to_sminus1);
      const SExpr above = partial_sum(f, SumRange::from_splus1_to_inf);
      // S^2(V_{2s}) (x) V_{2s'} with s' != s, and V_{2s''} (x) V_{2s} (x) V_{2s'} with s'' < s < s'
      return partial_sum(g, SumRange::from_0_to_s) * (below + above) + f * below * above;
    }
    default: throw InvalidArgument("merged summands exist for k = 1, 2, 3");
  }
}

QRational sphere_zeta_coeff(int k) {
  switch (k) {
    case 0: return QRational(1);
    case 1:
    case 2: return full_sum(sphere_merged_summand(k));
    case 3: return even_part_zeta_at_pm1(3) + full_sum(sphere_merged_summand(3));
    default: throw InvalidArgument("sphere zeta coefficients are available for k = 0..3");
  }
}

NumericCertificate certify_sphere_dim(const Rational& q0, long terms) {
  if (abs_value(q0) <= 1) throw InvalidArgument("the sphere dimension converges only for |q| > 1");
  if (terms < 1) throw InvalidArgument("need at least one term");
  NumericCertificate cert;
  cert.q = q0;
  cert.terms = terms;
  const Rational qinv = Rational(1) / q0;
  for (long s = 0; s < terms; ++s) {
    // q^{-2s(s+1)} (2s+1)_q
    Rational qint = (pow(q0, 2 * s + 1) - pow(qinv, 2 * s + 1)) / (q0 - qinv);
    cert.partial += pow(qinv, 2 * s * (s + 1)) * qint;
  }
  cert.expected = Rational(1) / (Rational(1) - qinv * qinv);
  // |term_s| <= (2s+1) |q|^{-2 s^2}; consecutive ratio of the bound is at most
  // (2N+3)/(2N+1) |q|^{-(4N+2)} for s >= N.
  const Rational aq = abs_value(q0);
  const long n = terms;
  const Rational ratio = make_rational(2 * n + 3, 2 * n + 1) * pow(aq, -(4 * n + 2));
  cert.tail_bound = Rational(2 * n + 1) * pow(aq, -2 * n * n) / (Rational(1) - ratio);
  cert.ok = abs_value(cert.partial - cert.expected) <= cert.tail_bound && cert.tail_bound < certificate_threshold();
  return cert;
}

std::pair<NumericCertificate, NumericCertificate> certify_merged_sum(const SExpr& e, const Rational& q0, long terms) {
  if (abs_value(q0) <= 1) throw InvalidArgument("certificate needs |q0| > 1");
  if (terms < 1) throw InvalidArgument("need at least one term");
  require_summable(e);
  return {certify_half(e.slope_part(-1), q0, q0, terms),
          certify_half(e.slope_part(1), Rational(1) / q0, q0, terms)};
}

}  // namespace bzeta
