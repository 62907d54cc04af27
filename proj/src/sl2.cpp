#include "bzeta/sl2.hpp"

#include <vector>

#include "bzeta/errors.hpp"
#include "bzeta/qcombinatorics.hpp"

namespace bzeta {

Sl2Decomposition Sl2Decomposition::irreducible(long m) {
  Sl2Decomposition d;
  d.add(m, 1);
  return d;
}

BigInt Sl2Decomposition::multiplicity(long m) const {
  auto it = parts_.find(m);
  return it == parts_.end() ? BigInt(0) : it->second;
}

void Sl2Decomposition::add(long m, const BigInt& mult) {
  if (m < 0) throw InvalidArgument("negative highest weight");
  if (mult == 0) return;
  BigInt& v = parts_[m];
  v += mult;
  if (v < 0) throw InvalidArgument("negative multiplicity in a decomposition");
  if (v == 0) parts_.erase(m);
}

BigInt Sl2Decomposition::dimension() const {
  BigInt d = 0;
  for (const auto& [m, mult] : parts_) d += mult * (m + 1);
  return d;
}

std::string Sl2Decomposition::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (it->second != 1) out += it->second.get_str() + " ";
    out += "V" + std::to_string(it->first);
  }
  return out;
}

QLaurent character(const Sl2Decomposition& d) {
  QLaurent chi;
  // (m+1)_q has exponents m, m-2, ..., -m: exactly the weights of V_m.
  for (const auto& [m, mult] : d.parts()) chi += q_int_sym(m + 1) * Rational(mult);
  return chi;
}

Sl2Decomposition peel_character(const QLaurent& chi) {
  Sl2Decomposition out;
  if (chi.is_zero()) return out;
  for (const auto& [w, n] : chi.terms()) {
    if (!is_integer(w)) throw InternalError("character with a fractional weight");
    if (!is_integer(n)) throw InternalError("character with a non-integral weight multiplicity");
  }
  if (!chi.is_palindromic()) throw InternalError("character is not Weyl-symmetric");
  const long top = chi.highest_exponent().get_num().get_si();
  for (long w = 0; w <= top; ++w) {
    Rational diff = chi.coeff(Rational(w)) - chi.coeff(Rational(w + 2));
    if (diff < 0) {
      throw InternalError("character peels to a negative multiplicity at weight " + std::to_string(w));
    }
    out.add(w, diff.get_num());
  }
  return out;
}

Sl2Decomposition cs_sym_power(long m, long j) {
  if (m < 0 || j < 0) throw InvalidArgument("cs_sym_power needs m, j >= 0");
  PartitionTable table;
  Sl2Decomposition out;
  const long top = (j * m) / 2;
  BigInt prev = 0;  // p(-1, j, m)
  for (long r = 0; r <= top; ++r) {
    BigInt cur = table.count(r, j, m);
    BigInt mult = cur - prev;
    if (mult < 0) throw InternalError("Cayley-Sylvester multiplicity is negative");
    out.add(j * m - 2 * r, mult);
    prev = cur;
  }
  return out;
}

Sl2Decomposition sym_power_weight_oracle(long m, long j, long budget) {
  if (m < 0 || j < 0) throw InvalidArgument("weight oracle needs m, j >= 0");
  if (j * m > budget) {
    throw BudgetExceeded("weight oracle budget exceeded: j*m = " + std::to_string(j * m) + " > " +
                         std::to_string(budget));
  }
  // ways[c][s]: multisets of c weights drawn from those processed so far,
  // where s indexes the weight sum shifted by j*m.
  const long span = 2 * j * m;
  std::vector<std::vector<BigInt>> ways(static_cast<std::size_t>(j + 1),
                                        std::vector<BigInt>(static_cast<std::size_t>(span + 1)));
  ways[0][static_cast<std::size_t>(j * m)] = 1;
  for (long w = m; w >= -m; w -= 2) {
    // Unbounded multiplicity of weight w: iterate counts upwards.
    for (long c = 1; c <= j; ++c) {
      for (long s = 0; s <= span; ++s) {
        long from = s - w;
        if (from < 0 || from > span) continue;
        const BigInt& src = ways[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(from)];
        if (src != 0) ways[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)] += src;
      }
    }
  }
  QLaurent chi;
  for (long s = 0; s <= span; ++s) {
    const BigInt& n = ways[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)];
    if (n != 0) chi.add_term(Rational(n), Rational(s - j * m));
  }
  return peel_character(chi);
}

Sl2Decomposition adams_sym_power(long m, long j) {
  if (m < 0 || j < 0) throw InvalidArgument("adams_sym_power needs m, j >= 0");
  const QLaurent chi = q_int_sym(m + 1);
  std::vector<QLaurent> h{QLaurent(1)};
  for (long k = 1; k <= j; ++k) {
    QLaurent acc;
    for (long i = 1; i <= k; ++i) acc += chi.q_to_power(Rational(i)) * h[static_cast<std::size_t>(k - i)];
    h.push_back(acc * make_rational(1, k));
  }
  return peel_character(h[static_cast<std::size_t>(j)]);
}

Sl2Decomposition tensor_decompose(const Sl2Decomposition& a, const Sl2Decomposition& b) {
  Sl2Decomposition out;
  for (const auto& [ma, xa] : a.parts()) {
    for (const auto& [mb, xb] : b.parts()) {
      BigInt mult = xa * xb;
      for (long c = std::abs(ma - mb); c <= ma + mb; c += 2) out.add(c, mult);
    }
  }
  return out;
}

QLaurent dimq_prime(const Sl2Decomposition& d) {
  QLaurent out;
  for (const auto& [m, mult] : d.parts()) out += q_int_sym(m + 1) * Rational(mult);
  return out;
}

QLaurent dimq(const Sl2Decomposition& d) {
  QLaurent out;
  for (const auto& [m, mult] : d.parts()) {
    Rational shift = make_rational(-m * (m + 2), 2);
    out += q_int_sym(m + 1).shifted(shift) * Rational(mult);
  }
  return out;
}

}  // namespace bzeta
