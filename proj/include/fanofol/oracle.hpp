#pragma once

#include <optional>

#include "fanofol/bundle.hpp"

namespace fanofol {

namespace detail {

using Wide = __int128;

// Same enumeration in machine integers: fractions are compared by
// cross-multiplication and never reduced. Returns nullopt when an input does
// not fit comfortably in 64 bits.
inline std::optional<Rational> oracle_fast(const Rational& beta, const Rational& slope, Int m, Int b1, Int d_max,
                                           Int c_max) {
  const BigInt lim = BigInt(1) << 40;
  for (const BigInt& v : {beta.numerator(), beta.denominator(), slope.numerator(), slope.denominator()})
    if (v >= lim || v <= -lim) return std::nullopt;
  if (c_max + m * d_max >= (Int{1} << 20)) return std::nullopt;
  const Wide bn = static_cast<Int>(beta.numerator()), bd = static_cast<Int>(beta.denominator());
  const Wide sn = static_cast<Int>(slope.numerator()), sd = static_cast<Int>(slope.denominator());
  Wide best_n = 0, best_d = 0;
  for (Int hd = 1; hd <= d_max; ++hd) {
    for (Int hc = b1 * hd + 1; hc <= c_max; ++hc) {
      Wide tn = bn, td = bd * hd;
      const Wide un = sn, ud = sd * (hc + m * hd);
      if (un * td < tn * ud) tn = un, td = ud;
      if (best_d == 0 || tn * best_d > best_n * td) best_n = tn, best_d = td;
    }
  }
  return Rational(BigInt(static_cast<Int>(best_n)), BigInt(static_cast<Int>(best_d)));
}

}  // namespace detail

/// Generalized index straight from its definition: the best t with D - tH
/// pseudoeffective, maximized over integral ample H = (d, c) with
/// 1 <= d <= d_max and b_1*d + 1 <= c <= c_max.
///
/// D - tH = (beta - td, gamma - tc) is pseudoeffective iff beta >= td and
/// gamma - tc >= -m(beta - td), so the best t for a fixed H is
/// min(beta/d, (m*beta + gamma)/(c + m*d)). Deliberately shares no code with
/// generalized_index_bundle.
inline Rational oracle_generalized_index(const BundleVariety& x, const Class2& d, Int d_max, Int c_max) {
  const Rational m(x.m());
  const Int b1 = x.b1();
  if (!(d.beta.sign() > 0 && d.gamma + m * d.beta > Rational(0)))
    throw DomainError("oracle needs a big class, got " + d.str());
  if (d_max < 1) throw DomainError("oracle needs d_max >= 1");
  if (c_max < b1 * d_max + 1) throw DomainError("oracle needs c_max >= b_1*d_max + 1");

  const Rational slope_num = m * d.beta + d.gamma;
  if (auto fast = detail::oracle_fast(d.beta, slope_num, x.m(), b1, d_max, c_max)) return *fast;
  std::optional<Rational> best;
  for (Int hd = 1; hd <= d_max; ++hd) {
    const Rational beta_bound = d.beta / Rational(hd);
    for (Int hc = b1 * hd + 1; hc <= c_max; ++hc) {
      const Rational t = min(beta_bound, slope_num / Rational(hc + x.m() * hd));
      if (!best || t > *best) best = t;
    }
  }
  return *best;
}

}  // namespace fanofol
