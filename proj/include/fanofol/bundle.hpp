#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "fanofol/lattice.hpp"
#include "fanofol/report.hpp"

namespace fanofol {

using Int = std::int64_t;

/// X = P(O(m) + O(-b_1) + ... + O(-b_r')) over Z = P^k, with the b_i sorted
/// descending. Divisor classes live in the (Lambda, pi^*A) basis, where
/// Lambda is tautological and A a hyperplane of the base.
class BundleVariety {
 public:
  BundleVariety(Int base_dim, Int m, std::vector<Int> b) : k_(base_dim), m_(m), b_(std::move(b)) {
    if (k_ < 1) throw DomainError("bundle base dimension must be >= 1");
    if (m_ < 1) throw DomainError("bundle twist m must be >= 1");
    if (b_.empty()) throw DomainError("bundle needs at least one negative summand");
    for (Int bi : b_)
      if (bi < 0) throw DomainError("bundle twists b_i must be >= 0");
    std::sort(b_.begin(), b_.end(), std::greater<>());
  }

  Int base_dim() const { return k_; }
  Int m() const { return m_; }
  const std::vector<Int>& b() const { return b_; }
  Int rank_prime() const { return static_cast<Int>(b_.size()); }
  Int b1() const { return b_.front(); }
  Int b_total() const { return std::accumulate(b_.begin(), b_.end(), Int{0}); }
  Int dim() const { return k_ + rank_prime(); }
  bool all_b_zero() const { return b1() == 0; }

  /// Class of the divisor E = P(sum O(-b_i)), i.e. Lambda - m*pi^*A.
  Class2 exceptional() const { return {Rational(1), Rational(-m_)}; }
  Class2 fiber_class() const { return {Rational(0), Rational(1)}; }

  std::string str() const {
    std::string s = "P(O(" + std::to_string(m_) + ")";
    for (Int bi : b_) s += "+O(" + std::to_string(-bi) + ")";
    return s + ") over P^" + std::to_string(k_);
  }

  friend bool operator==(const BundleVariety&, const BundleVariety&) = default;

 private:
  Int k_;
  Int m_;
  std::vector<Int> b_;
};

inline Cone2 nef_cone(const BundleVariety& x) {
  return Cone2({Rational(1), Rational(x.b1())}, {Rational(0), Rational(1)});
}

inline Cone2 pseff_cone(const BundleVariety& x) {
  return Cone2({Rational(1), Rational(-x.m())}, {Rational(0), Rational(1)});
}

inline Positivity classify_divisor(const BundleVariety& x, const Class2& d) {
  const auto pe = pseff_cone(x).membership(d);
  const auto nf = nef_cone(x).membership(d);
  return {pe != Membership::outside, pe == Membership::interior, nf != Membership::outside,
          nf == Membership::interior};
}

/// -K_{X/Z} = (r'+1) Lambda + (b - m) pi^*A.
inline Class2 relative_anticanonical(const BundleVariety& x) {
  return {Rational(x.rank_prime() + 1), Rational(x.b_total() - x.m())};
}

/// Decomposition cls = t*H + p_e*E + p_a*pi^*A certifying an index value.
struct IndexWitness {
  Rational t;
  Class2 h;
  Rational p_e;
  Rational p_a;

  Class2 reconstruct(const BundleVariety& x) const {
    return t * h + p_e * x.exceptional() + p_a * x.fiber_class();
  }
};

struct GeneralizedIndex {
  Rational value;
  IndexWitness witness;
};

/// Generalized index of a big class: min(beta, (m*beta+gamma)/(m+b_1+1)).
///
/// The supremum over ample Cartier H = (d, c), c >= b_1*d + 1, of the largest
/// t with D - tH pseudoeffective is attained at H = (1, b_1+1). For big but
/// not ample D the second term is always the minimum.
inline GeneralizedIndex generalized_index_bundle(const BundleVariety& x, const Class2& d) {
  if (!classify_divisor(x, d).big) throw DomainError("generalized index needs a big class, got " + d.str());
  const Rational m(x.m());
  const Rational b1p1(x.b1() + 1);
  const Rational slope_bound = (m * d.beta + d.gamma) / (m + b1p1);
  const Class2 h{Rational(1), b1p1};

  IndexWitness w;
  w.h = h;
  if (slope_bound <= d.beta) {
    w.t = slope_bound;
    w.p_e = (d.beta * b1p1 - d.gamma) / (m + b1p1);
    w.p_a = Rational(0);
  } else {
    w.t = d.beta;
    w.p_e = Rational(0);
    w.p_a = d.gamma - d.beta * b1p1;
  }
  if (w.reconstruct(x) != d || w.p_e.sign() < 0 || w.p_a.sign() < 0 || !classify_divisor(x, h).ample) {
    throw InternalError("index witness failed to reconstruct " + d.str());
  }
  return {w.t, w};
}

/// Fano index of an integral ample class: its content, since D/content is
/// primitive on an ample ray and Pic(X) is the full lattice.
inline Rational fano_index_bundle(const BundleVariety& x, const Class2& d) {
  if (!d.is_integral()) throw DomainError("Fano index needs an integral class, got " + d.str());
  if (!classify_divisor(x, d).ample) throw DomainError("Fano index needs an ample class, got " + d.str());
  return Rational(content(d));
}

struct SeshadriPolarization {
  Class2 h;
  Rational epsilon;
};

/// H_0 = Lambda + (b_1+1) pi^*A is very ample and restricts to a hyperplane
/// on the fibers, so eps(H_0) = 1.
inline SeshadriPolarization seshadri_polarization(const BundleVariety& x) {
  return {{Rational(1), Rational(x.b1() + 1)}, Rational(1)};
}

}  // namespace fanofol
