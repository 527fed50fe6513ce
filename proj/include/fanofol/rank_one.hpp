#pragma once

#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "fanofol/bundle.hpp"
#include "fanofol/report.hpp"

namespace fanofol {

enum class SingularityClass { smooth, klt_fano, numerically_trivial_canonical_lc, other };

inline const char* to_string(SingularityClass s) {
  switch (s) {
    case SingularityClass::smooth: return "smooth";
    case SingularityClass::klt_fano: return "klt-fano";
    case SingularityClass::numerically_trivial_canonical_lc: return "numerically-trivial-canonical-lc";
    case SingularityClass::other: return "other";
  }
  return "?";
}

inline SingularityClass singularity_class_from_string(const std::string& s) {
  if (s == "smooth") return SingularityClass::smooth;
  if (s == "klt-fano") return SingularityClass::klt_fano;
  if (s == "numerically-trivial-canonical-lc") return SingularityClass::numerically_trivial_canonical_lc;
  if (s == "other") return SingularityClass::other;
  throw ParseError("unknown singularity class '" + s + "'");
}

/// Base (Z, O_Z(1)) of a generalized cone. Only the numbers that enter the
/// cone formulas are carried; no geometry of Z is modelled.
struct PolarizedBase {
  Int dim = 1;
  bool is_projective_space = false;
  SingularityClass singularity = SingularityClass::other;
  std::string label;

  static PolarizedBase projective_space(Int k) {
    return {k, true, SingularityClass::smooth, "P^" + std::to_string(k)};
  }

  void validate() const {
    if (dim < 1) throw DomainError("polarized base must have positive dimension");
    if (is_projective_space && singularity != SingularityClass::smooth)
      throw DomainError("a projective-space base is smooth");
  }

  friend bool operator==(const PolarizedBase&, const PolarizedBase&) = default;
};

enum class ConeSingularities { smooth, klt, lc, unknown };

inline const char* to_string(ConeSingularities s) {
  switch (s) {
    case ConeSingularities::smooth: return "smooth";
    case ConeSingularities::klt: return "klt";
    case ConeSingularities::lc: return "lc";
    case ConeSingularities::unknown: return "unknown";
  }
  return "?";
}

/// Normal generalized cone over (Z, O_Z(m)) with vertex P^{r'-1}: the
/// contraction of P(O^{r'}) inside P(O_Z(m) + O_Z^{r'}). Its class group
/// (for Picard-rank-one bases) is generated by the Cartier class H = mu_* Lambda.
class GeneralizedCone {
 public:
  GeneralizedCone(PolarizedBase base, Int m, Int vertex_rank)
      : base_(std::move(base)), m_(m), vertex_rank_(vertex_rank) {
    base_.validate();
    if (m_ < 1) throw DomainError("cone polarization multiple m must be >= 1");
    if (vertex_rank_ < 1) throw DomainError("cone vertex rank r' must be >= 1");
  }

  const PolarizedBase& base() const { return base_; }
  Int m() const { return m_; }
  Int vertex_rank() const { return vertex_rank_; }
  Int dim() const { return base_.dim + vertex_rank_; }

  /// The cone over (P^k, O(1)) is P^{k+r'} itself.
  bool is_smooth() const { return base_.is_projective_space && m_ == 1; }

  ConeSingularities singularities() const {
    if (is_smooth()) return ConeSingularities::smooth;
    switch (base_.singularity) {
      case SingularityClass::smooth:
        return base_.is_projective_space ? ConeSingularities::klt : ConeSingularities::unknown;
      case SingularityClass::klt_fano: return ConeSingularities::klt;
      case SingularityClass::numerically_trivial_canonical_lc: return ConeSingularities::lc;
      case SingularityClass::other: return ConeSingularities::unknown;
    }
    return ConeSingularities::unknown;
  }

  /// Resolution P(O(m) + O^{r'}) over the base, available when the base is P^k.
  BundleVariety resolution() const {
    if (!base_.is_projective_space) throw DomainError("cone resolution is only modelled over P^k");
    return BundleVariety(base_.dim, m_, std::vector<Int>(static_cast<std::size_t>(vertex_rank_), 0));
  }

  std::string str() const {
    return "cone over (" + base_.label + ",O(" + std::to_string(m_) + ")) vertex P^" +
           std::to_string(vertex_rank_ - 1);
  }

  friend bool operator==(const GeneralizedCone&, const GeneralizedCone&) = default;

 private:
  PolarizedBase base_;
  Int m_;
  Int vertex_rank_;
};

/// P(1, a_1, ..., a_n) with 1 <= a_1 <= ... <= a_n and gcd(a_1..a_n) = 1.
/// H = {x_0 = 0} generates the class group. All weights one is P^n.
class WeightedProjectiveSpace {
 public:
  explicit WeightedProjectiveSpace(std::vector<Int> weights) : w_(std::move(weights)) {
    if (w_.size() < 2) throw DomainError("weighted projective space needs at least two weights");
    if (w_.front() != 1) throw DomainError("first weight must be 1");
    Int g = 0;
    for (std::size_t i = 1; i < w_.size(); ++i) {
      if (w_[i] < 1) throw DomainError("weights must be positive");
      if (w_[i] < w_[i - 1]) throw DomainError("weights must be sorted ascending");
      g = std::gcd(g, w_[i]);
    }
    if (g != 1) throw DomainError("gcd(a_1,...,a_n) must be 1");
  }

  static WeightedProjectiveSpace projective_space(Int n) {
    return WeightedProjectiveSpace(std::vector<Int>(static_cast<std::size_t>(n + 1), 1));
  }

  const std::vector<Int>& weights() const { return w_; }
  Int dim() const { return static_cast<Int>(w_.size()) - 1; }
  /// a_i for 1 <= i <= n.
  Int a(Int i) const { return w_.at(static_cast<std::size_t>(i)); }
  Int a_max() const { return w_.back(); }
  bool is_projective_space() const { return a_max() == 1; }

  std::string str() const {
    std::string s = "P(";
    for (std::size_t i = 0; i < w_.size(); ++i) s += (i ? "," : "") + std::to_string(w_[i]);
    return s + ")";
  }

  friend bool operator==(const WeightedProjectiveSpace&, const WeightedProjectiveSpace&) = default;

 private:
  std::vector<Int> w_;
};

using RankOneVariety = std::variant<GeneralizedCone, WeightedProjectiveSpace>;

/// s*H on a variety whose class group is Z*H.
struct RankOneClass {
  Rational s;
  friend bool operator==(const RankOneClass&, const RankOneClass&) = default;
};

inline Int cartier_index(const WeightedProjectiveSpace& w) {
  Int l = 1;
  for (Int i = 1; i <= w.dim(); ++i) l = std::lcm(l, w.a(i));
  return l;
}
inline Int cartier_index(const GeneralizedCone&) { return 1; }
inline Int cartier_index(const RankOneVariety& v) {
  return std::visit([](const auto& x) { return cartier_index(x); }, v);
}

/// eps(H) at a general smooth point.
inline Rational seshadri_H(const WeightedProjectiveSpace& w) { return Rational(BigInt(1), BigInt(w.a_max())); }
inline Rational seshadri_H(const GeneralizedCone&) { return Rational(1); }
inline Rational seshadri_H(const RankOneVariety& v) {
  return std::visit([](const auto& x) { return seshadri_H(x); }, v);
}

/// eps(s*H) = s * eps(H) for s >= 0.
template <class V>
Rational seshadri(const V& v, const RankOneClass& d) {
  if (d.s.sign() < 0) throw DomainError("Seshadri constant needs a nef class");
  return d.s * seshadri_H(v);
}

struct IndexPair {
  Rational gen_index;
  Rational fano_index;
};

/// On a class group Z*H every ample Cartier class is a positive multiple of
/// ind*H, so both indices equal s/ind.
template <class V>
IndexPair index_pair(const V& v, const RankOneClass& d) {
  if (d.s.sign() <= 0) throw DomainError("index needs an ample class, got s = " + d.s.str());
  Rational t = d.s / Rational(cartier_index(v));
  return {t, t};
}

/// mu_* on the resolution of a cone: Lambda -> H, pi^*A -> H/m.
inline RankOneClass cone_pushforward(const BundleVariety& xb, const Class2& d) {
  if (!xb.all_b_zero()) throw DomainError("cone pushforward needs all b_i = 0, got " + xb.str());
  return {d.beta + d.gamma / Rational(xb.m())};
}

struct ConeFoliationInvariants {
  RankOneClass anticanonical;
  InvariantReport report;
  ConeSingularities singularities;
};

/// Invariants of the foliation induced on the cone Y by a base foliation with
/// K = d*O_Z(1): -K_F = (r' - d/m) H, and iota = hat-iota = eps(-K_F).
inline ConeFoliationInvariants cone_foliation_invariants(const GeneralizedCone& y, Int d) {
  if (d >= y.m() * y.vertex_rank()) {
    throw NotFanoError("d = " + std::to_string(d) + " >= m*r' = " + std::to_string(y.m() * y.vertex_rank()) +
                       ": anticanonical class not ample");
  }
  RankOneClass k{Rational(y.vertex_rank()) - Rational(BigInt(d), BigInt(y.m()))};
  auto [gen, fano] = index_pair(y, k);
  InvariantReport r;
  r.gen_index = gen;
  r.fano_index = fano;
  r.seshadri_antican = seshadri(y, k);
  r.seshadri_index_polarization = gen * seshadri_H(y);
  r.positivity = {true, true, true, true};
  return {k, r, y.singularities()};
}

}  // namespace fanofol
