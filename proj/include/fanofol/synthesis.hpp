#pragma once

#include <numeric>
#include <string>

#include "fanofol/checks.hpp"

namespace fanofol {

/// Minimal l >= 1 satisfying both Case-1 inequalities, b_1 = lq-1, and the
/// surplus l(p-q)+(p-qr)+1 spread greedily over b_2..b_r (each <= b_1).
inline CaseParameters case1_parameters(Int r, Int p, Int q) {
  if (!(q < p && p < q * r)) throw DomainError("case-1 parameters need q < p < q*r");
  if (std::gcd(p, q) != 1) throw DomainError("case-1 parameters need gcd(p, q) = 1");
  constexpr Int kMaxL = 1'000'000;
  const Rational c{BigInt(p), BigInt(q)};
  for (Int l = 1; l <= kMaxL; ++l) {
    const Int surplus = l * (p - q) + (p - q * r) + 1;
    if (surplus <= 0) continue;
    const Rational ql(q * l);
    if (c > (Rational(1) - Rational(1) / ql) * Rational(r) + Rational(1) / ql) continue;
    CaseParameters cp{p, q, l, {}, "case1"};
    const Int b1 = l * q - 1;
    cp.b_list.push_back(b1);
    Int left = surplus;
    for (Int i = 2; i <= r; ++i) {
      const Int take = std::min(left, b1);
      cp.b_list.push_back(take);
      left -= take;
    }
    if (left != 0) continue;
    if (auto v = case1_violation(cp, r)) throw InternalError("case-1 certification failed: " + *v);
    return cp;
  }
  throw InternalError("no admissible l <= 10^6 for case-1 parameters");
}

namespace detail {

inline std::string request_id(const SynthesisRequest& q) {
  return std::string(to_string(q.kind)) + ":n" + std::to_string(q.n) + ":r" + std::to_string(q.r) + ":c" + q.c.str();
}

inline FoliationPtr share(FoliationDescriptor f) { return std::make_shared<const FoliationDescriptor>(std::move(f)); }

}  // namespace detail

/// Assembles a record, recomputes its invariants and runs every check. A
/// failed construction certificate is a bug in the recipe, so it throws.
inline ExampleRecord make_record(std::string id, std::optional<SynthesisRequest> request, std::string branch,
                                 FoliationDescriptor foliation, std::optional<CaseParameters> params = std::nullopt) {
  ExampleRecord rec;
  rec.id = std::move(id);
  rec.request = std::move(request);
  rec.branch = std::move(branch);
  rec.foliation = std::move(foliation);
  rec.invariants = compute_invariants(rec.foliation);
  rec.parameters = std::move(params);
  auto report = check_record(rec);
  for (const auto& c : report.checks) {
    if (c.status == CheckStatus::fail) {
      throw InternalError("record " + rec.id + " failed check " + c.name + ": " + c.detail);
    }
  }
  rec.checks = std::move(report.checks);
  return rec;
}

// Named constructions. Each returns the foliation only; records are made by
// the callers so the same construction can back several tables.

/// Fibration of the Hirzebruch surface P(O(a-1) + O), a >= 2.
inline FoliationDescriptor hirzebruch_foliation(Int a) {
  if (a < 2) throw DomainError("Hirzebruch example needs a >= 2");
  return fibration_foliation(BundleVariety(1, a - 1, {0}));
}

/// Foliation on the cone over (P^{n-r'}, O(q)), r' = ceil(c), induced by a
/// base foliation of algebraic rank r-r' with K = p*O(1), where r'-c = p/q.
inline FoliationDescriptor cone_target_foliation(Int n, Int r, const Rational& c) {
  const Int rp = static_cast<Int>(c.ceil());
  const Rational frac = Rational(rp) - c;
  const Int p = static_cast<Int>(frac.numerator());
  const Int q = static_cast<Int>(frac.denominator());
  if (n - rp < 2) throw DomainError("cone branch needs n - ceil(c) >= 2");
  const GeneralizedCone y(PolarizedBase::projective_space(n - rp), q, rp);
  auto g = (r == rp) ? transcendental_rank1(n - rp, p) : pn_catalog(n - rp, r - rp, p);
  return cone_foliation(y, detail::share(std::move(g)));
}

/// Pullback over P(O(1) + O(-(r-2))^r) -> P^{r+2} of a catalog foliation
/// with K = -r*H: -K_F is ample with Fano index 1 and generalized index r.
inline FoliationDescriptor mixed_index_foliation(Int r) {
  if (r < 2) throw DomainError("mixed example needs r >= 2");
  const BundleVariety x(r + 2, 1, std::vector<Int>(static_cast<std::size_t>(r), r - 2));
  return pullback_over_bundle(x, detail::share(pn_catalog(r + 2, r, -r)));
}

inline FoliationDescriptor case2_foliation(Int n, Int r, Int p, Int q) {
  const BundleVariety x(n - 1, q, {q - 1});
  const Int d = 2 * (q - p) - 1;
  auto g = (r == 1) ? transcendental_rank1(n - 1, d) : pn_catalog(n - 1, r - 1, d);
  return pullback_over_bundle(x, detail::share(std::move(g)));
}

namespace detail {

inline void check_request_bounds(const SynthesisRequest& q) {
  if (q.n < 2) throw UnsupportedError("need n >= 2");
  if (q.r <= 0 || q.r >= q.n) throw UnsupportedError("need 0 < r < n");
  if (q.c.sign() <= 0) throw UnsupportedError("need c > 0");
  if (q.c > Rational(q.r)) throw UnsupportedError("need c <= r (c=" + q.c.str() + ", r=" + std::to_string(q.r) + ")");
}

inline ExampleRecord pn_record(const SynthesisRequest& q) {
  const Int c = static_cast<Int>(q.c.numerator());
  return make_record(request_id(q), q, "pn", pn_catalog(q.n, q.r, -c));
}

inline ExampleRecord cone_record(const SynthesisRequest& q) {
  return make_record(request_id(q), q, "cone", cone_target_foliation(q.n, q.r, q.c));
}

}  // namespace detail

inline ExampleRecord synth_generalized_index(Int n, Int r, const Rational& c) {
  const SynthesisRequest q{SynthKind::generalized_index, n, r, c};
  detail::check_request_bounds(q);
  if (c.is_integer()) return detail::pn_record(q);
  const Int p = static_cast<Int>(c.numerator());
  const Int den = static_cast<Int>(c.denominator());
  if (n == 2) {
    if (p != den - 1) {
      throw UnsupportedError("on surfaces only c = 1 - 1/a is realized as a generalized index (c=" + c.str() +
                             "); other values c < 1 are an open problem");
    }
    return make_record(detail::request_id(q), q, "hirzebruch", hirzebruch_foliation(den));
  }
  if (p > den) {
    auto cp = case1_parameters(r, p, den);
    auto f = fibration_foliation(BundleVariety(n - r, den, cp.b_list));
    return make_record(detail::request_id(q), q, "case1", std::move(f), std::move(cp));
  }
  CaseParameters cp{p, den, 0, {den - 1}, "case2"};
  return make_record(detail::request_id(q), q, "case2", case2_foliation(n, r, p, den), std::move(cp));
}

inline ExampleRecord synth_fano_index(Int n, Int r, const Rational& c) {
  const SynthesisRequest q{SynthKind::fano_index, n, r, c};
  detail::check_request_bounds(q);
  if (c.is_integer()) return detail::pn_record(q);
  if (n >= 3 && c <= Rational(n - 2)) return detail::cone_record(q);
  // remaining: r = n-1 and n-2 < c < n-1
  const Rational excess = c - Rational(n - 2);
  if (excess.numerator() != 1) {
    throw UnsupportedError("Fano index c in (n-2, n-1) with r = n-1 is only realized for c = n-2+1/a (c=" + c.str() +
                           "); whether other values occur is open");
  }
  const Int a = static_cast<Int>(excess.denominator());
  if (n == 2) {
    const WeightedProjectiveSpace w({1, a, a + 1});
    return make_record(detail::request_id(q), q, "wps3", wps_coordinate_foliation(w, 1));
  }
  std::vector<Int> weights{1, 1, 1};
  weights.resize(static_cast<std::size_t>(n + 1), a);
  return make_record(detail::request_id(q), q, "wps1", wps_coordinate_foliation(WeightedProjectiveSpace(weights), 1));
}

inline ExampleRecord synth_seshadri(Int n, Int r, const Rational& c) {
  const SynthesisRequest q{SynthKind::seshadri, n, r, c};
  detail::check_request_bounds(q);
  if (c.is_integer()) return detail::pn_record(q);
  if (n >= 3 && c <= Rational(n - 2)) return detail::cone_record(q);
  if (n >= 3) {
    // r = n-1, n-2 < c < n-1: weights (1, m', ..., m', m) with 1 + (n-2)m'/m = c
    const Rational ratio = (c - Rational(1)) / Rational(n - 2);
    const Int mp = static_cast<Int>(ratio.numerator());
    const Int m = static_cast<Int>(ratio.denominator());
    std::vector<Int> weights(static_cast<std::size_t>(n), mp);
    weights.front() = 1;
    weights.push_back(m);
    return make_record(detail::request_id(q), q, "wps2", wps_coordinate_foliation(WeightedProjectiveSpace(weights), 1));
  }
  // n = 2, 0 < c < 1: weights (1, a_1, a_2) with a_1/a_2 = c, projection to x_2
  const WeightedProjectiveSpace w(
      {1, static_cast<Int>(c.numerator()), static_cast<Int>(c.denominator())});
  return make_record(detail::request_id(q), q, "wps4", wps_coordinate_foliation(w, 2));
}

inline ExampleRecord synthesize(const SynthesisRequest& q) {
  switch (q.kind) {
    case SynthKind::generalized_index: return synth_generalized_index(q.n, q.r, q.c);
    case SynthKind::fano_index: return synth_fano_index(q.n, q.r, q.c);
    case SynthKind::seshadri: return synth_seshadri(q.n, q.r, q.c);
  }
  throw InternalError("unreachable synthesis kind");
}

}  // namespace fanofol
