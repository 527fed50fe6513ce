#pragma once

#include "fanofol/foliation.hpp"
#include "fanofol/report.hpp"

namespace fanofol {

namespace detail {

inline InvariantReport bundle_invariants(const BundleVariety& x, const Class2& antican) {
  InvariantReport r;
  r.positivity = classify_divisor(x, antican);
  if (r.positivity.big) {
    const auto gi = generalized_index_bundle(x, antican);
    r.gen_index = gi.value;
    r.seshadri_index_polarization = gi.value * seshadri_polarization(x).epsilon;
  }
  if (r.positivity.ample && antican.is_integral()) r.fano_index = fano_index_bundle(x, antican);
  // eps(-K_F) is only known when -K_F is a multiple of the distinguished H_0.
  const auto h0 = seshadri_polarization(x);
  if (h0.h.beta.sign() != 0) {
    const Rational t = antican.beta / h0.h.beta;
    if (t.sign() >= 0 && t * h0.h == antican) r.seshadri_antican = t * h0.epsilon;
  }
  return r;
}

template <class V>
InvariantReport rank_one_invariants(const V& v, const Rational& s) {
  InvariantReport r;
  const int sg = s.sign();
  r.positivity = {sg >= 0, sg > 0, sg >= 0, sg > 0};
  if (sg >= 0) r.seshadri_antican = seshadri(v, RankOneClass{s});
  if (sg > 0) {
    const auto ip = index_pair(v, RankOneClass{s});
    r.gen_index = ip.gen_index;
    r.fano_index = ip.fano_index;
    // witness polarization is the generator of the ample Cartier classes
    r.seshadri_index_polarization = ip.gen_index * Rational(cartier_index(v)) * seshadri_H(v);
  }
  return r;
}

}  // namespace detail

/// Recomputes every invariant of -K_F from the descriptor.
inline InvariantReport compute_invariants(const FoliationDescriptor& f) {
  return std::visit(
      Overloaded{[&](const BundleVariety& x) { return detail::bundle_invariants(x, f.anticanonical_class()); },
                 [&](const GeneralizedCone& y) { return detail::rank_one_invariants(y, f.anticanonical_s()); },
                 [&](const WeightedProjectiveSpace& w) { return detail::rank_one_invariants(w, f.anticanonical_s()); },
                 [](const PolarizedBase&) { return InvariantReport{}; }},
      f.ambient);
}

}  // namespace fanofol
