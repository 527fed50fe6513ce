#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "fanofol/synthesis.hpp"

namespace fanofol {

// Builders for the named example families. Record ids are stable strings so
// catalogs and tables are reproducible.

inline ExampleRecord hirzebruch_record(Int a) {
  return make_record("hirzebruch:a" + std::to_string(a), std::nullopt, "hirzebruch", hirzebruch_foliation(a));
}

/// Weights (1,1,1,m,...,m) with n coordinates after x_0, n >= 3.
inline ExampleRecord wps_case1_record(Int n, Int m) {
  if (n < 3) throw DomainError("weighted case 1 needs n >= 3");
  std::vector<Int> w{1, 1, 1};
  w.resize(static_cast<std::size_t>(n + 1), m);
  return make_record("wps1:n" + std::to_string(n) + ":m" + std::to_string(m), std::nullopt, "wps1",
                     wps_coordinate_foliation(WeightedProjectiveSpace(w), 1));
}

/// Weights (1,m',...,m',m), gcd(m',m) = 1, m' <= m, n >= 3.
inline ExampleRecord wps_case2_record(Int n, Int mp, Int m) {
  if (n < 3) throw DomainError("weighted case 2 needs n >= 3");
  std::vector<Int> w(static_cast<std::size_t>(n), mp);
  w.front() = 1;
  w.push_back(m);
  return make_record("wps2:n" + std::to_string(n) + ":mp" + std::to_string(mp) + ":m" + std::to_string(m),
                     std::nullopt, "wps2", wps_coordinate_foliation(WeightedProjectiveSpace(w), 1));
}

/// Surface P(1,a_1,a_2); case 3 projects to x_1, case 4 to x_2.
inline ExampleRecord wps_surface_record(Int a1, Int a2, Int j) {
  const std::string branch = j == 1 ? "wps3" : "wps4";
  return make_record(branch + ":a" + std::to_string(a1) + ":" + std::to_string(a2), std::nullopt, branch,
                     wps_coordinate_foliation(WeightedProjectiveSpace({1, a1, a2}), j));
}

inline ExampleRecord mixed_record(Int r) {
  return make_record("mixed:r" + std::to_string(r), std::nullopt, "mixed", mixed_index_foliation(r));
}

/// Cone over (P^{n-r+1}, O(m)) with vertex P^{r-2}, induced by a foliation by
/// curves of genus >= 2 with K = d*O(1), 0 < d < m(r-1).
inline ExampleRecord rc_genus_record(Int n, Int r, Int m, Int d) {
  const GeneralizedCone y(PolarizedBase::projective_space(n - r + 1), m, r - 1);
  auto g = std::make_shared<const FoliationDescriptor>(high_genus_curve_foliation(n - r + 1, d));
  return make_record("rc_genus:n" + std::to_string(n) + ":r" + std::to_string(r) + ":m" + std::to_string(m) + ":d" +
                         std::to_string(d),
                     std::nullopt, "rc_genus", cone_foliation(y, std::move(g)));
}

/// Cone over (C x W, O(m)) with C elliptic, K_W = 0, vertex P^{r-2}: an lc
/// boundary case with eps(-K_F) = r^a - 1 and non-RC leaves.
inline ExampleRecord rc_elliptic_record(Int n, Int r, Int m) {
  const auto z = elliptic_product_base(n - r + 1);
  const GeneralizedCone y(z, m, r - 1);
  auto g = std::make_shared<const FoliationDescriptor>(elliptic_projection_foliation(z));
  return make_record("rc_elliptic:n" + std::to_string(n) + ":r" + std::to_string(r) + ":m" + std::to_string(m),
                     std::nullopt, "rc_elliptic", cone_foliation(y, std::move(g)));
}

/// Cone over (P^k, O(m)) with vertex P^{r'-1} and a base foliation with
/// K = d*O(1): transcendental rank one for d >= 1, otherwise the P^k catalog
/// member of algebraic rank max(1, -d).
inline ExampleRecord cone_table_record(Int k, Int m, Int rp, Int d) {
  const GeneralizedCone y(PolarizedBase::projective_space(k), m, rp);
  auto g = d >= 1 ? transcendental_rank1(k, d) : pn_catalog(k, std::max<Int>(1, -d), d);
  return make_record("cone:k" + std::to_string(k) + ":m" + std::to_string(m) + ":rp" + std::to_string(rp) + ":d" +
                         std::to_string(d),
                     std::nullopt, "cone", cone_foliation(y, std::make_shared<const FoliationDescriptor>(std::move(g))));
}

/// All p/q in (0, hi] with q <= q_max, in increasing order.
inline std::vector<Rational> rationals_up_to(const Rational& hi, Int q_max) {
  std::vector<Rational> out;
  for (Int q = 1; q <= q_max; ++q) {
    const Int p_max = static_cast<Int>((hi * Rational(q)).floor());
    for (Int p = 1; p <= p_max; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(BigInt(p), BigInt(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Synthesis requests exercised by the standard catalog.
inline std::vector<SynthesisRequest> standard_requests() {
  std::vector<SynthesisRequest> reqs;
  const std::vector<std::pair<Int, Int>> gi_pairs{{1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}};
  for (auto [r, n] : gi_pairs)
    for (const auto& c : rationals_up_to(Rational(r), 8)) reqs.push_back({SynthKind::generalized_index, n, r, c});
  for (Int a = 2; a <= 8; ++a)
    reqs.push_back({SynthKind::generalized_index, 2, 1, Rational(BigInt(a - 1), BigInt(a))});

  for (Int n = 3; n <= 6; ++n) {
    for (Int r = 1; r < n; ++r)
      for (const auto& c : rationals_up_to(min(Rational(r), Rational(n - 2)), 8))
        if (!c.is_integer()) reqs.push_back({SynthKind::fano_index, n, r, c});
    for (Int a = 2; a <= 8; ++a)
      reqs.push_back({SynthKind::fano_index, n, n - 1, Rational(n - 2) + Rational(BigInt(1), BigInt(a))});
  }

  for (Int n = 2; n <= 6; ++n)
    for (Int r = 1; r < n; ++r)
      for (const auto& c : rationals_up_to(Rational(r), 8)) reqs.push_back({SynthKind::seshadri, n, r, c});
  return reqs;
}

/// Every named family over its standard range plus all standard synthesis
/// requests, in a fixed order.
inline std::vector<ExampleRecord> standard_catalog() {
  std::vector<ExampleRecord> recs;
  for (Int a = 2; a <= 10; ++a) recs.push_back(hirzebruch_record(a));
  for (const auto& q : standard_requests()) recs.push_back(synthesize(q));
  for (Int n = 3; n <= 6; ++n) {
    for (Int m = 1; m <= 7; ++m) recs.push_back(wps_case1_record(n, m));
    for (Int m = 2; m <= 7; ++m)
      for (Int mp = 1; mp < m; ++mp)
        if (std::gcd(mp, m) == 1) recs.push_back(wps_case2_record(n, mp, m));
  }
  for (Int a2 = 1; a2 <= 7; ++a2)
    for (Int a1 = 1; a1 <= a2; ++a1)
      if (std::gcd(a1, a2) == 1) {
        recs.push_back(wps_surface_record(a1, a2, 1));
        recs.push_back(wps_surface_record(a1, a2, 2));
      }
  for (Int r = 2; r <= 4; ++r) recs.push_back(mixed_record(r));
  for (Int n = 3; n <= 6; ++n)
    for (Int r = 2; r < n; ++r)
      for (Int m = 1; m <= 3; ++m) {
        for (Int d = 1; d < m * (r - 1); ++d) recs.push_back(rc_genus_record(n, r, m, d));
        recs.push_back(rc_elliptic_record(n, r, m));
      }
  return recs;
}

}  // namespace fanofol
