#pragma once

#include <memory>
#include <string>
#include <variant>

#include "fanofol/variety.hpp"

namespace fanofol {

struct FoliationDescriptor;
using FoliationPtr = std::shared_ptr<const FoliationDescriptor>;

// Construction recipes. Foliations are never built as sheaves; the recipe
// records how the example is obtained and is enough to recompute
// (rank, algebraic rank, K_F).
namespace recipe {
struct FibrationInduced {};
struct PullbackOverBundle {
  FoliationPtr base;
};
struct ConeInduced {
  FoliationPtr base;
};
struct CoordinateProjection {
  Int j = 1;
};
struct PnCatalogCase1 {
  Int d = 0;
};
struct PnCatalogCase2 {
  Int d_f = 1;
  Int d_g = 1;
};
struct TranscendentalRankOne {
  Int p = 1;
};
/// Algebraically integrable foliation by curves whose leaf closures are
/// curves of genus >= min_genus (>= 1, so never rationally connected).
struct CurveFamily {
  Int d = 0;
  Int min_genus = 2;
};
}  // namespace recipe

using Recipe = std::variant<recipe::FibrationInduced, recipe::PullbackOverBundle, recipe::ConeInduced,
                            recipe::CoordinateProjection, recipe::PnCatalogCase1, recipe::PnCatalogCase2,
                            recipe::TranscendentalRankOne, recipe::CurveFamily>;

inline const char* recipe_name(const Recipe& r) {
  return std::visit(Overloaded{[](const recipe::FibrationInduced&) { return "fibration"; },
                               [](const recipe::PullbackOverBundle&) { return "pullback"; },
                               [](const recipe::ConeInduced&) { return "cone"; },
                               [](const recipe::CoordinateProjection&) { return "coordinate"; },
                               [](const recipe::PnCatalogCase1&) { return "pn1"; },
                               [](const recipe::PnCatalogCase2&) { return "pn2"; },
                               [](const recipe::TranscendentalRankOne&) { return "transcendental"; },
                               [](const recipe::CurveFamily&) { return "curves"; }},
                    r);
}

enum class Tri { no, yes, unknown };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::no: return "false";
    case Tri::yes: return "true";
    case Tri::unknown: return "unknown";
  }
  return "?";
}

/// K_F in the ambient class group: Class2 on bundles, s*H on rank-one
/// varieties (and s*O_Z(1) on abstract bases).
using CanonicalClass = std::variant<Class2, RankOneClass>;

struct FoliationDescriptor {
  Variety ambient = PolarizedBase{};
  Int rank = 0;
  Int algebraic_rank = 0;
  CanonicalClass canonical;
  Recipe recipe;
  bool purely_transcendental = false;
  Tri leaf_rc = Tri::unknown;
  std::string provenance;

  void validate() const {
    const Int n = dimension(ambient);
    if (!(0 <= algebraic_rank && algebraic_rank <= rank && rank < n)) {
      throw DomainError("foliation ranks violate 0 <= r^a <= r < dim: r^a=" + std::to_string(algebraic_rank) +
                        " r=" + std::to_string(rank) + " dim=" + std::to_string(n));
    }
    if (purely_transcendental != (algebraic_rank == 0))
      throw DomainError("purely transcendental iff algebraic rank is zero");
    const bool integrable_recipe = std::holds_alternative<recipe::FibrationInduced>(recipe) ||
                                   std::holds_alternative<recipe::CoordinateProjection>(recipe);
    if (integrable_recipe && algebraic_rank != rank)
      throw DomainError("fibration and coordinate recipes are algebraically integrable");
    if (std::holds_alternative<BundleVariety>(ambient) != std::holds_alternative<Class2>(canonical))
      throw DomainError("canonical class does not match the ambient class group");
  }

  /// -K_F as a rank-one coefficient; throws on bundle ambients.
  Rational anticanonical_s() const { return -std::get<RankOneClass>(canonical).s; }
  Class2 anticanonical_class() const { return -std::get<Class2>(canonical); }
};

bool operator==(const FoliationDescriptor& a, const FoliationDescriptor& b);

namespace detail {
inline bool same_base(const FoliationPtr& a, const FoliationPtr& b) {
  if (!a || !b) return a == b;
  return *a == *b;
}
inline bool same_recipe(const Recipe& a, const Recipe& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      Overloaded{[](const recipe::FibrationInduced&, const recipe::FibrationInduced&) { return true; },
                 [](const recipe::PullbackOverBundle& x, const recipe::PullbackOverBundle& y) {
                   return same_base(x.base, y.base);
                 },
                 [](const recipe::ConeInduced& x, const recipe::ConeInduced& y) { return same_base(x.base, y.base); },
                 [](const recipe::CoordinateProjection& x, const recipe::CoordinateProjection& y) { return x.j == y.j; },
                 [](const recipe::PnCatalogCase1& x, const recipe::PnCatalogCase1& y) { return x.d == y.d; },
                 [](const recipe::PnCatalogCase2& x, const recipe::PnCatalogCase2& y) {
                   return x.d_f == y.d_f && x.d_g == y.d_g;
                 },
                 [](const recipe::TranscendentalRankOne& x, const recipe::TranscendentalRankOne& y) {
                   return x.p == y.p;
                 },
                 [](const recipe::CurveFamily& x, const recipe::CurveFamily& y) {
                   return x.d == y.d && x.min_genus == y.min_genus;
                 },
                 [](const auto&, const auto&) { return false; }},
      a, b);
}
}  // namespace detail

inline bool operator==(const FoliationDescriptor& a, const FoliationDescriptor& b) {
  return a.ambient == b.ambient && a.rank == b.rank && a.algebraic_rank == b.algebraic_rank &&
         a.canonical == b.canonical && detail::same_recipe(a.recipe, b.recipe) &&
         a.purely_transcendental == b.purely_transcendental && a.leaf_rc == b.leaf_rc &&
         a.provenance == b.provenance;
}

namespace detail {
inline FoliationDescriptor finish(FoliationDescriptor f) {
  f.validate();
  return f;
}

/// Degree of K_G for a foliation on P^k or on an abstract polarized base.
inline Int base_canonical_degree(const FoliationDescriptor& g) {
  const auto* k = std::get_if<RankOneClass>(&g.canonical);
  if (!k || !k->s.is_integer()) throw DomainError("base foliation needs an integral rank-one canonical class");
  return static_cast<Int>(k->s.numerator());
}

/// Rational connectedness of the leaf closures of the algebraic part after
/// adding r' rational fiber directions to a base foliation G.
inline Tri extended_leaf_rc(const FoliationDescriptor& g) {
  return g.purely_transcendental ? Tri::yes : g.leaf_rc;
}
}  // namespace detail

/// Foliation induced by the bundle projection: its leaves are the P^{r'} fibers.
inline FoliationDescriptor fibration_foliation(const BundleVariety& x) {
  FoliationDescriptor f;
  f.ambient = x;
  f.rank = f.algebraic_rank = x.rank_prime();
  f.canonical = -relative_anticanonical(x);
  f.recipe = recipe::FibrationInduced{};
  f.purely_transcendental = false;
  f.leaf_rc = Tri::yes;
  f.provenance = "fibers of the bundle projection";
  return detail::finish(std::move(f));
}

/// Pullback of a foliation G on the base P^k: K_F = K_{X/Z} + pi^*K_G.
inline FoliationDescriptor pullback_over_bundle(const BundleVariety& x, FoliationPtr g) {
  if (!g) throw DomainError("pullback needs a base foliation");
  if (!is_projective_space(g->ambient, x.base_dim()))
    throw DomainError("base foliation must live on P^" + std::to_string(x.base_dim()) + ", got " +
                      describe(g->ambient));
  if (g->rank >= x.base_dim()) throw DomainError("base foliation rank must be below the base dimension");
  const Int deg = detail::base_canonical_degree(*g);

  FoliationDescriptor f;
  f.ambient = x;
  f.rank = x.rank_prime() + g->rank;
  f.algebraic_rank = x.rank_prime() + g->algebraic_rank;
  f.canonical = -relative_anticanonical(x) + Class2{Rational(0), Rational(deg)};
  f.purely_transcendental = false;
  f.leaf_rc = detail::extended_leaf_rc(*g);
  f.provenance = "pullback of a base foliation along the bundle projection";
  f.recipe = recipe::PullbackOverBundle{std::move(g)};
  return detail::finish(std::move(f));
}

/// Foliation on a generalized cone induced by a foliation H on its base with
/// K_H = d*O_Z(1): -K_F = (r' - d/m) H_Y.
inline FoliationDescriptor cone_foliation(const GeneralizedCone& y, FoliationPtr g) {
  if (!g) throw DomainError("cone foliation needs a base foliation");
  const bool base_matches = y.base().is_projective_space
                                ? is_projective_space(g->ambient, y.base().dim)
                                : (std::holds_alternative<PolarizedBase>(g->ambient) &&
                                   std::get<PolarizedBase>(g->ambient) == y.base());
  if (!base_matches) throw DomainError("base foliation does not live on the cone base " + y.base().label);
  const Int d = detail::base_canonical_degree(*g);

  FoliationDescriptor f;
  f.ambient = y;
  f.rank = y.vertex_rank() + g->rank;
  f.algebraic_rank = y.vertex_rank() + g->algebraic_rank;
  f.canonical = RankOneClass{-(Rational(y.vertex_rank()) - Rational(BigInt(d), BigInt(y.m())))};
  f.purely_transcendental = false;
  f.leaf_rc = detail::extended_leaf_rc(*g);
  f.provenance = "cone over a base foliation";
  f.recipe = recipe::ConeInduced{std::move(g)};
  return detail::finish(std::move(f));
}

/// Foliations on P^n with algebraic rank r and K_F = d*H, d >= -r.
///
/// r <= n-2: linear pullback P^n -> P^{n-r} of a purely transcendental rank
/// one foliation G = O(d+r); rank r+1.
/// r = n-1: pencil [f:g] with d_f + d_g = d + n + 1, balanced degrees.
inline FoliationDescriptor pn_catalog(Int n, Int r, Int d) {
  if (r <= 0 || r >= n) throw DomainError("P^n catalog needs 0 < r < n");
  if (d < -r) throw DomainError("P^n catalog needs d >= -r (d=" + std::to_string(d) + ", r=" + std::to_string(r) + ")");
  FoliationDescriptor f;
  f.ambient = WeightedProjectiveSpace::projective_space(n);
  f.canonical = RankOneClass{Rational(d)};
  f.algebraic_rank = r;
  f.purely_transcendental = false;
  if (r <= n - 2) {
    f.rank = r + 1;
    f.recipe = recipe::PnCatalogCase1{d};
    f.leaf_rc = Tri::yes;  // algebraic part: fibers of a linear projection
    f.provenance = "linear pullback of a transcendental rank-one foliation (existence asserted)";
  } else {
    const Int total = d + n + 1;
    const Int d_f = (total + 1) / 2;
    const Int d_g = total - d_f;
    f.rank = r;
    f.recipe = recipe::PnCatalogCase2{d_f, d_g};
    f.leaf_rc = (d_f == 1 && d_g == 1) ? Tri::yes : Tri::unknown;
    f.provenance = "pencil of hypersurfaces of degrees " + std::to_string(d_f) + "," + std::to_string(d_g);
  }
  return detail::finish(std::move(f));
}

/// Purely transcendental rank-one foliation on P^k with K = p*H.
inline FoliationDescriptor transcendental_rank1(Int k, Int p) {
  if (k < 2) throw DomainError("transcendental rank-one foliation needs k >= 2");
  if (p < 1) throw DomainError("transcendental rank-one foliation needs p >= 1");
  FoliationDescriptor f;
  f.ambient = WeightedProjectiveSpace::projective_space(k);
  f.rank = 1;
  f.algebraic_rank = 0;
  f.canonical = RankOneClass{Rational(p)};
  f.recipe = recipe::TranscendentalRankOne{p};
  f.purely_transcendental = true;
  f.leaf_rc = Tri::unknown;
  f.provenance = "generic foliation by curves (existence asserted, not constructed)";
  return detail::finish(std::move(f));
}

/// Codimension-one foliation on P(1,a_1..a_n) induced by [x_0^{a_j} : x_j]:
/// -K_F = (sum over i != j of a_i) H.
inline FoliationDescriptor wps_coordinate_foliation(const WeightedProjectiveSpace& w, Int j) {
  const Int n = w.dim();
  if (j < 1 || j > n) throw DomainError("coordinate index j must lie in 1..n");
  Int deg = 0;
  for (Int i = 1; i <= n; ++i)
    if (i != j) deg += w.a(i);
  FoliationDescriptor f;
  f.ambient = w;
  f.rank = f.algebraic_rank = n - 1;
  f.canonical = RankOneClass{Rational(-deg)};
  f.recipe = recipe::CoordinateProjection{j};
  f.purely_transcendental = false;
  f.leaf_rc = Tri::unknown;
  f.provenance = j <= 2 ? "weighted coordinate projection" : "weighted coordinate projection (degree rule extended, derived)";
  return detail::finish(std::move(f));
}

/// Foliation by curves of genus >= 2 on P^k with T_H = O(-d), d > 0.
inline FoliationDescriptor high_genus_curve_foliation(Int k, Int d) {
  if (k < 2) throw DomainError("curve foliation needs a base of dimension >= 2");
  if (d <= 0) throw DomainError("high-genus curve foliation needs d > 0");
  FoliationDescriptor f;
  f.ambient = WeightedProjectiveSpace::projective_space(k);
  f.rank = f.algebraic_rank = 1;
  f.canonical = RankOneClass{Rational(d)};
  f.recipe = recipe::CurveFamily{d, 2};
  f.purely_transcendental = false;
  f.leaf_rc = Tri::no;
  f.provenance = "algebraic foliation by curves of genus >= 2 (existence asserted)";
  return detail::finish(std::move(f));
}

/// Z = C x W with C elliptic and K_W = 0; the projection to W gives H = O_Z.
inline PolarizedBase elliptic_product_base(Int dim) {
  if (dim < 2) throw DomainError("C x W needs dim W >= 1");
  return {dim, false, SingularityClass::numerically_trivial_canonical_lc,
          "E x W" + std::to_string(dim - 1)};
}

inline FoliationDescriptor elliptic_projection_foliation(const PolarizedBase& z) {
  FoliationDescriptor f;
  f.ambient = z;
  f.rank = f.algebraic_rank = 1;
  f.canonical = RankOneClass{Rational(0)};
  f.recipe = recipe::CurveFamily{0, 1};
  f.purely_transcendental = false;
  f.leaf_rc = Tri::no;
  f.provenance = "projection C x W -> W with elliptic fibers";
  return detail::finish(std::move(f));
}

/// Recomputes a descriptor from its ambient and recipe alone. Used to detect
/// stored descriptors whose numerical fields disagree with their recipe.
inline FoliationDescriptor rebuild(const FoliationDescriptor& f) {
  return std::visit(
      Overloaded{
          [&](const recipe::FibrationInduced&) { return fibration_foliation(std::get<BundleVariety>(f.ambient)); },
          [&](const recipe::PullbackOverBundle& r) {
            return pullback_over_bundle(std::get<BundleVariety>(f.ambient),
                                        std::make_shared<const FoliationDescriptor>(rebuild(*r.base)));
          },
          [&](const recipe::ConeInduced& r) {
            return cone_foliation(std::get<GeneralizedCone>(f.ambient),
                                  std::make_shared<const FoliationDescriptor>(rebuild(*r.base)));
          },
          [&](const recipe::CoordinateProjection& r) {
            return wps_coordinate_foliation(std::get<WeightedProjectiveSpace>(f.ambient), r.j);
          },
          [&](const recipe::PnCatalogCase1& r) {
            const Int n = dimension(f.ambient);
            return pn_catalog(n, f.algebraic_rank, r.d);
          },
          [&](const recipe::PnCatalogCase2& r) {
            const Int n = dimension(f.ambient);
            return pn_catalog(n, n - 1, r.d_f + r.d_g - n - 1);
          },
          [&](const recipe::TranscendentalRankOne& r) { return transcendental_rank1(dimension(f.ambient), r.p); },
          [&](const recipe::CurveFamily& r) {
            if (r.min_genus >= 2) return high_genus_curve_foliation(dimension(f.ambient), r.d);
            return elliptic_projection_foliation(std::get<PolarizedBase>(f.ambient));
          }},
      f.recipe);
}

}  // namespace fanofol
