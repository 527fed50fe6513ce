#pragma once

#include <string>
#include <variant>

#include "fanofol/bundle.hpp"
#include "fanofol/rank_one.hpp"

namespace fanofol {

/// Ambient varieties that carry foliations. PolarizedBase appears only as the
/// ambient of base foliations on abstract cone bases (e.g. C x W).
using Variety = std::variant<BundleVariety, GeneralizedCone, WeightedProjectiveSpace, PolarizedBase>;

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

inline Int dimension(const Variety& v) {
  return std::visit(Overloaded{[](const PolarizedBase& b) { return b.dim; },
                               [](const auto& x) { return x.dim(); }},
                    v);
}

inline bool is_smooth(const Variety& v) {
  return std::visit(Overloaded{[](const BundleVariety&) { return true; },
                               [](const GeneralizedCone& c) { return c.is_smooth(); },
                               [](const WeightedProjectiveSpace& w) { return w.is_projective_space(); },
                               [](const PolarizedBase& b) { return b.singularity == SingularityClass::smooth; }},
                    v);
}

/// True if v is (a model of) P^k.
inline bool is_projective_space(const Variety& v, Int k) {
  return std::visit(Overloaded{[&](const WeightedProjectiveSpace& w) { return w.is_projective_space() && w.dim() == k; },
                               [&](const PolarizedBase& b) { return b.is_projective_space && b.dim == k; },
                               [&](const GeneralizedCone& c) {
                                 return c.is_smooth() && c.dim() == k;
                               },
                               [](const BundleVariety&) { return false; }},
                    v);
}

inline std::string describe(const Variety& v) {
  return std::visit(Overloaded{[](const PolarizedBase& b) { return b.label; },
                               [](const auto& x) { return x.str(); }},
                    v);
}

}  // namespace fanofol
