#pragma once

#include <optional>

#include "fanofol/rational.hpp"

namespace fanofol {

struct Positivity {
  bool pseff = false;
  bool big = false;
  bool nef = false;
  bool ample = false;

  friend bool operator==(const Positivity&, const Positivity&) = default;
};

/// Numerical invariants of a foliation, all evaluated on -K_F.
/// A field is empty when the invariant is undefined (e.g. the Fano index of a
/// non-ample class) or not computable for the family.
struct InvariantReport {
  std::optional<Rational> gen_index;
  std::optional<Rational> fano_index;
  std::optional<Rational> seshadri_antican;
  // eps(gen_index * H) for the distinguished ample Cartier polarization H
  // used as the generalized-index witness.
  std::optional<Rational> seshadri_index_polarization;
  Positivity positivity;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

}  // namespace fanofol
