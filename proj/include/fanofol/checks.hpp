#pragma once

#include <numeric>
#include <optional>
#include <string>

#include "fanofol/invariants.hpp"
#include "fanofol/record.hpp"

namespace fanofol {

namespace detail {

inline std::string opt_str(const std::optional<Rational>& v) { return v ? v->str() : "null"; }

inline CheckOutcome pass(std::string name, std::string detail = {}) {
  return {std::move(name), CheckStatus::pass, std::move(detail)};
}
inline CheckOutcome fail(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::fail, std::move(detail)};
}
inline CheckOutcome skip(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::skip, std::move(detail)};
}
inline CheckOutcome verdict(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

/// Linear pullback to P^{n-r^a} of a purely transcendental foliation with
/// zero canonical class (including the zero foliation, i.e. a linear
/// projection). Ambient must already be P^n.
inline bool is_linear_pullback_shape(const FoliationDescriptor& f) {
  if (!is_projective_space(f.ambient, dimension(f.ambient))) return false;
  return std::visit(Overloaded{[&](const recipe::PnCatalogCase1& r) { return r.d == -f.algebraic_rank; },
                               [](const recipe::PnCatalogCase2& r) { return r.d_f == 1 && r.d_g == 1; },
                               [](const recipe::CoordinateProjection&) { return true; },
                               [&](const recipe::ConeInduced& r) {
                                 if (!r.base || base_canonical_degree(*r.base) != 0) return false;
                                 return r.base->purely_transcendental || is_linear_pullback_shape(*r.base);
                               },
                               [](const auto&) { return false; }},
                    f.recipe);
}

}  // namespace detail

/// Exact certification of the Case-1 bundle parameters for target p/q and
/// r' = r. Returns an error message, or nothing when all constraints hold.
inline std::optional<std::string> case1_violation(const CaseParameters& cp, Int r) {
  const Int p = cp.p, q = cp.q, l = cp.l;
  if (!(q < p && p < q * r) || std::gcd(p, q) != 1) return "need q < p < q*r with gcd(p,q) = 1";
  if (l < 1) return "l must be positive";
  const Int surplus = l * (p - q) + (p - q * r) + 1;
  if (surplus <= 0) return "l(p-q)+(p-qr)+1 = " + std::to_string(surplus) + " is not positive";
  const Rational ql(q * l);
  const Rational bound = (Rational(1) - Rational(1) / ql) * Rational(r) + Rational(1) / ql;
  if (Rational(BigInt(p), BigInt(q)) > bound) return "p/q exceeds (1-1/(ql))r + 1/(ql) = " + bound.str();
  if (static_cast<Int>(cp.b_list.size()) != r) return "b_list must have r entries";
  const Int b1 = l * q - 1;
  if (cp.b_list.front() != b1) return "b_1 must equal lq-1 = " + std::to_string(b1);
  Int rest = 0;
  for (std::size_t i = 1; i < cp.b_list.size(); ++i) {
    if (cp.b_list[i] < 0 || cp.b_list[i] > b1) return "b_i outside [0, b_1]";
    if (cp.b_list[i] > cp.b_list[i - 1]) return "b_list not descending";
    rest += cp.b_list[i];
  }
  if (rest != surplus) return "b - b_1 = " + std::to_string(rest) + " differs from " + std::to_string(surplus);
  return std::nullopt;
}

/// Evaluates every check on a record. Failures are outcomes, never exceptions.
/// Implication-type theorem checks pass vacuously when their premise fails;
/// they are skipped only when an invariant they need is absent.
inline CheckReport check_record(const ExampleRecord& rec) {
  CheckReport rep;
  rep.record_id = rec.id;
  auto& out = rep.checks;
  const auto& f = rec.foliation;
  const auto& inv = rec.invariants;
  const Rational ra(f.algebraic_rank);

  // Stored data must agree with what the recipe and ambient determine.
  try {
    const auto rebuilt = rebuild(f);
    out.push_back(detail::verdict("descriptor_consistent", rebuilt == f,
                                  rebuilt == f ? "" : "stored descriptor differs from its recipe"));
  } catch (const Error& e) {
    out.push_back(detail::fail("descriptor_consistent", e.what()));
  }

  std::optional<InvariantReport> fresh;
  try {
    fresh = compute_invariants(f);
    const bool same = *fresh == inv;
    out.push_back(detail::verdict("invariants_recomputed", same,
                                  same ? "" : "stored gen_index=" + detail::opt_str(inv.gen_index) + " fano_index=" +
                                                  detail::opt_str(inv.fano_index) + " seshadri=" +
                                                  detail::opt_str(inv.seshadri_antican) + ", recomputed " +
                                                  detail::opt_str(fresh->gen_index) + "/" +
                                                  detail::opt_str(fresh->fano_index) + "/" +
                                                  detail::opt_str(fresh->seshadri_antican)));
  } catch (const Error& e) {
    out.push_back(detail::fail("invariants_recomputed", e.what()));
  }

  if (!rec.request) {
    out.push_back(detail::skip("target_match", "no synthesis request"));
  } else {
    const auto& q = *rec.request;
    std::string why;
    if (dimension(f.ambient) != q.n) why += "dim " + std::to_string(dimension(f.ambient)) + " != n; ";
    if (f.algebraic_rank != q.r) why += "r^a " + std::to_string(f.algebraic_rank) + " != r; ";
    const auto need = [&](const char* label, const std::optional<Rational>& v) {
      if (!v || *v != q.c) why += std::string(label) + "=" + detail::opt_str(v) + " != " + q.c.str() + "; ";
    };
    switch (q.kind) {
      case SynthKind::generalized_index:
        need("gen_index", inv.gen_index);
        need("eps(gen_index*H)", inv.seshadri_index_polarization);
        break;
      case SynthKind::fano_index:
        need("fano_index", inv.fano_index);
        need("gen_index", inv.gen_index);
        break;
      case SynthKind::seshadri:
        need("seshadri", inv.seshadri_antican);
        if (!inv.positivity.ample) why += "-K_F not ample; ";
        break;
    }
    out.push_back(detail::verdict("target_match", why.empty(), why));
  }

  if (!rec.parameters || rec.parameters->branch != "case1") {
    out.push_back(detail::skip("case1_constraints", "not a case-1 record"));
  } else {
    const auto v = case1_violation(*rec.parameters, f.algebraic_rank);
    std::string why = v.value_or("");
    if (const auto* x = std::get_if<BundleVariety>(&f.ambient); x && x->b() != rec.parameters->b_list)
      why += " bundle twists differ from b_list";
    out.push_back(detail::verdict("case1_constraints", why.empty(), why));
  }

  if (const auto* x = std::get_if<BundleVariety>(&f.ambient); x && fresh && fresh->gen_index) {
    const auto gi = generalized_index_bundle(*x, f.anticanonical_class());
    const auto& w = gi.witness;
    const bool ok = w.reconstruct(*x) == f.anticanonical_class() && w.p_e.sign() >= 0 && w.p_a.sign() >= 0 &&
                    classify_divisor(*x, w.h).ample;
    out.push_back(detail::verdict("index_witness", ok,
                                  "-K_F = " + w.t.str() + "*" + w.h.str() + " + " + w.p_e.str() + "*E + " +
                                      w.p_a.str() + "*A"));
  } else {
    out.push_back(detail::skip("index_witness", "no bundle generalized index"));
  }

  // (i) r^a >= gen_index
  if (inv.gen_index)
    out.push_back(detail::verdict("ko1_ra_ge_gen_index", ra >= *inv.gen_index,
                                  "r^a=" + ra.str() + " gen_index=" + inv.gen_index->str()));
  else
    out.push_back(detail::skip("ko1_ra_ge_gen_index", "gen_index absent"));

  // (ii) r^a >= fano_index
  if (inv.fano_index)
    out.push_back(detail::verdict("ko2_ra_ge_fano_index", ra >= *inv.fano_index,
                                  "r^a=" + ra.str() + " fano_index=" + inv.fano_index->str()));
  else
    out.push_back(detail::skip("ko2_ra_ge_fano_index", "fano_index absent"));

  // (iii) fano_index <= gen_index
  if (inv.fano_index && inv.gen_index)
    out.push_back(detail::verdict("fano_le_gen_index", *inv.fano_index <= *inv.gen_index,
                                  inv.fano_index->str() + " <= " + inv.gen_index->str()));
  else
    out.push_back(detail::skip("fano_le_gen_index", "an index is absent"));

  // (iv) -K_F nef => r^a >= eps(-K_F)
  if (!inv.seshadri_antican)
    out.push_back(detail::skip("seshadri_bound", "eps(-K_F) absent"));
  else if (!inv.positivity.nef)
    out.push_back(detail::pass("seshadri_bound", "premise not met: -K_F not nef"));
  else
    out.push_back(detail::verdict("seshadri_bound", ra >= *inv.seshadri_antican,
                                  "r^a=" + ra.str() + " eps=" + inv.seshadri_antican->str()));

  // -K_F = A + P with A = gen_index*H nef and P pseudoeffective => r^a >= eps(A)
  if (inv.seshadri_index_polarization)
    out.push_back(detail::verdict("seshadri_bound_witness", ra >= *inv.seshadri_index_polarization,
                                  "r^a=" + ra.str() + " eps(A)=" + inv.seshadri_index_polarization->str()));
  else
    out.push_back(detail::skip("seshadri_bound_witness", "no witness polarization"));

  // (v) nef and big, eps(-K_F) > r^a - 1 => general algebraic leaf is RC
  if (!inv.seshadri_antican) {
    out.push_back(detail::skip("rc_consistency", "eps(-K_F) absent"));
  } else if (!(inv.positivity.nef && inv.positivity.big) || *inv.seshadri_antican <= ra - 1) {
    out.push_back(detail::pass("rc_consistency", "premise not met: eps=" + inv.seshadri_antican->str() +
                                                     " r^a-1=" + (ra - 1).str()));
  } else {
    out.push_back(detail::verdict("rc_consistency", f.leaf_rc != Tri::no,
                                  std::string("leaf_rc=") + to_string(f.leaf_rc)));
  }

  // same with A = gen_index*H ample
  if (!inv.seshadri_index_polarization) {
    out.push_back(detail::skip("rc_consistency_witness", "no witness polarization"));
  } else if (*inv.seshadri_index_polarization <= ra - 1) {
    out.push_back(detail::pass("rc_consistency_witness", "premise not met: eps(A)=" +
                                                             inv.seshadri_index_polarization->str()));
  } else {
    out.push_back(detail::verdict("rc_consistency_witness", f.leaf_rc != Tri::no,
                                  std::string("leaf_rc=") + to_string(f.leaf_rc)));
  }

  // (vi) smooth ambient, Fano, eps(-K_F) >= r^a => P^n linear pullback
  if (!inv.seshadri_antican) {
    out.push_back(detail::skip("max_seshadri_audit", "eps(-K_F) absent"));
  } else if (!is_smooth(f.ambient) || !inv.positivity.ample || *inv.seshadri_antican < ra) {
    out.push_back(detail::pass("max_seshadri_audit", "premise not met"));
  } else {
    const bool ok = detail::is_linear_pullback_shape(f);
    out.push_back(detail::verdict("max_seshadri_audit", ok,
                                  std::string("eps = r^a on smooth ambient, recipe ") + recipe_name(f.recipe) +
                                      (ok ? " is a linear pullback" : " is not a P^n linear pullback")));
  }
  return rep;
}

}  // namespace fanofol
