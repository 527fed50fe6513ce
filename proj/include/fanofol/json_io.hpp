#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "fanofol/record.hpp"
#include "fanofol/sweep.hpp"

namespace fanofol {

using Json = nlohmann::ordered_json;

struct Catalog {
  std::string version = kSchemaVersion;
  Json metadata = Json::object();
  std::vector<ExampleRecord> records;
};

namespace json_detail {

inline const Json& at(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

inline Int get_int(const Json& j, const char* key) {
  const auto& v = at(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("key '") + key + "' must be an integer");
  return v.get<Int>();
}

inline std::string get_str(const Json& j, const char* key) {
  const auto& v = at(j, key);
  if (!v.is_string()) throw ParseError(std::string("key '") + key + "' must be a string");
  return v.get<std::string>();
}

inline bool get_bool(const Json& j, const char* key) {
  const auto& v = at(j, key);
  if (!v.is_boolean()) throw ParseError(std::string("key '") + key + "' must be a boolean");
  return v.get<bool>();
}

inline std::vector<Int> get_int_list(const Json& j, const char* key) {
  const auto& v = at(j, key);
  if (!v.is_array()) throw ParseError(std::string("key '") + key + "' must be an array");
  std::vector<Int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw ParseError(std::string("key '") + key + "' must hold integers");
    out.push_back(e.get<Int>());
  }
  return out;
}

inline Rational get_rational(const Json& j, const char* key) { return Rational::parse(get_str(j, key)); }

inline Json opt_rational(const std::optional<Rational>& v) { return v ? Json(v->str()) : Json(nullptr); }

inline std::optional<Rational> get_opt_rational(const Json& j, const char* key) {
  const auto& v = at(j, key);
  if (v.is_null()) return std::nullopt;
  if (!v.is_string()) throw ParseError(std::string("key '") + key + "' must be a rational string or null");
  return Rational::parse(v.get<std::string>());
}

}  // namespace json_detail

inline Json to_json(const Rational& r) { return r.str(); }

inline Json to_json(const Class2& c) { return Json{{"beta", c.beta.str()}, {"gamma", c.gamma.str()}}; }

inline Json to_json(const RankOneClass& c) { return Json{{"s", c.s.str()}}; }

inline Json to_json(const PolarizedBase& b) {
  return Json{{"dim", b.dim},
              {"is_projective_space", b.is_projective_space},
              {"singularity_class", to_string(b.singularity)},
              {"label", b.label}};
}

inline Json to_json(const Variety& v) {
  return std::visit(Overloaded{[](const BundleVariety& x) {
                                 return Json{{"family", "bundle"}, {"base_dim", x.base_dim()}, {"m", x.m()}, {"b", x.b()}};
                               },
                               [](const WeightedProjectiveSpace& w) {
                                 return Json{{"family", "wps"}, {"weights", w.weights()}};
                               },
                               [](const GeneralizedCone& y) {
                                 return Json{{"family", "cone"},
                                             {"base", to_json(y.base())},
                                             {"m", y.m()},
                                             {"vertex_rank", y.vertex_rank()}};
                               },
                               [](const PolarizedBase& b) {
                                 Json j{{"family", "base"}};
                                 j.update(to_json(b));
                                 return j;
                               }},
                    v);
}

inline Json to_json(const FoliationDescriptor& f) {
  Json j;
  j["recipe"] = recipe_name(f.recipe);
  j["rank"] = f.rank;
  j["algebraic_rank"] = f.algebraic_rank;
  j["canonical"] = std::visit([](const auto& c) { return to_json(c); }, f.canonical);
  j["leaf_rc"] = to_string(f.leaf_rc);
  j["purely_transcendental"] = f.purely_transcendental;
  j["provenance"] = f.provenance;
  j["ambient"] = to_json(f.ambient);
  std::visit(Overloaded{[](const recipe::FibrationInduced&) {},
                        [&](const recipe::PullbackOverBundle& r) { j["base"] = to_json(*r.base); },
                        [&](const recipe::ConeInduced& r) { j["base"] = to_json(*r.base); },
                        [&](const recipe::CoordinateProjection& r) { j["params"] = Json{{"j", r.j}}; },
                        [&](const recipe::PnCatalogCase1& r) { j["params"] = Json{{"d", r.d}}; },
                        [&](const recipe::PnCatalogCase2& r) { j["params"] = Json{{"d_f", r.d_f}, {"d_g", r.d_g}}; },
                        [&](const recipe::TranscendentalRankOne& r) { j["params"] = Json{{"p", r.p}}; },
                        [&](const recipe::CurveFamily& r) {
                          j["params"] = Json{{"d", r.d}, {"min_genus", r.min_genus}};
                        }},
             f.recipe);
  return j;
}

inline Json to_json(const SynthesisRequest& q) {
  return Json{{"kind", to_string(q.kind)}, {"n", q.n}, {"r", q.r}, {"c", q.c.str()}};
}

inline Json to_json(const InvariantReport& r) {
  using json_detail::opt_rational;
  return Json{{"gen_index", opt_rational(r.gen_index)},
              {"fano_index", opt_rational(r.fano_index)},
              {"seshadri_antican", opt_rational(r.seshadri_antican)},
              {"seshadri_index_polarization", opt_rational(r.seshadri_index_polarization)},
              {"antican_positivity",
               {{"pseff", r.positivity.pseff},
                {"big", r.positivity.big},
                {"nef", r.positivity.nef},
                {"ample", r.positivity.ample}}}};
}

inline Json to_json(const CaseParameters& cp) {
  return Json{{"p", cp.p}, {"q", cp.q}, {"l", cp.l}, {"b_list", cp.b_list}, {"branch", cp.branch}};
}

inline Json to_json(const CheckOutcome& c) {
  return Json{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}};
}

inline Json to_json(const ExampleRecord& rec) {
  Json j;
  j["id"] = rec.id;
  j["schema"] = kSchemaVersion;
  j["request"] = rec.request ? to_json(*rec.request) : Json(nullptr);
  j["branch"] = rec.branch;
  j["variety"] = to_json(rec.variety());
  j["foliation"] = to_json(rec.foliation);
  j["invariants"] = to_json(rec.invariants);
  j["parameters"] = rec.parameters ? to_json(*rec.parameters) : Json(nullptr);
  Json checks = Json::array();
  for (const auto& c : rec.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  return j;
}

inline Json to_json(const Catalog& cat) {
  Json recs = Json::array();
  for (const auto& r : cat.records) recs.push_back(to_json(r));
  return Json{{"version", cat.version}, {"metadata", cat.metadata}, {"records", std::move(recs)}};
}

inline Json to_json(const SweepReport& rep) {
  Json fails = Json::array();
  for (const auto& f : rep.failures) fails.push_back(Json{{"record", f.record}, {"check", f.check}, {"detail", f.detail}});
  return Json{{"total", rep.total},
              {"passed", rep.passed},
              {"failed", rep.failed},
              {"skipped", rep.skipped},
              {"failures", std::move(fails)}};
}

// ---- import ----------------------------------------------------------------

inline PolarizedBase polarized_base_from_json(const Json& j) {
  using namespace json_detail;
  PolarizedBase b{get_int(j, "dim"), get_bool(j, "is_projective_space"),
                  singularity_class_from_string(get_str(j, "singularity_class")), get_str(j, "label")};
  b.validate();
  return b;
}

inline Variety variety_from_json(const Json& j) {
  using namespace json_detail;
  const auto family = get_str(j, "family");
  if (family == "bundle") return BundleVariety(get_int(j, "base_dim"), get_int(j, "m"), get_int_list(j, "b"));
  if (family == "wps") return WeightedProjectiveSpace(get_int_list(j, "weights"));
  if (family == "cone")
    return GeneralizedCone(polarized_base_from_json(at(j, "base")), get_int(j, "m"), get_int(j, "vertex_rank"));
  if (family == "base") return polarized_base_from_json(j);
  throw ParseError("unknown variety family '" + family + "'");
}

inline Tri tri_from_string(const std::string& s) {
  if (s == "true") return Tri::yes;
  if (s == "false") return Tri::no;
  if (s == "unknown") return Tri::unknown;
  throw ParseError("leaf_rc must be true, false or unknown");
}

inline FoliationDescriptor foliation_from_json(const Json& j) {
  using namespace json_detail;
  FoliationDescriptor f;
  f.ambient = variety_from_json(at(j, "ambient"));
  f.rank = get_int(j, "rank");
  f.algebraic_rank = get_int(j, "algebraic_rank");
  const auto& can = at(j, "canonical");
  if (can.contains("beta"))
    f.canonical = Class2{get_rational(can, "beta"), get_rational(can, "gamma")};
  else
    f.canonical = RankOneClass{get_rational(can, "s")};
  f.leaf_rc = tri_from_string(get_str(j, "leaf_rc"));
  f.purely_transcendental = get_bool(j, "purely_transcendental");
  f.provenance = get_str(j, "provenance");
  const auto name = get_str(j, "recipe");
  auto base = [&] { return std::make_shared<const FoliationDescriptor>(foliation_from_json(at(j, "base"))); };
  auto param = [&](const char* k) { return get_int(at(j, "params"), k); };
  if (name == "fibration") f.recipe = recipe::FibrationInduced{};
  else if (name == "pullback") f.recipe = recipe::PullbackOverBundle{base()};
  else if (name == "cone") f.recipe = recipe::ConeInduced{base()};
  else if (name == "coordinate") f.recipe = recipe::CoordinateProjection{param("j")};
  else if (name == "pn1") f.recipe = recipe::PnCatalogCase1{param("d")};
  else if (name == "pn2") f.recipe = recipe::PnCatalogCase2{param("d_f"), param("d_g")};
  else if (name == "transcendental") f.recipe = recipe::TranscendentalRankOne{param("p")};
  else if (name == "curves") f.recipe = recipe::CurveFamily{param("d"), param("min_genus")};
  else throw ParseError("unknown recipe '" + name + "'");
  f.validate();
  return f;
}

inline CheckStatus check_status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "skip") return CheckStatus::skip;
  throw ParseError("unknown check status '" + s + "'");
}

inline ExampleRecord record_from_json(const Json& j) {
  using namespace json_detail;
  ExampleRecord rec;
  rec.id = get_str(j, "id");
  if (get_str(j, "schema") != kSchemaVersion) throw ParseError("record " + rec.id + " has an unsupported schema");
  if (const auto& q = at(j, "request"); !q.is_null())
    rec.request = SynthesisRequest{synth_kind_from_string(get_str(q, "kind")), get_int(q, "n"), get_int(q, "r"),
                                   get_rational(q, "c")};
  rec.branch = get_str(j, "branch");
  rec.foliation = foliation_from_json(at(j, "foliation"));
  if (variety_from_json(at(j, "variety")) != rec.foliation.ambient)
    throw ParseError("record " + rec.id + ": variety differs from the foliation ambient");
  const auto& inv = at(j, "invariants");
  rec.invariants.gen_index = get_opt_rational(inv, "gen_index");
  rec.invariants.fano_index = get_opt_rational(inv, "fano_index");
  rec.invariants.seshadri_antican = get_opt_rational(inv, "seshadri_antican");
  rec.invariants.seshadri_index_polarization = get_opt_rational(inv, "seshadri_index_polarization");
  const auto& pos = at(inv, "antican_positivity");
  rec.invariants.positivity = {get_bool(pos, "pseff"), get_bool(pos, "big"), get_bool(pos, "nef"),
                               get_bool(pos, "ample")};
  if (const auto& p = at(j, "parameters"); !p.is_null())
    rec.parameters = CaseParameters{get_int(p, "p"), get_int(p, "q"), get_int(p, "l"), get_int_list(p, "b_list"),
                                    get_str(p, "branch")};
  const auto& checks = at(j, "checks");
  if (!checks.is_array()) throw ParseError("checks must be an array");
  for (const auto& c : checks)
    rec.checks.push_back({get_str(c, "name"), check_status_from_string(get_str(c, "status")), get_str(c, "detail")});
  return rec;
}

/// Parses and validates a catalog: schema version, unique record ids, and
/// every record's structural invariants. Stored invariant values are kept as
/// written so verification can detect tampering.
inline Catalog catalog_from_json(const Json& j) {
  using namespace json_detail;
  Catalog cat;
  cat.version = get_str(j, "version");
  if (cat.version != kSchemaVersion) throw ParseError("unsupported catalog version '" + cat.version + "'");
  cat.metadata = at(j, "metadata");
  const auto& recs = at(j, "records");
  if (!recs.is_array()) throw ParseError("records must be an array");
  std::set<std::string> ids;
  for (const auto& r : recs) {
    cat.records.push_back(record_from_json(r));
    if (!ids.insert(cat.records.back().id).second) throw ParseError("duplicate record id " + cat.records.back().id);
  }
  return cat;
}

inline Catalog parse_catalog(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return catalog_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("ill-formed catalog: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid catalog entry: ") + e.what());
  }
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace fanofol
