#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanofol/foliation.hpp"
#include "fanofol/report.hpp"

namespace fanofol {

inline constexpr const char* kSchemaVersion = "1";

enum class SynthKind { generalized_index, fano_index, seshadri };

inline const char* to_string(SynthKind k) {
  switch (k) {
    case SynthKind::generalized_index: return "generalized-index";
    case SynthKind::fano_index: return "fano-index";
    case SynthKind::seshadri: return "seshadri";
  }
  return "?";
}

inline SynthKind synth_kind_from_string(const std::string& s) {
  if (s == "generalized-index" || s == "generalized_index" || s == "gen-index") return SynthKind::generalized_index;
  if (s == "fano-index" || s == "fano_index") return SynthKind::fano_index;
  if (s == "seshadri") return SynthKind::seshadri;
  throw ParseError("unknown synthesis kind '" + s + "'");
}

struct SynthesisRequest {
  SynthKind kind = SynthKind::generalized_index;
  Int n = 0;
  Int r = 0;
  Rational c;

  friend bool operator==(const SynthesisRequest&, const SynthesisRequest&) = default;
};

/// Parameters of the Case-1 bundle construction for 1 < p/q < r.
struct CaseParameters {
  Int p = 0;
  Int q = 0;
  Int l = 0;
  std::vector<Int> b_list;
  std::string branch;

  friend bool operator==(const CaseParameters&, const CaseParameters&) = default;
};

enum class CheckStatus { pass, fail, skip };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "?";
}

struct CheckOutcome {
  std::string name;
  CheckStatus status = CheckStatus::skip;
  std::string detail;

  friend bool operator==(const CheckOutcome&, const CheckOutcome&) = default;
};

struct CheckReport {
  std::string record_id;
  std::vector<CheckOutcome> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::fail) return false;
    return true;
  }
};

struct ExampleRecord {
  std::string id;
  std::optional<SynthesisRequest> request;
  std::string branch;
  FoliationDescriptor foliation;
  InvariantReport invariants;
  std::optional<CaseParameters> parameters;
  std::vector<CheckOutcome> checks;

  const Variety& variety() const { return foliation.ambient; }
};

}  // namespace fanofol
