#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "fanofol/json_io.hpp"

namespace fanofol {

enum class OutFormat { json, csv, table };

inline OutFormat out_format_from_string(const std::string& s) {
  if (s == "json") return OutFormat::json;
  if (s == "csv") return OutFormat::csv;
  if (s == "table") return OutFormat::table;
  throw ParseError("unknown output format '" + s + "' (json, csv, table)");
}

/// A rectangular table of strings rendered as CSV or as aligned text.
struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline void write_csv(std::ostream& os, const TextTable& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
    os << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

inline constexpr std::size_t kMaxCellWidth = 28;

inline std::string clip(const std::string& s) {
  if (s.size() <= kMaxCellWidth) return s;
  return s.substr(0, kMaxCellWidth - 3) + "...";
}

/// Aligned text; cells wider than kMaxCellWidth are clipped (JSON and CSV
/// carry the full values).
inline void write_text(std::ostream& os, const TextTable& t) {
  std::vector<std::size_t> w(t.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < w.size(); ++i) w[i] = std::max(w[i], clip(cells[i]).size());
  };
  measure(t.header);
  for (const auto& r : t.rows) measure(r);
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::string c = clip(cells[i]);
      if (i + 1 < cells.size()) c.resize(w[i], ' ');
      out += (i ? "  " : "") + c;
    }
    os << out << "\n";
  };
  line(t.header);
  std::vector<std::string> rule;
  for (auto x : w) rule.emplace_back(x, '-');
  line(rule);
  for (const auto& r : t.rows) line(r);
}

inline void write_table(std::ostream& os, const TextTable& t, OutFormat f) {
  if (f == OutFormat::csv)
    write_csv(os, t);
  else
    write_text(os, t);
}

inline std::string antican_str(const FoliationDescriptor& f) {
  if (std::holds_alternative<Class2>(f.canonical)) return f.anticanonical_class().str();
  return f.anticanonical_s().str() + "H";
}

inline std::string opt_cell(const std::optional<Rational>& v) { return v ? v->str() : "-"; }

/// One summary row per record, shared by `synth` and `table`.
inline const std::vector<std::string>& record_columns() {
  static const std::vector<std::string> cols{"id",         "branch",   "variety",       "rank",
                                             "alg_rank",   "-K",       "gen_index",     "fano_index",
                                             "seshadri_K", "seshadri_gen", "leaf_rc", "fano"};
  return cols;
}

inline std::vector<std::string> record_row(const ExampleRecord& rec) {
  const auto& inv = rec.invariants;
  return {rec.id,
          rec.branch,
          describe(rec.variety()),
          std::to_string(rec.foliation.rank),
          std::to_string(rec.foliation.algebraic_rank),
          antican_str(rec.foliation),
          opt_cell(inv.gen_index),
          opt_cell(inv.fano_index),
          opt_cell(inv.seshadri_antican),
          opt_cell(inv.seshadri_index_polarization),
          to_string(rec.foliation.leaf_rc),
          inv.positivity.ample ? "yes" : "not-fano"};
}

inline TextTable records_table(const std::vector<ExampleRecord>& recs) {
  TextTable t{record_columns(), {}};
  for (const auto& r : recs) t.rows.push_back(record_row(r));
  return t;
}

inline TextTable sweep_table(const SweepReport& rep) {
  TextTable t{{"total", "passed", "failed", "skipped"},
              {{std::to_string(rep.total), std::to_string(rep.passed), std::to_string(rep.failed),
                std::to_string(rep.skipped)}}};
  return t;
}

inline TextTable failures_table(const SweepReport& rep) {
  TextTable t{{"record", "check", "detail"}, {}};
  for (const auto& f : rep.failures) t.rows.push_back({f.record, f.check, f.detail});
  return t;
}

}  // namespace fanofol
