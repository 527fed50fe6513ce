#pragma once

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fanofol/format.hpp"

namespace fanofol {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int input_error = 1;
inline constexpr int unsupported = 2;
inline constexpr int check_failures = 3;
inline constexpr int internal = 4;
}  // namespace exit_code

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kFormatEnv = "FANOFOL_FORMAT";

/// "lo..hi" or a single integer.
inline std::vector<Int> parse_range(const std::string& text) {
  static const std::regex re(R"(^\s*(-?[0-9]+)\s*(?:\.\.\s*(-?[0-9]+)\s*)?$)");
  std::smatch mt;
  if (!std::regex_match(text, mt, re)) throw ParseError("bad range '" + text + "' (expected N or LO..HI)");
  const Int lo = std::stoll(mt[1].str());
  const Int hi = mt[2].matched ? std::stoll(mt[2].str()) : lo;
  if (hi < lo) throw ParseError("empty range '" + text + "'");
  if (hi - lo > 10'000) throw ParseError("range '" + text + "' is too long");
  std::vector<Int> out;
  for (Int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

namespace cli_detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os || !(os << text)) throw ParseError("cannot write " + path);
}

inline Catalog standard_catalog_bundle() {
  Catalog cat;
  cat.metadata = Json{{"grid", "standard"}, {"generator", std::string("fanofol ") + kToolVersion}};
  cat.records = standard_catalog();
  return cat;
}

struct TableOptions {
  std::string family;
  std::map<std::string, std::string> ranges;

  std::vector<Int> get(const std::string& key) const { return parse_range(ranges.at(key)); }
};

inline const std::map<std::string, std::map<std::string, std::string>>& table_defaults() {
  static const std::map<std::string, std::map<std::string, std::string>> d{
      {"hirzebruch", {{"a", "2..10"}}},
      {"wps1", {{"n", "3..6"}, {"m", "1..7"}}},
      {"wps2", {{"n", "3..6"}, {"mp", "1..6"}, {"m", "2..7"}}},
      {"wps3", {{"a1", "1..7"}, {"a2", "1..7"}}},
      {"wps4", {{"a1", "1..7"}, {"a2", "1..7"}}},
      {"cone", {{"k", "2"}, {"m", "1..3"}, {"rprime", "1..3"}, {"d", "0..3"}}},
      {"case1", {{"n", "3..5"}, {"r", "2..4"}, {"q-max", "4"}}},
      {"case2", {{"n", "3..5"}, {"r", "1..4"}, {"q-max", "4"}}},
  };
  return d;
}

inline std::vector<ExampleRecord> table_records(const TableOptions& o) {
  std::vector<ExampleRecord> recs;
  const auto& f = o.family;
  if (f == "hirzebruch") {
    for (Int a : o.get("a")) recs.push_back(hirzebruch_record(a));
  } else if (f == "wps1") {
    for (Int n : o.get("n"))
      for (Int m : o.get("m")) recs.push_back(wps_case1_record(n, m));
  } else if (f == "wps2") {
    for (Int n : o.get("n"))
      for (Int m : o.get("m"))
        for (Int mp : o.get("mp"))
          if (mp >= 1 && mp < m && std::gcd(mp, m) == 1) recs.push_back(wps_case2_record(n, mp, m));
  } else if (f == "wps3" || f == "wps4") {
    for (Int a2 : o.get("a2"))
      for (Int a1 : o.get("a1"))
        if (a1 >= 1 && a1 <= a2 && std::gcd(a1, a2) == 1) recs.push_back(wps_surface_record(a1, a2, f == "wps3" ? 1 : 2));
  } else if (f == "cone") {
    for (Int k : o.get("k"))
      for (Int rp : o.get("rprime"))
        for (Int m : o.get("m"))
          for (Int d : o.get("d")) recs.push_back(cone_table_record(k, m, rp, d));
  } else if (f == "case1" || f == "case2") {
    const auto q_max = o.get("q-max").back();
    for (Int n : o.get("n"))
      for (Int r : o.get("r")) {
        if (r < 1 || r >= n) continue;
        for (const auto& c : rationals_up_to(Rational(r), q_max)) {
          if (c.is_integer() || (f == "case1") != (c > Rational(1))) continue;
          recs.push_back(synth_generalized_index(n, r, c));
        }
      }
  } else {
    throw ParseError("unknown family '" + f + "'");
  }
  return recs;
}

inline void emit_records(std::ostream& out, const std::vector<ExampleRecord>& recs, OutFormat fmt, const Json& head) {
  if (fmt == OutFormat::json) {
    Json j = head;
    Json rows = Json::array();
    for (const auto& r : recs) rows.push_back(to_json(r));
    j["records"] = std::move(rows);
    out << dump(j);
  } else {
    write_table(out, records_table(recs), fmt);
  }
}

inline int emit_sweep(std::ostream& out, const SweepReport& rep, OutFormat fmt) {
  if (fmt == OutFormat::json) {
    out << dump(to_json(rep));
  } else {
    write_table(out, sweep_table(rep), fmt);
    if (!rep.failures.empty()) {
      out << "\n";
      write_table(out, failures_table(rep), fmt);
    }
  }
  return rep.failed == 0 ? exit_code::ok : exit_code::check_failures;
}

}  // namespace cli_detail

/// Entry point shared by the executable and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of foliations on bundles, cones and weighted projective spaces", "fanofol"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string format = "table";
  bool format_from_env = false;
  if (const char* env = std::getenv(kFormatEnv); env && *env) {
    format = env;
    format_from_env = true;
  }
  const std::vector<std::string> formats{"json", "csv", "table"};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--out", format, "output format (default from " + std::string(kFormatEnv) + ", else table)")
        ->check(CLI::IsMember(formats));
  };

  // synth
  auto* synth = app.add_subcommand("synth", "realize a target invariant value");
  std::string kind, c_text;
  Int n = 0, r = 0;
  synth->add_option("--kind", kind, "generalized-index | fano-index | seshadri")
      ->required()
      ->check(CLI::IsMember({"generalized-index", "fano-index", "seshadri"}));
  synth->add_option("--n", n, "ambient dimension")->required();
  synth->add_option("--r", r, "algebraic rank")->required();
  synth->add_option("--c", c_text, "target value p/q")->required();
  add_format(synth);

  // verify
  auto* verify = app.add_subcommand("verify", "run the check suite over a catalog or a generated grid");
  std::string catalog_path, grid;
  OracleGrid og;
  auto* cat_opt = verify->add_option("--catalog", catalog_path, "catalog JSON file");
  auto* grid_opt = verify->add_option("--grid", grid, "standard | oracle")->check(CLI::IsMember({"standard", "oracle"}));
  cat_opt->excludes(grid_opt);
  verify->add_option("--m-max", og.m_max, "oracle grid: max m")->check(CLI::PositiveNumber);
  verify->add_option("--b-max", og.b_max, "oracle grid: max b_1")->check(CLI::NonNegativeNumber);
  verify->add_option("--rprime-max", og.rprime_max, "oracle grid: max r'")->check(CLI::PositiveNumber);
  verify->add_option("--k-max", og.k_max, "oracle grid: max base dimension")->check(CLI::PositiveNumber);
  verify->add_option("--coef-max", og.coef_max, "oracle grid: max |beta|, |gamma|")->check(CLI::NonNegativeNumber);
  verify->add_option("--d-max", og.d_max, "oracle: max Lambda-coefficient of H")->check(CLI::PositiveNumber);
  verify->add_option("--c-max", og.c_max, "oracle: max A-coefficient of H")->check(CLI::PositiveNumber);
  verify->add_flag("--big-not-ample", og.big_not_ample_only, "oracle grid: only big classes that are not ample");
  add_format(verify);

  // table
  auto* table = app.add_subcommand("table", "invariant table for a named family");
  cli_detail::TableOptions topt;
  table->add_option("--family", topt.family, "hirzebruch | wps1 | wps2 | wps3 | wps4 | cone | case1 | case2")
      ->required();
  std::map<std::string, std::string> range_flags;
  for (const char* key : {"a", "n", "m", "mp", "a1", "a2", "k", "rprime", "d", "r", "q-max"})
    table->add_option(std::string("--") + key, range_flags[key], "range N or LO..HI");
  add_format(table);

  auto* info = app.add_subcommand("info", "describe the tool and its conventions");

  auto* catalog = app.add_subcommand("catalog", "export or import catalogs");
  catalog->require_subcommand(1);
  auto* cexport = catalog->add_subcommand("export", "write the standard catalog as JSON");
  std::string export_path;
  cexport->add_option("--file", export_path, "output path (default stdout)");
  auto* cimport = catalog->add_subcommand("import", "validate a catalog and optionally re-export it");
  std::string import_path, reexport_path;
  cimport->add_option("--file", import_path, "catalog JSON file")->required();
  cimport->add_option("--export", reexport_path, "re-export path");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::input_error;
  }

  try {
    if (format_from_env && std::find(formats.begin(), formats.end(), format) == formats.end())
      throw ParseError(std::string(kFormatEnv) + "='" + format + "' is not one of json, csv, table");
    const OutFormat fmt = out_format_from_string(format);
    if (synth->parsed()) {
      const SynthesisRequest q{synth_kind_from_string(kind), n, r, Rational::parse(c_text)};
      const auto rec = synthesize(q);
      if (fmt == OutFormat::json)
        out << dump(to_json(rec));
      else
        write_table(out, records_table({rec}), fmt);
      return exit_code::ok;
    }
    if (verify->parsed()) {
      if (catalog_path.empty() && grid.empty()) throw ParseError("verify needs --catalog or --grid");
      if (!catalog_path.empty()) {
        const auto cat = parse_catalog(cli_detail::read_file(catalog_path));
        return cli_detail::emit_sweep(out, sweep_records(cat.records), fmt);
      }
      if (grid == "oracle") return cli_detail::emit_sweep(out, sweep_oracle(og), fmt);
      auto rep = sweep_requests(standard_requests());
      const auto cat = standard_catalog();
      std::vector<ExampleRecord> named;
      for (const auto& rec : cat)
        if (!rec.request) named.push_back(rec);
      const auto more = sweep_records(named);
      rep.total += more.total;
      rep.passed += more.passed;
      rep.failed += more.failed;
      rep.skipped += more.skipped;
      rep.failures.insert(rep.failures.end(), more.failures.begin(), more.failures.end());
      return cli_detail::emit_sweep(out, rep, fmt);
    }
    if (table->parsed()) {
      const auto& defaults = cli_detail::table_defaults();
      const auto it = defaults.find(topt.family);
      if (it == defaults.end()) throw ParseError("unknown family '" + topt.family + "'");
      for (const auto& [key, text] : range_flags) {
        if (text.empty()) continue;
        if (!it->second.count(key)) throw ParseError("--" + key + " does not apply to family " + topt.family);
        topt.ranges[key] = text;
      }
      for (const auto& [key, text] : it->second) topt.ranges.emplace(key, text);
      Json head{{"family", topt.family}, {"ranges", Json::object()}};
      for (const auto& [key, text] : topt.ranges) head["ranges"][key] = text;
      cli_detail::emit_records(out, cli_detail::table_records(topt), fmt, head);
      return exit_code::ok;
    }
    if (info->parsed()) {
      out << "fanofol " << kToolVersion << "\n"
          << "schema version: " << kSchemaVersion << "\n"
          << "divisor basis on bundles: (Lambda, pi*A)\n"
          << "rationals: exact, written p/q in lowest terms\n"
          << "synthesis kinds: generalized-index fano-index seshadri\n"
          << "table families: hirzebruch wps1 wps2 wps3 wps4 cone case1 case2\n"
          << "exit codes: 0 ok, 1 input error, 2 unsupported request, 3 check failures, 4 internal error\n"
          << "default format env: " << kFormatEnv << "\n";
      return exit_code::ok;
    }
    if (cexport->parsed()) {
      const auto text = dump(to_json(cli_detail::standard_catalog_bundle()));
      if (export_path.empty())
        out << text;
      else
        cli_detail::write_file(export_path, text);
      return exit_code::ok;
    }
    if (cimport->parsed()) {
      const auto cat = parse_catalog(cli_detail::read_file(import_path));
      if (!reexport_path.empty()) cli_detail::write_file(reexport_path, dump(to_json(cat)));
      out << "imported " << cat.records.size() << " records (version " << cat.version << ")\n";
      return exit_code::ok;
    }
    throw ParseError("no command given");
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return exit_code::unsupported;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::internal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::input_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::internal;
  }
}

}  // namespace fanofol
