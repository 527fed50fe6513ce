// Acceptance suite: one PASS/FAIL line per criterion, exact equality throughout.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "fanofol/cli.hpp"

using namespace fanofol;

namespace {

Rational q(Int p, Int d) { return Rational(BigInt(p), BigInt(d)); }

struct Tally {
  std::size_t cases = 0;
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && problems.size() < 5) problems.push_back(what);
    if (!ok && problems.size() == 5) problems.push_back("...");
  }
  bool ok() const { return problems.empty() && cases > 0; }
};

bool clean(const ExampleRecord& rec) {
  for (const auto& c : rec.checks)
    if (c.status == CheckStatus::fail) return false;
  return check_record(rec).all_passed();
}

std::string eq(const std::optional<Rational>& got, const Rational& want) {
  return "got " + (got ? got->str() : std::string("null")) + " want " + want.str();
}

Tally criterion1(std::string& note) {
  Tally t;
  OracleGrid g;
  g.m_max = 4;
  g.b_max = 3;
  g.rprime_max = 3;
  g.k_max = 3;
  g.coef_max = 6;
  g.d_max = 6;
  g.c_max = 40;
  g.big_not_ample_only = true;
  const auto start = std::chrono::steady_clock::now();
  const auto rep = sweep_oracle(g);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.cases = rep.total;
  for (const auto& f : rep.failures) t.expect(false, f.record + " " + f.check + " " + f.detail);
  t.expect(rep.failed == 0 && rep.skipped == 0 && rep.passed == rep.total, "sweep not fully passing");
  t.expect(secs < 10.0, "took " + std::to_string(secs) + " s");
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << rep.passed << "/" << rep.total << " classes agree, " << secs << " s";
  note = os.str();
  return t;
}

Tally criterion2(std::string& note) {
  Tally t;
  for (Int a = 2; a <= 10; ++a) {
    const auto rec = hirzebruch_record(a);
    const Rational want = Rational(1) - q(1, a);
    t.expect(rec.invariants.gen_index == want, "a=" + std::to_string(a) + " " + eq(rec.invariants.gen_index, want));
    t.expect(rec.invariants.seshadri_index_polarization == want, "a=" + std::to_string(a) + " eps(gen_index*H0)");
    t.expect(clean(rec), "a=" + std::to_string(a) + " checks");
  }
  note = "a = 2..10";
  return t;
}

Tally criterion3(std::string& note) {
  Tally t;
  std::vector<SynthesisRequest> reqs;
  for (auto [r, n] : std::vector<std::pair<Int, Int>>{{1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}})
    for (const auto& c : rationals_up_to(Rational(r), 8)) reqs.push_back({SynthKind::generalized_index, n, r, c});
  for (Int a = 2; a <= 8; ++a) reqs.push_back({SynthKind::generalized_index, 2, 1, Rational(1) - q(1, a)});
  std::size_t case1 = 0;
  for (const auto& req : reqs) {
    const std::string id = detail::request_id(req);
    try {
      const auto rec = synthesize(req);
      t.expect(rec.invariants.gen_index == req.c, id + " " + eq(rec.invariants.gen_index, req.c));
      t.expect(rec.invariants.seshadri_index_polarization == req.c, id + " eps(gen_index*H0)");
      t.expect(clean(rec), id + " checks");
      if (rec.branch == "case1") {
        ++case1;
        t.expect(rec.parameters && !case1_violation(*rec.parameters, req.r), id + " case-1 certificate");
      }
    } catch (const Error& e) {
      t.expect(false, id + " " + e.what());
    }
  }
  note = std::to_string(reqs.size()) + " requests, " + std::to_string(case1) + " case-1 certificates";
  return t;
}

Tally criterion4(std::string& note) {
  Tally t;
  std::size_t cone = 0, weighted = 0;
  for (Int n = 3; n <= 6; ++n) {
    for (Int r = 1; r < n; ++r)
      for (const auto& c : rationals_up_to(min(Rational(r), Rational(n - 2)), 8)) {
        if (c.is_integer()) continue;
        const std::string id = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " c=" + c.str();
        try {
          const auto rec = synth_fano_index(n, r, c);
          ++cone;
          const auto& inv = rec.invariants;
          t.expect(rec.branch == "cone", id + " branch " + rec.branch);
          t.expect(inv.fano_index == c && inv.gen_index == c && inv.seshadri_antican == c, id + " " + eq(inv.fano_index, c));
          t.expect(clean(rec), id + " checks");
        } catch (const Error& e) {
          t.expect(false, id + " " + e.what());
        }
      }
    for (Int a = 2; a <= 8; ++a) {
      const Rational c = Rational(n - 2) + q(1, a);
      const std::string id = "n=" + std::to_string(n) + " c=" + c.str();
      try {
        const auto rec = synth_fano_index(n, n - 1, c);
        ++weighted;
        t.expect(rec.branch == "wps1", id + " branch " + rec.branch);
        t.expect(rec.invariants.fano_index == c, id + " " + eq(rec.invariants.fano_index, c));
        t.expect(clean(rec), id + " checks");
      } catch (const Error& e) {
        t.expect(false, id + " " + e.what());
      }
    }
  }
  note = std::to_string(cone) + " cone records, " + std::to_string(weighted) + " weighted records";
  return t;
}

Tally criterion5(std::string& note) {
  Tally t;
  std::size_t rows = 0;
  auto check = [&](const ExampleRecord& rec, const Rational& iota, const Rational& eps) {
    ++rows;
    t.expect(rec.invariants.fano_index == iota, rec.id + " iota " + eq(rec.invariants.fano_index, iota));
    t.expect(rec.invariants.seshadri_antican == eps, rec.id + " eps " + eq(rec.invariants.seshadri_antican, eps));
    t.expect(clean(rec), rec.id + " checks");
  };
  for (Int n = 3; n <= 6; ++n) {
    for (Int m = 1; m <= 7; ++m) {
      const Rational v = Rational(n - 2) + q(1, m);
      check(wps_case1_record(n, m), v, v);
    }
    for (Int m = 2; m <= 7; ++m)
      for (Int mp = 1; mp < m; ++mp)
        if (std::gcd(mp, m) == 1)
          check(wps_case2_record(n, mp, m), q((n - 2) * mp + m, mp * m), Rational(1) + q((n - 2) * mp, m));
  }
  for (Int a2 = 1; a2 <= 7; ++a2)
    for (Int a1 = 1; a1 <= a2; ++a1)
      if (std::gcd(a1, a2) == 1) {
        check(wps_surface_record(a1, a2, 1), q(1, a1), Rational(1));
        check(wps_surface_record(a1, a2, 2), q(1, a2), q(a1, a2));
      }
  note = std::to_string(rows) + " weighted rows";
  return t;
}

Tally criterion6(std::string& note) {
  Tally t;
  for (Int r = 2; r <= 4; ++r) {
    const auto rec = mixed_record(r);
    const std::string id = "r=" + std::to_string(r);
    t.expect(dimension(rec.variety()) == 2 * r + 2, id + " dimension");
    t.expect(std::get<BundleVariety>(rec.variety()) == BundleVariety(r + 2, 1, std::vector<Int>(r, r - 2)),
             id + " bundle");
    t.expect(rec.invariants.fano_index == Rational(1), id + " iota " + eq(rec.invariants.fano_index, Rational(1)));
    t.expect(rec.invariants.gen_index == Rational(r), id + " gen_index " + eq(rec.invariants.gen_index, Rational(r)));
    t.expect(clean(rec), id + " checks");
  }
  note = "r = 2, 3, 4";
  return t;
}

Tally criterion7(std::string& note) {
  Tally t;
  const auto cat = standard_catalog();
  t.expect(cat.size() >= 500, "catalog has only " + std::to_string(cat.size()) + " records");
  const auto rep = sweep_records(cat);
  for (const auto& f : rep.failures) t.expect(false, f.record + " " + f.check + " " + f.detail);
  t.expect(rep.failed == 0, "failures present");
  std::size_t boundary = 0, rc_checked = 0, audits = 0;
  for (const auto& rec : cat) {
    const auto cr = check_record(rec);
    for (const auto& c : cr.checks) {
      if (c.name == "rc_consistency" && c.status == CheckStatus::pass && c.detail.find("premise") == std::string::npos)
        ++rc_checked;
      if (c.name == "max_seshadri_audit" && c.status == CheckStatus::pass && c.detail.find("premise") == std::string::npos)
        ++audits;
    }
    if (rec.branch != "rc_elliptic") continue;
    ++boundary;
    const Rational ra(rec.foliation.algebraic_rank);
    t.expect(rec.invariants.seshadri_antican == ra - Rational(1), rec.id + " eps != r^a - 1");
    t.expect(rec.foliation.leaf_rc == Tri::no, rec.id + " leaf_rc");
    t.expect(cr.all_passed(), rec.id + " checks");
  }
  t.expect(boundary > 0, "no boundary records");
  t.expect(audits > 0, "equality audit never exercised");
  note = std::to_string(cat.size()) + " records, " + std::to_string(rep.total) + " checks (" +
         std::to_string(rep.skipped) + " skipped), " + std::to_string(boundary) + " boundary records, " +
         std::to_string(rc_checked) + " RC premises met, " + std::to_string(audits) + " equality audits";
  return t;
}

std::pair<int, std::string> run(std::vector<std::string> args) {
  args.insert(args.begin(), "fanofol");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str() + "\x1f" + err.str()};
}

Tally criterion8(std::string& note) {
  Tally t;
  const std::vector<std::vector<std::string>> cmds{
      {"synth", "--kind", "generalized-index", "--n", "3", "--r", "2", "--c", "3/2", "--out", "json"},
      {"synth", "--kind", "seshadri", "--n", "2", "--r", "1", "--c", "2/3", "--out", "csv"},
      {"synth", "--kind", "fano-index", "--n", "3", "--r", "2", "--c", "5/3"},
      {"table", "--family", "hirzebruch", "--a", "2..6"},
      {"table", "--family", "cone", "--rprime", "2", "--m", "2", "--d", "0..3", "--out", "json"},
      {"table", "--family", "case1", "--out", "csv"},
      {"verify", "--grid", "oracle", "--m-max", "2", "--k-max", "1", "--out", "json"},
      {"verify", "--grid", "standard"},
      {"info"},
      {"catalog", "export"},
  };
  for (const auto& c : cmds) {
    const auto a = run(c), b = run(c);
    std::string line;
    for (const auto& w : c) line += " " + w;
    t.expect(a == b, "non-deterministic:" + line);
  }
  const auto exported = run({"catalog", "export"}).second;
  const std::string text = exported.substr(0, exported.find('\x1f'));
  try {
    const auto back = dump(to_json(parse_catalog(text)));
    t.expect(back == text, "export/import/export differs");
  } catch (const Error& e) {
    t.expect(false, std::string("import failed: ") + e.what());
  }
  note = std::to_string(cmds.size()) + " commands run twice, catalog round trip of " + std::to_string(text.size()) +
         " bytes";
  return t;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Tally(std::string&)>>> criteria{
      {"generalized-index closed form equals slope formula and oracle", criterion1},
      {"Hirzebruch series gen_index = eps(gen_index*H0) = 1 - 1/a", criterion2},
      {"generalized-index synthesis grid with case-1 certificates", criterion3},
      {"Fano-index synthesis: cone grid and n-2+1/a", criterion4},
      {"weighted projective tables, four cases", criterion5},
      {"mixed example iota = 1 < gen_index = r", criterion6},
      {"theorem suite over the full catalog", criterion7},
      {"determinism and JSON round trip", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string note;
    Tally t;
    try {
      t = criteria[i].second(note);
    } catch (const std::exception& e) {
      t.problems.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = t.ok();
    failed += ok ? 0 : 1;
    std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ["
              << note << "]\n";
    for (const auto& p : t.problems) std::cout << "    " << p << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
