#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace fanofol;
using namespace fanofol::testing;

namespace {

Rational q(Int p, Int d) { return Rational(BigInt(p), BigInt(d)); }

const CheckOutcome& find(const CheckReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c;
  throw std::runtime_error("no check named " + name);
}

ExampleRecord bare_record(std::string id, FoliationDescriptor f) {
  ExampleRecord rec;
  rec.id = std::move(id);
  rec.branch = "test";
  rec.foliation = std::move(f);
  rec.invariants = compute_invariants(rec.foliation);
  return rec;
}

}  // namespace

TEST(CheckRecord, EmitsEveryCheckInFixedOrder) {
  const auto rep = check_record(hirzebruch_record(3));
  std::vector<std::string> names;
  for (const auto& c : rep.checks) names.push_back(c.name);
  EXPECT_EQ(names, (std::vector<std::string>{"descriptor_consistent", "invariants_recomputed", "target_match",
                                             "case1_constraints", "index_witness", "ko1_ra_ge_gen_index",
                                             "ko2_ra_ge_fano_index", "fano_le_gen_index", "seshadri_bound",
                                             "seshadri_bound_witness", "rc_consistency", "rc_consistency_witness",
                                             "max_seshadri_audit"}));
  EXPECT_TRUE(rep.all_passed());
}

TEST(CheckRecord, MixedExampleStrictGap) {
  const auto rec = mixed_record(3);
  const auto rep = check_record(rec);
  EXPECT_TRUE(rep.all_passed());
  EXPECT_EQ(find(rep, "ko1_ra_ge_gen_index").status, CheckStatus::pass);
  EXPECT_EQ(find(rep, "fano_le_gen_index").status, CheckStatus::pass);
  EXPECT_LT(*rec.invariants.fano_index, *rec.invariants.gen_index);
  EXPECT_EQ(rec.foliation.algebraic_rank, 6);
}

TEST(CheckRecord, GenusConeRecordPassesVacuously) {
  const auto rec = rc_genus_record(5, 3, 2, 1);
  EXPECT_EQ(rec.foliation.leaf_rc, Tri::no);
  // eps = r - 1 - d/m with r^a = r
  EXPECT_EQ(rec.invariants.seshadri_antican, Rational(2) - q(1, 2));
  EXPECT_EQ(rec.foliation.algebraic_rank, 3);
  const auto rep = check_record(rec);
  EXPECT_TRUE(rep.all_passed());
  EXPECT_EQ(find(rep, "rc_consistency").status, CheckStatus::pass);
  EXPECT_NE(find(rep, "rc_consistency").detail.find("premise not met"), std::string::npos);
}

TEST(CheckRecord, EllipticBoundaryRecord) {
  for (Int r = 2; r <= 4; ++r) {
    const auto rec = rc_elliptic_record(r + 2, r, 2);
    EXPECT_EQ(rec.invariants.seshadri_antican, Rational(r - 1));
    EXPECT_EQ(rec.invariants.gen_index, Rational(r - 1));
    EXPECT_EQ(rec.invariants.fano_index, Rational(r - 1));
    EXPECT_EQ(rec.foliation.algebraic_rank, r);
    EXPECT_EQ(rec.foliation.leaf_rc, Tri::no);
    EXPECT_TRUE(check_record(rec).all_passed());
  }
}

TEST(CheckRecord, ProjectiveSpaceEqualityCase) {
  for (Int n = 3; n <= 6; ++n)
    for (Int r = 1; r < n; ++r) {
      const auto rec = synth_seshadri(n, r, Rational(r));
      EXPECT_EQ(rec.invariants.seshadri_antican, Rational(r));
      const auto audit = find(check_record(rec), "max_seshadri_audit");
      EXPECT_EQ(audit.status, CheckStatus::pass);
      EXPECT_EQ(audit.detail.find("premise"), std::string::npos) << "premise should hold for n=" << n;
    }
}

TEST(CheckRecord, DetectsTamperedInvariant) {
  auto rec = hirzebruch_record(4);
  rec.invariants.gen_index = q(2, 3);
  const auto rep = check_record(rec);
  EXPECT_FALSE(rep.all_passed());
  EXPECT_EQ(find(rep, "invariants_recomputed").status, CheckStatus::fail);
}

TEST(CheckRecord, DetectsTamperedDescriptor) {
  auto rec = synth_fano_index(4, 2, q(3, 2));
  rec.foliation.canonical = RankOneClass{q(-5, 3)};
  rec.invariants = compute_invariants(rec.foliation);
  const auto rep = check_record(rec);
  EXPECT_EQ(find(rep, "descriptor_consistent").status, CheckStatus::fail);
  EXPECT_EQ(find(rep, "target_match").status, CheckStatus::fail);
}

TEST(CheckRecord, DetectsBrokenCase1Parameters) {
  auto rec = synth_generalized_index(4, 3, q(7, 3));
  rec.parameters->l += 1;
  EXPECT_EQ(find(check_record(rec), "case1_constraints").status, CheckStatus::fail);
}

TEST(CheckRecord, InjectedRcViolation) {
  // P^n with K = -r H and leaf_rc forced to false
  auto f = pn_catalog(4, 2, -2);
  f.leaf_rc = Tri::no;
  const auto rep = check_record(bare_record("injected-rc", f));
  EXPECT_EQ(find(rep, "rc_consistency").status, CheckStatus::fail);
  EXPECT_EQ(find(rep, "rc_consistency_witness").status, CheckStatus::fail);
}

TEST(CheckRecord, InjectedAuditViolation) {
  // a curve family on P^3 claiming -K = H: eps = r^a on a smooth ambient without
  // a linear-pullback recipe
  FoliationDescriptor f;
  f.ambient = WeightedProjectiveSpace::projective_space(3);
  f.rank = f.algebraic_rank = 1;
  f.canonical = RankOneClass{Rational(-1)};
  f.recipe = recipe::CurveFamily{-1, 2};
  f.leaf_rc = Tri::no;
  const auto rep = check_record(bare_record("injected-audit", f));
  EXPECT_EQ(find(rep, "max_seshadri_audit").status, CheckStatus::fail);
  EXPECT_EQ(find(rep, "descriptor_consistent").status, CheckStatus::fail);
}

TEST(CheckRecord, InjectedInequalityViolations) {
  auto rec = hirzebruch_record(3);
  rec.invariants.gen_index = Rational(5);
  rec.invariants.fano_index = Rational(7);
  rec.invariants.seshadri_antican = Rational(4);
  rec.invariants.positivity.nef = true;
  const auto rep = check_record(rec);
  EXPECT_EQ(find(rep, "ko1_ra_ge_gen_index").status, CheckStatus::fail);
  EXPECT_EQ(find(rep, "ko2_ra_ge_fano_index").status, CheckStatus::fail);
  EXPECT_EQ(find(rep, "fano_le_gen_index").status, CheckStatus::fail);
  EXPECT_EQ(find(rep, "seshadri_bound").status, CheckStatus::fail);
}

TEST(CheckRecord, SkipsOnlyForAbsentInvariants) {
  const auto rec = cone_table_record(2, 2, 2, 4);  // not Fano
  const auto rep = check_record(rec);
  EXPECT_TRUE(rep.all_passed());
  EXPECT_EQ(find(rep, "ko1_ra_ge_gen_index").status, CheckStatus::skip);
  EXPECT_EQ(find(rep, "seshadri_bound").status, CheckStatus::pass);
}

TEST(Sweep, EmptyGridGivesEmptyReport) {
  const auto a = sweep_requests({});
  EXPECT_EQ(a.total, 0u);
  EXPECT_TRUE(a.failures.empty());
  const auto b = sweep_records({});
  EXPECT_EQ(b.total, 0u);
}

TEST(Sweep, GeneralizedIndexGridHasNoFailures) {
  std::vector<SynthesisRequest> reqs;
  for (Int n = 2; n <= 4; ++n)
    for (Int r = 1; r < n; ++r)
      for (const auto& c : rationals_up_to(Rational(r), 6)) reqs.push_back({SynthKind::generalized_index, n, r, c});
  const auto rep = sweep_requests(reqs);
  EXPECT_GT(rep.total, 0u);
  EXPECT_EQ(rep.failed, 0u);
  for (const auto& f : rep.failures) ADD_FAILURE() << f.record << " " << f.check << " " << f.detail;
}

TEST(Sweep, RecordOracleCheckCatchesWrongValue) {
  auto rec = synth_generalized_index(3, 2, q(3, 2));
  EXPECT_EQ(record_oracle_check(rec).status, CheckStatus::pass);
  rec.invariants.gen_index = q(4, 3);
  EXPECT_EQ(record_oracle_check(rec).status, CheckStatus::fail);
  EXPECT_EQ(record_oracle_check(synth_seshadri(2, 1, q(2, 3))).status, CheckStatus::skip);
}

TEST(Sweep, ParallelMapKeepsOrder) {
  const auto v = parallel_map<std::size_t>(1000, [](std::size_t i) { return i * i; }, 4);
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], i * i);
  EXPECT_TRUE(parallel_map<int>(0, [](std::size_t) { return 1; }).empty());
}

TEST(Sweep, BLists) {
  const auto bl = b_lists(1, 2);
  EXPECT_EQ(bl, (std::vector<std::vector<Int>>{{1}, {1, 1}, {1, 0}, {0}, {0, 0}}));
}

TEST(Catalog, StandardCatalogIsLargeAndClean) {
  const auto cat = standard_catalog();
  EXPECT_GE(cat.size(), 500u);
  std::set<std::string> ids;
  for (const auto& r : cat) EXPECT_TRUE(ids.insert(r.id).second) << "duplicate id " << r.id;
  const auto rep = sweep_records(cat);
  EXPECT_EQ(rep.failed, 0u);
  for (const auto& f : rep.failures) ADD_FAILURE() << f.record << " " << f.check << " " << f.detail;
}

TEST(Catalog, RationalsUpTo) {
  const auto v = rationals_up_to(Rational(1), 3);
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(x.str());
  EXPECT_EQ(s, (std::vector<std::string>{"1/3", "1/2", "2/3", "1"}));
}
