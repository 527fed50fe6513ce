#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace fanofol;
using namespace fanofol::testing;

namespace {

Rational q(Int p, Int d) { return Rational(BigInt(p), BigInt(d)); }

GeneralizedCone cone_p2(Int m, Int rp) { return GeneralizedCone(PolarizedBase::projective_space(2), m, rp); }

}  // namespace

TEST(WeightedProjectiveSpace, Validation) {
  EXPECT_THROW(WeightedProjectiveSpace({1}), DomainError);
  EXPECT_THROW(WeightedProjectiveSpace({2, 3}), DomainError);
  EXPECT_THROW(WeightedProjectiveSpace({1, 3, 2}), DomainError);
  EXPECT_THROW(WeightedProjectiveSpace({1, 2, 4}), DomainError);
  EXPECT_THROW(WeightedProjectiveSpace({1, 0, 1}), DomainError);
  const WeightedProjectiveSpace w({1, 2, 3});
  EXPECT_EQ(w.dim(), 2);
  EXPECT_EQ(w.a_max(), 3);
  EXPECT_FALSE(w.is_projective_space());
  EXPECT_TRUE(WeightedProjectiveSpace::projective_space(4).is_projective_space());
  EXPECT_EQ(w.str(), "P(1,2,3)");
}

TEST(GeneralizedCone, Validation) {
  EXPECT_THROW(cone_p2(0, 1), DomainError);
  EXPECT_THROW(cone_p2(1, 0), DomainError);
  EXPECT_THROW(GeneralizedCone(PolarizedBase{0, false, SingularityClass::other, "Z"}, 1, 1), DomainError);
  EXPECT_THROW(GeneralizedCone(PolarizedBase{2, true, SingularityClass::other, "Z"}, 1, 1), DomainError);
  const auto y = cone_p2(2, 2);
  EXPECT_EQ(y.dim(), 4);
  EXPECT_FALSE(y.is_smooth());
  EXPECT_TRUE(cone_p2(1, 2).is_smooth());
  EXPECT_EQ(y.resolution(), BundleVariety(2, 2, {0, 0}));
}

TEST(CartierIndex, Examples) {
  EXPECT_EQ(cartier_index(WeightedProjectiveSpace({1, 2, 3})), 6);
  EXPECT_EQ(cartier_index(WeightedProjectiveSpace({1, 1, 1, 2})), 2);
  EXPECT_EQ(cartier_index(cone_p2(5, 3)), 1);
  EXPECT_EQ(cartier_index(RankOneVariety{WeightedProjectiveSpace({1, 4, 6, 9})}), 36);
}

TEST(SeshadriH, Examples) {
  EXPECT_EQ(seshadri_H(WeightedProjectiveSpace({1, 2, 3})), q(1, 3));
  EXPECT_EQ(seshadri_H(cone_p2(2, 2)), Rational(1));
  EXPECT_EQ(seshadri_H(WeightedProjectiveSpace::projective_space(5)), Rational(1));
  EXPECT_EQ(seshadri(WeightedProjectiveSpace({1, 2, 3}), RankOneClass{Rational(2)}), q(2, 3));
  EXPECT_THROW(seshadri(cone_p2(1, 1), RankOneClass{Rational(-1)}), DomainError);
}

TEST(IndexPair, Examples) {
  const auto a = index_pair(WeightedProjectiveSpace({1, 1, 1, 2}), RankOneClass{Rational(3)});
  EXPECT_EQ(a.gen_index, q(3, 2));
  EXPECT_EQ(a.fano_index, q(3, 2));
  const auto b = index_pair(WeightedProjectiveSpace({1, 2, 3}), RankOneClass{Rational(3)});
  EXPECT_EQ(b.gen_index, q(1, 2));
  EXPECT_EQ(b.fano_index, q(1, 2));
  const auto c = index_pair(cone_p2(2, 2), RankOneClass{q(3, 2)});
  EXPECT_EQ(c.gen_index, q(3, 2));
  EXPECT_EQ(c.fano_index, q(3, 2));
  EXPECT_THROW(index_pair(cone_p2(2, 2), RankOneClass{Rational(0)}), DomainError);
}

TEST(ConePushforward, Examples) {
  const BundleVariety xb(2, 2, {0, 0});
  EXPECT_EQ(cone_pushforward(xb, {Rational(1), Rational(0)}).s, Rational(1));
  EXPECT_EQ(cone_pushforward(xb, {Rational(0), Rational(2)}).s, Rational(1));
  EXPECT_EQ(cone_pushforward(xb, {Rational(3), Rational(-3)}).s, q(3, 2));
  EXPECT_THROW(cone_pushforward(BundleVariety(2, 2, {1}), {Rational(1), Rational(0)}), DomainError);
}

TEST(ConeFoliationInvariants, Examples) {
  const auto a = cone_foliation_invariants(cone_p2(2, 2), 1);
  EXPECT_EQ(a.anticanonical.s, q(3, 2));
  EXPECT_EQ(a.report.gen_index, q(3, 2));
  EXPECT_EQ(a.report.fano_index, q(3, 2));
  EXPECT_EQ(a.report.seshadri_antican, q(3, 2));
  EXPECT_EQ(a.singularities, ConeSingularities::klt);

  for (Int r = 2; r <= 5; ++r) {
    const GeneralizedCone y(elliptic_product_base(3), 4, r - 1);
    const auto b = cone_foliation_invariants(y, 0);
    EXPECT_EQ(b.report.gen_index, Rational(r - 1));
    EXPECT_EQ(b.report.fano_index, Rational(r - 1));
    EXPECT_EQ(b.report.seshadri_antican, Rational(r - 1));
    EXPECT_EQ(b.singularities, ConeSingularities::lc);
  }
  EXPECT_THROW(cone_foliation_invariants(cone_p2(1, 2), 2), NotFanoError);
  EXPECT_THROW(cone_foliation_invariants(cone_p2(1, 2), 2), DomainError);
  EXPECT_EQ(cone_foliation_invariants(cone_p2(1, 2), 0).singularities, ConeSingularities::smooth);
}

TEST(ConeFoliationProperty, FormulaAgreesWithResolutionPushforward) {
  // -K on the cone equals mu_* of (r'+1) Lambda - (m + d) pi^*A on the resolution
  for (int i = 0; i < 300; ++i) {
    const Int k = uniform(2, 4), m = uniform(1, 6), rp = uniform(1, 4);
    const Int d = uniform(-3, m * rp - 1);
    const GeneralizedCone y(PolarizedBase::projective_space(k), m, rp);
    const auto inv = cone_foliation_invariants(y, d);
    const Class2 up{Rational(rp + 1), Rational(-(m + d))};
    EXPECT_EQ(cone_pushforward(y.resolution(), up).s, inv.anticanonical.s);
    EXPECT_EQ(inv.report.gen_index, inv.report.seshadri_antican);
    EXPECT_GT(*inv.report.gen_index, Rational(0));
  }
}

TEST(RankOneProperty, IndicesScaleLinearly) {
  for (int i = 0; i < 300; ++i) {
    std::vector<Int> w{1};
    const Int n = uniform(2, 5);
    for (Int j = 0; j < n; ++j) w.push_back(uniform(1, 7));
    std::sort(w.begin(), w.end());
    Int g = 0;
    for (std::size_t j = 1; j < w.size(); ++j) g = std::gcd(g, w[j]);
    if (g != 1) continue;
    const WeightedProjectiveSpace v(w);
    const Rational s(BigInt(uniform(1, 30)), BigInt(uniform(1, 5)));
    const Rational lambda(uniform(1, 7));
    EXPECT_EQ(index_pair(v, RankOneClass{lambda * s}).gen_index, lambda * index_pair(v, RankOneClass{s}).gen_index);
    EXPECT_EQ(seshadri(v, RankOneClass{lambda * s}), lambda * seshadri(v, RankOneClass{s}));
    // ind*H generates the ample Cartier classes
    EXPECT_EQ(index_pair(v, RankOneClass{s}).gen_index * Rational(cartier_index(v)), s);
  }
}

TEST(SingularityClass, StringRoundTrip) {
  for (auto s : {SingularityClass::smooth, SingularityClass::klt_fano, SingularityClass::numerically_trivial_canonical_lc,
                 SingularityClass::other})
    EXPECT_EQ(singularity_class_from_string(to_string(s)), s);
  EXPECT_THROW(singularity_class_from_string("nope"), ParseError);
}
