#include <gtest/gtest.h>

#include <random>

#include "qstab/alg.hpp"
#include "qstab/triples.hpp"

using namespace qstab;

namespace {
Collection col(const std::string& s) { return parse_collection("q1", s); }
StabilityCondition std_sc(const std::string& z) { return StabilityCondition::standard(q1(), parse_charge(z)); }
PhaseKey ph(int deg, int re, int im) { return PhaseKey{deg, CQ(Q(re), Q(im))}; }
}  // namespace

TEST(SigmaCollection, Examples) {
    auto sc = std_sc("-1+1i,0+1i,1+1i");
    EXPECT_EQ(validate_sigma_collection(sc, col("E1:0,M,E3:0")).verdict, Status::Yes);
    EXPECT_EQ(validate_sigma_collection(sc, col("E1:1,E1:0,M")).verdict, Status::No);
    SigmaReport r = validate_sigma_collection(sc, col("E1:0,M[1],E3:0"));
    EXPECT_EQ(r.verdict, Status::No);
    EXPECT_FALSE(r.window_diff);
    EXPECT_EQ(r.window_diff, r.window_half_open_left);
    EXPECT_EQ(r.window_diff, r.window_half_open_right);
}

TEST(SigmaCollection, EnumerationCounts) {
    EXPECT_EQ(enumerate_sigma_triples(std_sc("-1+1i,0+1i,1+1i"), 3, 2).size(), 15u);
    EXPECT_EQ(enumerate_sigma_triples(std_sc("-4+2i,17/10+17/10i,2+1/2i"), 3, 2).size(), 11u);
}

TEST(SigmaCollection, ScalingInvariance) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 5; ++t) {
        auto sc = StabilityCondition::standard(q1(), random_charge(3, rng));
        auto a = enumerate_sigma_triples(sc, 2, 1), b = enumerate_sigma_triples(sc.scaled(Q(5, 2)), 2, 1);
        ASSERT_EQ(a.size(), b.size());
        for (size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].collection, b[i].collection);
    }
}

TEST(SigmaCollection, NoTubeCouple) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 5; ++t) {
        auto sc = StabilityCondition::standard(q1(), random_charge(3, rng));
        for (const auto& r : enumerate_sigma_triples(sc, 2, 2)) {
            int tube = 0;
            for (const auto& x : r.collection) tube += x.family == "M" || x.family == "M'";
            EXPECT_LE(tube, 1) << collection_to_string(r.collection);
        }
    }
}

TEST(ShiftData, RuleA) {
    HomOracle hom = [](int, int, int k) { return k == 0 ? 1 : 0; };
    auto n = normalize_shift_data({ph(0, 1, 1), ph(0, -1, 1), ph(1, 0, 1)}, hom);
    EXPECT_EQ(n.rule, 'a');
    EXPECT_TRUE(n.valid);
    EXPECT_EQ(n.shifts, (std::array<int, 3>{0, -1, -2}));
}

TEST(ShiftData, EqualPhasesMatchNoRule) {
    HomOracle hom = [](int, int, int) { return 1; };
    auto n = normalize_shift_data({ph(0, 1, 1), ph(0, 1, 1), ph(0, 1, 1)}, hom);
    EXPECT_EQ(n.rule, 0);
    EXPECT_FALSE(n.valid);
}

TEST(ShiftData, AgreesWithDirectCheck) {
    auto sc = std_sc("-1+1i,0+1i,1+1i");
    ShiftNormalization info;
    auto t = normalize_shifts(sc, col("E1:0,M,E3:0"), &info);
    ASSERT_TRUE(t.has_value());
    EXPECT_TRUE(info.valid);
    EXPECT_EQ(validate_sigma_collection(sc, *t).verdict, Status::Yes);
}

TEST(Kronecker, PairAndGrowth) {
    auto sc = StabilityCondition::standard(kronecker(2), parse_charge("-1+1i,1+1i"));
    SigmaReport r = kronecker_sigma_pair(2, sc, 6);
    EXPECT_EQ(r.verdict, Status::Yes);
    ASSERT_EQ(r.members.size(), 2u);
    EXPECT_NEAR(r.members[0].phase->value(), 0.75, 1e-12);
    EXPECT_NEAR(r.members[1].phase->value(), 0.25, 1e-12);
    GrowthCheck g2 = kronecker_growth(2, 1, 4), g3 = kronecker_growth(3, 1, 4);
    EXPECT_TRUE(g2.pass);
    EXPECT_TRUE(g3.pass);
    for (int l : {2, 3}) {
        // hom(s_i, s_{i+k}) follows a_k = l a_{k-1} - a_{k-2} with a_0 = 1, a_1 = l
        std::string want = ":";
        long long a0 = 1, a1 = l;
        for (int k = 1; k <= 4; ++k) {
            want += " " + std::to_string(a1);
            long long a2 = l * a1 - a0;
            a0 = a1;
            a1 = a2;
        }
        for (const auto& row : (l == 2 ? g2 : g3).rows) EXPECT_EQ(row.substr(row.find(':')), want);
    }
}
