#include <gtest/gtest.h>

#include <random>

#include "qstab/alg.hpp"

using namespace qstab;

namespace {
ExcObject ob(const std::string& s) { return parse_object("q1", s); }
StabilityCondition std_sc(const std::string& z) { return StabilityCondition::standard(q1(), parse_charge(z)); }
}  // namespace

TEST(Charge, Evaluation) {
    auto sc = std_sc("-1+1i,0+1i,1+1i");
    EXPECT_EQ(to_string(sc.charge(object_class(ob("E4:1")))), "-1+5i");
    EXPECT_THROW(std_sc("1+0i,0+1i,1+1i"), DomainError);
    EXPECT_THROW(parse_charge("0.5+1i"), DomainError);
}

TEST(PhaseKey, ExactOrder) {
    PhaseKey a{0, CQ(Q(1), Q(1))}, b{0, CQ(Q(-1), Q(1))}, c{1, CQ(Q(1), Q(1))};
    EXPECT_LT(a, b);
    EXPECT_LT(b, c);
    EXPECT_TRUE(diff_below_one(c, b));
    EXPECT_FALSE(diff_below_one(c, a));
    EXPECT_EQ(compare(PhaseKey{0, CQ(Q(2), Q(2))}, a), 0);
}

TEST(Semistable, SimplesAndHn) {
    auto sc = std_sc("-1+1i,1+1i,-1+2i");
    for (const std::string s : {"E1:0", "M", "E3:0"}) EXPECT_EQ(is_semistable(sc, ob(s)), Status::Yes);
    HNResult h = hn_filtration(sc, ob("E2:0"));
    ASSERT_EQ(h.status, Status::Yes);
    ASSERT_EQ(h.factors.size(), 2u);
    EXPECT_EQ(summand_key(h.factors[0].object.summands[0]), "E3:0");
    EXPECT_EQ(summand_key(h.factors[1].object.summands[0]), "M");
    EXPECT_NEAR(h.factors[1].phase.value(), 0.25, 1e-12);
}

TEST(Semistable, ScalingInvariance) {
    std::mt19937_64 rng(11);
    auto objs = catalog_objects("q1", 2);
    for (int t = 0; t < 20; ++t) {
        auto z = random_charge(3, rng);
        StabilityCondition a = StabilityCondition::standard(q1(), z);
        StabilityCondition b = a.scaled(Q(7, 3));
        const auto& x = objs[t % objs.size()];
        EXPECT_EQ(is_semistable(a, x), is_semistable(b, x));
        EXPECT_EQ(theta(a, x), theta(b, x));
    }
}

TEST(Hn, SoundnessOnCatalog) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        auto sc = StabilityCondition::standard(q1(), random_charge(3, rng));
        for (const auto& x : catalog_objects("q1", 2)) {
            HNResult h = hn_filtration(sc, x);
            ASSERT_EQ(h.status, Status::Yes);
            DimVec k(3, 0);
            for (size_t i = 0; i < h.factors.size(); ++i) {
                k = add(k, h.factors[i].object.klass(3));
                EXPECT_EQ(is_semistable(sc, h.factors[i].object), Status::Yes);
                if (i) EXPECT_LT(h.factors[i].phase, h.factors[i - 1].phase);
            }
            EXPECT_EQ(k, object_class(x));
        }
    }
}

TEST(Theta, AdditiveOnSums) {
    auto sc = std_sc("-1+1i,1+1i,-1+2i");
    FormalObject s = object_formal(ob("E2:0"));
    for (const auto& m : object_formal(ob("E4:1")).summands) s.summands.push_back(m);
    Theta t = theta(sc, s), a = theta(sc, ob("E2:0")), b = theta(sc, ob("E4:1"));
    for (const auto& [k, v] : b) a[k] += v;
    EXPECT_EQ(t, a);
    EXPECT_TRUE(theta_less({{"M", 1}}, {{"M", 1}, {"E3:0", 1}}));
    EXPECT_FALSE(theta_less({{"M", 1}}, {{"M", 1}}));
}

TEST(Hearts, TiltedSimples) {
    StabilityCondition sc(q1(), parse_heart(q1(), "source:b"), parse_charge("-1+1i,1+1i,-1+2i"));
    EXPECT_EQ(is_semistable(sc, ob("E1:0").shifted(1)), Status::Yes);
    EXPECT_THROW(parse_heart(q2(), "source:x"), DomainError);
}

TEST(PhaseStats, TwoLimitPoints) {
    auto sc = std_sc("-4+2i,17/10+17/10i,2+1/2i");
    PhaseStats ps = phase_stats(sc, 5);
    std::vector<double> e4;
    for (const auto& e : ps.entries)
        if (e.object.family == "E4") {
            ASSERT_EQ(e.semistable, Status::Yes);
            e4.push_back(e.phase.value());
        }
    ASSERT_EQ(e4.size(), 6u);
    for (size_t i = 1; i < e4.size(); ++i) {
        EXPECT_LT(e4[i], e4[i - 1]);
        EXPECT_LT(std::fabs(e4[i] - ps.delta_phase), std::fabs(e4[i - 1] - ps.delta_phase));
    }
    EXPECT_NEAR(ps.delta_phase, 0.522698, 1e-6);
}

TEST(RestrictCharge, Range) {
    auto z = parse_charge("-1+1i,0+1i,1+1i");
    EXPECT_EQ(restrict_charge(z, 1, 2).size(), 2u);
    EXPECT_THROW(restrict_charge(z, 2, 1), DomainError);
}
