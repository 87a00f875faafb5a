#include <gtest/gtest.h>

#include <random>

#include "qstab/alg.hpp"

using namespace qstab;

namespace {
ExcObject ob(const std::string& s) { return parse_object("q1", s); }

const CheckItem* item(const CaseReport& r, const std::string& id) {
    for (const auto& c : r.checklist)
        if (c.id == id) return &c;
    return nullptr;
}

std::string label_of(const FormalObject& x) {
    std::string s;
    for (const auto& m : x.summands) s += (s.empty() ? "" : "+") + summand_key(m);
    return s;
}
}  // namespace

TEST(Classify, StandardHeartC1) {
    auto sc = StabilityCondition::standard(q1(), parse_charge("-1+1i,1+1i,-1+2i"));
    CaseReport r = alg_classify(sc, ob("E2:0"));
    EXPECT_EQ(r.tag, CaseTag::C1);
    EXPECT_EQ(label_of(r.a), "E3:0");
    EXPECT_EQ(label_of(r.b0), "M");
    EXPECT_TRUE(r.all_pass());
    EXPECT_EQ(r.count(CheckStatus::Fail), 0);
    EXPECT_THROW(alg_classify(sc, ob("E4:0")), DomainError);
}

TEST(Classify, FabricatedC1FailsSummandCondition) {
    DeclaredSigma d;
    FormalObject a = object_formal(ob("E1:0")), b = object_formal(ob("M")), z;
    CaseReport r = alg_classify_symbolic("fabricated", ob("E2:0"), a, z, b, z, d);
    ASSERT_EQ(r.tag, CaseTag::C1);
    const CheckItem* c = item(r, "C1.4");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->status, CheckStatus::Fail);
    EXPECT_FALSE(r.all_pass());
}

TEST(Classify, Fixtures) {
    for (const auto& name : fixture_names()) {
        CaseReport r = fixture_report(name);
        EXPECT_EQ(case_name(r.tag), name);
        EXPECT_FALSE(r.computed);
        EXPECT_TRUE(r.all_pass()) << report_to_json(r);
    }
}

TEST(Classify, ComputedC2AndC3) {
    for (CaseTag t : {CaseTag::C2, CaseTag::C3}) {
        auto r = find_computed_case("q1", t, 7, 400, 2);
        ASSERT_TRUE(r.has_value()) << case_name(t);
        EXPECT_EQ(r->tag, t);
        EXPECT_TRUE(r->all_pass()) << report_to_json(*r);
        EXPECT_NE(r->sigma->heart().kind, Heart::Standard);
    }
}

TEST(Classify, StandardHeartOnlyC1) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        auto sc = StabilityCondition::standard(q1(), random_charge(3, rng));
        for (const auto& x : catalog_objects("q1", 2)) {
            if (is_semistable(sc, x) == Status::Yes) continue;
            CaseReport r = alg_classify(sc, x);
            EXPECT_EQ(r.tag, CaseTag::C1);
            EXPECT_TRUE(r.all_pass()) << report_to_json(r);
        }
    }
}

TEST(RSequence, Invariants) {
    std::mt19937_64 rng(9);
    int seen = 0;
    for (int t = 0; t < 15; ++t) {
        auto sc = StabilityCondition::standard(q1(), random_charge(3, rng));
        for (const auto& x : catalog_objects("q1", 1)) {
            RSequence s = r_sequence(sc, x);
            for (const auto& c : s.invariants) EXPECT_EQ(c.status, CheckStatus::Pass) << c.id << " " << c.detail;
            EXPECT_TRUE(s.end == "final" || s.end == "semistable-end") << s.end;
            ++seen;
        }
    }
    EXPECT_GT(seen, 0);
}

TEST(HomP, ShiftsIncluded) {
    FormalObject m = object_formal(ob("M")), e = object_formal(ob("E1:0"));
    EXPECT_EQ(hom_p(shift_object(m, 1), shift_object(m, 1), 0), 1);
    EXPECT_EQ(hom_p(m, shift_object(m, 1), -1), 1);
    EXPECT_EQ(hom_p(m, shift_object(m, 1), 1), 0);
    EXPECT_EQ(hom_star(m, e) + hom_star(e, m), hom_total(ob("M"), ob("E1:0")) + hom_total(ob("E1:0"), ob("M")));
}
