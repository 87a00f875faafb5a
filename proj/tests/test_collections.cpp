#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qstab/collections.hpp"

using namespace qstab;

namespace {
ExcObject ob(const std::string& s) { return parse_object("q1", s); }
Collection col(const std::string& s) { return parse_collection("q1", s); }
}  // namespace

TEST(PairStatus, Profiles) {
    PairProfile p = pair_status(ob("E1:0"), ob("M"));
    EXPECT_TRUE(p.exceptional);
    PairProfile c = pair_status(ob("M"), ob("M'"));
    EXPECT_FALSE(c.exceptional);
}

TEST(Enumerate, CountsAgainstListedFamilies) {
    // listed counts frozen from the family tables, enumeration checked against an exhaustive hom scan
    const std::vector<int> ws{0, 1, 2, 4, 6};
    const std::vector<size_t> pairs{13, 29, 45, 77, 109}, triples{9, 25, 41, 73, 105};
    for (size_t i = 0; i < ws.size(); ++i) {
        EXPECT_EQ(listed_q1_collections(2, ws[i]).size(), pairs[i]);
        EXPECT_EQ(listed_q1_collections(3, ws[i]).size(), triples[i]);
    }
    auto objs = catalog_objects("q1", 2);
    std::set<Collection> brute;
    for (const auto& x : objs)
        for (const auto& y : objs) {
            if (x == y) continue;
            Rep a = realize(x).rep, b = realize(y).rep;
            int back = oracle::hom_dim(b, a);
            int back_ext = back - int(oracle::euler(a.q, b.dimv(), a.dimv()));
            if (back == 0 && back_ext == 0) brute.insert({x, y});
        }
    auto found = enumerate_collections("q1", 2, 2);
    EXPECT_EQ(std::set<Collection>(found.begin(), found.end()), brute);
}

TEST(Mutation, Examples) {
    Normalized n = mutate(ob("E1:0"), ob("E2:0"), Side::Left);
    EXPECT_EQ(n.object.label(), "E1:1");
    EXPECT_EQ(n.parity, 1);
    Normalized r = mutate(ExcObject{"k3", "s", 1, 0}, ExcObject{"k3", "s", 2, 0}, Side::Right);
    EXPECT_EQ(r.object.base_label(), "s3");
    Normalized r0 = mutate(ExcObject{"k3", "s", -1, 0}, ExcObject{"k3", "s", 0, 0}, Side::Right);
    EXPECT_EQ(r0.object.base_label(), "s1");
}

TEST(Braid, ThreeCycle) {
    Collection t = col("E1:2,M,E4:1");
    Collection s = braid_act("L1", t);
    Collection u;
    for (const auto& x : s) u.push_back(x.shifted(-x.shift));
    EXPECT_EQ(u, col("E1:2,E1:1,M"));
    Collection back = braid_act("L1 L1 L1", t);
    for (auto& x : back) x = x.shifted(-x.shift);
    EXPECT_EQ(back, t);
    EXPECT_TRUE(is_exceptional_collection(braid_act("L0 R1", t)));
}

TEST(Braid, InverseWords) {
    Collection t = col("E1:0,M,E3:0");
    Collection r = braid_act("L0 R0", t);
    EXPECT_EQ(r, t);
}

TEST(Couples, GlobalProperties) {
    CoupleReport q = verify_global_properties("q1", 3);
    ASSERT_EQ(q.couples.size(), 1u);
    for (const auto& p : q.properties) EXPECT_TRUE(p.pass) << p.name;
    CoupleReport r = verify_global_properties("q2", 2);
    EXPECT_EQ(r.couples.size(), 2u);
    for (const auto& p : r.properties)
        if (p.name == "additional-RP")
            EXPECT_FALSE(p.applicable);
        else
            EXPECT_TRUE(p.pass) << p.name;
}

TEST(ShiftNormalize, ExtCollections) {
    EXPECT_EQ(ext_shift_normalize(col("E1:0,M,E3:0")), (std::vector<int>{0, 0, 0}));
    EXPECT_EQ(ext_shift_normalize(col("E1:1,E1:0,M")), (std::vector<int>{0, -1, -1}));
    auto p = ext_shift_normalize(col("M,E4:1,E4:0"));
    EXPECT_EQ(p, (std::vector<int>{0, -1, -2}));
    EXPECT_TRUE(is_ext_collection(apply_shifts(col("M,E4:1,E4:0"), p)));
}

TEST(CompletePair, UniqueThirdMember) {
    EXPECT_EQ(complete_pair_to_triple(ob("E1:1"), ob("E1:0"), 2).label(), "M");
    for (const auto& t : listed_q1_collections(3, 2)) {
        EXPECT_EQ(complete_pair_to_triple(t[0], t[1], 2), t[2]);
        EXPECT_EQ(complete_pair_to_triple(t[1], t[2], 0), t[0]);
        EXPECT_TRUE(classes_unimodular(t));
    }
}

TEST(ParseCollection, JsonAndCommaForms) {
    EXPECT_EQ(parse_collection("q1", "[\"E1:0\",\"M\"]"), parse_collection("q1", "E1:0, M"));
    EXPECT_THROW(parse_collection("q1", "E1:0,Q"), DomainError);
}
