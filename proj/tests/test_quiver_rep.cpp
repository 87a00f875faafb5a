#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qstab/catalog.hpp"
#include "qstab/decompose.hpp"
#include "qstab/subrep.hpp"

using namespace qstab;

namespace {

ExcObject ob(const std::string& s) { return parse_object("q1", s); }
Rep rp(const std::string& s) { return realize(ob(s)).rep; }

std::set<DimVec> root_set(const std::vector<std::pair<DimVec, RootType>>& l, RootType t) {
    std::set<DimVec> s;
    for (const auto& [d, k] : l)
        if (k == t) s.insert(d);
    return s;
}

}  // namespace

TEST(EulerForm, MatchesArrowCount) {
    for (const auto& q : {q1(), q2(), kronecker(3)}) {
        auto objs = catalog_objects(q.name, 2);
        for (const auto& x : objs)
            for (const auto& y : objs) {
                DimVec a = realize(x).rep.dimv(), b = realize(y).rep.dimv();
                EXPECT_EQ(euler_form(q, a, b).get_si(), oracle::euler(q, a, b));
            }
    }
}

TEST(Roots, Q1BoundOne) {
    auto l = enumerate_roots(q1(), 1);
    std::set<DimVec> real{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 0}};
    EXPECT_EQ(root_set(l, RootType::Real), real);
    EXPECT_EQ(root_set(l, RootType::Imaginary), (std::set<DimVec>{{1, 1, 1}}));
}

TEST(Roots, BoxScanOracle) {
    // independent scan of the box with the directly computed self-pairing
    for (const auto& q : {q1(), kronecker(2)}) {
        for (long long bound : {1, 2}) {
            std::set<DimVec> real, imag;
            DimVec d(q.nv(), 0);
            while (true) {
                int i = 0;
                while (i < q.nv() && d[i] == bound) d[i++] = 0;
                if (i == q.nv()) break;
                ++d[i];
                long long s = oracle::euler(q, d, d);
                if (s == 1) real.insert(d);
                if (s <= 0) imag.insert(d);
            }
            auto l = enumerate_roots(q, bound);
            EXPECT_EQ(root_set(l, RootType::Real), real);
            EXPECT_EQ(root_set(l, RootType::Imaginary), imag);
        }
    }
    auto l2 = enumerate_roots(q1(), 2);
    EXPECT_EQ(root_set(l2, RootType::Real).size(), 12u);
    EXPECT_EQ(root_set(l2, RootType::Imaginary).size(), 2u);
    auto k = enumerate_roots(kronecker(2), 1);
    EXPECT_EQ(root_set(k, RootType::Real), (std::set<DimVec>{{1, 0}, {0, 1}}));
    EXPECT_EQ(root_set(k, RootType::Imaginary), (std::set<DimVec>{{1, 1}}));
}

TEST(HomExt, AgreesWithModularOracle) {
    for (const std::string qn : {"q1", "q2", "k2", "k3"}) {
        auto objs = catalog_objects(qn, 2);
        for (const auto& x : objs)
            for (const auto& y : objs) {
                Rep a = realize(x).rep, b = realize(y).rep;
                int h = oracle::hom_dim(a, b);
                EXPECT_EQ(hom_space(a, b).dim, h) << x.label() << " " << y.label();
                EXPECT_EQ(hom_dim(a, b), h);
                EXPECT_EQ(ext_dim(a, b), h - oracle::euler(a.q, a.dimv(), b.dimv()));
            }
    }
}

TEST(HomExt, TableEntries) {
    // hom(E_1^n, E_1^m) = 1 + n - m and ext = 0 for n >= m
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= n; ++m) {
            HomExt h = catalog_hom_ext(ExcObject{"q1", "E1", n, 0}, ExcObject{"q1", "E1", m, 0});
            EXPECT_EQ(h.hom, 1 + n - m);
            EXPECT_EQ(h.ext, 0);
        }
    EXPECT_EQ(catalog_hom_ext(ob("E1:0"), ob("M")).hom, 0);
}

TEST(HomExt, ResolutionSecondOracle) {
    auto objs = catalog_objects("q1", 2);
    int checked = 0;
    for (size_t i = 0; i < objs.size(); i += 2)
        for (size_t j = 1; j < objs.size(); j += 3) {
            Rep a = realize(objs[i]).rep, b = realize(objs[j]).rep;
            EXPECT_EQ(ext_dim_resolution(a, b), ext_dim(a, b));
            ++checked;
        }
    EXPECT_GE(checked, 10);
}

TEST(Catalog, ObjectsAreExceptional) {
    for (const std::string qn : {"q1", "q2", "k2", "k3"})
        for (const auto& x : catalog_objects(qn, 3)) {
            Rep r = realize(x).rep;
            EXPECT_TRUE(is_exceptional_rep(r)) << x.label();
            EXPECT_EQ(oracle::hom_dim(r, r), 1);
        }
}

TEST(ExistsMono, Examples) {
    EXPECT_TRUE(exists_mono(rp("M"), rp("E4:0")));
    EXPECT_TRUE(exists_mono(rp("E3:0"), rp("E2:0")));
    EXPECT_FALSE(exists_mono(rp("E1:0"), rp("M")));
}

TEST(Subreps, BruteForceOracleAndTwoPrimes) {
    for (const auto& x : catalog_objects("q1", 1)) {
        Rep r = realize(x).rep;
        auto f2 = subrep_dims_fp(r, 2);
        EXPECT_EQ(f2, oracle::subrep_dims_f2(r)) << x.label();
        EXPECT_EQ(f2, subrep_dims_fp(r, 3)) << x.label();
        EXPECT_TRUE(f2.count(DimVec(3, 0)));
        EXPECT_TRUE(f2.count(r.dimv()));
    }
    EXPECT_EQ(subrep_dims_fp(rp("E2:0"), 2), (std::set<DimVec>{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}}));
    EXPECT_EQ(subrep_dims_fp(rp("M"), 2), (std::set<DimVec>{{0, 0, 0}, {0, 1, 0}}));
    auto e4 = subrep_dims_fp(rp("E4:0"), 3);
    EXPECT_TRUE(e4.count({0, 1, 0}));
    EXPECT_EQ(e4, oracle::subrep_dims_f2(rp("E4:0")));
}

TEST(Subreps, BudgetIsEnforced) {
    Rep big = realize(ExcObject{"q1", "E1", 6, 0}).rep;
    EXPECT_THROW(subrep_dims_fp(big, 2, 5), CapacityError);
}

TEST(Decompose, DirectSumsAndExtensions) {
    FormalObject f = decompose(direct_sum(rp("E1:0"), rp("M")));
    ASSERT_EQ(f.summands.size(), 2u);
    std::set<std::string> labels;
    for (const auto& s : f.summands) labels.insert(s.label ? s.label->label() : "?");
    EXPECT_EQ(labels, (std::set<std::string>{"E1:0", "M"}));
    FormalObject e2 = decompose(rp("E2:0"));
    ASSERT_EQ(e2.summands.size(), 1u);
    EXPECT_EQ(e2.summands[0].label->label(), "E2:0");
    // multiset union of summand classes
    Rep a = realize(ExcObject{"q1", "E3", 1, 0}).rep, b = rp("M'");
    FormalObject s = decompose(direct_sum(a, b));
    std::multiset<DimVec> got, want{a.dimv(), b.dimv()};
    for (const auto& x : s.summands) got.insert(x.rep.dimv());
    EXPECT_EQ(got, want);
}

TEST(ExactSequences, Witnesses) {
    EXPECT_TRUE(exact_sequence_witness(rp("M"), rp("E4:1"), rp("E1:1")).ok);
    EXPECT_TRUE(exact_sequence_witness(rp("E3:1"), rp("E2:1"), rp("M")).ok);
    EXPECT_FALSE(exact_sequence_witness(rp("E1:0"), rp("E2:0"), rp("M")).ok);
}

TEST(ExceptionalScan, FindsCatalogVectorsOnly) {
    EXPECT_GT(exceptional_scan_fp(q1(), {2, 1, 1}, 2).exceptional, 0);
    EXPECT_EQ(exceptional_scan_fp(q1(), {2, 1, 2}, 2).exceptional, 0);
    EXPECT_EQ(exceptional_scan_fp(q1(), {1, 2, 1}, 3).exceptional, 0);
    EXPECT_THROW(exceptional_scan_fp(q1(), {1, 1, 1}, 5), DomainError);
}

TEST(RepJson, RoundTrip) {
    Rep r = rp("E4:2");
    EXPECT_EQ(rep_from_json(rep_to_json(r)), r);
}
