#include "qstab/suites.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "qstab/alg.hpp"
#include "qstab/collections.hpp"
#include "qstab/decompose.hpp"
#include "qstab/reference.hpp"
#include "qstab/subrep.hpp"
#include "qstab/triples.hpp"

namespace qstab {

namespace {

int pick(int v, int dflt) { return v < 0 ? dflt : v; }

std::vector<std::string> quivers_of(const SuiteOptions& o, std::vector<std::string> dflt) {
    if (!o.quiver.empty()) return {o.quiver};
    return dflt;
}

ExcObject q1obj(const std::string& s) { return parse_object("q1", s); }
Rep q1rep(const std::string& s) { return realize(q1obj(s)).rep; }

SuiteResult hom_tables(const SuiteOptions& o) {
    SuiteResult r{"hom-tables"};
    for (const auto& q : quivers_of(o, {"q1", "q2"})) {
        int m = pick(o.max_m, q == "q1" ? 5 : 4);
        TableCheck t = check_tables(q, m);
        nlohmann::json diffs = nlohmann::json::array();
        for (const auto& d : t.diffs)
            diffs.push_back({{"x", d.x}, {"y", d.y}, {"tabulated", d.tabulated},
                             {"expected", {d.expected.hom, d.expected.ext}}, {"computed", {d.computed.hom, d.computed.ext}}});
        r.report[q] = {{"pairs", t.pairs}, {"diffs", diffs}};
        r.check(t.diffs.empty() && t.pairs > 0,
                q + " m<=" + std::to_string(m) + ": " + std::to_string(t.pairs) + " ordered pairs, " +
                    std::to_string(t.diffs.size()) + " differences");
    }
    return r;
}

SuiteResult matrix_rows(const SuiteOptions& o) {
    SuiteResult r{"matrix-rows"};
    int m = pick(o.max_m, 5);
    auto rows = check_matrix_rows(m);
    std::map<int, std::pair<int, int>> per_row;  // row -> (instances, mismatches)
    for (const auto& x : rows) {
        auto& c = per_row[x.row];
        ++c.first;
        if (x.expected != x.computed || x.computed != x.cross) ++c.second;
    }
    for (const auto& [row, c] : per_row)
        r.check(c.second == 0, "row " + std::to_string(row) + ": " + std::to_string(c.first) + " instances, " +
                                   std::to_string(c.second) + " mismatches");
    r.check(!rows.empty(), std::to_string(rows.size()) + " instantiated rows with indices <= " + std::to_string(m));
    return r;
}

std::set<DimVec> q1_root_families(long long bound, bool imaginary) {
    std::set<DimVec> s;
    for (long long m = 0; m <= bound; ++m) {
        std::vector<DimVec> v;
        if (imaginary) {
            if (m >= 1) v = {{m, m, m}};
        } else {
            v = {{m + 1, m, m}, {m, m + 1, m + 1}, {m, m, m + 1}, {m + 1, m + 1, m}, {m + 1, m, m + 1}, {m, m + 1, m}};
        }
        for (const auto& d : v)
            if (std::all_of(d.begin(), d.end(), [&](long long x) { return x <= bound; })) s.insert(d);
    }
    return s;
}

std::vector<std::pair<std::string, DimVec>> excluded_vectors(int m) {
    long long k = m;
    return {{"q1", {k + 1, k, k + 1}},     {"q1", {k, k + 1, k}},         {"q2", {k, k + 1, k, k}},
            {"q2", {k, k, k + 1, k}},       {"q2", {k + 1, k, k + 1, k + 1}}, {"q2", {k + 1, k + 1, k, k + 1}}};
}

SuiteResult roots(const SuiteOptions& o) {
    SuiteResult r{"roots"};
    int bound = pick(o.max_m, 10);
    auto list = enumerate_roots(q1(), bound);
    std::set<DimVec> real, imag;
    for (const auto& [d, t] : list) (t == RootType::Real ? real : imag).insert(d);
    r.check(real == q1_root_families(bound, false),
            "q1 bound " + std::to_string(bound) + ": " + std::to_string(real.size()) + " real roots equal the six families");
    r.check(imag == q1_root_families(bound, true),
            "q1 bound " + std::to_string(bound) + ": " + std::to_string(imag.size()) + " imaginary roots equal (m,m,m)");
    // excluded real roots: no representation with End = F_p, at two primes
    for (int m = 1; m <= 2; ++m)
        for (const auto& [qn, d] : excluded_vectors(m)) {
            Quiver q = quiver_by_name(qn);
            bool real_root = root_type(q, d) == RootType::Real;
            ExceptionalScan s2 = exceptional_scan_fp(q, d, 2), s3 = exceptional_scan_fp(q, d, 3);
            r.check(real_root && s2.exceptional == 0 && s3.exceptional == 0 && s2.scanned > 0 && s3.scanned > 0,
                    qn + " " + dims_to_string(d) + ": real root, exceptional count " + std::to_string(s2.exceptional) +
                        "/" + std::to_string(s2.scanned) + " over F2, " + std::to_string(s3.exceptional) + "/" +
                        std::to_string(s3.scanned) + " over F3");
        }
    // positive control: a catalog vector is found by the same scan
    for (const auto& [qn, d] : std::vector<std::pair<std::string, DimVec>>{{"q1", {2, 1, 1}}, {"q2", {2, 1, 1, 1}}}) {
        ExceptionalScan s = exceptional_scan_fp(quiver_by_name(qn), d, 3);
        r.check(s.exceptional > 0, qn + " " + dims_to_string(d) + ": control scan finds " +
                                       std::to_string(s.exceptional) + " exceptional representations over F3");
    }
    return r;
}

SuiteResult pairs_triples(const SuiteOptions& o) {
    SuiteResult r{"pairs-triples"};
    int w = pick(o.max_m, 6);
    for (int arity : {2, 3}) {
        auto found = enumerate_collections("q1", arity, w);
        auto listed = listed_q1_collections(arity, w);
        std::set<Collection> a(found.begin(), found.end()), b(listed.begin(), listed.end());
        int missing = 0, extra = 0;
        for (const auto& c : b)
            if (!a.count(c)) ++missing;
        for (const auto& c : a)
            if (!b.count(c)) ++extra;
        r.check(a == b && found.size() == a.size(),
                std::string(arity == 2 ? "pairs" : "triples") + " W=" + std::to_string(w) + ": " +
                    std::to_string(a.size()) + " enumerated, " + std::to_string(b.size()) + " listed in " +
                    std::to_string(listed_q1_family_count(arity)) + " families, " + std::to_string(missing) +
                    " missing, " + std::to_string(extra) + " extra");
    }
    return r;
}

Collection unshift(const Collection& c) {
    Collection u;
    for (const auto& x : c) u.push_back(x.shifted(-x.shift));
    return u;
}

SuiteResult braid(const SuiteOptions& o) {
    SuiteResult r{"braid"};
    int mmax = pick(o.max_m, 4);
    for (int m = 0; m <= mmax; ++m) {
        auto e1 = [](int k) { return ExcObject{"q1", "E1", k, 0}; };
        ExcObject e4{"q1", "E4", m, 0}, mm{"q1", "M", 0, 0};
        Collection t{e1(m + 1), mm, e4};
        Collection s1 = braid_act("L1", t), s2 = braid_act("L1", s1), s3 = braid_act("L1", s2);
        bool cycle = unshift(s1) == Collection{e1(m + 1), e1(m), mm} && unshift(s2) == Collection{e1(m + 1), e4, e1(m)};
        r.check(unshift(s3) == t, "m=" + std::to_string(m) + ": L1^3 " + collection_to_string(t) + " = " +
                                      collection_to_string(s3) + " up to shift");
        r.check(cycle, "m=" + std::to_string(m) + ": L1 steps " + collection_to_string(s1) + " -> " +
                           collection_to_string(s2));
    }
    return r;
}

SuiteResult rp(const SuiteOptions& o) {
    SuiteResult r{"rp"};
    for (const auto& q : quivers_of(o, {"q1", "q2"})) {
        int w = pick(o.max_m, q == "q1" ? 5 : 4);
        CoupleReport c = verify_global_properties(q, w);
        std::set<std::set<std::string>> couples;
        for (const auto& [x, y] : c.couples) couples.insert({x.label(), y.label()});
        std::set<std::set<std::string>> expected =
            q == "q1" ? std::set<std::set<std::string>>{{"M", "M'"}}
                      : std::set<std::set<std::string>>{{"F+", "G-"}, {"F-", "G+"}};
        std::string cs;
        for (const auto& s : couples) cs += (cs.empty() ? "{" : " {") + *s.begin() + "," + *s.rbegin() + "}";
        if (q == "q1" || q == "q2") r.check(couples == expected, q + " W=" + std::to_string(w) + ": couples " + cs);
        for (const auto& p : c.properties) {
            if (p.name == "additional-RP" && q == "q2") {
                r.check(!p.applicable, q + " " + p.name + ": reported inapplicable" +
                                           (p.pass ? std::string() : ", counterexample " + p.witness));
                continue;
            }
            r.check(p.applicable && p.pass, q + " " + p.name + ": " + std::to_string(p.checked) + " checks" +
                                                (p.pass ? std::string() : ", counterexample " + p.witness));
        }
    }
    return r;
}

Rep power(const Rep& x, int k) {
    std::vector<Rep> v(k, x);
    return direct_sum(v);
}

SuiteResult ses(const SuiteOptions& o) {
    SuiteResult r{"ses"};
    int mmax = pick(o.max_m, 3);
    auto e = [](int i, int m) { return realize(ExcObject{"q1", "E" + std::to_string(i), m, 0}).rep; };
    Rep M = q1rep("M");
    for (int m = 0; m <= mmax; ++m) {
        std::string ms = std::to_string(m);
        if (m >= 1) {
            r.check(exact_sequence_witness(e(2, m - 1), e(1, m), power(e(1, 0), 2)).ok, "ses1 m=" + ms);
            r.check(exact_sequence_witness(e(3, m - 1), e(4, m), power(e(4, 0), 2)).ok, "ses3 m=" + ms);
        }
        r.check(exact_sequence_witness(e(3, m), e(2, m), M).ok, "ses2 m=" + ms);
        r.check(exact_sequence_witness(M, e(4, m), e(1, m)).ok, "ses4 m=" + ms);
    }
    // middle-term uniqueness: the only proper nonzero subrepresentation dimensions over F2 and F3
    struct Mid {
        std::string c, a, b;
    };
    for (const Mid& t : {Mid{"E2:0", "E3:0", "M"}, Mid{"E4:0", "M", "E1:0"}, Mid{"M'", "E3:0", "E1:0"}}) {
        Rep c = q1rep(t.c), a = q1rep(t.a), b = q1rep(t.b);
        bool ok = exact_sequence_witness(a, c, b).ok;
        for (int p : {2, 3}) {
            auto dims = subrep_dims_fp(c, p);
            std::set<DimVec> proper;
            for (const auto& d : dims)
                if (!is_zero(d) && d != c.dimv()) proper.insert(d);
            ok = ok && proper == std::set<DimVec>{a.dimv()} && sub(c.dimv(), a.dimv()) == b.dimv();
        }
        // both ends have simple dimension vectors, so the dimensions fix them up to isomorphism
        ok = ok && total(a.dimv()) == 1 && total(b.dimv()) == 1;
        r.check(ok, "middle term " + t.c + ": every sequence is " + t.a + " -> " + t.c + " -> " + t.b);
    }
    return r;
}

SuiteResult kronecker_suite(const SuiteOptions& o) {
    SuiteResult r{"kronecker"};
    int n = pick(o.count, 100);
    for (int l : {2, 3}) {
        GrowthCheck g = kronecker_growth(l, 3, 4);
        std::string rows;
        for (const auto& s : g.rows) rows += (rows.empty() ? "" : "; ") + s;
        r.check(g.pass, "l=" + std::to_string(l) + " hom(s_i, s_i+k), |i|<=3: " + rows);
        std::mt19937_64 rng(o.seed + uint64_t(l));
        int found = 0;
        std::string failure;
        for (int t = 0; t < n; ++t) {
            StabilityCondition sc = StabilityCondition::standard(kronecker(l), random_charge(2, rng));
            try {
                SigmaReport p = kronecker_sigma_pair(l, sc, 6);
                if (p.verdict == Status::Yes) ++found;
            } catch (const CapacityError&) {
                if (failure.empty()) failure = sc.describe();
            }
        }
        r.check(found == n, "l=" + std::to_string(l) + ": sigma pair found for " + std::to_string(found) + "/" +
                                std::to_string(n) + " random charges within window 6" +
                                (failure.empty() ? "" : ", first failure " + failure));
    }
    return r;
}

SuiteResult random_triples(const SuiteOptions& o) {
    SuiteResult r{"random-triples"};
    int n = pick(o.count, 200);
    int w = pick(o.max_m, 3);
    std::mt19937_64 rng(o.seed);
    int nonempty = 0, triples = 0, revalidated = 0, classified = 0, regular_pass = 0, undetermined = 0;
    std::string first_bad;
    auto objs = catalog_objects("q1", 3);
    for (int t = 0; t < n; ++t) {
        auto z = random_charge(3, rng);
        StabilityCondition sc = StabilityCondition::standard(q1(), z);
        auto found = enumerate_sigma_triples(sc, w, 2);
        if (!found.empty()) ++nonempty;
        StabilityCondition fresh = StabilityCondition::standard(q1(), z);
        for (const auto& rep : found) {
            ++triples;
            if (validate_sigma_collection(fresh, rep.collection).verdict == Status::Yes)
                ++revalidated;
            else if (first_bad.empty())
                first_bad = collection_to_string(rep.collection) + " at " + sc.describe();
        }
        for (const auto& e : objs) {
            Status s = is_semistable(sc, e);
            if (s == Status::Undetermined) ++undetermined;
            if (s != Status::No) continue;
            ++classified;
            try {
                CaseReport c = alg_classify(sc, e);
                bool regular = c.tag == CaseTag::C1 || c.tag == CaseTag::C2 || c.tag == CaseTag::C3;
                if (regular && c.all_pass())
                    ++regular_pass;
                else if (first_bad.empty())
                    first_bad = e.label() + " " + case_name(c.tag) + " at " + sc.describe();
            } catch (const CapacityError&) {
                ++undetermined;
            }
        }
    }
    r.undetermined = undetermined > 0;
    r.check(nonempty == n, std::to_string(nonempty) + "/" + std::to_string(n) + " random charges have a sigma triple");
    r.check(revalidated == triples, std::to_string(revalidated) + "/" + std::to_string(triples) +
                                        " returned triples pass re-validation" +
                                        (first_bad.empty() ? "" : ", first failure " + first_bad));
    r.check(regular_pass == classified && undetermined == 0,
            std::to_string(regular_pass) + "/" + std::to_string(classified) +
                " non-semistable catalog objects (m<=3) classify into a regular case with a passing checklist, " +
                std::to_string(undetermined) + " undetermined");
    return r;
}

bool hn_sound(const StabilityCondition& sc, const FormalObject& x, const HNResult& h, std::string& why) {
    const int nv = sc.ambient().nv();
    if (h.status != Status::Yes || h.factors.empty()) return why = "no filtration", false;
    DimVec k(nv, 0);
    for (size_t i = 0; i < h.factors.size(); ++i) {
        const auto& f = h.factors[i];
        k = add(k, f.object.klass(nv));
        if (is_semistable(sc, f.object) != Status::Yes) return why = "factor " + std::to_string(i) + " unstable", false;
        if (compare(phase_of(sc, f.object), f.phase) != 0) return why = "factor phase", false;
        if (i && !(f.phase < h.factors[i - 1].phase)) return why = "phases not decreasing", false;
        for (size_t j = i + 1; j < h.factors.size(); ++j)
            if (hom_p(f.object, h.factors[j].object, 0) != 0) return why = "hom to a lower factor", false;
    }
    if (k != x.klass(nv)) return why = "classes do not add up", false;
    return true;
}

ExcObject random_object(const std::vector<ExcObject>& objs, std::mt19937_64& rng) {
    return objs[std::uniform_int_distribution<size_t>(0, objs.size() - 1)(rng)];
}

SuiteResult stability_suite(const SuiteOptions& o) {
    SuiteResult r{"stability"};
    int n = pick(o.count, 100);
    std::mt19937_64 rng(o.seed);
    int scaling = 0, sound = 0, add_ok = 0, sums = 0;
    std::string first_bad;
    for (int t = 0; t < n; ++t) {
        const std::string qn = t % 2 ? "q2" : "q1";
        Quiver q = quiver_by_name(qn);
        StabilityCondition sc = StabilityCondition::standard(q, random_charge(q.nv(), rng));
        auto objs = catalog_objects(qn, 3);
        ExcObject x = random_object(objs, rng).shifted(std::uniform_int_distribution<int>(-1, 1)(rng));
        Q lambda(std::uniform_int_distribution<int>(1, 50)(rng), std::uniform_int_distribution<int>(1, 7)(rng));
        StabilityCondition scaled = sc.scaled(lambda);
        HNResult a = hn_filtration(sc, x), b = hn_filtration(scaled, x);
        bool same = a.status == b.status && a.factors.size() == b.factors.size() &&
                    is_semistable(sc, x) == is_semistable(scaled, x) && theta(sc, x) == theta(scaled, x);
        for (size_t i = 0; same && i < a.factors.size(); ++i)
            same = compare(a.factors[i].phase, b.factors[i].phase) == 0 &&
                   a.factors[i].object.klass(q.nv()) == b.factors[i].object.klass(q.nv());
        scaling += same;
        if (!same && first_bad.empty()) first_bad = "scaling " + x.label() + " at " + sc.describe();
        std::string why;
        if (hn_sound(sc, object_formal(x), a, why))
            ++sound;
        else if (first_bad.empty())
            first_bad = "HN " + x.label() + " at " + sc.describe() + ": " + why;
        if (t % 2 == 0) {
            ExcObject y = random_object(objs, rng), z = random_object(objs, rng);
            FormalObject s = object_formal(y);
            for (const auto& m : object_formal(z).summands) s.summands.push_back(m);
            auto th = theta(sc, y);
            for (const auto& [k, v] : theta(sc, z)) th[k] += v;
            ++sums;
            if (theta(sc, s) == th && hn_sound(sc, s, hn_filtration(sc, s), why))
                ++add_ok;
            else if (first_bad.empty())
                first_bad = "sum " + y.label() + "+" + z.label() + " at " + sc.describe();
        }
    }
    r.check(scaling == n, std::to_string(scaling) + "/" + std::to_string(n) +
                              " random (object, charge) pairs unchanged under positive scaling");
    r.check(sound == n, std::to_string(sound) + "/" + std::to_string(n) + " HN filtrations sound");
    r.check(add_ok == sums, std::to_string(add_ok) + "/" + std::to_string(sums) + " theta additive on direct sums" +
                                (first_bad.empty() ? "" : ", first failure " + first_bad));
    return r;
}

SuiteResult two_limit(const SuiteOptions& o) {
    SuiteResult r{"two-limit"};
    int w = pick(o.max_m, 5);
    StabilityCondition sc = StabilityCondition::standard(q1(), parse_charge("-4+2i,17/10+17/10i,2+1/2i"));
    PhaseStats ps = phase_stats(sc, w);
    std::vector<const PhaseEntry*> e4;
    for (const auto& e : ps.entries)
        if (e.object.family == "E4") e4.push_back(&e);
    bool ss = int(e4.size()) == w + 1, mono = true, closer = true;
    for (size_t i = 0; i < e4.size(); ++i) {
        ss = ss && e4[i]->semistable == Status::Yes;
        if (!i || !ss) continue;
        mono = mono && compare(e4[i]->phase, e4[i - 1]->phase) != 0 &&
               (compare(e4[i]->phase, e4[i - 1]->phase) == compare(e4[1]->phase, e4[0]->phase));
        closer = closer && std::fabs(e4[i]->phase.value() - ps.delta_phase) <
                               std::fabs(e4[i - 1]->phase.value() - ps.delta_phase);
    }
    r.check(ss, "E4:m semistable for m <= " + std::to_string(w));
    r.check(mono, "phase(E4:m) strictly monotone");
    r.check(closer, "|phase(E4:m) - arg(delta)/pi| strictly decreasing, arg(delta)/pi = " +
                        std::to_string(ps.delta_phase));
    double re = ps.delta.re.get_d(), im = ps.delta.im.get_d(), n = std::hypot(re, im);
    bool fam = false;
    for (const auto& f : ps.limit_families) fam = fam || f == "E4";
    r.check(fam && n > 0, "limit directions +-(" + std::to_string(re / n) + ", " + std::to_string(im / n) +
                              "), delta = " + to_string(ps.delta));
    return r;
}

SuiteResult alg_ledger(const SuiteOptions& o) {
    SuiteResult r{"alg-ledger"};
    for (CaseTag t : {CaseTag::C1, CaseTag::C2}) {
        auto c = find_computed_case("q1", t, o.seed, 400, 2);
        r.check(c && c->tag == t && c->all_pass(),
                std::string("computed ") + case_name(t) +
                    (c ? " for " + c->e.label() + " at " + c->sigma->describe() + ", " +
                             std::to_string(c->checklist.size()) + " checklist items"
                       : " not found"));
    }
    for (const auto& name : fixture_names()) {
        CaseReport c = fixture_report(name);
        r.check(case_name(c.tag) == name && c.all_pass(),
                "fixture " + name + ", " + std::to_string(c.count(CheckStatus::Pass)) + "/" +
                    std::to_string(c.checklist.size()) + " checklist items pass");
    }
    int n = pick(o.count, 50);
    std::mt19937_64 rng(o.seed + 1);
    const std::vector<std::string> qs{"q1", "q2", "k3"};
    int done = 0, ok = 0, tries = 0;
    size_t longest = 0;
    std::string first_bad;
    while (done < n && tries < 50 * n) {
        ++tries;
        const std::string& qn = qs[tries % qs.size()];
        Quiver q = quiver_by_name(qn);
        StabilityCondition sc = StabilityCondition::standard(q, random_charge(q.nv(), rng));
        ExcObject x = random_object(catalog_objects(qn, 3), rng);
        if (is_semistable(sc, x) != Status::No) continue;
        ++done;
        RSequence s = r_sequence(sc, x);
        bool good = s.end == "final" || s.end == "semistable-end";
        for (const auto& c : s.invariants) good = good && c.status == CheckStatus::Pass;
        ok += good;
        longest = std::max(longest, s.steps.size());
        if (!good && first_bad.empty()) first_bad = x.label() + " at " + sc.describe() + " end " + s.end;
    }
    r.check(done == n && ok == n, std::to_string(ok) + "/" + std::to_string(done) +
                                      " R-sequences from random non-semistable starts respect the theta and degree "
                                      "invariants, longest " + std::to_string(longest) +
                                      (first_bad.empty() ? "" : ", first failure " + first_bad));
    return r;
}

using SuiteFn = std::function<SuiteResult(const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> s = {
        {"hom-tables", hom_tables}, {"matrix-rows", matrix_rows}, {"roots", roots},
        {"pairs-triples", pairs_triples}, {"braid", braid},         {"rp", rp},
        {"ses", ses},                   {"kronecker", kronecker_suite}, {"random-triples", random_triples},
        {"stability", stability_suite}, {"two-limit", two_limit}, {"alg-ledger", alg_ledger},
    };
    return s;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> n;
    for (const auto& [k, f] : suites()) n.push_back(k);
    return n;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    for (const auto& [k, f] : suites())
        if (k == name) {
            SuiteResult r = f(opt);
            r.report["schema"] = "qstab.suite/1";
            r.report["suite"] = name;
            r.report["pass"] = r.pass;
            r.report["lines"] = r.lines;
            return r;
        }
    throw DomainError("unknown suite " + name);
}

}  // namespace qstab
