#include "qstab/triples.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

namespace qstab {

namespace {

PhaseKey shifted_key(PhaseKey k, int s) {
    k.degree += s;
    return k;
}

struct Window {
    bool diff = false, right = false, left = false;
    PhaseKey lo, hi;
};

Window window_of(const std::vector<PhaseKey>& ph) {
    Window w;
    w.lo = w.hi = ph.at(0);
    for (const auto& p : ph) {
        if (compare(p, w.lo) < 0) w.lo = p;
        if (compare(p, w.hi) > 0) w.hi = p;
    }
    w.diff = diff_below_one(w.hi, w.lo);
    // every phase in (hi - 1, hi]
    w.right = true;
    for (const auto& p : ph) w.right = w.right && compare(p, shifted_key(w.hi, -1)) > 0;
    // every phase in [lo, lo + 1)
    w.left = true;
    for (const auto& p : ph) w.left = w.left && compare(p, shifted_key(w.lo, 1)) < 0;
    return w;
}

int max_parameter(const Collection& c) {
    int m = 0;
    for (const auto& x : c)
        if (x.parametric() || x.kronecker()) m = std::max(m, std::abs(x.m));
    return m;
}

}  // namespace

SigmaReport validate_sigma_collection(const StabilityCondition& sc, const Collection& c) {
    SigmaReport r;
    r.collection = c;
    r.parameter = max_parameter(c);
    bool all_ss = true, undetermined = false;
    std::vector<PhaseKey> phases;
    for (const auto& x : c) {
        MemberStatus m{x, is_semistable(sc, x), std::nullopt};
        if (m.semistable == Status::Yes) {
            m.phase = phase_of(sc, x);
            phases.push_back(*m.phase);
        }
        all_ss = all_ss && m.semistable == Status::Yes;
        undetermined = undetermined || m.semistable == Status::Undetermined;
        r.members.push_back(m);
    }
    r.ext_ok = true;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c.size(); ++j) {
            if (i == j) continue;
            for (const auto& [p, dim] : hom_profile(c[i], c[j]))
                if (p <= 0 && dim != 0) {
                    r.ext_ok = false;
                    r.violations.push_back(std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(p));
                }
        }
    if (all_ss) {
        Window w = window_of(phases);
        r.window_diff = w.diff;
        r.window_half_open_right = w.right;
        r.window_half_open_left = w.left;
        if (w.diff != w.right || w.diff != w.left) throw InternalError("phase window tests disagree");
        r.t_witness = shifted_key(w.hi, -1).exact();
    }
    bool collection_ok = is_exceptional_collection(c);
    if (!collection_ok || !r.ext_ok || (all_ss && !r.window_diff))
        r.verdict = Status::No;
    else if (undetermined)
        r.verdict = Status::Undetermined;
    else
        r.verdict = all_ss ? Status::Yes : Status::No;
    return r;
}

std::string sigma_report_to_json(const SigmaReport& r) {
    nlohmann::json j;
    j["schema"] = "qstab.sigma-report/1";
    j["collection"] = nlohmann::json::array();
    for (const auto& x : r.collection) j["collection"].push_back(x.label());
    j["members"] = nlohmann::json::array();
    for (const auto& m : r.members) {
        nlohmann::json e{{"object", m.object.label()}, {"semistable", status_name(m.semistable)}};
        if (m.phase) e["phase"] = {{"exact", m.phase->exact()}, {"value", m.phase->value()}};
        j["members"].push_back(e);
    }
    j["ext_ok"] = r.ext_ok;
    j["violations"] = r.violations;
    j["window"] = {{"max_minus_min_below_one", r.window_diff},
                   {"in_t_t1_closed_right", r.window_half_open_right},
                   {"in_t_t1_closed_left", r.window_half_open_left}};
    if (!r.t_witness.empty()) j["interval"] = "(t, t+1] with t = " + r.t_witness;
    j["verdict"] = status_name(r.verdict);
    return j.dump(2);
}

ShiftNormalization normalize_shift_data(const std::array<PhaseKey, 3>& phi, const HomOracle& hom) {
    auto lt = [](const PhaseKey& a, const PhaseKey& b) { return compare(a, b) < 0; };
    auto le = [](const PhaseKey& a, const PhaseKey& b) { return compare(a, b) <= 0; };
    auto p1 = [](const PhaseKey& a) { return shifted_key(a, 1); };
    const PhaseKey &f0 = phi[0], &f1 = phi[1], &f2 = phi[2];
    bool h01 = hom(0, 1, 0) == 0, h02 = hom(0, 2, 0) == 0, h12 = hom(1, 2, 0) == 0;

    ShiftNormalization out;
    if (lt(f0, f1) && lt(f1, f2) && lt(p1(f0), f2))
        out.rule = 'a';
    else if (le(f0, f1) && lt(f1, f2) && h01)
        out.rule = 'b';
    else if (lt(f0, f1) && le(f1, f2) && h12)
        out.rule = 'c';
    else if (lt(f0, f2) && le(f2, f1) && lt(f1, p1(f2)) && h12)
        out.rule = 'd';
    else if (lt(f0, p1(f1)) && lt(f1, f2) && lt(f0, f2) && h01)
        out.rule = 'e';
    else if (lt(f0, p1(f1)) && lt(f0, p1(f2)) && lt(f1, p1(f2)) && h01 && h02 && h12)
        out.rule = 'f';
    else if (lt(f0, f2) && lt(p1(f0), f1) && compare(f2, shifted_key(f1, -1)) != 0 && h02 && h12)
        out.rule = 'g';
    if (!out.rule) return out;

    // members are unshifted heart objects: hom^k vanishes outside k in {0, 1}
    auto vanishing = [&](const std::array<int, 3>& s) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                for (int k = 0; k <= 1; ++k)
                    if (k <= s[j] - s[i] && hom(i, j, k) != 0) return false;
        return true;
    };
    constexpr int kMaxShift = 4;
    for (int total = 0; total <= 2 * kMaxShift; ++total)
        for (int i = 0; i <= std::min(total, kMaxShift); ++i) {
            int j = total - i;
            if (j > kMaxShift) continue;
            std::array<int, 3> s{0, -i, -j};
            Window w = window_of({f0, shifted_key(f1, -i), shifted_key(f2, -j)});
            if (w.diff && vanishing(s)) {
                out.shifts = s;
                out.valid = true;
                return out;
            }
        }
    return out;
}

std::optional<Collection> normalize_shifts(const StabilityCondition& sc, const Collection& t, ShiftNormalization* info) {
    if (t.size() != 3) throw DomainError("normalize_shifts expects a triple");
    if (!is_exceptional_collection(t)) throw DomainError("not an exceptional triple");
    std::array<PhaseKey, 3> phi;
    Collection base;
    for (int i = 0; i < 3; ++i) {
        ExcObject x = t[i].shifted(-t[i].shift);
        if (is_semistable(sc, x) != Status::Yes) throw DomainError(x.label() + " is not semistable");
        phi[i] = phase_of(sc, x);
        base.push_back(x);
    }
    HomOracle hom = [&](int i, int j, int k) { return hom_degree(base[i], base[j], k); };
    ShiftNormalization n = normalize_shift_data(phi, hom);
    if (info) *info = n;
    if (!n.valid) return std::nullopt;
    Collection out;
    for (int i = 0; i < 3; ++i) out.push_back(base[i].shifted(n.shifts[i]));
    return out;
}

std::vector<SigmaReport> enumerate_sigma_triples(const StabilityCondition& sc, int w, int range, bool first_only) {
    if (sc.ambient().name != "q1" || sc.heart().kind != Heart::Standard)
        throw DomainError("triple search runs on standard-heart charges of q1");
    struct Candidate {
        int parameter, norm;
        Collection c;
    };
    std::vector<Candidate> cands;
    for (const auto& base : listed_q1_collections(3, w))
        for (int a = -range; a <= range; ++a)
            for (int b = -range; b <= range; ++b) {
                Collection c{base[0], base[1].shifted(a), base[2].shifted(b)};
                cands.push_back({max_parameter(c), std::abs(a) + std::abs(b), c});
            }
    std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
        if (x.parameter != y.parameter) return x.parameter < y.parameter;
        if (x.norm != y.norm) return x.norm < y.norm;
        return x.c < y.c;
    });

    // semistability and phase are computed once per unshifted member
    std::map<ExcObject, std::optional<PhaseKey>> ss;
    auto phase_if_ss = [&](const ExcObject& x) -> std::optional<PhaseKey> {
        ExcObject b = x.shifted(-x.shift);
        auto it = ss.find(b);
        if (it == ss.end()) {
            Status s = is_semistable(sc, b);
            if (s == Status::Undetermined) throw CapacityError("semistability of " + b.label() + " undetermined");
            it = ss.emplace(b, s == Status::Yes ? std::optional<PhaseKey>(phase_of(sc, b)) : std::nullopt).first;
        }
        if (!it->second) return std::nullopt;
        return shifted_key(*it->second, x.shift);
    };

    std::vector<SigmaReport> out;
    for (const auto& cand : cands) {
        std::vector<PhaseKey> ph;
        bool ok = true;
        for (const auto& x : cand.c) {
            auto p = phase_if_ss(x);
            if (!p) {
                ok = false;
                break;
            }
            ph.push_back(*p);
        }
        if (!ok || !window_of(ph).diff || !is_ext_collection(cand.c)) continue;
        out.push_back(validate_sigma_collection(sc, cand.c));
        if (out.back().verdict != Status::Yes) throw InternalError("triple search and validation disagree");
        if (first_only) break;
    }
    return out;
}

SigmaReport kronecker_sigma_pair(int l, const StabilityCondition& sc, int window) {
    if (l < 2) throw DomainError("Kronecker pair search needs l >= 2");
    const std::string qn = "k" + std::to_string(l);
    if (sc.ambient().name != qn) throw DomainError("charge is not on " + qn);
    std::vector<int> order{0};
    for (int k = 1; k <= window; ++k) order.push_back(k), order.push_back(-k);
    std::vector<std::pair<int, int>> shifts;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) shifts.emplace_back(a, b);
    std::stable_sort(shifts.begin(), shifts.end(), [](auto x, auto y) {
        return std::abs(x.first) + std::abs(x.second) < std::abs(y.first) + std::abs(y.second);
    });
    for (int i : order) {
        ExcObject x{qn, "s", i, 0}, y{qn, "s", i + 1, 0};
        if (is_semistable(sc, x) != Status::Yes || is_semistable(sc, y) != Status::Yes) continue;
        for (auto [a, b] : shifts) {
            Collection c{x.shifted(a), y.shifted(b)};
            SigmaReport r = validate_sigma_collection(sc, c);
            if (r.verdict != Status::Yes) continue;
            // overall shift: larger phase in (0, 1]
            PhaseKey hi = *r.members[0].phase;
            if (compare(*r.members[1].phase, hi) > 0) hi = *r.members[1].phase;
            int k = 0;
            while (compare(shifted_key(hi, k), PhaseKey{0, CQ(Q(-1), Q(0))}) > 0) --k;
            while (compare(shifted_key(hi, k), PhaseKey{-1, CQ(Q(-1), Q(0))}) <= 0) ++k;
            if (k == 0) return r;
            return validate_sigma_collection(sc, {c[0].shifted(k), c[1].shifted(k)});
        }
    }
    throw CapacityError("no sigma-exceptional pair within window " + std::to_string(window));
}

GrowthCheck kronecker_growth(int l, int range, int depth) {
    const std::string qn = "k" + std::to_string(l);
    GrowthCheck g;
    for (int i = -range; i <= range; ++i) {
        ExcObject x{qn, "s", i, 0};
        std::string row = std::to_string(i) + ":";
        int prev = -1;
        for (int k = 1; k <= depth; ++k) {
            int h = hom_degree(x, ExcObject{qn, "s", i + k, 0}, 0);
            row += " " + std::to_string(h);
            if (k == 1 && h != l) g.pass = false;
            if (k > 1 && h <= prev) g.pass = false;
            prev = h;
        }
        g.rows.push_back(row);
    }
    return g;
}

}  // namespace qstab
