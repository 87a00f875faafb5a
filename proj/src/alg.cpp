#include "qstab/alg.hpp"

#include <algorithm>
#include <functional>

#include <nlohmann/json.hpp>

namespace qstab {

const char* case_name(CaseTag t) {
    switch (t) {
        case CaseTag::C1: return "C1";
        case CaseTag::C2: return "C2";
        case CaseTag::C3: return "C3";
        case CaseTag::B1: return "B1";
        default: return "B2";
    }
}

const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "not-checkable";
    }
}

bool CaseReport::all_pass() const { return count(CheckStatus::Fail) == 0 && count(CheckStatus::NotCheckable) == 0; }

int CaseReport::count(CheckStatus s) const {
    return int(std::count_if(checklist.begin(), checklist.end(), [&](const CheckItem& c) { return c.status == s; }));
}

int hom_p(const FormalObject& x, const FormalObject& y, int p) {
    int total = 0;
    for (const auto& a : x.summands)
        for (const auto& b : y.summands) {
            int d = p + b.shift - a.shift;
            if (d != 0 && d != 1) continue;
            if (a.label && b.label) {
                HomExt h = catalog_hom_ext(*a.label, *b.label);
                total += d == 0 ? h.hom : h.ext;
            } else {
                total += d == 0 ? hom_dim(a.rep, b.rep) : ext_dim(a.rep, b.rep);
            }
        }
    return total;
}

int hom_star(const FormalObject& x, const FormalObject& y) {
    int lo = 1 << 30, hi = -(1 << 30);
    for (const auto& a : x.summands)
        for (const auto& b : y.summands) {
            lo = std::min(lo, a.shift - b.shift);
            hi = std::max(hi, a.shift - b.shift + 1);
        }
    int total = 0;
    for (int p = lo; p <= hi; ++p) total += hom_p(x, y, p);
    return total;
}

FormalObject shift_object(const FormalObject& x, int k) {
    FormalObject y = x;
    for (auto& s : y.summands) {
        s.shift += k;
        if (s.label) s.label = s.label->shifted(k);
    }
    return y;
}

namespace {

FormalObject single(const Summand& s) {
    FormalObject f;
    f.summands.push_back(s);
    return f;
}

FormalObject join(const FormalObject& x, const FormalObject& y) {
    FormalObject z = x;
    for (const auto& s : y.summands) z.summands.push_back(s);
    return z;
}

Theta add_theta(const Theta& a, const Theta& b) {
    Theta c = a;
    for (const auto& [k, v] : b) c[k] += v;
    return c;
}

std::string theta_string(const Theta& t) {
    std::string s = "{";
    for (const auto& [k, v] : t) s += (s.size() > 1 ? ", " : "") + k + ":" + std::to_string(v);
    return s + "}";
}

std::string obj_string(const FormalObject& x) {
    if (x.zero()) return "0";
    std::string s;
    for (const auto& m : x.summands) s += (s.empty() ? "" : " + ") + summand_key(m);
    return s;
}

bool pure_degree(const FormalObject& x, int d) {
    for (const auto& s : x.summands)
        if (s.shift != d) return false;
    return true;
}

// Stability-side data: computed from the report's condition or taken from declared fixture values.
struct Oracle {
    const CaseReport& r;

    std::optional<Theta> theta_of(const std::string& role, const FormalObject& x) const {
        if (r.sigma) {
            if (x.zero()) return Theta{};
            try {
                return theta(*r.sigma, x);
            } catch (const DomainError&) {
                return std::nullopt;
            }
        }
        auto it = r.declared.theta.find(role);
        if (it == r.declared.theta.end()) return std::nullopt;
        return it->second;
    }
    std::optional<PhaseKey> phi_minus(const std::string& role, const FormalObject& x) const {
        if (r.sigma) {
            if (x.zero()) return std::nullopt;
            HNResult h = hn_filtration(*r.sigma, x);
            if (h.status != Status::Yes) return std::nullopt;
            return h.factors.back().phase;
        }
        auto it = r.declared.phi_minus.find(role);
        if (it == r.declared.phi_minus.end()) return std::nullopt;
        return it->second;
    }
    std::optional<bool> v_semistable() const {
        if (r.sigma) {
            Status s = is_semistable(*r.sigma, r.v);
            if (s == Status::Undetermined) return std::nullopt;
            return s == Status::Yes;
        }
        return r.declared.v_semistable;
    }
    std::optional<PhaseKey> phi_v() const {
        if (r.sigma) {
            if (is_semistable(*r.sigma, r.v) != Status::Yes) return std::nullopt;
            return phase_of(*r.sigma, r.v);
        }
        return r.declared.phi_v;
    }
};

struct Ledger {
    std::vector<CheckItem> items;
    void add(const std::string& id, bool ok, const std::string& detail) {
        items.push_back({id, ok ? CheckStatus::Pass : CheckStatus::Fail, detail});
    }
    void unknown(const std::string& id, const std::string& detail) {
        items.push_back({id, CheckStatus::NotCheckable, detail});
    }
};

}  // namespace

std::vector<CheckItem> verify_case(const CaseReport& r) {
    Ledger L;
    Oracle o{r};
    const int d = r.degree;
    const FormalObject E = object_formal(r.e);
    const int nv = int(r.e.quiver == "q2" ? 4 : (r.e.quiver == "q1" ? 3 : 2));
    const bool c_case = r.tag == CaseTag::C1 || r.tag == CaseTag::C2 || r.tag == CaseTag::C3;
    const bool shifted_b = r.tag == CaseTag::C3 || r.tag == CaseTag::B2;
    const FormalObject B = shifted_b ? shift_object(r.b1, -1) : r.b0;

    auto th_e = o.theta_of("E", E);
    auto phi_e = o.phi_minus("E", E);
    auto phi_v = o.phi_v();

    // class bookkeeping
    L.add("class", add(r.u.klass(nv), r.v.klass(nv)) == E.klass(nv), "[U] + [V] = [E]");

    // (a) V is a degree component of sigma_-(E), semistable of phase phi_-(E)
    {
        int j = shifted_b ? d + 1 : d;
        bool ok = !r.v.zero() && !r.u.zero() && pure_degree(r.v, j);
        ok = ok && add(r.b0.klass(nv), r.b1.klass(nv)) == r.sigma_minus.klass(nv) && pure_degree(r.b0, d) &&
             pure_degree(r.b1, d + 1);
        auto ss = o.v_semistable();
        if (!ss || !phi_v || !phi_e)
            L.unknown("(a)", "semistability of V undetermined");
        else
            L.add("(a)", ok && *ss && compare(*phi_v, *phi_e) == 0,
                  "V = " + obj_string(r.v) + " degree " + std::to_string(j) + " phase " +
                      std::to_string(phi_v->value()));
    }
    // (b)
    {
        auto th_u = o.theta_of("U", r.u);
        auto phi_u = o.phi_minus("U", r.u);
        if (!th_u || !th_e || !phi_u || !phi_v)
            L.unknown("(b)", "theta or phase undetermined");
        else
            L.add("(b)", theta_less(*th_u, *th_e) && compare(*phi_u, *phi_v) >= 0,
                  "theta(U)=" + theta_string(*th_u) + " theta(E)=" + theta_string(*th_e));
    }
    // (c)
    {
        bool ok = true;
        for (const auto& g : r.v.summands) ok = ok && hom_p(E, single(g), 0) != 0;
        L.add("(c)", ok, "hom(E, Gamma) != 0 for every summand of V");
    }
    if (c_case) {
        bool ok = hom_star(r.u, r.v) == 0 && hom_p(r.u, r.u, 1) == 0 && hom_p(r.v, r.v, 1) == 0;
        L.add("(d)", ok, "hom*(U,V) = hom1(U,U) = hom1(V,V) = 0");
    }

    auto sigma_component = [&](const std::string& id) {
        auto ss = o.v_semistable();
        if (!ss || !phi_v || !phi_e) {
            L.unknown(id, "semistability undetermined");
            return;
        }
        bool ok = pure_degree(r.b0, d) && add(r.b0.klass(nv), r.b1.klass(nv)) == r.sigma_minus.klass(nv);
        L.add(id, ok && *ss && compare(*phi_v, *phi_e) == 0, "B is the degree zero component of sigma_-(E)");
    };
    auto theta_phase_a = [&](const std::string& id, const FormalObject& a, const std::string& role) {
        auto th = o.theta_of(role, a);
        auto ph = o.phi_minus(role, a);
        if (!th || !th_e || !ph || !phi_e) {
            L.unknown(id, "theta or phase undetermined");
            return;
        }
        L.add(id, theta_less(*th, *th_e) && compare(*ph, *phi_e) >= 0,
              "theta(A)=" + theta_string(*th) + " phi_-(A)=" + std::to_string(ph->value()));
    };
    auto theta_phase_a12 = [&](const std::string& id) {
        FormalObject a2s = shift_object(r.a2, -1);
        auto t1 = o.theta_of("A1", r.a1);
        auto t2 = o.theta_of("A2[-1]", a2s);
        auto p2 = o.phi_minus("A2[-1]", a2s);
        std::optional<PhaseKey> p1;
        if (!r.a1.zero()) p1 = o.phi_minus("A1", r.a1);
        if (!t1 || !t2 || !th_e || !p2 || !phi_e || (!r.a1.zero() && !p1)) {
            L.unknown(id, "theta or phase undetermined");
            return;
        }
        bool ok = theta_less(add_theta(*t1, *t2), *th_e) && compare(*p2, *phi_e) >= 0;
        if (p1) ok = ok && compare(*p1, *phi_e) >= 0;
        L.add(id, ok, "theta(A1)+theta(A2[-1])=" + theta_string(add_theta(*t1, *t2)));
    };
    auto hn_minus = [&](const std::string& id) {
        auto th = o.theta_of("A", r.a);
        auto ph = o.phi_minus("A", r.a);
        if (!th || !th_e || !ph || !phi_e || !phi_v) {
            L.unknown(id, "theta or phase undetermined");
            return;
        }
        bool ok = r.b0.zero() && r.b1.klass(nv) == r.sigma_minus.klass(nv);
        ok = ok && theta_less(*th, *th_e) && compare(*ph, *phi_e) > 0 && compare(*phi_e, *phi_v) == 0;
        L.add(id, ok, "alg(E) is the last HN triangle; phi_-(A)=" + std::to_string(ph->value()) +
                          " phi(B)=" + std::to_string(phi_v->value() - 1));
    };
    auto in_heart = [&](const FormalObject& x) { return pure_degree(x, d); };
    auto a1_proper = [&] {
        long long ta = 0;
        for (const auto& s : r.a1.summands) ta += s.rep.total_dim();
        return ta < realize(r.e).rep.total_dim();
    };

    switch (r.tag) {
        case CaseTag::C1: {
            bool ok = in_heart(r.a) && in_heart(B) && !r.a.zero() && !B.zero() && hom_p(r.a, r.a, 1) == 0 &&
                      hom_p(B, B, 1) == 0 && hom_star(r.a, B) == 0;
            L.add("C1.1", ok, "A=" + obj_string(r.a) + " B=" + obj_string(B));
            sigma_component("C1.2");
            theta_phase_a("C1.3", r.a, "A");
            bool all = true;
            for (const auto& g : r.a.summands) all = all && hom_p(B, single(g), 1) != 0;
            L.add("C1.4", all, "hom1(B, Gamma) != 0 for Gamma in Ind(A)");
            break;
        }
        case CaseTag::C2:
        case CaseTag::B1: {
            const std::string p = r.tag == CaseTag::C2 ? "C2." : "B1.";
            bool ok = in_heart(r.a1) && in_heart(r.a2) && in_heart(B) && !r.a2.zero() && !B.zero() && a1_proper() &&
                      hom_p(r.a2, r.a2, 1) == 0 && hom_p(r.a1, r.a1, 1) == 0 && hom_star(r.a2, B) == 0;
            if (r.tag == CaseTag::C2) ok = ok && hom_star(r.a1, B) == 0 && hom_star(r.a1, r.a2) == 0;
            L.add(p + "1", ok, "A1=" + obj_string(r.a1) + " A2=" + obj_string(r.a2) + " B=" + obj_string(B));
            sigma_component(p + "2");
            theta_phase_a12(p + "3");
            if (r.tag == CaseTag::C2) {
                bool all = true;
                for (const auto& g : r.a1.summands) all = all && hom_p(B, single(g), 1) != 0;
                for (const auto& g : r.a2.summands)
                    all = all && hom_p(B, single(g), 0) != 0 && hom_p(single(g), E, 1) != 0 &&
                          hom_p(E, single(g), 1) == 0;
                L.add("C2.4", all, "summand conditions on Ind(A1), Ind(A2)");
            } else {
                bool any = false;
                for (const auto& g : r.a2.summands)
                    any = any || (hom_p(single(g), E, 1) != 0 && hom_p(E, single(g), 1) != 0);
                L.add("B1.4", any, "Ext-nontrivial couple with a summand of A2");
            }
            break;
        }
        case CaseTag::C3:
        case CaseTag::B2: {
            const std::string p = r.tag == CaseTag::C3 ? "C3." : "B2.";
            bool ok = in_heart(r.a) && in_heart(B) && !r.a.zero() && !B.zero() && hom_p(B, B, 1) == 0 &&
                      hom_star(r.a, B) == 0;
            if (r.tag == CaseTag::C3) ok = ok && hom_p(r.a, r.a, 1) == 0;
            L.add(p + "1", ok, "A=" + obj_string(r.a) + " B=" + obj_string(B));
            hn_minus(p + "2");
            if (r.tag == CaseTag::C3) {
                bool all = true;
                for (const auto& g : B.summands)
                    all = all && hom_p(E, single(g), 1) != 0 && hom_p(single(g), E, 1) == 0;
                for (const auto& g : r.a.summands)
                    all = all && hom_p(B, single(g), 0) != 0 && hom_p(single(g), E, 0) != 0;
                L.add("C3.3", all, "summand conditions on Ind(B), Ind(A)");
            } else {
                bool any = false;
                for (const auto& g : B.summands)
                    any = any || (hom_p(single(g), E, 1) != 0 && hom_p(E, single(g), 1) != 0);
                L.add("B2.3", any, "Ext-nontrivial couple with a summand of B");
            }
            break;
        }
    }
    return L.items;
}

namespace {

void finish_branch(CaseReport& r) {
    const FormalObject E = object_formal(r.e);
    if (r.b0.zero()) {
        bool couple = false;
        for (const auto& g : r.b1.summands) {
            FormalObject gb = shift_object(single(g), -1);
            couple = couple || hom_p(gb, E, 1) != 0;
        }
        r.tag = couple ? CaseTag::B2 : CaseTag::C3;
        r.u = r.a;
        r.v = r.b1;
    } else if (r.a2.zero()) {
        r.tag = CaseTag::C1;
        r.a = r.a1;
        r.u = r.a1;
        r.v = r.b0;
    } else {
        bool couple = false;
        for (const auto& g : r.a2.summands) couple = couple || hom_p(E, single(g), 1) != 0;
        r.tag = couple ? CaseTag::B1 : CaseTag::C2;
        r.u = join(r.a1, shift_object(r.a2, -1));
        r.v = r.b0;
    }
    r.checklist = verify_case(r);
}

FormalObject copies(const Rep& x, int shift, int n) {
    FormalObject f;
    FormalObject one = decompose(x, shift);
    for (int i = 0; i < n; ++i) f = join(f, one);
    return f;
}

}  // namespace

CaseReport alg_classify(const StabilityCondition& sc, const ExcObject& e) {
    CaseReport r;
    r.e = e;
    r.sigma = sc;
    r.degree = realize(e).shift;
    HNResult h = hn_filtration(sc, e);
    if (h.status != Status::Yes || !h.has_last_map) throw CapacityError("HN filtration undetermined for " + e.label());
    if (h.factors.size() == 1) throw DomainError(e.label() + " is semistable");
    const HNFactor& last = h.factors.back();
    r.sigma_minus = last.object;
    const Rep& ep = h.heart_source;
    const Rep& bp = last.heart_rep;
    const int hs = h.heart_shift;
    const int d = r.degree;

    // heart-simple summands at the tilt vertex become the degree d+1 component
    const int nv = ep.q.nv();
    SubSpaces t(nv);
    for (int v = 0; v < nv; ++v) t[v] = MatQ(bp.dims[v], 0);
    int n_tilt = 0;
    if (sc.heart().kind == Heart::SinkTilt) {
        int w = -1;
        for (int v = 0; v < nv; ++v)
            if (sc.is_tilt_simple(simple_rep(ep.q, v))) w = v;
        MatQ out(0, bp.dims[w]);
        for (int a = 0; a < ep.q.na(); ++a)
            if (ep.q.arrows[a].src == w) out = vstack(out, bp.mats[a]);
        t[w] = kernel(out);
        n_tilt = t[w].c;
    }
    RepMap q;
    Rep b0h = quotient_rep(bp, t, &q);
    RepMap f0h = compose(q, h.last_map);
    r.b1 = n_tilt ? copies(simple_rep(sc.ambient(), sc.heart().vertex), d + 1, n_tilt) : FormalObject{};

    if (b0h.zero()) {
        RepMap inc;
        Rep k = kernel_rep(ep, h.last_map, &inc);
        r.a = sc.from_heart(k, hs);
    } else {
        Rep x1, x2;
        RepMap f0 = sc.map_from_heart(ep, b0h, f0h, x1, x2);
        RepMap inc, proj;
        Rep k = kernel_rep(x1, f0, &inc);
        Rep c = cokernel_rep(x2, f0, &proj);
        r.a1 = k.zero() ? FormalObject{} : decompose(k, d);
        r.a2 = c.zero() ? FormalObject{} : decompose(c, d);
        r.b0 = decompose(x2, d);
    }
    finish_branch(r);
    return r;
}

CaseReport alg_classify_symbolic(const std::string& name, const ExcObject& e, const FormalObject& a1,
                                 const FormalObject& a2, const FormalObject& b0, const FormalObject& b1,
                                 const DeclaredSigma& sigma) {
    CaseReport r;
    r.computed = false;
    r.fixture = name;
    r.e = e;
    r.degree = realize(e).shift;
    r.declared = sigma;
    r.b0 = b0;
    r.b1 = b1;
    r.sigma_minus = join(b0, b1);
    if (b0.zero())
        r.a = a1;
    else {
        r.a1 = a1;
        r.a2 = a2;
    }
    finish_branch(r);
    return r;
}

namespace {

Rep q1_rep(int b_e, int b_mid, int mid_e) {
    Rep x(q1(), {1, 1, 1});
    x.mats[0](0, 0) = b_e;
    x.mats[1](0, 0) = b_mid;
    x.mats[2](0, 0) = mid_e;
    return x;
}

ExcObject obj(const std::string& s) { return parse_object("q1", s); }

FormalObject formal(const std::string& s) { return object_formal(obj(s)); }

PhaseKey key(int degree, long re, long im) { return PhaseKey{degree, CQ(Q(re), Q(im))}; }

}  // namespace

std::vector<std::string> fixture_names() { return {"C3", "B1", "B2"}; }

CaseReport fixture_report(const std::string& name) {
    DeclaredSigma s;
    if (name == "C3") {
        // 0 -> E3^0 -> E2^0 -> M -> 0 read as A -> E -> B[1]
        SesWitness w = exact_sequence_witness(realize(obj("E3:0")).rep, realize(obj("E2:0")).rep, realize(obj("M")).rep);
        if (!w.ok) throw InternalError("C3 fixture sequence is not exact");
        FormalObject a = formal("E2:0"), b1 = object_formal(obj("E3:0").shifted(1));
        s.theta["E"] = {{"E2:0", 1}, {"E3:0[1]", 1}};
        s.theta["U"] = s.theta["A"] = {{"E2:0", 1}};
        s.phi_minus["E"] = key(0, 1, 1);
        s.phi_minus["U"] = s.phi_minus["A"] = key(0, -1, 1);
        s.phi_v = key(0, 1, 1);
        return alg_classify_symbolic(name, obj("M"), a, {}, {}, b1, s);
    }
    if (name == "B2") {
        // 0 -> M' -> X -> M -> 0 nonsplit, read as A -> E -> B[1]
        Rep x = q1_rep(1, 0, 1);
        SesWitness w = exact_sequence_witness(realize(obj("M'")).rep, x, realize(obj("M")).rep);
        if (!w.ok) throw InternalError("B2 fixture sequence is not exact");
        FormalObject a = decompose(x, 0), b1 = object_formal(obj("M'").shifted(1));
        std::string ka = summand_key(a.summands.at(0));
        s.theta["E"] = {{ka, 1}, {"M'[1]", 1}};
        s.theta["U"] = s.theta["A"] = {{ka, 1}};
        s.phi_minus["E"] = key(0, 1, 1);
        s.phi_minus["U"] = s.phi_minus["A"] = key(0, -1, 1);
        s.phi_v = key(0, 1, 1);
        return alg_classify_symbolic(name, obj("M"), a, {}, {}, b1, s);
    }
    if (name == "B1") {
        // f0: M -> Y with 0 -> M -> Y -> M' -> 0 nonsplit; A1 = ker f0, A2 = coker f0
        Rep y = q1_rep(1, 1, 0);
        Rep m = realize(obj("M")).rep;
        RepMap f0 = zero_map(m, y);
        f0.f[1](0, 0) = 1;
        if (!is_morphism(m, y, f0)) throw InternalError("B1 fixture map is not a morphism");
        RepMap inc, proj;
        Rep k = kernel_rep(m, f0, &inc), c = cokernel_rep(y, f0, &proj);
        FormalObject a1 = k.zero() ? FormalObject{} : decompose(k, 0);
        FormalObject a2 = decompose(c, 0), b0 = decompose(y, 0);
        std::string kb = summand_key(b0.summands.at(0));
        s.theta["E"] = {{kb, 1}, {"M'[-1]", 1}};
        s.theta["A1"] = {};
        s.theta["U"] = s.theta["A2[-1]"] = {{"M'[-1]", 1}};
        s.phi_minus["E"] = key(0, 1, 1);
        s.phi_minus["U"] = s.phi_minus["A2[-1]"] = key(0, -1, 1);
        s.phi_v = key(0, 1, 1);
        return alg_classify_symbolic(name, obj("M"), a1, a2, b0, {}, s);
    }
    throw DomainError("unknown fixture " + name);
}

RSequence r_sequence(const StabilityCondition& sc, const ExcObject& r0) {
    RSequence seq;
    seq.origin = r0;
    seq.theta_origin = theta(sc, r0);
    const int budget = theta_mass(seq.theta_origin);
    ExcObject cur = r0;
    Theta cur_theta = seq.theta_origin;
    std::vector<CaseReport> reports;
    seq.end = "budget";
    std::vector<CheckItem> inv;
    auto check = [&](const std::string& id, bool ok, const std::string& detail) {
        inv.push_back({id, ok ? CheckStatus::Pass : CheckStatus::Fail, detail});
    };
    for (int step = 0; step <= budget; ++step) {
        if (is_semistable(sc, cur) == Status::Yes) {
            seq.end = "semistable-end";
            break;
        }
        CaseReport rep = alg_classify(sc, cur);
        if (rep.tag == CaseTag::B1 || rep.tag == CaseTag::B2) {
            seq.end = std::string("irregular:") + case_name(rep.tag);
            break;
        }
        // S: first summand of V (all share the maximal phase phi_-(R))
        Summand s = rep.v.summands.at(0);
        struct Cand {
            Summand e;
            std::string tag;
        };
        std::vector<Cand> cands;
        if (rep.tag == CaseTag::C2) {
            for (const auto& g : rep.a1.summands) cands.push_back({g, "C2b"});
            for (const auto& g : shift_object(rep.a2, -1).summands) cands.push_back({g, "C2a"});
        } else {
            for (const auto& g : rep.u.summands) cands.push_back({g, case_name(rep.tag)});
        }
        std::optional<size_t> pick;
        bool all_ss = true;
        for (size_t i = 0; i < cands.size(); ++i) {
            bool ss = is_semistable(sc, single(cands[i].e)) == Status::Yes;
            all_ss = all_ss && ss;
            if (!ss && !pick) pick = i;
        }
        if (!pick) pick = 0;
        const Cand& c = cands[*pick];
        RStep st;
        st.tag = c.tag;
        st.s = s;
        st.e = c.e;
        if (!c.e.label) {
            seq.steps.push_back(st);
            seq.end = "unlabelled";
            break;
        }
        st.e_object = *c.e.label;
        st.theta_e = theta(sc, st.e_object);

        // per-step properties
        const std::string n = std::to_string(seq.steps.size() + 1);
        FormalObject S = single(s), E = single(c.e), R = object_formal(cur);
        int dr = realize(cur).shift, ds = s.shift, de = c.e.shift;
        check("step" + n + ".pair", hom_star(E, S) == 0 && s.label.has_value(), "hom*(E,S) = 0");
        check("step" + n + ".theta", theta_less(st.theta_e, cur_theta),
              theta_string(st.theta_e) + " < " + theta_string(cur_theta));
        check("step" + n + ".S-in-theta", cur_theta.count(summand_key(s)) > 0, summand_key(s));
        int dsr = ds - dr, dre = dr - de;
        bool table = false;
        if (c.tag == "C1" || c.tag == "C2b") table = dsr == 0 && dre == 0;
        if (c.tag == "C2a") table = dsr == 0 && dre == 1;
        if (c.tag == "C3") table = dsr == 1 && dre == 0;
        check("step" + n + ".degrees", table && de + 1 >= ds && ds >= dr && dr >= de,
              c.tag + " deg(S)-deg(R)=" + std::to_string(dsr) + " deg(R)-deg(E)=" + std::to_string(dre));
        PhaseKey ps = phase_of(sc, S);
        HNResult he = hn_filtration(sc, E);
        PhaseKey pe = he.factors.back().phase;
        check("step" + n + ".phase", c.tag == "C3" ? compare(pe, ps) > 0 : compare(pe, ps) >= 0,
              "phi_-(E)=" + std::to_string(pe.value()) + " phi(S)=" + std::to_string(ps.value()));
        seq.steps.push_back(st);
        reports.push_back(rep);
        if (all_ss) {
            // final: semistable components of U sit strictly above V
            bool ok = true;
            PhaseKey pv = phase_of(sc, rep.v);
            for (const auto& g : rep.u.summands) ok = ok && compare(phase_of(sc, single(g)), pv) > 0;
            check("final.phases", ok, "phi(Gamma) > phi(V) for Gamma in Ind(U)");
            seq.end = "final";
            break;
        }
        cur = st.e_object;
        cur_theta = st.theta_e;
    }
    check("length", int(seq.steps.size()) <= budget, std::to_string(seq.steps.size()) + " <= " + std::to_string(budget));
    // monotonicities across steps
    for (size_t i = 0; i + 1 < seq.steps.size(); ++i) {
        const auto& a = seq.steps[i];
        const auto& b = seq.steps[i + 1];
        PhaseKey pa = phase_of(sc, single(a.s)), pb = phase_of(sc, single(b.s));
        const std::string n = std::to_string(i + 1);
        check("mono" + n + ".phase", compare(pa, pb) <= 0, "phi(S_i) <= phi(S_i+1)");
        check("mono" + n + ".degree", a.e.shift >= b.e.shift, "deg(E_i) >= deg(E_i+1)");
        if (a.s.shift == b.s.shift)
            check("mono" + n + ".equal-degree", hom_star(single(b.s), single(a.s)) == 0 && compare(pb, pa) > 0,
                  "hom*(S_i+1, S_i) = 0 and phi(S_i+1) > phi(S_i)");
    }
    if (!seq.steps.empty())
        check("mono.origin", realize(r0).shift >= seq.steps[0].e.shift, "deg(R) >= deg(E_1)");
    seq.invariants = inv;
    return seq;
}

std::vector<CQ> random_charge(int n, std::mt19937_64& rng, int range) {
    std::uniform_int_distribution<int> re(-range, range), im(0, range);
    std::vector<CQ> z;
    while (int(z.size()) < n) {
        CQ c(Q(re(rng)), Q(im(rng)));
        if (c.in_half_plane()) z.push_back(c);
    }
    return z;
}

std::optional<CaseReport> find_computed_case(const std::string& quiver, CaseTag tag, uint64_t seed, int tries,
                                             int window) {
    Quiver q = quiver_by_name(quiver);
    std::vector<Heart> hearts{Heart{}};
    for (int v = 0; v < q.nv(); ++v) {
        for (auto kind : {Heart::SourceTilt, Heart::SinkTilt}) {
            Heart h{kind, v};
            if (kind == Heart::SourceTilt && !q.is_source(v)) continue;
            if (kind == Heart::SinkTilt && !q.is_sink(v)) continue;
            try {
                StabilityCondition probe(q, h, std::vector<CQ>(q.nv(), CQ(Q(0), Q(1))));
                hearts.push_back(h);
            } catch (const DomainError&) {
            }
        }
    }
    std::mt19937_64 rng(seed);
    auto objs = catalog_objects(quiver, window);
    for (int t = 0; t < tries; ++t) {
        StabilityCondition sc(q, hearts[t % hearts.size()], random_charge(q.nv(), rng));
        for (const auto& e : objs) {
            if (is_semistable(sc, e) != Status::No) continue;
            try {
                CaseReport r = alg_classify(sc, e);
                if (r.tag == tag && r.all_pass()) return r;
            } catch (const CapacityError&) {
            }
        }
    }
    return std::nullopt;
}

namespace {

nlohmann::json obj_json(const FormalObject& x) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& s : x.summands) j.push_back(summand_key(s));
    return j;
}

nlohmann::json checks_json(const std::vector<CheckItem>& items) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : items) j.push_back({{"id", c.id}, {"status", check_status_name(c.status)}, {"detail", c.detail}});
    return j;
}

}  // namespace

std::string report_to_json(const CaseReport& r) {
    nlohmann::json j;
    j["schema"] = "qstab.case-report/1";
    j["object"] = r.e.label();
    j["case"] = case_name(r.tag);
    j["provenance"] = r.computed ? "computed" : "symbolic-fixture";
    if (!r.computed) j["fixture"] = r.fixture;
    if (r.sigma) j["sigma"] = r.sigma->describe();
    j["A"] = obj_json(r.a);
    j["A1"] = obj_json(r.a1);
    j["A2"] = obj_json(r.a2);
    j["B0"] = obj_json(r.b0);
    j["B1"] = obj_json(r.b1);
    j["U"] = obj_json(r.u);
    j["V"] = obj_json(r.v);
    j["checklist"] = checks_json(r.checklist);
    return j.dump(2);
}

std::string rsequence_to_json(const RSequence& s) {
    nlohmann::json j;
    j["schema"] = "qstab.r-sequence/1";
    j["origin"] = s.origin.label();
    j["theta_origin"] = s.theta_origin;
    j["end"] = s.end;
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& st : s.steps)
        steps.push_back({{"case", st.tag}, {"S", summand_key(st.s)}, {"E", summand_key(st.e)}, {"theta_E", st.theta_e}});
    j["steps"] = steps;
    j["invariants"] = checks_json(s.invariants);
    return j.dump(2);
}

}  // namespace qstab
