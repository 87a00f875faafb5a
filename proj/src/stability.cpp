#include "qstab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <optional>
#include <sstream>

#include "qstab/subrep.hpp"

namespace qstab {

const char* status_name(Status s) {
    switch (s) {
        case Status::Yes: return "yes";
        case Status::No: return "no";
        default: return "undetermined";
    }
}

std::string PhaseKey::exact() const {
    return std::to_string(degree) + " + arg(" + to_string(dir) + ")/pi";
}

int compare(const PhaseKey& a, const PhaseKey& b) {
    if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
    return -cross_sign(a.dir, b.dir);
}

bool diff_below_one(const PhaseKey& a, const PhaseKey& b) {
    int d = a.degree - b.degree;
    if (d >= 2) return false;
    if (d == 1) return cross_sign(a.dir, b.dir) > 0;
    return true;
}

std::string Heart::name(const Quiver& q) const {
    if (kind == Standard) return "standard";
    return std::string(kind == SourceTilt ? "source:" : "sink:") + q.vertices.at(vertex);
}

Heart parse_heart(const Quiver& q, const std::string& text) {
    Heart h;
    if (text.empty() || text == "standard") return h;
    auto colon = text.find(':');
    if (colon == std::string::npos) throw DomainError("heart must be standard, source:V or sink:V");
    std::string kind = text.substr(0, colon);
    if (kind == "source")
        h.kind = Heart::SourceTilt;
    else if (kind == "sink")
        h.kind = Heart::SinkTilt;
    else
        throw DomainError("unknown heart kind " + kind);
    h.vertex = q.vertex(text.substr(colon + 1));
    return h;
}

struct StabilityCache {
    std::mutex mu;
    std::map<std::string, Status> catalog;
};

namespace {

QuiverIso invert(const QuiverIso& f) {
    QuiverIso g;
    g.vertex.assign(f.vertex.size(), 0);
    g.arrow.assign(f.arrow.size(), 0);
    for (size_t i = 0; i < f.vertex.size(); ++i) g.vertex[f.vertex[i]] = int(i);
    for (size_t i = 0; i < f.arrow.size(); ++i) g.arrow[f.arrow[i]] = int(i);
    return g;
}

DimVec unit(int nv, int v) {
    DimVec d(nv, 0);
    d[v] = 1;
    return d;
}

void append(FormalObject& out, const FormalObject& more) {
    for (const auto& s : more.summands) out.summands.push_back(s);
}

}  // namespace

StabilityCondition::StabilityCondition(Quiver ambient, Heart heart, std::vector<CQ> z)
    : q_(std::move(ambient)), heart_(heart), z_(std::move(z)), cache_(std::make_shared<StabilityCache>()) {
    if (int(z_.size()) != q_.nv()) throw DomainError("charge needs one value per simple of the heart");
    for (const auto& v : z_)
        if (!v.in_half_plane()) throw DomainError("charge value " + to_string(v) + " outside the half plane");
    hq_ = q_;
    rq_ = q_;
    if (heart_.kind == Heart::Standard) return;
    const int v = heart_.vertex;
    if (v < 0 || v >= q_.nv()) throw DomainError("tilt vertex out of range");
    if (heart_.kind == Heart::SourceTilt && !q_.is_source(v)) throw DomainError("source tilt needs a source vertex");
    if (heart_.kind == Heart::SinkTilt && !q_.is_sink(v)) throw DomainError("sink tilt needs a sink vertex");
    rq_ = reflect_quiver(q_, v);
    try {
        to_hq_ = find_quiver_iso(rq_, hq_);
    } catch (const DomainError&) {
        throw DomainError("reflected quiver is not isomorphic to " + q_.name + "; tilt unsupported");
    }
    from_hq_ = invert(to_hq_);
}

StabilityCondition StabilityCondition::scaled(const Q& lambda) const {
    if (sgn(lambda) <= 0) throw DomainError("scaling factor must be positive");
    std::vector<CQ> z;
    for (const auto& v : z_) z.push_back(lambda * v);
    return StabilityCondition(q_, heart_, z);
}

std::string StabilityCondition::describe() const {
    std::ostringstream os;
    os << q_.name << " heart=" << heart_.name(q_) << " Z=(";
    for (size_t i = 0; i < z_.size(); ++i) os << (i ? "," : "") << to_string(z_[i]);
    os << ")";
    return os.str();
}

CQ StabilityCondition::heart_charge(const DimVec& d) const {
    CQ s;
    for (size_t v = 0; v < d.size(); ++v)
        if (d[v]) s = s + Q(long(d[v])) * z_[v];
    return s;
}

DimVec StabilityCondition::to_heart_class(const DimVec& d) const {
    if (heart_.kind == Heart::Standard) return d;
    const int v = heart_.vertex;
    DimVec r = d;
    long long s = 0;
    for (const auto& a : q_.arrows) {
        if (heart_.kind == Heart::SourceTilt && a.src == v) s += d[a.tgt];
        if (heart_.kind == Heart::SinkTilt && a.tgt == v) s += d[a.src];
    }
    r[v] = s - d[v];
    DimVec h(d.size(), 0);
    for (size_t w = 0; w < d.size(); ++w) h[to_hq_.vertex[w]] = r[w];
    return h;
}

PhaseKey StabilityCondition::heart_phase(const DimVec& heart_dims, int heart_shift) const {
    return PhaseKey{heart_shift, heart_charge(heart_dims)};
}

void StabilityCondition::to_heart(const Rep& x, int shift, Rep& y, int& heart_shift) const {
    if (heart_.kind == Heart::Standard) {
        y = x;
        heart_shift = shift;
        return;
    }
    const int v = heart_.vertex;
    Rep r;
    if (x.dimv() == unit(q_.nv(), v)) {
        r = simple_rep(rq_, v);
        heart_shift = shift + (heart_.kind == Heart::SourceTilt ? 1 : -1);
    } else {
        r = heart_.kind == Heart::SourceTilt ? reflect_at_source(x, v) : reflect_at_sink(x, v);
        heart_shift = shift;
    }
    y = transport(r, hq_, to_hq_);
}

FormalObject StabilityCondition::from_heart(const Rep& y, int heart_shift) const {
    if (heart_.kind == Heart::Standard) return decompose(y, heart_shift);
    const int v = heart_.vertex;
    FormalObject out;
    for (const auto& s : decompose(y, heart_shift).summands) {
        Rep r = transport(s.rep, rq_, from_hq_);
        if (r.dimv() == unit(q_.nv(), v)) {
            int sh = heart_.kind == Heart::SourceTilt ? s.shift - 1 : s.shift + 1;
            append(out, decompose(simple_rep(q_, v), sh));
        } else {
            Rep x = heart_.kind == Heart::SourceTilt ? reflect_at_sink(r, v) : reflect_at_source(r, v);
            append(out, decompose(x, s.shift));
        }
    }
    return out;
}

RepMap StabilityCondition::map_from_heart(const Rep& y1, const Rep& y2, const RepMap& f, Rep& x1, Rep& x2) const {
    if (heart_.kind == Heart::Standard) {
        x1 = y1;
        x2 = y2;
        return f;
    }
    const int v = heart_.vertex;
    Rep r1 = transport(y1, rq_, from_hq_), r2 = transport(y2, rq_, from_hq_);
    RepMap g = transport_map(f, from_hq_);
    if (heart_.kind == Heart::SourceTilt) {
        x1 = reflect_at_sink(r1, v);
        x2 = reflect_at_sink(r2, v);
        return reflect_map_at_sink(r1, r2, g, v);
    }
    x1 = reflect_at_source(r1, v);
    x2 = reflect_at_source(r2, v);
    return reflect_map_at_source(r1, r2, g, v);
}

bool StabilityCondition::is_tilt_simple(const Rep& y) const {
    if (heart_.kind == Heart::Standard) return false;
    return y.dimv() == unit(q_.nv(), to_hq_.vertex[heart_.vertex]);
}

std::vector<CQ> parse_charge(const std::string& text) {
    std::vector<CQ> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(parse_cq(item));
    if (out.empty()) throw DomainError("empty charge");
    return out;
}

namespace {

std::optional<std::set<DimVec>> indec_sub_dims(const Summand& s) {
    const Rep& y = s.rep;
    if (s.label || is_exceptional_rep(y)) return generic_sub_dims(y.q, y.dimv());
    try {
        auto a = subrep_dims_fp(y, 2);
        auto b = subrep_dims_fp(y, 3);
        if (a == b) return a;
    } catch (const CapacityError&) {
    }
    return std::nullopt;
}

std::set<DimVec> minkowski(const std::set<DimVec>& a, const std::set<DimVec>& b) {
    std::set<DimVec> out;
    for (const auto& x : a)
        for (const auto& y : b) out.insert(add(x, y));
    return out;
}

// Maximal argument, then maximal total dimension, then lexicographically minimal.
bool better_sub(const StabilityCondition& sc, const DimVec& a, const DimVec& b) {
    int c = cross_sign(sc.heart_charge(b), sc.heart_charge(a));
    if (c != 0) return c > 0;
    if (total(a) != total(b)) return total(a) > total(b);
    return a < b;
}

Status catalog_semistable(const StabilityCondition& sc, const ExcObject& c) {
    auto cache = sc.cache();
    const std::string key = c.base_label();
    {
        std::lock_guard<std::mutex> lock(cache->mu);
        auto it = cache->catalog.find(key);
        if (it != cache->catalog.end()) return it->second;
    }
    DimVec d = realize(c).rep.dimv();
    CQ zd = sc.heart_charge(d);
    Status st = Status::Yes;
    for (const auto& a : generic_sub_dims(sc.heart_quiver(), d))
        if (!is_zero(a) && cross_sign(zd, sc.heart_charge(a)) > 0) st = Status::No;
    std::lock_guard<std::mutex> lock(cache->mu);
    cache->catalog[key] = st;
    return st;
}

// Dimension vector of the maximal destabilizing subobject; nullopt when the sub-dimension set is unknown.
std::optional<DimVec> mds_dims(const StabilityCondition& sc, const Rep& y) {
    std::set<DimVec> sums{DimVec(y.q.nv(), 0)};
    for (const auto& s : decompose(y).summands) {
        auto o = indec_sub_dims(s);
        if (!o) return std::nullopt;
        sums = minkowski(sums, *o);
    }
    std::optional<DimVec> best;
    for (const auto& a : sums) {
        if (is_zero(a)) continue;
        if (!best || better_sub(sc, a, *best)) best = a;
    }
    return best;
}

// Sum of images of maps from semistable catalog objects of the destabilizing phase.
bool realize_mds(const StabilityCondition& sc, const Rep& y, const DimVec& target, SubSpaces& out) {
    const int nv = y.q.nv();
    out.assign(nv, MatQ());
    for (int v = 0; v < nv; ++v) out[v] = MatQ(y.dims[v], 0);
    CQ zt = sc.heart_charge(target);
    auto cands = catalog_objects_below(sc.heart_quiver(), target);
    std::vector<std::pair<Rep, ExcObject>> reps;
    for (const auto& c : cands) {
        Rep r = realize(c).rep;
        if (cross_sign(zt, sc.heart_charge(r.dimv())) != 0) continue;
        reps.push_back({r, c});
    }
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
        if (a.first.total_dim() != b.first.total_dim()) return a.first.total_dim() > b.first.total_dim();
        return a.second < b.second;
    });
    for (const auto& [r, c] : reps) {
        if (catalog_semistable(sc, c) != Status::Yes) continue;
        HomSpace h = hom_space(r, y);
        for (const auto& f : h.basis) {
            SubSpaces im = image_spaces(f);
            for (int v = 0; v < nv; ++v) {
                if (!im[v].c) continue;
                MatQ s = hstack(out[v], im[v]);
                out[v] = image(s);
            }
            DimVec got = sub_dims(out);
            if (got == target) return true;
        }
    }
    return false;
}

Status hn_heart(const StabilityCondition& sc, const Rep& y, int hs, std::vector<std::pair<Rep, PhaseKey>>& fs,
                RepMap& last) {
    Rep cur = y;
    RepMap pi = identity_map(y);
    while (!cur.zero()) {
        auto d = mds_dims(sc, cur);
        if (!d) return Status::Undetermined;
        if (*d == cur.dimv()) {
            fs.push_back({cur, sc.heart_phase(cur.dimv(), hs)});
            last = pi;
            return Status::Yes;
        }
        SubSpaces sub;
        if (!realize_mds(sc, cur, *d, sub)) return Status::Undetermined;
        Rep f = restrict_rep(cur, sub, nullptr);
        fs.push_back({f, sc.heart_phase(f.dimv(), hs)});
        RepMap p;
        Rep next = quotient_rep(cur, sub, &p);
        pi = compose(p, pi);
        cur = next;
    }
    return Status::Yes;
}

}  // namespace

Status heart_semistable(const StabilityCondition& sc, const Rep& y) {
    if (y.zero()) return Status::No;
    FormalObject dec = decompose(y);
    CQ zy = sc.heart_charge(y.dimv());
    for (const auto& s : dec.summands)
        if (cross_sign(zy, sc.heart_charge(s.rep.dimv())) != 0) return Status::No;
    bool unknown = false;
    for (const auto& s : dec.summands) {
        CQ zs = sc.heart_charge(s.rep.dimv());
        if (auto o = indec_sub_dims(s)) {
            for (const auto& a : *o)
                if (!is_zero(a) && cross_sign(zs, sc.heart_charge(a)) > 0) return Status::No;
            continue;
        }
        for (const auto& c : catalog_objects_below(sc.heart_quiver(), s.rep.dimv())) {
            Rep r = realize(c).rep;
            if (cross_sign(zs, sc.heart_charge(r.dimv())) > 0 && exists_mono(r, s.rep)) return Status::No;
        }
        unknown = true;
    }
    return unknown ? Status::Undetermined : Status::Yes;
}

FormalObject object_formal(const ExcObject& x) {
    Realized r = realize(x);
    FormalObject f;
    f.summands.push_back(Summand{r.rep, r.shift, x});
    return f;
}

Status is_semistable(const StabilityCondition& sc, const FormalObject& x) {
    if (x.zero()) return Status::No;
    std::optional<int> deg;
    std::vector<Rep> ys;
    for (const auto& s : x.summands) {
        Rep y;
        int hs = 0;
        sc.to_heart(s.rep, s.shift, y, hs);
        if (deg && *deg != hs) return Status::No;
        deg = hs;
        ys.push_back(y);
    }
    return heart_semistable(sc, direct_sum(ys));
}

Status is_semistable(const StabilityCondition& sc, const ExcObject& x) { return is_semistable(sc, object_formal(x)); }

HNResult hn_filtration(const StabilityCondition& sc, const FormalObject& x) {
    HNResult res;
    std::map<int, std::vector<Rep>> groups;
    for (const auto& s : x.summands) {
        Rep y;
        int hs = 0;
        sc.to_heart(s.rep, s.shift, y, hs);
        groups[hs].push_back(y);
        if (x.summands.size() == 1) {
            res.heart_source = y;
            res.heart_shift = hs;
        }
    }
    struct Raw {
        Rep rep;
        int hs;
        PhaseKey ph;
    };
    std::vector<Raw> raws;
    for (const auto& [hs, reps] : groups) {
        Rep y = direct_sum(reps);
        std::vector<std::pair<Rep, PhaseKey>> fs;
        RepMap last;
        if (hn_heart(sc, y, hs, fs, last) != Status::Yes) {
            res.status = Status::Undetermined;
            return res;
        }
        for (auto& [r, ph] : fs) raws.push_back({r, hs, ph});
        if (x.summands.size() == 1) {
            res.has_last_map = true;
            res.last_map = last;
        }
    }
    std::stable_sort(raws.begin(), raws.end(), [](const Raw& a, const Raw& b) { return compare(a.ph, b.ph) > 0; });
    std::vector<Raw> merged;
    for (auto& r : raws) {
        if (!merged.empty() && compare(merged.back().ph, r.ph) == 0)
            merged.back().rep = direct_sum(merged.back().rep, r.rep);
        else
            merged.push_back(r);
    }
    for (auto& r : merged) res.factors.push_back(HNFactor{sc.from_heart(r.rep, r.hs), r.ph, r.rep, r.hs});
    return res;
}

HNResult hn_filtration(const StabilityCondition& sc, const ExcObject& x) { return hn_filtration(sc, object_formal(x)); }

PhaseKey phase_of(const StabilityCondition& sc, const FormalObject& x) {
    if (is_semistable(sc, x) != Status::Yes) throw DomainError("phase of an object not certified semistable");
    Rep y;
    int hs = 0;
    sc.to_heart(x.summands[0].rep, x.summands[0].shift, y, hs);
    return sc.heart_phase(y.dimv(), hs);
}

PhaseKey phase_of(const StabilityCondition& sc, const ExcObject& x) { return phase_of(sc, object_formal(x)); }

std::string summand_key(const Summand& s) {
    if (s.label) return s.label->label();
    std::string k = "?" + dims_to_string(s.rep.dimv());
    if (s.shift) k += "[" + std::to_string(s.shift) + "]";
    return k;
}

std::map<std::string, int> theta(const StabilityCondition& sc, const FormalObject& x) {
    std::map<std::string, int> t;
    if (x.zero()) return t;
    HNResult h = hn_filtration(sc, x);
    if (h.status != Status::Yes) throw DomainError("theta undetermined: HN filtration not computable");
    for (const auto& f : h.factors)
        for (const auto& s : f.object.summands) ++t[summand_key(s)];
    return t;
}

std::map<std::string, int> theta(const StabilityCondition& sc, const ExcObject& x) {
    return theta(sc, object_formal(x));
}

int theta_mass(const std::map<std::string, int>& t) {
    int n = 0;
    for (const auto& [k, v] : t) n += v;
    return n;
}

bool theta_less(const std::map<std::string, int>& a, const std::map<std::string, int>& b) {
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        if (it == b.end() || it->second < v) return false;
    }
    return a != b;
}

namespace {

DimVec imaginary_root(const Quiver& q) {
    if (q.name == "q1" || q.name == "q2" || q.name == "k2") return DimVec(q.nv(), 1);
    return {};
}

}  // namespace

PhaseStats phase_stats(const StabilityCondition& sc, int window) {
    PhaseStats ps;
    const Quiver& q = sc.ambient();
    for (const auto& c : catalog_objects(q.name, window)) {
        PhaseEntry e{c, is_semistable(sc, c), PhaseKey{}};
        if (e.semistable == Status::Yes) {
            e.phase = phase_of(sc, c);
            if (!ps.have_range || compare(e.phase, ps.phi_min) < 0) {
                ps.phi_min = e.phase;
                ps.min_label = c.label();
            }
            if (!ps.have_range || compare(e.phase, ps.phi_max) > 0) {
                ps.phi_max = e.phase;
                ps.max_label = c.label();
            }
            ps.have_range = true;
        }
        ps.entries.push_back(e);
    }
    DimVec delta = imaginary_root(q);
    if (delta.empty()) return ps;
    ps.delta = sc.charge(delta);
    ps.delta_phase = ps.delta.arg_over_pi();
    ps.minus_delta_phase = (-ps.delta).arg_over_pi();
    std::map<std::string, std::vector<const PhaseEntry*>> fam;
    for (const auto& e : ps.entries)
        if (e.object.parametric()) fam[e.object.family].push_back(&e);
    if (q.name == "k2")
        for (const auto& e : ps.entries) fam[e.object.m > 0 ? "s+" : "s-"].push_back(&e);
    for (auto& [name, list] : fam) {
        if (name == "s-") std::reverse(list.begin(), list.end());
        if (list.size() < 3) continue;
        bool ok = true;
        for (auto* e : list) ok = ok && e->semistable == Status::Yes;
        if (!ok) continue;
        int dir = compare(list[1]->phase, list[0]->phase);
        if (dir == 0) continue;
        for (size_t i = 1; i < list.size() && ok; ++i) ok = compare(list[i]->phase, list[i - 1]->phase) == dir;
        if (!ok) continue;
        // nearest representative of +-arg(delta) mod 2 to the last phase
        double last = list.back()->phase.value(), target = 0, best = 1e9;
        for (double t0 : {ps.delta_phase, ps.minus_delta_phase})
            for (int k = -4; k <= 4; ++k)
                if (std::fabs(last - (t0 + 2 * k)) < best) {
                    best = std::fabs(last - (t0 + 2 * k));
                    target = t0 + 2 * k;
                }
        for (size_t i = 1; i < list.size() && ok; ++i)
            ok = std::fabs(list[i]->phase.value() - target) < std::fabs(list[i - 1]->phase.value() - target);
        if (ok) ps.limit_families.push_back(name);
    }
    return ps;
}

std::vector<CQ> restrict_charge(const std::vector<CQ>& z, int i, int j) {
    if (i < 0 || j >= int(z.size()) || i >= j) throw DomainError("restriction range must satisfy 0 <= i < j < n");
    std::vector<CQ> out(z.begin() + i, z.begin() + j + 1);
    for (const auto& v : out)
        if (!v.in_half_plane()) throw DomainError("restricted value outside the half plane");
    return out;
}

}  // namespace qstab
