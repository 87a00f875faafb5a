#include "qstab/catalog.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "qstab/reflection.hpp"

namespace qstab {

MatQ pi_plus(int m) {
    MatQ a(m, m + 1);
    for (int i = 0; i < m; ++i) a(i, i) = 1;
    return a;
}

MatQ pi_minus(int m) {
    MatQ a(m, m + 1);
    for (int i = 0; i < m; ++i) a(i, i + 1) = 1;
    return a;
}

MatQ j_plus(int m) { return transpose(pi_plus(m)); }
MatQ j_minus(int m) { return transpose(pi_minus(m)); }

std::string ExcObject::base_label() const {
    if (kronecker()) return "s" + std::to_string(m);
    if (parametric()) return family + ":" + std::to_string(m);
    return family;
}

std::string ExcObject::label() const {
    std::string s = base_label();
    if (shift) s += "[" + std::to_string(shift) + "]";
    return s;
}

bool operator<(const ExcObject& a, const ExcObject& b) {
    return std::tie(a.quiver, a.family, a.m, a.shift) < std::tie(b.quiver, b.family, b.m, b.shift);
}

std::vector<std::string> catalog_families(const std::string& quiver) {
    if (quiver == "q1") return {"E1", "E2", "E3", "E4", "M", "M'"};
    if (quiver == "q2") return {"E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8", "F+", "F-", "G+", "G-"};
    if (quiver.size() > 1 && quiver[0] == 'k') return {"s"};
    throw DomainError("unknown quiver " + quiver);
}

ExcObject parse_object(const std::string& quiver, const std::string& text) {
    ExcObject o;
    o.quiver = quiver;
    std::string body = text;
    auto lb = body.find('[');
    if (lb != std::string::npos) {
        if (body.back() != ']') throw DomainError("malformed shift in " + text);
        try {
            size_t used = 0;
            std::string inner = body.substr(lb + 1, body.size() - lb - 2);
            o.shift = std::stoi(inner, &used);
            if (used != inner.size()) throw DomainError("malformed shift in " + text);
        } catch (const std::logic_error&) {
            throw DomainError("malformed shift in " + text);
        }
        body = body.substr(0, lb);
    }
    auto fams = catalog_families(quiver);
    if (fams.size() == 1) {
        if (body.size() < 2 || body[0] != 's') throw DomainError("unknown label " + text);
        try {
            size_t used = 0;
            o.m = std::stoi(body.substr(1), &used);
            if (used != body.size() - 1) throw DomainError("unknown label " + text);
        } catch (const std::logic_error&) {
            throw DomainError("unknown label " + text);
        }
        o.family = "s";
        return o;
    }
    auto colon = body.find(':');
    std::string fam = body.substr(0, colon);
    bool known = false;
    for (const auto& f : fams) known |= f == fam;
    if (!known) throw DomainError("unknown label " + text);
    o.family = fam;
    if (o.parametric()) {
        if (colon == std::string::npos) throw DomainError("missing parameter in " + text);
        try {
            size_t used = 0;
            std::string p = body.substr(colon + 1);
            o.m = std::stoi(p, &used);
            if (used != p.size() || o.m < 0) throw DomainError("bad parameter in " + text);
        } catch (const std::logic_error&) {
            throw DomainError("bad parameter in " + text);
        }
    } else if (colon != std::string::npos) {
        throw DomainError("family " + fam + " takes no parameter");
    }
    return o;
}

namespace {

// Dims are m + offset; an arrow between equal dims is Id, else +/- selects pi or j.
Rep family_rep(const Quiver& q, int m, const std::vector<int>& offset, const std::vector<int>& sign) {
    std::vector<int> d(q.nv());
    for (int v = 0; v < q.nv(); ++v) d[v] = m + offset[v];
    Rep x(q, d);
    for (int i = 0; i < q.na(); ++i) {
        int s = d[q.arrows[i].src], t = d[q.arrows[i].tgt];
        if (s == t) x.mats[i] = MatQ::identity(s);
        else if (s == t + 1) x.mats[i] = sign[i] > 0 ? pi_plus(t) : pi_minus(t);
        else x.mats[i] = sign[i] > 0 ? j_plus(s) : j_minus(s);
    }
    x.check();
    return x;
}

Rep small_rep(const Quiver& q, const std::vector<int>& d) {
    Rep x(q, d);
    for (int i = 0; i < q.na(); ++i)
        if (d[q.arrows[i].src] == 1 && d[q.arrows[i].tgt] == 1) x.mats[i] = MatQ::identity(1);
    return x;
}

Rep q1_object(const std::string& f, int m) {
    // vertex order (b, mid, e); arrows (b>e, b>mid, mid>e)
    static const std::map<std::string, std::pair<std::vector<int>, std::vector<int>>> tab = {
        {"E1", {{1, 0, 0}, {+1, -1, 0}}},
        {"E2", {{0, 1, 1}, {+1, -1, 0}}},
        {"E3", {{0, 0, 1}, {+1, 0, -1}}},
        {"E4", {{1, 1, 0}, {+1, 0, -1}}},
    };
    if (f == "M") return small_rep(q1(), {0, 1, 0});
    if (f == "M'") return small_rep(q1(), {1, 0, 1});
    auto it = tab.find(f);
    if (it == tab.end()) throw DomainError("unknown label " + f);
    return family_rep(q1(), m, it->second.first, it->second.second);
}

Rep q2_object(const std::string& f, int m) {
    // vertex order (b, -, +, e); arrows (b>+, b>-, +>e, ->e)
    static const std::map<std::string, std::pair<std::vector<int>, std::vector<int>>> tab = {
        {"E1", {{1, 0, 0, 0}, {+1, -1, 0, 0}}},
        {"E2", {{0, 1, 1, 1}, {+1, -1, 0, 0}}},
        {"E3", {{0, 0, 0, 1}, {0, 0, +1, -1}}},
        {"E4", {{1, 1, 1, 0}, {0, 0, +1, -1}}},
        {"E5", {{0, 1, 0, 1}, {0, -1, +1, 0}}},
        {"E6", {{1, 0, 1, 0}, {0, -1, +1, 0}}},
        {"E7", {{1, 1, 0, 0}, {+1, 0, 0, -1}}},
        {"E8", {{0, 0, 1, 1}, {+1, 0, 0, -1}}},
    };
    if (f == "F+") return small_rep(q2(), {0, 0, 1, 0});
    if (f == "F-") return small_rep(q2(), {0, 1, 0, 0});
    if (f == "G+") return small_rep(q2(), {1, 0, 1, 1});
    if (f == "G-") return small_rep(q2(), {1, 1, 0, 1});
    auto it = tab.find(f);
    if (it == tab.end()) throw DomainError("unknown label " + f);
    return family_rep(q2(), m, it->second.first, it->second.second);
}

// s_i for i >= 1 is (S^-)^{i-1} of the simple at the sink; s_i[1] for i <= 0 is
// (S^+)^{-i} of the simple at the source. Reflections are relabelled back onto K(l).
Rep kronecker_object(int l, int i) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, Rep> cache;
    std::lock_guard<std::mutex> lock(mu);
    Quiver k = kronecker(l);
    const bool up = i >= 1;
    int j = up ? 1 : 0;
    Rep x = simple_rep(k, j);
    while (j != i) {
        j += up ? 1 : -1;
        auto it = cache.find({l, j});
        if (it != cache.end()) {
            x = it->second;
            continue;
        }
        Rep r = up ? reflect_at_source(x, 0) : reflect_at_sink(x, 1);
        x = transport(r, k, find_quiver_iso(r.q, k));
        cache[{l, j}] = x;
    }
    return x;
}

}  // namespace

Rep build_catalog_object(const std::string& quiver, const std::string& family, int m) {
    if (quiver == "q1") {
        if (m < 0) throw DomainError("parameter must be nonnegative");
        return q1_object(family, m);
    }
    if (quiver == "q2") {
        if (m < 0) throw DomainError("parameter must be nonnegative");
        return q2_object(family, m);
    }
    if (quiver.size() > 1 && quiver[0] == 'k' && family == "s") {
        int l = std::stoi(quiver.substr(1));
        if (l < 2) throw DomainError("Kronecker catalog needs l >= 2");
        return kronecker_object(l, m);
    }
    throw DomainError("unknown label " + family + " for quiver " + quiver);
}

Realized realize(const ExcObject& x) {
    Realized r;
    r.rep = build_catalog_object(x.quiver, x.family, x.m);
    r.shift = x.shift - (x.kronecker() && x.m <= 0 ? 1 : 0);
    return r;
}

DimVec object_class(const ExcObject& x) {
    Realized r = realize(x);
    DimVec d = r.rep.dimv();
    return (r.shift % 2 == 0) ? d : neg(d);
}

std::vector<ExcObject> catalog_objects(const std::string& quiver, int w) {
    std::vector<ExcObject> out;
    auto fams = catalog_families(quiver);
    if (fams.size() == 1) {
        for (int i = -w; i <= w + 1; ++i) out.push_back({quiver, "s", i, 0});
        return out;
    }
    for (int m = 0; m <= w; ++m)
        for (const auto& f : fams)
            if (f[0] == 'E') out.push_back({quiver, f, m, 0});
    for (const auto& f : fams)
        if (f[0] != 'E') out.push_back({quiver, f, 0, 0});
    return out;
}

bool find_by_dims(const std::string& quiver, const DimVec& d, int w, ExcObject& out) {
    for (const auto& o : catalog_objects(quiver, w)) {
        Realized r = realize(o);
        if (r.rep.dimv() == d) {
            out = o;
            return true;
        }
    }
    return false;
}

}  // namespace qstab

namespace qstab {

HomExt catalog_hom_ext(const ExcObject& x, const ExcObject& y) {
    static std::mutex mu;
    static std::map<std::pair<std::string, std::string>, HomExt> memo;
    if (x.quiver != y.quiver) throw DomainError("objects on different quivers");
    auto key = std::make_pair(x.quiver + "/" + x.base_label(), y.base_label());
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    Rep a = build_catalog_object(x.quiver, x.family, x.m);
    Rep b = build_catalog_object(y.quiver, y.family, y.m);
    HomExt h{hom_dim(a, b), 0};
    Z chi = euler_form(a.q, a.dimv(), b.dimv());
    Z e = Z(h.hom) - chi;
    if (e < 0) throw InternalError("negative ext dimension");
    h.ext = int(e.get_si());
    std::lock_guard<std::mutex> lock(mu);
    memo[key] = h;
    return h;
}

int hom_degree(const ExcObject& x, const ExcObject& y, int p) {
    // Hom(A[a], B[b][p]) = Ext^{p + b - a}(A, B)
    Realized rx = realize(x), ry = realize(y);
    HomExt h = catalog_hom_ext(x, y);
    int d = p + ry.shift - rx.shift;
    if (d == 0) return h.hom;
    if (d == 1) return h.ext;
    return 0;
}

int hom_total(const ExcObject& x, const ExcObject& y) {
    HomExt h = catalog_hom_ext(x, y);
    return h.hom + h.ext;
}

}  // namespace qstab
