#include "qstab/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace qstab {

int Quiver::vertex(const std::string& v) const {
    for (int i = 0; i < nv(); ++i)
        if (vertices[i] == v) return i;
    throw DomainError("unknown vertex " + v + " in " + name);
}

std::vector<int> Quiver::topo_order() const {
    std::vector<int> indeg(nv(), 0), out;
    for (const auto& a : arrows) ++indeg[a.tgt];
    std::vector<int> ready;
    for (int v = 0; v < nv(); ++v)
        if (!indeg[v]) ready.push_back(v);
    while (!ready.empty()) {
        int v = ready.front();
        ready.erase(ready.begin());
        out.push_back(v);
        for (const auto& a : arrows)
            if (a.src == v && --indeg[a.tgt] == 0) ready.push_back(a.tgt);
    }
    if (int(out.size()) != nv()) throw DomainError("quiver has an oriented cycle");
    return out;
}

bool Quiver::is_source(int v) const {
    for (const auto& a : arrows)
        if (a.tgt == v) return false;
    return true;
}

bool Quiver::is_sink(int v) const {
    for (const auto& a : arrows)
        if (a.src == v) return false;
    return true;
}

bool operator==(const Quiver& a, const Quiver& b) {
    if (a.name != b.name || a.vertices != b.vertices || a.na() != b.na()) return false;
    for (int i = 0; i < a.na(); ++i)
        if (a.arrows[i].src != b.arrows[i].src || a.arrows[i].tgt != b.arrows[i].tgt) return false;
    return true;
}

Quiver q1() {
    return {"q1", {"b", "mid", "e"}, {{0, 2, "b>e"}, {0, 1, "b>mid"}, {1, 2, "mid>e"}}};
}

Quiver q2() {
    return {"q2", {"b", "-", "+", "e"}, {{0, 2, "b>+"}, {0, 1, "b>-"}, {2, 3, "+>e"}, {1, 3, "->e"}}};
}

Quiver kronecker(int l) {
    if (l < 1) throw DomainError("Kronecker quiver needs l >= 1");
    Quiver q{"k" + std::to_string(l), {"source", "sink"}, {}};
    for (int i = 0; i < l; ++i) q.arrows.push_back({0, 1, "a" + std::to_string(i + 1)});
    return q;
}

Quiver quiver_by_name(const std::string& name) {
    if (name == "q1") return q1();
    if (name == "q2") return q2();
    if (name.size() > 1 && name[0] == 'k') return kronecker(std::stoi(name.substr(1)));
    throw DomainError("unknown quiver " + name);
}

Z euler_form(const Quiver& q, const DimVec& d, const DimVec& e) {
    if (int(d.size()) != q.nv() || int(e.size()) != q.nv()) throw DomainError("class does not match quiver vertices");
    Z s = 0;
    for (int v = 0; v < q.nv(); ++v) s += Z(long(d[v])) * Z(long(e[v]));
    for (const auto& a : q.arrows) s -= Z(long(d[a.src])) * Z(long(e[a.tgt]));
    return s;
}

const char* root_type_name(RootType t) {
    switch (t) {
        case RootType::Real: return "real";
        case RootType::Imaginary: return "imaginary";
        default: return "not-a-root";
    }
}

RootType root_type(const Quiver& q, const DimVec& d) {
    if (is_zero(d)) throw DomainError("zero vector has no root type");
    Z s = euler_form(q, d, d);
    if (s == 1) return RootType::Real;
    if (s <= 0) return RootType::Imaginary;
    return RootType::NotARoot;
}

std::vector<std::pair<DimVec, RootType>> enumerate_roots(const Quiver& q, long long bound) {
    if (bound < 1) throw DomainError("bound must be positive");
    std::vector<std::pair<DimVec, RootType>> out;
    DimVec d(q.nv(), 0);
    while (true) {
        int i = 0;
        while (i < q.nv() && d[i] == bound) d[i++] = 0;
        if (i == q.nv()) break;
        ++d[i];
        RootType t = root_type(q, d);
        if (t != RootType::NotARoot) out.emplace_back(d, t);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (total(x.first) != total(y.first)) return total(x.first) < total(y.first);
        return x.first > y.first;
    });
    return out;
}

long long total(const DimVec& d) {
    long long s = 0;
    for (auto x : d) s += x;
    return s;
}

DimVec add(const DimVec& a, const DimVec& b) {
    DimVec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

DimVec sub(const DimVec& a, const DimVec& b) {
    DimVec r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

DimVec neg(const DimVec& a) { return scale(-1, a); }

DimVec scale(long long s, const DimVec& a) {
    DimVec r(a);
    for (auto& x : r) x *= s;
    return r;
}

bool leq(const DimVec& a, const DimVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool is_zero(const DimVec& a) {
    for (auto x : a)
        if (x) return false;
    return true;
}

std::string dims_to_string(const DimVec& d) {
    std::ostringstream os;
    for (size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    return os.str();
}

DimVec parse_dims(const std::string& s) {
    DimVec d;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            d.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw DomainError("bad dimension vector " + s);
        }
    }
    return d;
}

}  // namespace qstab
