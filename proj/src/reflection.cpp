#include "qstab/reflection.hpp"

#include <algorithm>
#include <numeric>

namespace qstab {

Quiver reflect_quiver(const Quiver& q, int k) {
    Quiver r = q;
    for (auto& a : r.arrows)
        if (a.src == k || a.tgt == k) std::swap(a.src, a.tgt);
    return r;
}

namespace {

std::vector<int> incident(const Quiver& q, int k, bool incoming) {
    std::vector<int> out;
    for (int i = 0; i < q.na(); ++i)
        if ((incoming ? q.arrows[i].tgt : q.arrows[i].src) == k) out.push_back(i);
    return out;
}

// Block column [X_a1 ... X_ar] : sum X_{s(a)} -> X_k.
MatQ sink_map(const Rep& x, int k, const std::vector<int>& in) {
    int cols = 0;
    for (int i : in) cols += x.dims[x.q.arrows[i].src];
    MatQ m(x.dims[k], cols);
    int off = 0;
    for (int i : in) {
        const MatQ& a = x.mats[i];
        for (int r = 0; r < a.r; ++r)
            for (int c = 0; c < a.c; ++c) m(r, off + c) = a(r, c);
        off += a.c;
    }
    return m;
}

MatQ source_map(const Rep& x, int k, const std::vector<int>& out) {
    int rows = 0;
    for (int i : out) rows += x.dims[x.q.arrows[i].tgt];
    MatQ m(rows, x.dims[k]);
    int off = 0;
    for (int i : out) {
        const MatQ& a = x.mats[i];
        for (int r = 0; r < a.r; ++r)
            for (int c = 0; c < a.c; ++c) m(off + r, c) = a(r, c);
        off += a.r;
    }
    return m;
}

MatQ block_diag(const RepMap& f, const Quiver& q, const std::vector<int>& arrows, bool use_src) {
    int r = 0, c = 0;
    for (int i : arrows) {
        const MatQ& m = f.f[use_src ? q.arrows[i].src : q.arrows[i].tgt];
        r += m.r;
        c += m.c;
    }
    MatQ d(r, c);
    int ro = 0, co = 0;
    for (int i : arrows) {
        const MatQ& m = f.f[use_src ? q.arrows[i].src : q.arrows[i].tgt];
        for (int a = 0; a < m.r; ++a)
            for (int b = 0; b < m.c; ++b) d(ro + a, co + b) = m(a, b);
        ro += m.r;
        co += m.c;
    }
    return d;
}

// Projection p with kernel = column span of b, and a section s with p s = 1.
void quotient_data(const MatQ& b, int n, MatQ& p, MatQ& s) {
    MatQ basis = b.c ? image(b) : MatQ(n, 0);
    auto cc = complement_coordinates(basis);
    int k = basis.c, c = int(cc.size());
    MatQ e(n, c);
    for (int j = 0; j < c; ++j) e(cc[j], j) = 1;
    MatQ full = n ? inverse(hstack(basis, e)) : MatQ(0, 0);
    p = MatQ(c, n);
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < n; ++j) p(i, j) = full(k + i, j);
    s = e;
}

}  // namespace

Rep reflect_at_sink(const Rep& x, int k) {
    if (!x.q.is_sink(k)) throw DomainError("reflection vertex is not a sink");
    auto in = incident(x.q, k, true);
    MatQ ker = kernel(sink_map(x, k, in));
    Quiver rq = reflect_quiver(x.q, k);
    std::vector<int> d = x.dims;
    d[k] = ker.c;
    Rep y(rq, d);
    for (int i = 0; i < x.q.na(); ++i)
        if (std::find(in.begin(), in.end(), i) == in.end()) y.mats[i] = x.mats[i];
    int off = 0;
    for (int i : in) {
        int ds = x.dims[x.q.arrows[i].src];
        MatQ m(ds, ker.c);
        for (int r = 0; r < ds; ++r)
            for (int c = 0; c < ker.c; ++c) m(r, c) = ker(off + r, c);
        y.mats[i] = m;
        off += ds;
    }
    return y;
}

Rep reflect_at_source(const Rep& x, int k) {
    if (!x.q.is_source(k)) throw DomainError("reflection vertex is not a source");
    auto out = incident(x.q, k, false);
    MatQ phi = source_map(x, k, out);
    MatQ p, s;
    quotient_data(phi, phi.r, p, s);
    Quiver rq = reflect_quiver(x.q, k);
    std::vector<int> d = x.dims;
    d[k] = p.r;
    Rep y(rq, d);
    for (int i = 0; i < x.q.na(); ++i)
        if (std::find(out.begin(), out.end(), i) == out.end()) y.mats[i] = x.mats[i];
    int off = 0;
    for (int i : out) {
        int dt = x.dims[x.q.arrows[i].tgt];
        MatQ m(p.r, dt);
        for (int r = 0; r < p.r; ++r)
            for (int c = 0; c < dt; ++c) m(r, c) = p(r, off + c);
        y.mats[i] = m;
        off += dt;
    }
    return y;
}

RepMap reflect_map_at_sink(const Rep& x, const Rep& y, const RepMap& f, int k) {
    auto in = incident(x.q, k, true);
    MatQ kx = kernel(sink_map(x, k, in)), ky = kernel(sink_map(y, k, in));
    MatQ g;
    if (!solve(ky, block_diag(f, x.q, in, true) * kx, g)) throw InternalError("reflected map does not preserve kernels");
    RepMap r = f;
    r.f[k] = g;
    return r;
}

RepMap reflect_map_at_source(const Rep& x, const Rep& y, const RepMap& f, int k) {
    auto out = incident(x.q, k, false);
    MatQ px, sx, py, sy;
    MatQ phx = source_map(x, k, out), phy = source_map(y, k, out);
    quotient_data(phx, phx.r, px, sx);
    quotient_data(phy, phy.r, py, sy);
    RepMap r = f;
    r.f[k] = py * block_diag(f, x.q, out, false) * sx;
    return r;
}

QuiverIso find_quiver_iso(const Quiver& from, const Quiver& to) {
    if (from.nv() != to.nv() || from.na() != to.na()) throw DomainError("quivers have different shapes");
    std::vector<int> perm(from.nv());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        QuiverIso iso;
        iso.vertex = perm;
        std::vector<char> used(to.na(), 0);
        bool ok = true;
        for (const auto& a : from.arrows) {
            int hit = -1;
            for (int j = 0; j < to.na() && hit < 0; ++j)
                if (!used[j] && to.arrows[j].src == perm[a.src] && to.arrows[j].tgt == perm[a.tgt]) hit = j;
            if (hit < 0) { ok = false; break; }
            used[hit] = 1;
            iso.arrow.push_back(hit);
        }
        if (ok) return iso;
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw DomainError("quivers are not isomorphic");
}

Rep transport(const Rep& x, const Quiver& to, const QuiverIso& iso) {
    return relabel(x, to, iso.vertex, iso.arrow);
}

RepMap transport_map(const RepMap& f, const QuiverIso& iso) {
    RepMap g;
    g.f.resize(f.f.size());
    for (size_t v = 0; v < f.f.size(); ++v) g.f[iso.vertex[v]] = f.f[v];
    return g;
}

}  // namespace qstab
