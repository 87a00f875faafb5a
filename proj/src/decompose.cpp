#include "qstab/decompose.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <random>

namespace qstab {

DimVec FormalObject::klass(int nv) const {
    DimVec d(nv, 0);
    for (const auto& s : summands) {
        DimVec e = s.rep.dimv();
        d = (s.shift % 2 == 0) ? add(d, e) : sub(d, e);
    }
    return d;
}

namespace {

bool builtin_quiver(const Quiver& q) {
    try {
        return quiver_by_name(q.name) == q;
    } catch (const DomainError&) {
        return false;
    }
}

Q scalar_of(const RepMap& f) {
    for (const auto& m : f.f)
        if (m.r > 0) return m(0, 0);
    return Q(0);
}

RepMap power(const RepMap& f, int n) {
    RepMap r = f;
    for (int i = 1; i < n; ++i) r = compose(r, f);
    return r;
}

// Best rational approximation with bounded denominator.
Q rationalize(double x, long den_bound) {
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double v = x;
    for (int it = 0; it < 40; ++it) {
        double a = std::floor(v);
        long ai = long(a);
        long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > den_bound) break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        double frac = v - a;
        if (std::abs(frac) < 1e-12) break;
        v = 1.0 / frac;
    }
    Q q(h1, k1);
    q.canonicalize();
    return q;
}

std::vector<Q> rational_eigenvalues(const MatQ& m) {
    std::vector<Q> out;
    if (m.r == 0) return out;
    Eigen::MatrixXd a(m.r, m.c);
    for (int i = 0; i < m.r; ++i)
        for (int j = 0; j < m.c; ++j) a(i, j) = m(i, j).get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
    for (int i = 0; i < m.r; ++i) {
        auto ev = es.eigenvalues()[i];
        if (std::abs(ev.imag()) > 1e-6) continue;
        Q lam = rationalize(ev.real(), 10000);
        if (std::find(out.begin(), out.end(), lam) != out.end()) continue;
        MatQ s = m - scaled(MatQ::identity(m.r), lam);
        if (rank(s) < m.r) out.push_back(lam);
    }
    return out;
}

bool fitting_split(const Rep& x, const RepMap& phi, Rep& k, Rep& i) {
    const int n = x.total_dim();
    for (int v = 0; v < x.q.nv(); ++v)
        for (const Q& lam : rational_eigenvalues(phi.f[v])) {
            RepMap s = phi;
            for (int w = 0; w < x.q.nv(); ++w) s.f[w] = phi.f[w] - scaled(MatQ::identity(x.dims[w]), lam);
            RepMap p = power(s, std::max(1, n));
            SubSpaces ker, img;
            int dk = 0;
            for (const auto& m : p.f) {
                ker.push_back(kernel(m));
                img.push_back(m.c ? image(m) : MatQ(m.r, 0));
                dk += ker.back().c;
            }
            if (dk == 0 || dk == n) continue;
            k = restrict_rep(x, ker, nullptr);
            i = restrict_rep(x, img, nullptr);
            return true;
        }
    return false;
}

void split_rec(const Rep& x, std::vector<Summand>& out, int shift, int depth);

void split_remainder(const Rep& x, std::vector<Summand>& out, int shift, int depth) {
    if (x.zero()) return;
    if (is_local_endomorphism_ring(x)) {
        out.push_back({x, shift, std::nullopt});
        return;
    }
    HomSpace end = hom_space(x, x);
    std::mt19937_64 rng(0x5eed + depth);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int attempt = 0; attempt < 40; ++attempt) {
        RepMap phi;
        if (attempt < end.dim) phi = end.basis[attempt];
        else {
            std::vector<Q> c(end.dim);
            for (auto& v : c) v = coef(rng);
            phi = combine(end.basis, c);
        }
        Rep k, i;
        if (fitting_split(x, phi, k, i)) {
            split_rec(k, out, shift, depth + 1);
            split_rec(i, out, shift, depth + 1);
            return;
        }
    }
    throw InternalError("decomposition undetermined");
}

void split_rec(const Rep& x, std::vector<Summand>& out, int shift, int depth) {
    if (x.zero()) return;
    if (depth > 64) throw InternalError("decomposition recursion too deep");
    if (builtin_quiver(x.q)) {
        auto cands = catalog_objects_below(x.q, x.dimv());
        std::sort(cands.begin(), cands.end(), [](const ExcObject& a, const ExcObject& b) {
            DimVec da = realize(a).rep.dimv(), db = realize(b).rep.dimv();
            if (total(da) != total(db)) return total(da) > total(db);
            return a < b;
        });
        for (const auto& c : cands) {
            Rep y = realize(c).rep;
            HomSpace yx = hom_space(y, x);
            if (!yx.dim) continue;
            HomSpace xy = hom_space(x, y);
            if (!xy.dim) continue;
            MatQ p(yx.dim, xy.dim);
            for (int a = 0; a < yx.dim; ++a)
                for (int b = 0; b < xy.dim; ++b) p(a, b) = scalar_of(compose(xy.basis[b], yx.basis[a]));
            MatQ w = p;
            auto cols = rref(w);
            if (cols.empty()) continue;
            MatQ wt = transpose(p);
            auto rows = rref(wt);
            const int r = int(cols.size());
            MatQ m(r, r);
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) m(a, b) = p(rows[a], cols[b]);
            MatQ ninv = inverse(m);
            // complement: common kernel of the dual maps g'_c = sum_b ninv(b, c) g_{cols[b]}
            SubSpaces comp(x.q.nv());
            for (int v = 0; v < x.q.nv(); ++v) {
                MatQ stack(0, x.dims[v]);
                for (int c2 = 0; c2 < r; ++c2) {
                    MatQ g(y.dims[v], x.dims[v]);
                    for (int b = 0; b < r; ++b) g = g + scaled(xy.basis[cols[b]].f[v], ninv(b, c2));
                    stack = vstack(stack, g);
                }
                comp[v] = kernel(stack);
            }
            const ExcObject lab = c.shifted(shift - realize(c).shift);
            for (int a = 0; a < r; ++a) out.push_back({y, shift, lab});
            split_rec(restrict_rep(x, comp, nullptr), out, shift, depth + 1);
            return;
        }
    }
    split_remainder(x, out, shift, depth);
}

}  // namespace

bool is_local_endomorphism_ring(const Rep& x) {
    HomSpace end = hom_space(x, x);
    if (end.dim <= 1) return end.dim == 1;
    MatQ t(end.dim, end.dim);
    for (int i = 0; i < end.dim; ++i)
        for (int j = 0; j < end.dim; ++j) {
            RepMap p = compose(end.basis[i], end.basis[j]);
            Q tr = 0;
            for (const auto& m : p.f)
                for (int d = 0; d < m.r; ++d) tr += m(d, d);
            t(i, j) = tr;
        }
    // radical = kernel of the trace form (characteristic zero)
    return end.dim - kernel(t).c == 1;
}

FormalObject decompose(const Rep& x, int shift) {
    FormalObject f;
    split_rec(x, f.summands, shift, 0);
    return f;
}

RepMap random_element(const HomSpace& h, const Rep& x, const Rep& y, uint64_t seed) {
    if (!h.dim) return zero_map(x, y);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(-1000000, 1000000);
    std::vector<Q> c(h.dim);
    for (auto& v : c) v = Q(coef(rng));
    return combine(h.basis, c);
}

bool exists_mono(const Rep& x, const Rep& e, RepMap* witness) {
    if (x.zero()) {
        if (witness) *witness = zero_map(x, e);
        return true;
    }
    if (!leq(x.dimv(), e.dimv())) return false;
    HomSpace h = hom_space(x, e);
    if (!h.dim) return false;
    for (uint64_t s = 1; s <= 4; ++s) {
        RepMap f = random_element(h, x, e, s * 7919);
        if (is_injective(f)) {
            if (witness) *witness = f;
            return true;
        }
    }
    return false;
}

bool is_isomorphic(const Rep& x, const Rep& y, RepMap* witness) {
    if (!(x.q == y.q) || x.dims != y.dims) return false;
    if (x.zero()) return true;
    HomSpace h = hom_space(x, y);
    if (!h.dim) return false;
    for (uint64_t s = 1; s <= 4; ++s) {
        RepMap f = random_element(h, x, y, s * 104729);
        if (is_iso(f)) {
            if (witness) *witness = f;
            return true;
        }
    }
    return false;
}

SesWitness exact_sequence_witness(const Rep& a, const Rep& c, const Rep& b) {
    SesWitness w;
    if (add(a.dimv(), b.dimv()) != c.dimv()) return w;
    if (!exists_mono(a, c, &w.mono)) return w;
    RepMap proj;
    Rep cok = cokernel_rep(c, w.mono, &proj);
    RepMap iso;
    if (!is_isomorphic(cok, b, &iso)) return w;
    w.epi = compose(iso, proj);
    w.ok = true;
    return w;
}

std::vector<ExcObject> catalog_objects_below(const Quiver& q, const DimVec& d) {
    std::vector<ExcObject> out;
    long long t = total(d);
    auto fams = catalog_families(q.name);
    if (fams.size() == 1) {
        for (int i = 0;; ++i) {
            bool any = false;
            for (int j : {i + 1, -i}) {
                ExcObject o{q.name, "s", j, 0};
                DimVec e = build_catalog_object(q.name, "s", j).dimv();
                if (total(e) <= t) any = true;
                if (leq(e, d)) out.push_back(o);
            }
            if (!any) break;
        }
        return out;
    }
    for (const auto& o : catalog_objects(q.name, int(t))) {
        DimVec e = build_catalog_object(q.name, o.family, o.m).dimv();
        if (leq(e, d)) out.push_back(o);
    }
    return out;
}

}  // namespace qstab
