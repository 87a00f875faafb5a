#include "qstab/rep.hpp"

#include <functional>
#include <map>

#include "json.hpp"

namespace qstab {

Rep::Rep(Quiver quiver, std::vector<int> d) : q(std::move(quiver)), dims(std::move(d)) {
    if (int(dims.size()) != q.nv()) throw DomainError("dimension vector length does not match quiver");
    for (int x : dims)
        if (x < 0) throw DomainError("negative dimension");
    for (const auto& a : q.arrows) mats.emplace_back(dims[a.tgt], dims[a.src]);
}

DimVec Rep::dimv() const { return DimVec(dims.begin(), dims.end()); }

int Rep::total_dim() const {
    int t = 0;
    for (int x : dims) t += x;
    return t;
}

void Rep::check() const {
    if (int(dims.size()) != q.nv() || int(mats.size()) != q.na()) throw DomainError("malformed representation");
    for (int i = 0; i < q.na(); ++i) {
        const auto& a = q.arrows[i];
        if (mats[i].r != dims[a.tgt] || mats[i].c != dims[a.src])
            throw DomainError("matrix shape mismatch on arrow " + a.name);
    }
}

Rep simple_rep(const Quiver& q, int v) {
    std::vector<int> d(q.nv(), 0);
    d.at(v) = 1;
    return Rep(q, d);
}

Rep direct_sum(const Rep& x, const Rep& y) {
    if (!(x.q == y.q)) throw DomainError("direct sum over different quivers");
    std::vector<int> d(x.q.nv());
    for (int v = 0; v < x.q.nv(); ++v) d[v] = x.dims[v] + y.dims[v];
    Rep z(x.q, d);
    for (int i = 0; i < x.q.na(); ++i) {
        const MatQ &a = x.mats[i], &b = y.mats[i];
        MatQ& m = z.mats[i];
        for (int r = 0; r < a.r; ++r)
            for (int c = 0; c < a.c; ++c) m(r, c) = a(r, c);
        for (int r = 0; r < b.r; ++r)
            for (int c = 0; c < b.c; ++c) m(a.r + r, a.c + c) = b(r, c);
    }
    return z;
}

Rep direct_sum(const std::vector<Rep>& xs) {
    if (xs.empty()) throw DomainError("empty direct sum");
    Rep z = xs[0];
    for (size_t i = 1; i < xs.size(); ++i) z = direct_sum(z, xs[i]);
    return z;
}

Rep relabel(const Rep& x, const Quiver& target, const std::vector<int>& vertex_map, const std::vector<int>& arrow_map) {
    std::vector<int> d(target.nv(), 0);
    for (int v = 0; v < x.q.nv(); ++v) d[vertex_map[v]] = x.dims[v];
    Rep z(target, d);
    for (int i = 0; i < x.q.na(); ++i) z.mats[arrow_map[i]] = x.mats[i];
    z.check();
    return z;
}

bool is_morphism(const Rep& x, const Rep& y, const RepMap& f) {
    if (int(f.f.size()) != x.q.nv()) return false;
    for (int v = 0; v < x.q.nv(); ++v)
        if (f.f[v].r != y.dims[v] || f.f[v].c != x.dims[v]) return false;
    for (int i = 0; i < x.q.na(); ++i) {
        const auto& a = x.q.arrows[i];
        if (!(y.mats[i] * f.f[a.src] == f.f[a.tgt] * x.mats[i])) return false;
    }
    return true;
}

RepMap compose(const RepMap& g, const RepMap& f) {
    RepMap h;
    for (size_t v = 0; v < f.f.size(); ++v) h.f.push_back(g.f[v] * f.f[v]);
    return h;
}

RepMap identity_map(const Rep& x) {
    RepMap h;
    for (int d : x.dims) h.f.push_back(MatQ::identity(d));
    return h;
}

RepMap zero_map(const Rep& x, const Rep& y) {
    RepMap h;
    for (int v = 0; v < x.q.nv(); ++v) h.f.emplace_back(y.dims[v], x.dims[v]);
    return h;
}

RepMap combine(const std::vector<RepMap>& basis, const std::vector<Q>& coeffs) {
    if (basis.empty()) throw DomainError("empty basis");
    RepMap h = basis[0];
    for (auto& m : h.f) m = scaled(m, coeffs[0]);
    for (size_t i = 1; i < basis.size(); ++i)
        for (size_t v = 0; v < h.f.size(); ++v) h.f[v] = h.f[v] + scaled(basis[i].f[v], coeffs[i]);
    return h;
}

bool is_injective(const RepMap& f) {
    for (const auto& m : f.f)
        if (rank(m) != m.c) return false;
    return true;
}

bool is_surjective(const RepMap& f) {
    for (const auto& m : f.f)
        if (rank(m) != m.r) return false;
    return true;
}

bool is_iso(const RepMap& f) { return is_injective(f) && is_surjective(f); }

namespace {

struct HomSystem {
    MatQ eq;
    std::vector<int> offset;
    int unknowns = 0;
};

HomSystem hom_system(const Rep& x, const Rep& y) {
    if (!(x.q == y.q)) throw DomainError("representations over different quivers");
    x.check();
    y.check();
    HomSystem s;
    const int nv = x.q.nv();
    s.offset.resize(nv + 1, 0);
    for (int v = 0; v < nv; ++v) s.offset[v + 1] = s.offset[v] + y.dims[v] * x.dims[v];
    s.unknowns = s.offset[nv];
    int rows = 0;
    for (const auto& a : x.q.arrows) rows += y.dims[a.tgt] * x.dims[a.src];
    s.eq = MatQ(rows, s.unknowns);
    int row = 0;
    for (int ai = 0; ai < x.q.na(); ++ai) {
        const auto& a = x.q.arrows[ai];
        const MatQ &xa = x.mats[ai], &ya = y.mats[ai];
        const int dxs = x.dims[a.src], dxt = x.dims[a.tgt], dys = y.dims[a.src], dyt = y.dims[a.tgt];
        for (int i = 0; i < dyt; ++i)
            for (int j = 0; j < dxs; ++j, ++row) {
                // (Y_a f_s)(i,j) - (f_t X_a)(i,j)
                for (int k = 0; k < dys; ++k)
                    if (!is_zero(ya(i, k))) s.eq(row, s.offset[a.src] + k * dxs + j) += ya(i, k);
                for (int k = 0; k < dxt; ++k)
                    if (!is_zero(xa(k, j))) s.eq(row, s.offset[a.tgt] + i * dxt + k) -= xa(k, j);
            }
    }
    return s;
}

constexpr int64_t kModPrime = 2147483647;

bool to_mod(const MatQ& m, std::vector<int64_t>& out) {
    out.assign(m.a.size(), 0);
    for (size_t i = 0; i < m.a.size(); ++i) {
        const Q& v = m.a[i];
        if (is_zero(v)) continue;
        Z den = v.get_den() % kModPrime;
        if (den == 0) return false;
        Z num = v.get_num() % kModPrime;
        if (num < 0) num += kModPrime;
        Z inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), Z(kModPrime).get_mpz_t());
        Z r = (num * inv) % kModPrime;
        out[i] = r.get_si();
    }
    return true;
}

// Above this many unknowns a modular rank is tried first.
constexpr int kFastPathUnknowns = 160;

}  // namespace

HomSpace hom_space(const Rep& x, const Rep& y) {
    HomSystem s = hom_system(x, y);
    MatQ k = kernel(s.eq);
    HomSpace h;
    h.dim = k.c;
    for (int b = 0; b < k.c; ++b) {
        RepMap f;
        for (int v = 0; v < x.q.nv(); ++v) {
            MatQ m(y.dims[v], x.dims[v]);
            for (int i = 0; i < m.r; ++i)
                for (int j = 0; j < m.c; ++j) m(i, j) = k(s.offset[v] + i * m.c + j, b);
            f.f.push_back(std::move(m));
        }
        h.basis.push_back(std::move(f));
    }
    return h;
}

int hom_dim(const Rep& x, const Rep& y) {
    HomSystem s = hom_system(x, y);
    if (s.unknowns == 0) return 0;
    if (s.unknowns > kFastPathUnknowns) {
        // hom over Q lies in [max(0, chi), hom over F_p]; equality certifies.
        std::vector<int64_t> m;
        if (to_mod(s.eq, m)) {
            int hp = s.unknowns - rank_mod_p(m, s.eq.r, s.eq.c, kModPrime);
            Z chi = euler_form(x.q, x.dimv(), y.dimv());
            long long lower = chi > 0 ? chi.get_si() : 0;
            if (hp == lower) return hp;
        }
    }
    return s.unknowns - rank(s.eq);
}

int ext_dim(const Rep& x, const Rep& y) {
    Z chi = euler_form(x.q, x.dimv(), y.dimv());
    Z e = Z(hom_dim(x, y)) - chi;
    if (e < 0) throw InternalError("negative ext dimension");
    return int(e.get_si());
}

bool is_exceptional_rep(const Rep& x) {
    if (x.zero()) throw DomainError("zero representation");
    return hom_dim(x, x) == 1 && ext_dim(x, x) == 0;
}

namespace {

// All paths from v, grouped by endpoint; each path is its arrow sequence.
std::vector<std::vector<std::vector<int>>> paths_from(const Quiver& q, int v) {
    std::vector<std::vector<std::vector<int>>> out(q.nv());
    std::function<void(int, std::vector<int>&)> go = [&](int w, std::vector<int>& p) {
        out[w].push_back(p);
        if (p.size() > size_t(q.na()) * 8) throw DomainError("quiver has oriented cycles");
        for (int i = 0; i < q.na(); ++i)
            if (q.arrows[i].src == w) {
                p.push_back(i);
                go(q.arrows[i].tgt, p);
                p.pop_back();
            }
    };
    std::vector<int> p;
    go(v, p);
    return out;
}

}  // namespace

Rep projective_rep(const Quiver& q, int v) {
    auto paths = paths_from(q, v);
    std::vector<int> d(q.nv());
    for (int w = 0; w < q.nv(); ++w) d[w] = int(paths[w].size());
    Rep p(q, d);
    for (int i = 0; i < q.na(); ++i) {
        const auto& a = q.arrows[i];
        for (size_t j = 0; j < paths[a.src].size(); ++j) {
            auto ext = paths[a.src][j];
            ext.push_back(i);
            for (size_t t = 0; t < paths[a.tgt].size(); ++t)
                if (paths[a.tgt][t] == ext) p.mats[i](int(t), int(j)) = 1;
        }
    }
    return p;
}

int ext_dim_resolution(const Rep& x, const Rep& y) {
    // 0 -> P1 = sum_a P(t a)^{x_{s a}} --d--> P0 = sum_v P(v)^{x_v} -> X -> 0
    const Quiver& q = x.q;
    std::vector<Rep> proj;
    for (int v = 0; v < q.nv(); ++v) proj.push_back(projective_rep(q, v));
    std::vector<Rep> p0_parts, p1_parts;
    for (int v = 0; v < q.nv(); ++v)
        for (int c = 0; c < x.dims[v]; ++c) p0_parts.push_back(proj[v]);
    for (int i = 0; i < q.na(); ++i)
        for (int c = 0; c < x.dims[q.arrows[i].src]; ++c) p1_parts.push_back(proj[q.arrows[i].tgt]);
    std::vector<int> zd(q.nv(), 0);
    Rep p0 = p0_parts.empty() ? Rep(q, zd) : direct_sum(p0_parts);
    Rep p1 = p1_parts.empty() ? Rep(q, zd) : direct_sum(p1_parts);

    // Offsets of summands inside each vertex space.
    auto offsets = [&](const std::vector<Rep>& parts) {
        std::vector<std::vector<int>> off(parts.size() + 1, std::vector<int>(q.nv(), 0));
        for (size_t s = 0; s < parts.size(); ++s)
            for (int w = 0; w < q.nv(); ++w) off[s + 1][w] = off[s][w] + parts[s].dims[w];
        return off;
    };
    auto off0 = offsets(p0_parts), off1 = offsets(p1_parts);
    std::vector<int> p0_first(q.nv(), 0);
    for (int v = 1; v < q.nv(); ++v) p0_first[v] = p0_first[v - 1] + x.dims[v - 1];

    // d on the generator e_{t a} (x) basis vector j of X_{s a}:
    //   a * (e_{s a} (x) e_j) - e_{t a} (x) X_a e_j.
    // A morphism from P(t) is determined by the image of its generator, so we
    // build d vertex by vertex through path actions.
    RepMap d = zero_map(p1, p0);
    auto p_paths = std::vector<std::vector<std::vector<std::vector<int>>>>();
    for (int v = 0; v < q.nv(); ++v) p_paths.push_back(paths_from(q, v));
    auto path_index = [&](int v, int w, const std::vector<int>& path) {
        const auto& L = p_paths[v][w];
        for (size_t t = 0; t < L.size(); ++t)
            if (L[t] == path) return int(t);
        throw InternalError("path not found");
    };
    size_t s1 = 0;
    for (int i = 0; i < q.na(); ++i) {
        const auto& a = q.arrows[i];
        for (int j = 0; j < x.dims[a.src]; ++j, ++s1) {
            // generator image lives at vertex t(a) of P0; extend along every path u from t(a).
            for (int w = 0; w < q.nv(); ++w) {
                const auto& us = p_paths[a.tgt][w];
                for (size_t ui = 0; ui < us.size(); ++ui) {
                    int col = off1[s1][w] + int(ui);
                    // a then u inside P(s a), copy j
                    std::vector<int> au{i};
                    au.insert(au.end(), us[ui].begin(), us[ui].end());
                    int sum_s = p0_first[a.src] + j;
                    d.f[w](off0[sum_s][w] + path_index(a.src, w, au), col) += 1;
                    // minus u inside P(t a), copies weighted by X_a
                    for (int k = 0; k < x.dims[a.tgt]; ++k) {
                        const Q& c = x.mats[i](k, j);
                        if (is_zero(c)) continue;
                        int sum_t = p0_first[a.tgt] + k;
                        d.f[w](off0[sum_t][w] + path_index(a.tgt, w, us[ui]), col) -= c;
                    }
                }
            }
        }
    }
    if (!is_morphism(p1, p0, d)) throw InternalError("resolution differential is not a morphism");
    if (!is_injective(d)) throw InternalError("resolution differential is not injective");

    HomSpace h0 = hom_space(p0, y), h1 = hom_space(p1, y);
    // rank of g -> g o d, measured in the flattened ambient space
    int amb = 0;
    for (int w = 0; w < q.nv(); ++w) amb += y.dims[w] * p1.dims[w];
    MatQ img(amb, h0.dim);
    for (int b = 0; b < h0.dim; ++b) {
        RepMap gd = compose(h0.basis[b], d);
        int r = 0;
        for (const auto& m : gd.f)
            for (const auto& v : m.a) img(r++, b) = v;
    }
    return h1.dim - rank(img);
}

DimVec sub_dims(const SubSpaces& s) {
    DimVec d;
    for (const auto& m : s) d.push_back(m.c);
    return d;
}

bool is_invariant(const Rep& x, const SubSpaces& sub) {
    for (int i = 0; i < x.q.na(); ++i) {
        const auto& a = x.q.arrows[i];
        MatQ img = x.mats[i] * sub[a.src];
        if (rank(hstack(sub[a.tgt], img)) != rank(sub[a.tgt])) return false;
    }
    return true;
}

SubSpaces closure(const Rep& x, const SubSpaces& gens) {
    SubSpaces s(x.q.nv());
    for (int v = 0; v < x.q.nv(); ++v) s[v] = gens[v].c ? image(gens[v]) : MatQ(x.dims[v], 0);
    for (int v : x.q.topo_order()) {
        for (int i = 0; i < x.q.na(); ++i) {
            const auto& a = x.q.arrows[i];
            if (a.src != v) continue;
            MatQ img = x.mats[i] * s[v];
            MatQ both = hstack(s[a.tgt], img);
            s[a.tgt] = both.c ? image(both) : both;
        }
    }
    return s;
}

Rep restrict_rep(const Rep& x, const SubSpaces& sub, RepMap* inclusion) {
    std::vector<int> d(x.q.nv());
    for (int v = 0; v < x.q.nv(); ++v) d[v] = sub[v].c;
    Rep z(x.q, d);
    for (int i = 0; i < x.q.na(); ++i) {
        const auto& a = x.q.arrows[i];
        MatQ m;
        if (!solve(sub[a.tgt], x.mats[i] * sub[a.src], m)) throw DomainError("subspace is not arrow invariant");
        z.mats[i] = m;
    }
    if (inclusion) inclusion->f = sub;
    return z;
}

Rep quotient_rep(const Rep& x, const SubSpaces& sub, RepMap* projection) {
    const int nv = x.q.nv();
    std::vector<MatQ> proj(nv), sect(nv);
    std::vector<int> d(nv);
    for (int v = 0; v < nv; ++v) {
        auto cc = complement_coordinates(sub[v]);
        int k = sub[v].c, n = x.dims[v], c = int(cc.size());
        MatQ basis = sub[v];
        MatQ e(n, c);
        for (int j = 0; j < c; ++j) e(cc[j], j) = 1;
        MatQ full = n ? inverse(hstack(basis, e)) : MatQ(0, 0);
        MatQ p(c, n);
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < n; ++j) p(i, j) = full(k + i, j);
        proj[v] = p;
        sect[v] = e;
        d[v] = c;
    }
    Rep z(x.q, d);
    for (int i = 0; i < x.q.na(); ++i) {
        const auto& a = x.q.arrows[i];
        z.mats[i] = proj[a.tgt] * x.mats[i] * sect[a.src];
    }
    if (projection) projection->f = proj;
    return z;
}

SubSpaces image_spaces(const RepMap& f) {
    SubSpaces s;
    for (const auto& m : f.f) s.push_back(m.c ? image(m) : MatQ(m.r, 0));
    return s;
}

Rep kernel_rep(const Rep& x, const RepMap& f, RepMap* inclusion) {
    SubSpaces s;
    for (const auto& m : f.f) s.push_back(kernel(m));
    return restrict_rep(x, s, inclusion);
}

Rep cokernel_rep(const Rep& y, const RepMap& f, RepMap* projection) {
    return quotient_rep(y, image_spaces(f), projection);
}

std::string rep_to_json(const Rep& x) {
    using nlohmann::json;
    json j;
    j["quiver"] = x.q.name;
    j["field"] = "Q";
    j["dims"] = x.dims;
    json arrows = json::array();
    for (int i = 0; i < x.q.na(); ++i) {
        json m = json::array();
        for (int r = 0; r < x.mats[i].r; ++r) {
            json row = json::array();
            for (int c = 0; c < x.mats[i].c; ++c) row.push_back(to_string(x.mats[i](r, c)));
            m.push_back(row);
        }
        arrows.push_back({{"name", x.q.arrows[i].name}, {"matrix", m}});
    }
    j["arrows"] = arrows;
    return j.dump();
}

Rep rep_from_json(const std::string& text) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw DomainError(std::string("invalid representation json: ") + e.what());
    }
    if (j.contains("field") && j["field"] != "Q") throw DomainError("only the field Q is supported");
    Quiver q = quiver_by_name(j.at("quiver").get<std::string>());
    Rep x(q, j.at("dims").get<std::vector<int>>());
    for (const auto& a : j.at("arrows")) {
        std::string name = a.at("name");
        int idx = -1;
        for (int i = 0; i < q.na(); ++i)
            if (q.arrows[i].name == name) idx = i;
        if (idx < 0) throw DomainError("unknown arrow " + name);
        const auto& m = a.at("matrix");
        MatQ& t = x.mats[idx];
        if (int(m.size()) != t.r) throw DomainError("matrix shape mismatch on arrow " + name);
        for (int r = 0; r < t.r; ++r) {
            if (int(m[r].size()) != t.c) throw DomainError("matrix shape mismatch on arrow " + name);
            for (int c = 0; c < t.c; ++c) {
                const auto& e = m[r][c];
                t(r, c) = e.is_string() ? parse_rational(e.get<std::string>()) : Q(e.get<long>());
            }
        }
    }
    return x;
}

}  // namespace qstab
