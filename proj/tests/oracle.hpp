#pragma once
// Test-side oracles written without the library's linear algebra.
#include <cstdint>
#include <set>
#include <vector>

#include "qstab/rep.hpp"

namespace oracle {

constexpr int64_t kPrime = 1000003;

inline int64_t mod(int64_t x, int64_t p) { return ((x % p) + p) % p; }

inline int64_t inv(int64_t a, int64_t p) {
    int64_t r = 1, e = p - 2;
    a = mod(a, p);
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

inline int rank_mod(std::vector<std::vector<int64_t>> m, int64_t p) {
    int r = 0, cols = m.empty() ? 0 : int(m[0].size());
    for (int c = 0; c < cols && r < int(m.size()); ++c) {
        int piv = -1;
        for (int i = r; i < int(m.size()); ++i)
            if (mod(m[i][c], p)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        int64_t iv = inv(m[r][c], p);
        for (auto& x : m[r]) x = mod(x, p) * iv % p;
        for (int i = 0; i < int(m.size()); ++i)
            if (i != r && mod(m[i][c], p)) {
                int64_t f = mod(m[i][c], p);
                for (int j = 0; j < cols; ++j) m[i][j] = mod(m[i][j] - f * m[r][j], p);
            }
        ++r;
    }
    return r;
}

inline int64_t entry(const qstab::Rep& x, int a, int i, int j, int64_t p) {
    const auto& q = x.mats[a](i, j);
    return mod(q.get_num().get_si(), p) * inv(mod(q.get_den().get_si(), p), p) % p;
}

/// dim Hom(x, y) as the nullity of the intertwiner system mod p.
inline int hom_dim(const qstab::Rep& x, const qstab::Rep& y, int64_t p = kPrime) {
    const auto& q = x.q;
    std::vector<int> off(q.nv());
    int n = 0;
    for (int v = 0; v < q.nv(); ++v) off[v] = n, n += y.dims[v] * x.dims[v];
    std::vector<std::vector<int64_t>> rows;
    for (int a = 0; a < q.na(); ++a) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        // f_t X_a - Y_a f_s = 0, f_v stored row-major y_v x x_v
        for (int i = 0; i < y.dims[t]; ++i)
            for (int j = 0; j < x.dims[s]; ++j) {
                std::vector<int64_t> row(n, 0);
                for (int k = 0; k < x.dims[t]; ++k) row[off[t] + i * x.dims[t] + k] += entry(x, a, k, j, p);
                for (int k = 0; k < y.dims[s]; ++k) row[off[s] + k * x.dims[s] + j] -= entry(y, a, i, k, p);
                rows.push_back(row);
            }
    }
    return n - (rows.empty() ? 0 : rank_mod(rows, p));
}

/// Euler form read off the quiver directly.
inline long long euler(const qstab::Quiver& q, const qstab::DimVec& d, const qstab::DimVec& e) {
    long long s = 0;
    for (int v = 0; v < q.nv(); ++v) s += d[v] * e[v];
    for (const auto& a : q.arrows) s -= d[a.src] * e[a.tgt];
    return s;
}

/// Dimension vectors of subrepresentations over F_2 by brute force over all subspace tuples.
inline std::set<qstab::DimVec> subrep_dims_f2(const qstab::Rep& x) {
    const auto& q = x.q;
    int nv = q.nv();
    // subspaces of F_2^d as sets of vectors (bitmasks), enumerated as span-closed subsets
    auto subspaces = [](int d) {
        std::vector<std::vector<unsigned>> out;
        std::set<std::vector<unsigned>> seen;
        std::vector<std::vector<unsigned>> stack{{0u}};
        while (!stack.empty()) {
            auto s = stack.back();
            stack.pop_back();
            if (!seen.insert(s).second) continue;
            out.push_back(s);
            for (unsigned v = 0; v < (1u << d); ++v) {
                std::set<unsigned> t(s.begin(), s.end());
                if (t.count(v)) continue;
                for (unsigned w : s) t.insert(w ^ v);
                stack.push_back(std::vector<unsigned>(t.begin(), t.end()));
            }
        }
        return out;
    };
    auto apply = [&](int a, unsigned v) {
        int s = q.arrows[a].src, t = q.arrows[a].tgt;
        unsigned r = 0;
        for (int i = 0; i < x.dims[t]; ++i) {
            int64_t acc = 0;
            for (int j = 0; j < x.dims[s]; ++j)
                if (v >> j & 1) acc += entry(x, a, i, j, 2);
            if (acc & 1) r |= 1u << i;
        }
        return r;
    };
    std::vector<std::vector<std::vector<unsigned>>> subs(nv);
    for (int v = 0; v < nv; ++v) subs[v] = subspaces(x.dims[v]);
    std::set<qstab::DimVec> out;
    std::vector<size_t> idx(nv, 0);
    while (true) {
        bool ok = true;
        for (int a = 0; a < q.na() && ok; ++a) {
            const auto& from = subs[q.arrows[a].src][idx[q.arrows[a].src]];
            const auto& to = subs[q.arrows[a].tgt][idx[q.arrows[a].tgt]];
            std::set<unsigned> tset(to.begin(), to.end());
            for (unsigned v : from) ok = ok && tset.count(apply(a, v));
        }
        if (ok) {
            qstab::DimVec d(nv);
            for (int v = 0; v < nv; ++v) {
                long long k = 0;
                while ((1u << k) < subs[v][idx[v]].size()) ++k;
                d[v] = k;
            }
            out.insert(d);
        }
        int v = 0;
        while (v < nv && ++idx[v] == subs[v].size()) idx[v++] = 0;
        if (v == nv) break;
    }
    return out;
}

}  // namespace oracle
