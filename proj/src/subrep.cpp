#include "qstab/subrep.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace qstab {

namespace {

template <uint32_t P>
using MatP = Mat<Fp<P>>;

template <uint32_t P>
MatP<P> to_fp(const MatQ& m) {
    MatP<P> r(m.r, m.c);
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = reduce<P>(m.a[i]);
    return r;
}

// All subspaces of F_P^w given as w x k column bases (reduced echelon in rows of the transpose).
template <uint32_t P>
void for_each_subspace(int w, const std::function<void(const MatP<P>&)>& fn) {
    for (int k = 0; k <= w; ++k) {
        std::vector<int> piv(k);
        std::function<void(int, int)> choose = [&](int idx, int start) {
            if (idx == k) {
                // free positions: row i, columns j > piv[i] that are not pivots
                std::vector<std::pair<int, int>> free;
                std::vector<char> is_piv(w, 0);
                for (int p : piv) is_piv[p] = 1;
                for (int i = 0; i < k; ++i)
                    for (int j = piv[i] + 1; j < w; ++j)
                        if (!is_piv[j]) free.emplace_back(i, j);
                std::vector<uint32_t> digit(free.size(), 0);
                while (true) {
                    MatP<P> b(w, k);
                    for (int i = 0; i < k; ++i) b(piv[i], i) = Fp<P>(1);
                    for (size_t f = 0; f < free.size(); ++f) b(free[f].second, free[f].first) = Fp<P>(digit[f]);
                    fn(b);
                    size_t f = 0;
                    while (f < digit.size() && ++digit[f] == P) digit[f++] = 0;
                    if (f == digit.size()) break;
                }
                return;
            }
            for (int s = start; s <= w - (k - idx); ++s) {
                piv[idx] = s;
                choose(idx + 1, s + 1);
            }
        };
        choose(0, 0);
    }
}

template <uint32_t P>
std::map<DimVec, long long> counts_fp(const Rep& e, int budget) {
    if (e.total_dim() > budget) throw CapacityError("subrepresentation oracle budget exceeded");
    const Quiver& q = e.q;
    std::vector<MatP<P>> mats;
    for (const auto& m : e.mats) mats.push_back(to_fp<P>(m));
    auto order = q.topo_order();
    std::reverse(order.begin(), order.end());
    std::vector<MatP<P>> sub(q.nv());
    std::map<DimVec, long long> out;
    std::function<void(size_t)> go = [&](size_t idx) {
        if (idx == order.size()) {
            DimVec d(q.nv());
            for (int v = 0; v < q.nv(); ++v) d[v] = sub[v].c;
            ++out[d];
            return;
        }
        int v = order[idx];
        const int n = e.dims[v];
        // W = intersection of preimages of the already chosen target subspaces
        MatP<P> cons(0, n);
        for (int i = 0; i < q.na(); ++i) {
            if (q.arrows[i].src != v) continue;
            int t = q.arrows[i].tgt;
            MatP<P> ann = annihilator(sub[t]);
            if (ann.r) cons = vstack(cons, ann * mats[i]);
        }
        MatP<P> w = kernel(cons);
        for_each_subspace<P>(w.c, [&](const MatP<P>& b) {
            sub[v] = w * b;
            go(idx + 1);
        });
    };
    go(0);
    return out;
}

long long euler_ll(const Quiver& q, const DimVec& d, const DimVec& e) {
    long long s = 0;
    for (int v = 0; v < q.nv(); ++v) s += d[v] * e[v];
    for (const auto& a : q.arrows) s -= d[a.src] * e[a.tgt];
    return s;
}

std::string quiver_key(const Quiver& q) {
    std::string k = q.name + ":";
    for (const auto& a : q.arrows) k += std::to_string(a.src) + ">" + std::to_string(a.tgt) + ",";
    return k;
}

void for_each_below(const DimVec& b, const std::function<void(const DimVec&)>& fn) {
    DimVec a(b.size(), 0);
    while (true) {
        fn(a);
        size_t i = 0;
        while (i < a.size() && ++a[i] > b[i]) a[i++] = 0;
        if (i == a.size()) break;
    }
}

struct GenericMemo {
    std::mutex mu;
    std::map<std::tuple<std::string, DimVec, DimVec>, long long> ext;
    std::map<std::pair<std::string, DimVec>, std::vector<DimVec>> subs;
};

GenericMemo& memo() {
    static GenericMemo m;
    return m;
}

const std::vector<DimVec>& subs_of(const Quiver& q, const std::string& key, const DimVec& b);

long long ext_rec(const Quiver& q, const std::string& key, const DimVec& a, const DimVec& b) {
    if (is_zero(a) || is_zero(b)) return 0;
    auto k = std::make_tuple(key, a, b);
    auto it = memo().ext.find(k);
    if (it != memo().ext.end()) return it->second;
    long long best = 0;
    for (const auto& s : subs_of(q, key, a)) best = std::max(best, -euler_ll(q, s, b));
    memo().ext[k] = best;
    return best;
}

const std::vector<DimVec>& subs_of(const Quiver& q, const std::string& key, const DimVec& b) {
    auto k = std::make_pair(key, b);
    auto it = memo().subs.find(k);
    if (it != memo().subs.end()) return it->second;
    std::vector<DimVec> out;
    for_each_below(b, [&](const DimVec& a) {
        if (is_zero(a) || a == b || ext_rec(q, key, a, sub(b, a)) == 0) out.push_back(a);
    });
    return memo().subs[k] = std::move(out);
}

}  // namespace

std::map<DimVec, long long> subrep_dim_counts_fp(const Rep& e, int p, int budget) {
    switch (p) {
        case 2: return counts_fp<2>(e, budget);
        case 3: return counts_fp<3>(e, budget);
        case 5: return counts_fp<5>(e, budget);
        default: throw DomainError("oracle prime must be 2, 3 or 5");
    }
}

std::set<DimVec> subrep_dims_fp(const Rep& e, int p, int budget) {
    std::set<DimVec> s;
    for (const auto& [d, c] : subrep_dim_counts_fp(e, p, budget)) s.insert(d);
    return s;
}

long long generic_ext(const Quiver& q, const DimVec& a, const DimVec& b) {
    std::lock_guard<std::mutex> lock(memo().mu);
    return ext_rec(q, quiver_key(q), a, b);
}

bool generic_embeds(const Quiver& q, const DimVec& a, const DimVec& b) {
    if (!leq(a, b)) return false;
    if (is_zero(a) || a == b) return true;
    return generic_ext(q, a, sub(b, a)) == 0;
}

std::set<DimVec> generic_sub_dims(const Quiver& q, const DimVec& b) {
    std::lock_guard<std::mutex> lock(memo().mu);
    const auto& v = subs_of(q, quiver_key(q), b);
    return std::set<DimVec>(v.begin(), v.end());
}

}  // namespace qstab
