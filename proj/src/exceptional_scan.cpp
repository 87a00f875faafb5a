#include <cstdint>
#include <functional>

#include "qstab/subrep.hpp"

namespace qstab {

namespace {

// Row over F_2 or F_3 in bitsliced form: value = plus - minus.
struct Row {
    uint64_t plus = 0, minus = 0;
};

inline Row add3(Row x, Row y) {
    uint64_t xz = ~(x.plus | x.minus), yz = ~(y.plus | y.minus);
    return {(x.plus & yz) | (y.plus & xz) | (x.minus & y.minus), (x.minus & yz) | (y.minus & xz) | (x.plus & y.plus)};
}

inline Row neg(Row x) { return {x.minus, x.plus}; }

int rank_rows(std::vector<Row>& rows, int ncols, int p) {
    int r = 0;
    for (int c = 0; c < ncols && r < int(rows.size()); ++c) {
        uint64_t bit = uint64_t(1) << c;
        int piv = -1;
        for (int i = r; i < int(rows.size()); ++i)
            if ((rows[i].plus | rows[i].minus) & bit) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        if (p == 3 && (rows[r].minus & bit)) rows[r] = neg(rows[r]);
        const Row pr = rows[r];
        for (int i = r + 1; i < int(rows.size()); ++i) {
            Row& x = rows[i];
            if (p == 2) {
                if (x.plus & bit) x.plus ^= pr.plus;
            } else if (x.plus & bit) {
                x = add3(x, neg(pr));
            } else if (x.minus & bit) {
                x = add3(x, pr);
            }
        }
        ++r;
    }
    return r;
}

// Reduced row echelon k x n matrices of rank k, entries in 0..p-1.
void for_each_rref(int k, int n, int p, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> piv(k);
    std::function<void(int, int)> choose = [&](int idx, int start) {
        if (idx == k) {
            std::vector<int> m(size_t(k) * n, 0);
            std::vector<char> is_piv(n, 0);
            for (int i = 0; i < k; ++i) is_piv[piv[i]] = 1, m[size_t(i) * n + piv[i]] = 1;
            std::vector<int> free;
            for (int i = 0; i < k; ++i)
                for (int j = piv[i] + 1; j < n; ++j)
                    if (!is_piv[j]) free.push_back(i * n + j);
            while (true) {
                fn(m);
                size_t f = 0;
                while (f < free.size() && m[free[f]] == p - 1) m[free[f++]] = 0;
                if (f == free.size()) break;
                ++m[free[f]];
            }
            return;
        }
        for (int c = start; c <= n - (k - idx); ++c) {
            piv[idx] = c;
            choose(idx + 1, c + 1);
        }
    };
    choose(0, 0);
}

}  // namespace

ExceptionalScan exceptional_scan_fp(const Quiver& q, const DimVec& d, int p) {
    if (p != 2 && p != 3) throw DomainError("exceptional scan supports p = 2, 3");
    if (int(d.size()) != q.nv()) throw DomainError("dimension vector does not match quiver");
    const int nv = q.nv(), na = q.na();
    std::vector<int> dim(nv), off(nv);
    int nunk = 0;
    for (int v = 0; v < nv; ++v) {
        dim[v] = int(d[v]);
        if (dim[v] < 0) throw DomainError("negative dimension");
        off[v] = nunk;
        nunk += dim[v] * dim[v];
    }
    if (nunk > 64) throw CapacityError("exceptional scan limited to 64 endomorphism coordinates");

    // arrow matrices, row-major d_t x d_s
    std::vector<std::vector<int>> mat(na);
    for (int a = 0; a < na; ++a) mat[a].assign(size_t(dim[q.arrows[a].tgt]) * dim[q.arrows[a].src], 0);

    ExceptionalScan out;
    int src = -1, snk = -1;
    for (int v = 0; v < nv; ++v) {
        if (src < 0 && q.is_source(v) && dim[v] > 0) src = v;
    }
    std::vector<char> fixed(na, 0);
    std::vector<int> out_arrows, in_arrows;
    if (src >= 0) {
        for (int a = 0; a < na; ++a)
            if (q.arrows[a].src == src) out_arrows.push_back(a), fixed[a] = 1;
        out.source_normalized = true;
    }
    for (int v = 0; v < nv && snk < 0; ++v) {
        if (!q.is_sink(v) || dim[v] == 0) continue;
        bool clash = false;
        for (int a = 0; a < na; ++a)
            if (q.arrows[a].tgt == v && fixed[a]) clash = true;
        if (!clash) snk = v;
    }
    if (snk >= 0) {
        for (int a = 0; a < na; ++a)
            if (q.arrows[a].tgt == snk) in_arrows.push_back(a), fixed[a] = 1;
        out.sink_normalized = true;
    }
    std::vector<int> free_arrows;
    for (int a = 0; a < na; ++a)
        if (!fixed[a]) free_arrows.push_back(a);

    std::vector<Row> rows;
    auto evaluate = [&] {
        rows.clear();
        for (int a = 0; a < na; ++a) {
            int s = q.arrows[a].src, t = q.arrows[a].tgt, ds = dim[s], dt = dim[t];
            const auto& A = mat[a];
            for (int i = 0; i < dt; ++i)
                for (int j = 0; j < ds; ++j) {
                    // (phi_t A - A phi_s)_{ij}; s != t so the two sums touch disjoint unknowns
                    Row r;
                    for (int k = 0; k < dt; ++k) {
                        int c = A[size_t(k) * ds + j];
                        uint64_t bit = uint64_t(1) << (off[t] + i * dt + k);
                        if (c == 1) r.plus |= bit;
                        if (c == 2) r.minus |= bit;
                    }
                    for (int k = 0; k < ds; ++k) {
                        int c = A[size_t(i) * ds + k];
                        uint64_t bit = uint64_t(1) << (off[s] + k * ds + j);
                        if (c == 1) (p == 2 ? r.plus : r.minus) |= bit;
                        if (c == 2) r.plus |= bit;
                    }
                    if (r.plus | r.minus) rows.push_back(r);
                }
        }
        ++out.scanned;
        if (nunk - rank_rows(rows, nunk, p) == 1) ++out.exceptional;
    };

    auto free_loop = [&] {
        std::vector<std::pair<int, size_t>> cells;
        for (int a : free_arrows)
            for (size_t i = 0; i < mat[a].size(); ++i) cells.emplace_back(a, i), mat[a][i] = 0;
        while (true) {
            evaluate();
            size_t f = 0;
            while (f < cells.size() && mat[cells[f].first][cells[f].second] == p - 1)
                mat[cells[f].first][cells[f].second] = 0, ++f;
            if (f == cells.size()) break;
            ++mat[cells[f].first][cells[f].second];
        }
    };

    auto sink_loop = [&] {
        if (snk < 0) return free_loop();
        int n = 0;
        for (int a : in_arrows) n += dim[q.arrows[a].src];
        if (n < dim[snk]) return;
        // joint map into the sink: the rref rows, split by incoming arrow columns
        for_each_rref(dim[snk], n, p, [&](const std::vector<int>& m) {
            int col = 0;
            for (int a : in_arrows) {
                int ds = dim[q.arrows[a].src];
                for (int i = 0; i < dim[snk]; ++i)
                    for (int j = 0; j < ds; ++j) mat[a][size_t(i) * ds + j] = m[size_t(i) * n + col + j];
                col += ds;
            }
            free_loop();
        });
    };

    if (src < 0) {
        sink_loop();
        return out;
    }
    int n = 0;
    for (int a : out_arrows) n += dim[q.arrows[a].tgt];
    if (n < dim[src]) return out;
    // joint map out of the source: transpose of the rref, split by outgoing arrow rows
    for_each_rref(dim[src], n, p, [&](const std::vector<int>& m) {
        int row = 0;
        for (int a : out_arrows) {
            int dt = dim[q.arrows[a].tgt];
            for (int i = 0; i < dt; ++i)
                for (int j = 0; j < dim[src]; ++j) mat[a][size_t(i) * dim[src] + j] = m[size_t(j) * n + row + i];
            row += dt;
        }
        sink_loop();
    });
    return out;
}

}  // namespace qstab
