#include "qstab/reference.hpp"

namespace qstab {

namespace {

enum Cond { ALL, M_LT_N, N_LT_M, M_LE_N, N_LE_M };

bool holds(Cond c, int m, int n) {
    switch (c) {
        case ALL: return true;
        case M_LT_N: return m < n;
        case N_LT_M: return n < m;
        case M_LE_N: return m <= n;
        case N_LE_M: return n <= m;
    }
    return false;
}

using Val = HomExt (*)(int, int);

// Row: forward pair (X^m, Y^n), reverse pair (Y^n, X^m).
struct Rule {
    const char* x;
    const char* y;
    Cond cond;
    Val fwd, rev;
};

#define HE(h, e) [](int m, int n) -> HomExt { (void)m; (void)n; return HomExt{h, e}; }

const std::vector<Rule>& q1_rules() {
    static const std::vector<Rule> r = {
        {"E1", "E1", M_LT_N, HE(0, n - m - 1), HE(1 + n - m, 0)},
        {"E2", "E2", N_LT_M, HE(0, m - n - 1), HE(1 + m - n, 0)},
        {"E3", "E3", N_LT_M, HE(0, m - n - 1), HE(1 + m - n, 0)},
        {"E4", "E4", M_LT_N, HE(0, n - m - 1), HE(1 + n - m, 0)},
        {"E1", "E2", ALL, HE(0, n + m + 2), HE(n + m, 0)},
        {"E1", "E3", ALL, HE(0, n + m + 1), HE(n + m, 0)},
        {"E1", "E4", M_LE_N, HE(0, n - m), HE(1 + n - m, 0)},
        {"E1", "E4", N_LT_M, HE(m - n, 0), HE(0, m - n - 1)},
        {"E2", "E3", N_LE_M, HE(0, m - n), HE(1 + m - n, 0)},
        {"E2", "E3", M_LT_N, HE(n - m, 0), HE(0, n - m - 1)},
        {"E2", "E4", ALL, HE(1 + n + m, 0), HE(0, n + m + 2)},
        {"E3", "E4", ALL, HE(n + m, 0), HE(0, n + m + 2)},
        {"M", "E1", ALL, HE(0, 0), HE(0, 1)},
        {"M", "E2", ALL, HE(0, 0), HE(1, 0)},
        {"M", "E3", ALL, HE(0, 1), HE(0, 0)},
        {"M", "E4", ALL, HE(1, 0), HE(0, 0)},
        {"M'", "E1", ALL, HE(1, 0), HE(0, 0)},
        {"M'", "E2", ALL, HE(0, 1), HE(0, 0)},
        {"M'", "E3", ALL, HE(0, 0), HE(1, 0)},
        {"M'", "E4", ALL, HE(0, 0), HE(0, 1)},
        {"M", "M'", ALL, HE(0, 1), HE(0, 1)},
    };
    return r;
}

const std::vector<Rule>& q2_rules() {
    static const std::vector<Rule> r = {
        {"E1", "E1", N_LT_M, HE(1 + m - n, 0), HE(0, m - n - 1)},
        {"E2", "E2", M_LT_N, HE(1 + n - m, 0), HE(0, n - m - 1)},
        {"E3", "E3", M_LT_N, HE(1 + n - m, 0), HE(0, n - m - 1)},
        {"E4", "E4", N_LT_M, HE(1 + m - n, 0), HE(0, m - n - 1)},
        {"E5", "E5", M_LT_N, HE(1 + n - m, 0), HE(0, n - m - 1)},
        {"E6", "E6", N_LT_M, HE(1 + m - n, 0), HE(0, m - n - 1)},
        {"E7", "E7", N_LT_M, HE(1 + m - n, 0), HE(0, m - n - 1)},
        {"E8", "E8", M_LT_N, HE(1 + n - m, 0), HE(0, n - m - 1)},
        {"E1", "E2", ALL, HE(0, 2 + n + m), HE(m + n, 0)},
        {"E1", "E3", ALL, HE(0, n + m), HE(m + n, 0)},
        {"E1", "E4", N_LT_M, HE(m - n - 1, 0), HE(0, m - n - 1)},
        {"E1", "E4", M_LE_N, HE(0, n - m + 1), HE(n - m + 1, 0)},
        {"E1", "E5", ALL, HE(0, n + m + 1), HE(n + m, 0)},
        {"E1", "E6", N_LT_M, HE(m - n, 0), HE(0, m - n - 1)},
        {"E1", "E6", M_LE_N, HE(0, n - m), HE(n - m + 1, 0)},
        {"E1", "E7", N_LT_M, HE(m - n, 0), HE(0, m - n - 1)},
        {"E1", "E7", M_LE_N, HE(0, n - m), HE(n - m + 1, 0)},
        {"E1", "E8", ALL, HE(0, n + m + 1), HE(n + m, 0)},
        {"E2", "E3", N_LE_M, HE(0, m - n + 1), HE(m - n + 1, 0)},
        {"E2", "E3", M_LT_N, HE(n - m - 1, 0), HE(0, n - m - 1)},
        {"E2", "E4", ALL, HE(2 + m + n, 0), HE(0, n + m + 2)},
        {"E2", "E5", M_LT_N, HE(n - m, 0), HE(0, n - m - 1)},
        {"E2", "E5", N_LE_M, HE(0, m - n), HE(m - n + 1, 0)},
        {"E2", "E6", ALL, HE(1 + m + n, 0), HE(0, n + m + 2)},
        {"E2", "E7", ALL, HE(1 + m + n, 0), HE(0, n + m + 2)},
        {"E2", "E8", M_LT_N, HE(n - m, 0), HE(0, n - m - 1)},
        {"E2", "E8", N_LE_M, HE(0, m - n), HE(m - n + 1, 0)},
        {"E3", "E4", ALL, HE(m + n, 0), HE(0, n + m + 2)},
        {"E3", "E5", M_LE_N, HE(n - m + 1, 0), HE(0, n - m)},
        {"E3", "E5", N_LT_M, HE(0, m - n - 1), HE(m - n, 0)},
        {"E3", "E6", ALL, HE(m + n, 0), HE(0, n + m + 1)},
        {"E3", "E7", ALL, HE(m + n, 0), HE(0, n + m + 1)},
        {"E3", "E8", M_LE_N, HE(n - m + 1, 0), HE(0, n - m)},
        {"E3", "E8", N_LT_M, HE(0, m - n - 1), HE(m - n, 0)},
        {"E4", "E5", ALL, HE(0, 2 + m + n), HE(1 + m + n, 0)},
        {"E4", "E6", M_LT_N, HE(0, n - m - 1), HE(n - m, 0)},
        {"E4", "E6", N_LE_M, HE(1 + m - n, 0), HE(0, m - n)},
        {"E4", "E7", M_LT_N, HE(0, n - m - 1), HE(n - m, 0)},
        {"E4", "E7", N_LE_M, HE(m - n + 1, 0), HE(0, m - n)},
        {"E4", "E8", ALL, HE(0, 2 + m + n), HE(1 + m + n, 0)},
        {"E5", "E6", ALL, HE(m + n, 0), HE(0, 2 + m + n)},
        {"E5", "E7", ALL, HE(1 + m + n, 0), HE(0, 1 + m + n)},
        {"E5", "E8", M_LE_N, HE(n - m, 0), HE(0, n - m)},
        {"E5", "E8", N_LE_M, HE(0, m - n), HE(m - n, 0)},
        {"E6", "E7", N_LE_M, HE(m - n, 0), HE(0, m - n)},
        {"E6", "E7", M_LE_N, HE(0, n - m), HE(n - m, 0)},
        {"E6", "E8", ALL, HE(0, 1 + m + n), HE(1 + m + n, 0)},
        {"E7", "E8", ALL, HE(0, 2 + m + n), HE(m + n, 0)},
        {"F+", "E1", ALL, HE(0, 0), HE(0, 1)},
        {"F-", "E1", ALL, HE(0, 0), HE(0, 1)},
        {"F+", "E2", ALL, HE(0, 0), HE(1, 0)},
        {"F-", "E2", ALL, HE(0, 0), HE(1, 0)},
        {"F+", "E3", ALL, HE(0, 1), HE(0, 0)},
        {"F-", "E3", ALL, HE(0, 1), HE(0, 0)},
        {"F+", "E4", ALL, HE(1, 0), HE(0, 0)},
        {"F-", "E4", ALL, HE(1, 0), HE(0, 0)},
        {"F+", "E5", ALL, HE(0, 1), HE(0, 0)},
        {"F-", "E5", ALL, HE(0, 0), HE(1, 0)},
        {"F+", "E6", ALL, HE(1, 0), HE(0, 0)},
        {"F-", "E6", ALL, HE(0, 0), HE(0, 1)},
        {"F+", "E7", ALL, HE(0, 0), HE(0, 1)},
        {"F-", "E7", ALL, HE(1, 0), HE(0, 0)},
        {"F+", "E8", ALL, HE(0, 0), HE(1, 0)},
        {"F-", "E8", ALL, HE(0, 1), HE(0, 0)},
        {"G+", "E1", ALL, HE(1, 0), HE(0, 0)},
        {"G-", "E1", ALL, HE(1, 0), HE(0, 0)},
        {"G+", "E2", ALL, HE(0, 1), HE(0, 0)},
        {"G-", "E2", ALL, HE(0, 1), HE(0, 0)},
        {"G+", "E3", ALL, HE(0, 0), HE(1, 0)},
        {"G-", "E3", ALL, HE(0, 0), HE(1, 0)},
        {"G+", "E4", ALL, HE(0, 0), HE(0, 1)},
        {"G-", "E4", ALL, HE(0, 0), HE(0, 1)},
        {"G+", "E5", ALL, HE(0, 1), HE(0, 0)},
        {"G-", "E5", ALL, HE(0, 0), HE(1, 0)},
        {"G+", "E6", ALL, HE(1, 0), HE(0, 0)},
        {"G-", "E6", ALL, HE(0, 0), HE(0, 1)},
        {"G+", "E7", ALL, HE(0, 0), HE(0, 1)},
        {"G-", "E7", ALL, HE(1, 0), HE(0, 0)},
        {"G+", "E8", ALL, HE(0, 0), HE(1, 0)},
        {"G-", "E8", ALL, HE(0, 1), HE(0, 0)},
        {"F+", "F-", ALL, HE(0, 0), HE(0, 0)},
        {"F+", "G+", ALL, HE(0, 0), HE(0, 0)},
        {"F+", "G-", ALL, HE(0, 1), HE(0, 1)},
        {"F-", "G+", ALL, HE(0, 1), HE(0, 1)},
        {"F-", "G-", ALL, HE(0, 0), HE(0, 0)},
        {"G+", "G-", ALL, HE(0, 0), HE(0, 0)},
    };
    return r;
}

#undef HE

}  // namespace

bool reference_hom_ext(const ExcObject& x, const ExcObject& y, HomExt& out) {
    const std::vector<Rule>* rules;
    if (x.quiver == "q1") rules = &q1_rules();
    else if (x.quiver == "q2") rules = &q2_rules();
    else return false;
    if (x.family == y.family && x.m == y.m) {
        out = {1, 0};
        return true;
    }
    for (const auto& r : *rules) {
        if (x.family == r.x && y.family == r.y && holds(r.cond, x.m, y.m)) {
            out = r.fwd(x.m, y.m);
            return true;
        }
        if (x.family == r.y && y.family == r.x && holds(r.cond, y.m, x.m)) {
            out = r.rev(y.m, x.m);
            return true;
        }
    }
    return false;
}

TableCheck check_tables(const std::string& quiver, int max_m) {
    TableCheck c;
    auto objs = catalog_objects(quiver, max_m);
    for (const auto& x : objs)
        for (const auto& y : objs) {
            ++c.pairs;
            TableDiff d;
            d.x = x.label();
            d.y = y.label();
            d.computed = catalog_hom_ext(x, y);
            d.tabulated = reference_hom_ext(x, y, d.expected);
            if (!d.tabulated || !(d.expected == d.computed)) c.diffs.push_back(d);
        }
    return c;
}

int matrix_space_dim(const MatrixSpace& s) {
    std::vector<int> off(s.shapes.size() + 1, 0);
    for (size_t k = 0; k < s.shapes.size(); ++k) off[k + 1] = off[k] + s.shapes[k].first * s.shapes[k].second;
    int rows = 0;
    for (const auto& eq : s.equations) {
        const auto& t = eq.front();
        rows += t.left.r * t.right.c;
    }
    MatQ a(rows, off.back());
    int base = 0;
    for (const auto& eq : s.equations) {
        const int er = eq.front().left.r, ec = eq.front().right.c;
        for (const auto& t : eq) {
            if (t.left.r != er || t.right.c != ec) throw DomainError("inconsistent equation shape");
            const int ur = s.shapes[t.unknown].first, uc = s.shapes[t.unknown].second;
            if (t.left.c != ur || t.right.r != uc) throw DomainError("term shape mismatch");
            // (L U R)(i,j) = sum_{a,b} L(i,a) U(a,b) R(b,j)
            for (int i = 0; i < er; ++i)
                for (int j = 0; j < ec; ++j)
                    for (int p = 0; p < ur; ++p) {
                        if (is_zero(t.left(i, p))) continue;
                        for (int q = 0; q < uc; ++q)
                            if (!is_zero(t.right(q, j)))
                                a(base + i * ec + j, off[t.unknown] + p * uc + q) += t.coeff * t.left(i, p) * t.right(q, j);
                    }
        }
        base += er * ec;
    }
    return off.back() - rank(a);
}

namespace {

MatrixTerm term(int sign, MatQ l, int u, MatQ r) { return {Q(sign), std::move(l), u, std::move(r)}; }

ExcObject q1obj(const char* f, int m) { return {"q1", f, m, 0}; }

// X * A = B * Y and X * C = D * Y
MatrixSpace two_unknowns(std::pair<int, int> xs, std::pair<int, int> ys, MatQ a, MatQ b, MatQ c, MatQ d) {
    MatrixSpace s;
    s.shapes = {xs, ys};
    s.equations.push_back({term(1, MatQ::identity(xs.first), 0, a), term(-1, b, 1, MatQ::identity(ys.second))});
    s.equations.push_back({term(1, MatQ::identity(xs.first), 0, c), term(-1, d, 1, MatQ::identity(ys.second))});
    return s;
}

// A X B = C X D
MatrixSpace one_unknown(std::pair<int, int> xs, MatQ a, MatQ b, MatQ c, MatQ d) {
    MatrixSpace s;
    s.shapes = {xs};
    s.equations.push_back({term(1, a, 0, b), term(-1, c, 0, d)});
    return s;
}

// A X = B Y and X C = Y D with X, Y of the same shape
MatrixSpace pair_same(std::pair<int, int> xs, MatQ a, MatQ b, MatQ c, MatQ d) {
    MatrixSpace s;
    s.shapes = {xs, xs};
    s.equations.push_back({term(1, a, 0, MatQ::identity(xs.second)), term(-1, b, 1, MatQ::identity(xs.second))});
    s.equations.push_back({term(1, MatQ::identity(xs.first), 0, c), term(-1, MatQ::identity(xs.first), 1, d)});
    return s;
}

}  // namespace

std::vector<MatrixRow> matrix_rows() {
    std::vector<MatrixRow> rows;
    auto add = [&](std::string range, std::function<bool(int, int)> ap, std::function<int(int, int)> ex,
                   std::function<MatrixSpace(int, int)> sp, std::function<std::pair<ExcObject, ExcObject>(int, int)> cr,
                   bool hom) {
        MatrixRow r;
        r.index = int(rows.size()) + 1;
        r.range = std::move(range);
        r.applies = std::move(ap);
        r.expected = std::move(ex);
        r.space = std::move(sp);
        r.cross = std::move(cr);
        r.is_hom = hom;
        rows.push_back(std::move(r));
    };
    auto r1 = [](int m, int n) { return two_unknowns({n + 1, m + 1}, {n, m}, j_plus(m), j_plus(n), j_minus(m), j_minus(n)); };
    auto c1 = [](int m, int n) { return std::make_pair(q1obj("E3", m), q1obj("E3", n)); };
    add("1<=n<m", [](int m, int n) { return 1 <= n && n < m; }, [](int, int) { return 0; }, r1, c1, true);
    add("1<=m<=n", [](int m, int n) { return 1 <= m && m <= n; }, [](int m, int n) { return 1 + n - m; }, r1, c1, true);
    auto r3 = [](int m, int n) { return two_unknowns({n, m}, {n + 1, m + 1}, pi_plus(m), pi_plus(n), pi_minus(m), pi_minus(n)); };
    auto c3 = [](int m, int n) { return std::make_pair(q1obj("E4", m), q1obj("E4", n)); };
    add("1<=m<n", [](int m, int n) { return 1 <= m && m < n; }, [](int, int) { return 0; }, r3, c3, true);
    add("1<=n<=m", [](int m, int n) { return 1 <= n && n <= m; }, [](int m, int n) { return 1 + m - n; }, r3, c3, true);
    add("1<=m,1<=n", [](int m, int n) { return 1 <= m && 1 <= n; }, [](int, int) { return 0; },
        [](int m, int n) { return two_unknowns({n + 1, m}, {n, m + 1}, pi_plus(m), j_plus(n), pi_minus(m), j_minus(n)); },
        [](int m, int n) { return std::make_pair(q1obj("E4", m), q1obj("E3", n)); }, true);
    add("1<=m,1<=n", [](int m, int n) { return 1 <= m && 1 <= n; }, [](int, int) { return 0; },
        [](int m, int n) { return one_unknown({n, m}, j_plus(n), pi_minus(m), j_minus(n), pi_plus(m)); },
        [](int m, int n) { return std::make_pair(q1obj("E1", m), q1obj("E3", n)); }, true);
    auto r7 = [](int m, int n) { return one_unknown({n + 1, m}, pi_minus(n), pi_plus(m), pi_plus(n), pi_minus(m)); };
    auto c7 = [](int m, int n) { return std::make_pair(q1obj("E1", m), q1obj("E4", n)); };
    add("1<=m<=n", [](int m, int n) { return 1 <= m && m <= n; }, [](int, int) { return 0; }, r7, c7, true);
    add("0<=n<m", [](int m, int n) { return 0 <= n && n < m; }, [](int m, int n) { return m - n; }, r7, c7, true);
    auto r9 = [](int m, int n) { return one_unknown({n, m + 1}, j_minus(n), j_plus(m), j_plus(n), j_minus(m)); };
    auto c9 = [](int m, int n) { return std::make_pair(q1obj("E2", m), q1obj("E3", n)); };
    add("1<=n<=m", [](int m, int n) { return 1 <= n && n <= m; }, [](int, int) { return 0; }, r9, c9, true);
    add("0<=m<n", [](int m, int n) { return 0 <= m && m < n; }, [](int m, int n) { return n - m; }, r9, c9, true);
    add("1<=m,1<=n", [](int m, int n) { return 1 <= m && 1 <= n; }, [](int m, int n) { return m + n; },
        [](int m, int n) { return two_unknowns({m, n + 1}, {m + 1, n}, j_plus(n), pi_plus(m), j_minus(n), pi_minus(m)); },
        [](int m, int n) { return std::make_pair(q1obj("E3", n), q1obj("E1", m)); }, true);
    add("0<=n<m", [](int m, int n) { return 0 <= n && n < m; }, [](int m, int n) { return m - n - 1; },
        [](int m, int n) { return pair_same({n + 1, m}, pi_plus(n), pi_minus(n), pi_plus(m), pi_minus(m)); },
        [](int m, int n) { return std::make_pair(q1obj("E1", n), q1obj("E1", m)); }, false);
    add("0<=m<n", [](int m, int n) { return 0 <= m && m < n; }, [](int m, int n) { return n - m - 1; },
        [](int m, int n) { return pair_same({n, m + 1}, j_plus(n), j_minus(n), j_plus(m), j_minus(m)); },
        [](int m, int n) { return std::make_pair(q1obj("E2", n), q1obj("E2", m)); }, false);
    add("0<=m,0<=n", [](int, int) { return true; }, [](int m, int n) { return n + m + 2; },
        [](int m, int n) { return pair_same({n + 1, m + 1}, pi_plus(n), pi_minus(n), j_plus(m), j_minus(m)); },
        [](int m, int n) { return std::make_pair(q1obj("E1", n), q1obj("E2", m)); }, false);
    add("0<=m,0<=n", [](int, int) { return true; }, [](int m, int n) { return m + n + 1; },
        [](int m, int n) { return one_unknown({n + 1, m + 1}, pi_minus(n), j_plus(m), pi_plus(n), j_minus(m)); },
        [](int m, int n) { return std::make_pair(q1obj("E1", m), q1obj("E3", n)); }, false);
    return rows;
}

std::vector<MatrixRowResult> check_matrix_rows(int max_index) {
    std::vector<MatrixRowResult> out;
    for (const auto& r : matrix_rows())
        for (int m = 0; m <= max_index; ++m)
            for (int n = 0; n <= max_index; ++n) {
                if (!r.applies(m, n)) continue;
                MatrixRowResult res{r.index, m, n, r.expected(m, n), matrix_space_dim(r.space(m, n)), 0};
                auto [x, y] = r.cross(m, n);
                HomExt h = catalog_hom_ext(x, y);
                res.cross = r.is_hom ? h.hom : h.ext;
                out.push_back(res);
            }
    return out;
}

}  // namespace qstab
