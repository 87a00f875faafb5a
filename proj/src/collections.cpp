#include "qstab/collections.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qstab {

std::vector<std::pair<int, int>> hom_profile(const ExcObject& x, const ExcObject& y) {
    HomExt h = catalog_hom_ext(x, y);
    // hom^p(X, Y) = Ext^{p + sy - sx} of the underlying representations
    const int base = realize(x).shift - realize(y).shift;
    std::vector<std::pair<int, int>> out;
    if (h.hom) out.push_back({base, h.hom});
    if (h.ext) out.push_back({base + 1, h.ext});
    return out;
}

PairProfile pair_status(const ExcObject& x, const ExcObject& y) {
    PairProfile r;
    r.forward = hom_profile(x, y);
    r.backward = hom_profile(y, x);
    r.exceptional = r.backward.empty();
    r.ext_pair = r.exceptional;
    for (const auto& [p, d] : r.forward)
        if (p <= 0) r.ext_pair = false;
    return r;
}

bool is_exceptional_collection(const Collection& c) {
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j)
            if (!pair_status(c[i], c[j]).exceptional) return false;
    return true;
}

bool is_ext_collection(const Collection& c) {
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j)
            if (!pair_status(c[i], c[j]).ext_pair) return false;
    return true;
}

std::string collection_to_string(const Collection& c) {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + c[i].label();
    return s + ")";
}

std::string collection_to_json(const Collection& c) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& x : c) j.push_back(x.label());
    return j.dump();
}

Collection parse_collection(const std::string& quiver, const std::string& text) {
    Collection c;
    auto first = text.find_first_not_of(' ');
    if (first != std::string::npos && text[first] == '[') {
        for (const auto& s : nlohmann::json::parse(text)) c.push_back(parse_object(quiver, s.get<std::string>()));
        return c;
    }
    std::string t = text;
    for (char& ch : t)
        if (ch == '(' || ch == ')') ch = ' ';
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        if (!item.empty()) c.push_back(parse_object(quiver, item));
    }
    return c;
}

std::vector<Collection> enumerate_collections(const std::string& quiver, int arity, int w) {
    if (arity < 2 || arity > 3) throw DomainError("arity must be 2 or 3");
    auto objs = catalog_objects(quiver, w);
    const size_t n = objs.size();
    std::vector<std::vector<char>> ok(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j) ok[i][j] = hom_total(objs[j], objs[i]) == 0;
    std::vector<Collection> out;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (!ok[i][j]) continue;
            if (arity == 2) {
                out.push_back({objs[i], objs[j]});
                continue;
            }
            for (size_t k = 0; k < n; ++k)
                if (ok[i][k] && ok[j][k]) out.push_back({objs[i], objs[j], objs[k]});
        }
    return out;
}

namespace {

// Tokens: "E1+1" parameter m+1, "E1@0" fixed parameter, "M", "M'".
const std::vector<std::string> kQ1Pairs = {
    "E1+1 E1",  "E2 E2+1",  "E3 E3+1", "E4+1 E4", "E1@0 E2@0", "E1@0 E3@0", "E4 E1",
    "E1+1 E4",  "E3 E2",    "E2 E3+1", "E4@0 E3@0", "E1 M",  "E2 M",      "M E3",
    "M E4",     "M' E1",    "M' E2",   "E3 M'",   "E4 M'",
};
const std::vector<std::string> kQ1Triples = {
    "E1+1 E1 M",      "E1+1 E4 E1",      "E1+1 M E4",      "E1@0 E2@0 M",   "E1@0 E3@0 E2@0", "E1@0 M E3@0",
    "E2 E2+1 M",      "E2 E3+1 E2+1",    "E2 M E3+1",      "E3 E2 E3+1",    "E3 E3+1 M'",     "E3 M' E2",
    "E4+1 E4 M'",     "E4+1 E1+1 E4",    "E4+1 M' E1+1",   "E4@0 E1@0 E3@0", "E4@0 E3@0 M'",  "E4@0 M' E1@0",
    "M E3 E3+1",      "M E4+1 E4",       "M E4@0 E3@0",    "M' E1+1 E1",    "M' E2 E2+1",     "M' E1@0 E2@0",
};

bool instantiate(const std::string& row, int m, int w, Collection& out, bool& variable) {
    std::stringstream ss(row);
    std::string tok;
    out.clear();
    variable = false;
    while (ss >> tok) {
        ExcObject x;
        x.quiver = "q1";
        if (tok[0] != 'E') {
            x.family = tok;
        } else {
            x.family = tok.substr(0, 2);
            if (tok.size() > 2 && tok[2] == '@') {
                x.m = std::atoi(tok.c_str() + 3);
            } else {
                variable = true;
                x.m = m + (tok.size() > 2 ? std::atoi(tok.c_str() + 3) : 0);
            }
            if (x.m > w) return false;
        }
        out.push_back(x);
    }
    return true;
}

}  // namespace

std::vector<Collection> listed_q1_collections(int arity, int w) {
    const auto& rows = arity == 2 ? kQ1Pairs : kQ1Triples;
    std::set<Collection> seen;
    std::vector<Collection> out;
    for (const auto& row : rows)
        for (int m = 0; m <= w; ++m) {
            Collection c;
            bool variable = false;
            if (instantiate(row, m, w, c, variable) && seen.insert(c).second) out.push_back(c);
            if (!variable) break;
        }
    return out;
}

int listed_q1_family_count(int arity) { return int(arity == 2 ? kQ1Pairs.size() : kQ1Triples.size()); }

Normalized normalize_class(const std::string& quiver, const DimVec& c, int window) {
    for (const auto& x : catalog_objects(quiver, window)) {
        DimVec k = object_class(x);
        if (k == c) return {x, 0};
        if (k == neg(c)) return {x, 1};
    }
    throw InternalError("class " + dims_to_string(c) + " matches no catalog object");
}

namespace {

int parameter_bound(const ExcObject& x) { return std::abs(x.m) + 1; }

long long chi(const ExcObject& a, const ExcObject& b) {
    long long s = 0;
    for (const auto& [p, d] : hom_profile(a, b)) s += (p % 2 == 0 ? 1 : -1) * d;
    return s;
}

}  // namespace

Normalized mutate(const ExcObject& a, const ExcObject& b, Side side) {
    if (!pair_status(a, b).exceptional) throw DomainError("mutation needs an exceptional pair");
    long long x = chi(a, b);
    DimVec c = side == Side::Left ? sub(scale(x, object_class(a)), object_class(b))
                                  : sub(scale(x, object_class(b)), object_class(a));
    int w = std::max(parameter_bound(a), parameter_bound(b));
    w = a.kronecker() ? w + 1 : 3 * w + 3;
    return normalize_class(a.quiver, c, w);
}

Collection braid_act(const std::string& word, const Collection& c) {
    Collection cur = c;
    std::string t = word;
    std::replace(t.begin(), t.end(), ',', ' ');
    std::stringstream ss(t);
    std::string tok;
    while (ss >> tok) {
        if (tok.size() < 2 || (tok[0] != 'L' && tok[0] != 'R')) throw DomainError("bad braid generator " + tok);
        int i = std::atoi(tok.c_str() + 1);
        if (i < 0 || i + 1 >= int(cur.size())) throw DomainError("braid generator out of range: " + tok);
        ExcObject a = cur[i], b = cur[i + 1];
        if (tok[0] == 'L') {
            cur[i] = mutate(a, b, Side::Left).object;
            cur[i + 1] = a;
        } else {
            cur[i] = b;
            cur[i + 1] = mutate(a, b, Side::Right).object;
        }
    }
    return cur;
}

CoupleReport verify_global_properties(const std::string& quiver, int w) {
    CoupleReport rep;
    auto objs = catalog_objects(quiver, w);
    const size_t n = objs.size();
    std::vector<std::vector<HomExt>> he(n, std::vector<HomExt>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) he[i][j] = catalog_hom_ext(objs[i], objs[j]);
    auto star = [&](size_t i, size_t j) { return he[i][j].hom + he[i][j].ext; };
    std::vector<std::pair<size_t, size_t>> ordered;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (he[i][j].ext && he[j][i].ext) {
                rep.couples.push_back({objs[i], objs[j]});
                ordered.push_back({i, j});
                ordered.push_back({j, i});
            }

    PropertyResult rp1{"RP1", true, true, 0, ""}, rp2{"RP2", true, true, 0, ""};
    PropertyResult add{"additional-RP", true, true, 0, ""}, single{"single-degree", true, true, 0, ""};
    for (auto [g, g2] : ordered)
        for (size_t x = 0; x < n; ++x) {
            ++rp1.checked;
            if (star(g, x) == 0 && star(x, g2) != 0 && rp1.pass) {
                rp1.pass = false;
                rp1.witness = objs[g].label() + "," + objs[g2].label() + "; X=" + objs[x].label();
            }
            for (size_t y = 0; y < n; ++y) {
                if (!he[g][x].hom || !he[x][y].hom || star(g, y)) continue;
                ++rp2.checked;
                if (!he[g2][y].hom && rp2.pass) {
                    rp2.pass = false;
                    rp2.witness = objs[g].label() + "," + objs[g2].label() + "; X=" + objs[x].label() +
                                  " Y=" + objs[y].label();
                }
            }
        }
    add.applicable = quiver == "q1";
    for (auto [g, g2] : ordered) {
        if (g > g2) continue;
        for (size_t x = 0; x < n; ++x) {
            ++add.checked;
            bool from = star(g, x) || star(g2, x), to = star(x, g) || star(x, g2);
            if ((!from || !to) && add.pass) {
                add.pass = false;
                add.witness = objs[g].label() + "," + objs[g2].label() + "; X=" + objs[x].label();
            }
        }
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            ++single.checked;
            if (he[i][j].hom && he[i][j].ext && single.pass) {
                single.pass = false;
                single.witness = objs[i].label() + "," + objs[j].label();
            }
        }
    rep.properties = {rp1, rp2, add, single};
    return rep;
}

Collection apply_shifts(const Collection& c, const std::vector<int>& p) {
    Collection out = c;
    for (size_t i = 0; i < c.size(); ++i) out[i] = c[i].shifted(p.at(i));
    return out;
}

std::vector<int> ext_shift_normalize(const Collection& c) {
    const int n = int(c.size());
    // p_j - p_i <= d - 1 for every degree d with hom^d(E_i, E_j) != 0
    std::vector<std::vector<int>> bound(n, std::vector<int>(n, 1000));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (const auto& [d, dim] : hom_profile(c[i], c[j])) bound[i][j] = std::min(bound[i][j], d - 1);
    std::vector<int> best;
    int best_norm = 1 << 30;
    std::vector<int> p(n, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (p[j] - p[i] > bound[i][j]) return;
            int norm = 0;
            for (int v : p) norm += std::abs(v);
            if (norm < best_norm) {
                best_norm = norm;
                best = p;
            }
            return;
        }
        for (int v = 0; v <= 3; ++v)
            for (int s : {1, -1}) {
                if (v == 0 && s < 0) continue;
                p[k] = s * v;
                rec(k + 1);
            }
        p[k] = 0;
    };
    if (n == 0) return {};
    rec(1);
    if (best.empty()) throw CapacityError("no Ext shift vector with entries in [-3, 3]");
    return best;
}

ExcObject complete_pair_to_triple(const ExcObject& x, const ExcObject& y, int missing, int window) {
    if (missing < 0 || missing > 2) throw DomainError("missing position must be 0, 1 or 2");
    if (window < 0) window = std::max(parameter_bound(x), parameter_bound(y)) + 1;
    std::set<ExcObject> found;
    ExcObject a = x.shifted(-x.shift), b = y.shifted(-y.shift);
    for (const auto& t : enumerate_collections(x.quiver, 3, window)) {
        std::vector<ExcObject> rest;
        for (int i = 0; i < 3; ++i)
            if (i != missing) rest.push_back(t[i]);
        if (rest[0] == a && rest[1] == b) found.insert(t[missing]);
    }
    if (found.empty()) throw CapacityError("pair does not extend to a triple inside the window");
    if (found.size() > 1) throw InternalError("third member of the triple is not unique");
    return *found.begin();
}

bool classes_unimodular(const Collection& c) {
    if (c.empty()) return false;
    const int n = int(c.size());
    MatQ m(n, n);
    for (int i = 0; i < n; ++i) {
        DimVec k = object_class(c[i]);
        if (int(k.size()) != n) return false;
        for (int j = 0; j < n; ++j) m(i, j) = Q(long(k[j]));
    }
    Q det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n && piv < 0; ++r)
            if (!is_zero(m(r, col))) piv = r;
        if (piv < 0) return false;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (int r = col + 1; r < n; ++r) {
            Q f = m(r, col) / m(col, col);
            for (int j = col; j < n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return det == 1 || det == -1;
}

}  // namespace qstab
