#include "qstab/scalar.hpp"

#include <cctype>
#include <cmath>

#include "qstab/linalg.hpp"

namespace qstab {

Q parse_rational(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw DomainError("empty rational");
    if (s[0] == '+') s = s.substr(1);
    for (size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        bool ok = std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || (ch == '-' && i == 0);
        if (!ok) throw DomainError("bad rational: " + raw);
    }
    Q q;
    try {
        q = Q(s);
    } catch (const std::invalid_argument&) {
        throw DomainError("bad rational: " + raw);
    }
    if (s.find('/') != std::string::npos && q.get_den() == 0) throw DomainError("zero denominator: " + raw);
    q.canonicalize();
    return q;
}

std::string to_string(const Q& x) { return x.get_str(); }

CQ parse_cq(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw DomainError("empty complex value");
    if (s.back() != 'i') return {parse_rational(s), Q(0)};
    std::string body = s.substr(0, s.size() - 1);
    size_t split = std::string::npos;
    for (size_t i = body.size(); i-- > 1;)
        if (body[i] == '+' || body[i] == '-') { split = i; break; }
    std::string re = split == std::string::npos ? "" : body.substr(0, split);
    std::string im = split == std::string::npos ? body : body.substr(split);
    Q imq;
    if (im.empty() || im == "+") imq = 1;
    else if (im == "-") imq = -1;
    else imq = parse_rational(im);
    return {re.empty() ? Q(0) : parse_rational(re), imq};
}

std::string to_string(const CQ& z) {
    std::string im = z.im.get_str();
    if (sgn(z.im) >= 0) im = "+" + im;
    return z.re.get_str() + im + "i";
}

double CQ::arg_over_pi() const { return std::atan2(im.get_d(), re.get_d()) / M_PI; }

int rank_mod_p(std::vector<int64_t> a, int rows, int cols, int64_t p) {
    auto at = [&](int i, int j) -> int64_t& { return a[size_t(i) * cols + j]; };
    auto pw = [&](int64_t b, int64_t e) {
        int64_t r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = (__int128)r * b % p;
            b = (__int128)b * b % p;
            e >>= 1;
        }
        return r;
    };
    for (auto& v : a) v = ((v % p) + p) % p;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int sel = -1;
        for (int i = row; i < rows; ++i)
            if (at(i, col)) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < cols; ++j) std::swap(at(sel, j), at(row, j));
        int64_t inv = pw(at(row, col), p - 2);
        for (int j = col; j < cols; ++j) at(row, j) = (__int128)at(row, j) * inv % p;
        for (int i = row + 1; i < rows; ++i) {
            int64_t f = at(i, col);
            if (!f) continue;
            for (int j = col; j < cols; ++j)
                if (at(row, j)) at(i, j) = ((at(i, j) - (__int128)f * at(row, j)) % p + p) % p;
        }
        ++row;
    }
    return row;
}

}  // namespace qstab
