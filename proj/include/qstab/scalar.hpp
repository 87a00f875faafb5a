#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qstab {

using Q = mpq_class;
using Z = mpz_class;

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element of the prime field F_P.
template <uint32_t P>
struct Fp {
    uint32_t v = 0;
    Fp() = default;
    Fp(long long x) {
        long long r = x % (long long)P;
        v = uint32_t(r < 0 ? r + P : r);
    }
    friend Fp operator+(Fp a, Fp b) { Fp r; r.v = (a.v + b.v) % P; return r; }
    friend Fp operator-(Fp a, Fp b) { Fp r; r.v = (a.v + P - b.v) % P; return r; }
    friend Fp operator*(Fp a, Fp b) { Fp r; r.v = uint32_t((uint64_t(a.v) * b.v) % P); return r; }
    Fp inv() const {
        if (v == 0) throw DomainError("inverse of zero in F_p");
        uint64_t base = v, e = P - 2, res = 1;
        while (e) {
            if (e & 1) res = res * base % P;
            base = base * base % P;
            e >>= 1;
        }
        Fp r; r.v = uint32_t(res); return r;
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
    Fp operator-() const { Fp r; r.v = (P - v) % P; return r; }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
    friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }
};

inline bool is_zero(const Q& x) { return sgn(x) == 0; }
template <uint32_t P>
inline bool is_zero(const Fp<P>& x) { return x.v == 0; }

/// Reduce a rational modulo P; throws if P divides the denominator.
template <uint32_t P>
Fp<P> reduce(const Q& x) {
    Z num = x.get_num() % P, den = x.get_den() % P;
    if (den == 0) throw DomainError("denominator divisible by the oracle prime");
    Fp<P> a(num.get_si()), b(den.get_si());
    return a / b;
}

Q parse_rational(const std::string& s);
std::string to_string(const Q& x);

/// Gaussian rational re + im*i.
struct CQ {
    Q re, im;
    CQ() = default;
    CQ(Q r, Q i) : re(std::move(r)), im(std::move(i)) {}
    friend CQ operator+(const CQ& a, const CQ& b) { return {a.re + b.re, a.im + b.im}; }
    friend CQ operator-(const CQ& a, const CQ& b) { return {a.re - b.re, a.im - b.im}; }
    friend CQ operator*(const Q& s, const CQ& a) { return {s * a.re, s * a.im}; }
    CQ operator-() const { return {-re, -im}; }
    friend bool operator==(const CQ& a, const CQ& b) { return a.re == b.re && a.im == b.im; }
    bool zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    /// Upper half plane with the negative real axis: arg in (0, pi].
    bool in_half_plane() const { return sgn(im) > 0 || (sgn(im) == 0 && sgn(re) < 0); }
    double arg_over_pi() const;
};

/// Sign of im(conj(a)*b); positive iff b is counterclockwise from a.
inline int cross_sign(const CQ& a, const CQ& b) { return sgn(a.re * b.im - a.im * b.re); }

/// Parse "a/b+c/di", "-1+1i", "2i", "-3/2".
CQ parse_cq(const std::string& s);
std::string to_string(const CQ& z);

}  // namespace qstab
