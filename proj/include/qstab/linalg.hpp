#pragma once
#include <algorithm>
#include <cassert>
#include <vector>

#include "qstab/scalar.hpp"

namespace qstab {

/// Dense row-major matrix over an exact field.
template <class T>
struct Mat {
    int r = 0, c = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int rows, int cols) : r(rows), c(cols), a(size_t(rows) * size_t(cols), T(0)) {}

    T& operator()(int i, int j) { return a[size_t(i) * c + j]; }
    const T& operator()(int i, int j) const { return a[size_t(i) * c + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    bool zero() const {
        for (const auto& x : a)
            if (!is_zero(x)) return false;
        return true;
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        if (x.r != y.r || x.c != y.c) return false;
        for (size_t i = 0; i < x.a.size(); ++i)
            if (x.a[i] != y.a[i]) return false;
        return true;
    }
};

using MatQ = Mat<Q>;

template <class T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
    assert(x.c == y.r);
    Mat<T> z(x.r, y.c);
    for (int i = 0; i < x.r; ++i)
        for (int k = 0; k < x.c; ++k) {
            const T& v = x(i, k);
            if (is_zero(v)) continue;
            for (int j = 0; j < y.c; ++j)
                if (!is_zero(y(k, j))) z(i, j) += v * y(k, j);
        }
    return z;
}

template <class T>
Mat<T> operator+(const Mat<T>& x, const Mat<T>& y) {
    Mat<T> z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

template <class T>
Mat<T> operator-(const Mat<T>& x, const Mat<T>& y) {
    Mat<T> z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
    return z;
}

template <class T>
Mat<T> scaled(const Mat<T>& x, const T& s) {
    Mat<T> z = x;
    for (auto& v : z.a) v *= s;
    return z;
}

template <class T>
Mat<T> transpose(const Mat<T>& x) {
    Mat<T> z(x.c, x.r);
    for (int i = 0; i < x.r; ++i)
        for (int j = 0; j < x.c; ++j) z(j, i) = x(i, j);
    return z;
}

template <class T>
Mat<T> hstack(const Mat<T>& x, const Mat<T>& y) {
    assert(x.r == y.r);
    Mat<T> z(x.r, x.c + y.c);
    for (int i = 0; i < x.r; ++i) {
        for (int j = 0; j < x.c; ++j) z(i, j) = x(i, j);
        for (int j = 0; j < y.c; ++j) z(i, x.c + j) = y(i, j);
    }
    return z;
}

template <class T>
Mat<T> vstack(const Mat<T>& x, const Mat<T>& y) {
    assert(x.c == y.c);
    Mat<T> z(x.r + y.r, x.c);
    std::copy(x.a.begin(), x.a.end(), z.a.begin());
    std::copy(y.a.begin(), y.a.end(), z.a.begin() + x.a.size());
    return z;
}

template <class T>
Mat<T> columns(const Mat<T>& x, const std::vector<int>& idx) {
    Mat<T> z(x.r, int(idx.size()));
    for (int i = 0; i < x.r; ++i)
        for (size_t j = 0; j < idx.size(); ++j) z(i, int(j)) = x(i, idx[j]);
    return z;
}

/// In-place reduced row echelon form; returns pivot columns.
template <class T>
std::vector<int> rref(Mat<T>& m) {
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < m.c && row < m.r; ++col) {
        int sel = -1;
        for (int i = row; i < m.r; ++i)
            if (!is_zero(m(i, col))) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < m.c; ++j) std::swap(m(sel, j), m(row, j));
        T inv = T(1) / m(row, col);
        for (int j = col; j < m.c; ++j)
            if (!is_zero(m(row, j))) m(row, j) *= inv;
        for (int i = 0; i < m.r; ++i) {
            if (i == row || is_zero(m(i, col))) continue;
            T f = m(i, col);
            for (int j = col; j < m.c; ++j)
                if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    return piv;
}

template <class T>
int rank(Mat<T> m) {
    return int(rref(m).size());
}

/// Basis of the null space as columns of an (m.c x k) matrix.
template <class T>
Mat<T> kernel(Mat<T> m) {
    int n = m.c;
    auto piv = rref(m);
    std::vector<char> is_piv(n, 0);
    for (int p : piv) is_piv[p] = 1;
    std::vector<int> free;
    for (int j = 0; j < n; ++j)
        if (!is_piv[j]) free.push_back(j);
    Mat<T> k(n, int(free.size()));
    for (size_t f = 0; f < free.size(); ++f) {
        k(free[f], int(f)) = T(1);
        for (size_t i = 0; i < piv.size(); ++i) k(piv[i], int(f)) = -m(int(i), free[f]);
    }
    return k;
}

/// Basis of the column space, chosen among the columns of m.
template <class T>
Mat<T> image(const Mat<T>& m) {
    Mat<T> w = m;
    auto piv = rref(w);
    return columns(m, piv);
}

/// Rows spanning the annihilator of the column space of b (so kernel(ann) = span b).
template <class T>
Mat<T> annihilator(const Mat<T>& b) {
    Mat<T> k = kernel(transpose(b));
    return transpose(k);
}

/// Solve a*x = b exactly; returns false when inconsistent.
template <class T>
bool solve(const Mat<T>& a, const Mat<T>& b, Mat<T>& x) {
    Mat<T> aug = hstack(a, b);
    auto piv = rref(aug);
    for (int p : piv)
        if (p >= a.c) return false;
    x = Mat<T>(a.c, b.c);
    for (size_t i = 0; i < piv.size(); ++i)
        for (int j = 0; j < b.c; ++j) x(piv[i], j) = aug(int(i), a.c + j);
    return true;
}

template <class T>
Mat<T> inverse(const Mat<T>& a) {
    Mat<T> x;
    if (a.r != a.c || !solve(a, Mat<T>::identity(a.r), x) || rank(a) != a.r)
        throw DomainError("matrix not invertible");
    return x;
}

/// Standard basis indices completing the columns of b (assumed independent) to a basis.
template <class T>
std::vector<int> complement_coordinates(const Mat<T>& b) {
    Mat<T> w = hstack(b, Mat<T>::identity(b.r));
    auto piv = rref(w);
    std::vector<int> out;
    for (int p : piv)
        if (p >= b.c) out.push_back(p - b.c);
    return out;
}

/// Rank over F_p of an integer matrix given row-major, p < 2^31.
int rank_mod_p(std::vector<int64_t> a, int rows, int cols, int64_t p);

}  // namespace qstab
