#pragma once

// Dense exact matrices over an arbitrary field T, with zero-skipping products,
// reduced row echelon form, kernels, and characteristic polynomials
// (Hessenberg recurrence; cycle product for monomial matrices; Faddeev
// LeVerrier kept as an independent oracle for the tests).

#include "eptl/numeric.hpp"

#include <cassert>
#include <functional>
#include <vector>

namespace eptl {

template <class T> class Matrix {
public:
    int n = 0, m = 0;
    std::vector<T> a;

    Matrix() = default;
    Matrix(int rows, int cols) : n(rows), m(cols), a(size_t(rows) * cols, T(0)) {}
    static Matrix identity(int k) {
        Matrix r(k, k);
        for (int i = 0; i < k; ++i) r(i, i) = T(1);
        return r;
    }
    T &operator()(int i, int j) { return a[size_t(i) * m + j]; }
    const T &operator()(int i, int j) const { return a[size_t(i) * m + j]; }

    friend Matrix operator*(const Matrix &x, const Matrix &y) {
        assert(x.m == y.n);
        Matrix r(x.n, y.m);
        for (int i = 0; i < x.n; ++i)
            for (int k = 0; k < x.m; ++k) {
                const T &xik = x(i, k);
                if (is_zero_value(xik)) continue;
                for (int j = 0; j < y.m; ++j) {
                    const T &ykj = y(k, j);
                    if (is_zero_value(ykj)) continue;
                    r(i, j) += xik * ykj;
                }
            }
        return r;
    }
    friend Matrix operator+(const Matrix &x, const Matrix &y) {
        assert(x.n == y.n && x.m == y.m);
        Matrix r = x;
        for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
        return r;
    }
    friend Matrix operator-(const Matrix &x, const Matrix &y) {
        assert(x.n == y.n && x.m == y.m);
        Matrix r = x;
        for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
        return r;
    }
    friend Matrix operator*(const T &c, const Matrix &x) {
        Matrix r = x;
        for (auto &v : r.a) v = c * v;
        return r;
    }
    Matrix operator-() const { return T(-1) * *this; }
    friend bool operator==(const Matrix &x, const Matrix &y) {
        return x.n == y.n && x.m == y.m && x.a == y.a;
    }
    bool is_zero() const {
        for (auto &v : a)
            if (!is_zero_value(v)) return false;
        return true;
    }
    Matrix<T> transpose() const {
        Matrix r(m, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    std::vector<T> apply(const std::vector<T> &v) const {
        assert((int)v.size() == m);
        std::vector<T> r(n, T(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                if (!is_zero_value((*this)(i, j)) && !is_zero_value(v[j])) r[i] += (*this)(i, j) * v[j];
        return r;
    }
    Matrix pow(long e) const {
        assert(n == m);
        Matrix r = identity(n), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
};

// In-place rref. Returns pivot columns.
template <class T> std::vector<int> rref(Matrix<T> &mat) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < mat.m && row < mat.n; ++col) {
        int p = -1;
        for (int i = row; i < mat.n; ++i)
            if (!is_zero_value(mat(i, col))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < mat.m; ++j) std::swap(mat(p, j), mat(row, j));
        T inv = T(1) / mat(row, col);
        for (int j = col; j < mat.m; ++j) mat(row, j) = mat(row, j) * inv;
        for (int i = 0; i < mat.n; ++i) {
            if (i == row || is_zero_value(mat(i, col))) continue;
            T f = mat(i, col);
            for (int j = col; j < mat.m; ++j) mat(i, j) -= f * mat(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class T> int rank(Matrix<T> mat) { return (int)rref(mat).size(); }

// Basis of the right kernel, as rows.
template <class T> Matrix<T> kernel_basis(Matrix<T> mat) {
    int cols = mat.m;
    std::vector<int> piv = rref(mat);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> freecols;
    for (int c = 0; c < cols; ++c)
        if (!is_piv[c]) freecols.push_back(c);
    Matrix<T> ker((int)freecols.size(), cols);
    for (int k = 0; k < (int)freecols.size(); ++k) {
        int fc = freecols[k];
        ker(k, fc) = T(1);
        for (int r = 0; r < (int)piv.size(); ++r) ker(k, piv[r]) = -mat(r, fc);
    }
    return ker;
}

// characteristic polynomial det(L*I - M), coefficients ascending in L
template <class T> std::vector<T> charpoly_hessenberg(Matrix<T> h) {
    int n = h.n;
    assert(h.n == h.m);
    // reduce to upper Hessenberg by similarity transformations
    for (int col = 0; col < n - 2; ++col) {
        int p = -1;
        for (int i = col + 1; i < n; ++i)
            if (!is_zero_value(h(i, col))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != col + 1) {
            for (int j = 0; j < n; ++j) std::swap(h(p, j), h(col + 1, j));
            for (int i = 0; i < n; ++i) std::swap(h(i, p), h(i, col + 1));
        }
        T inv = T(1) / h(col + 1, col);
        for (int i = col + 2; i < n; ++i) {
            if (is_zero_value(h(i, col))) continue;
            T f = h(i, col) * inv;
            for (int j = 0; j < n; ++j) h(i, j) -= f * h(col + 1, j);
            for (int j = 0; j < n; ++j) h(j, col + 1) += f * h(j, i);
        }
    }
    // p_0 = 1; p_k = charpoly of leading k x k block
    std::vector<std::vector<T>> p(n + 1);
    p[0] = {T(1)};
    for (int k = 1; k <= n; ++k) {
        // p_k(L) = (L - h_{k-1,k-1}) p_{k-1}(L) - sum_{i<k-1} h_{i,k-1} (prod_{j=i+1}^{k-1} h_{j,j-1}) p_i(L)
        std::vector<T> pk(k + 1, T(0));
        for (int d = 0; d < k; ++d) {
            pk[d + 1] += p[k - 1][d];
            pk[d] -= h(k - 1, k - 1) * p[k - 1][d];
        }
        T prod(1);
        for (int i = k - 2; i >= 0; --i) {
            prod = prod * h(i + 1, i);
            if (is_zero_value(prod)) break;
            T c = h(i, k - 1) * prod;
            if (is_zero_value(c)) continue;
            for (int d = 0; d <= i; ++d) pk[d] -= c * p[i][d];
        }
        p[k] = std::move(pk);
    }
    return p[n];
}

// Faddeev-LeVerrier: independent O(n^4) oracle (requires char 0 field)
template <class T> std::vector<T> charpoly_faddeev(const Matrix<T> &mat) {
    int n = mat.n;
    std::vector<T> c(n + 1, T(0));
    c[n] = T(1);
    Matrix<T> mk = Matrix<T>::identity(n);
    for (int k = 1; k <= n; ++k) {
        mk = mat * mk;
        T tr(0);
        for (int i = 0; i < n; ++i) tr += mk(i, i);
        T ck = -(T(1) / T(k)) * tr;
        c[n - k] = ck;
        for (int i = 0; i < n; ++i) mk(i, i) += ck;
    }
    return c;
}

// If the matrix is monomial (at most one entry per row and column), the
// characteristic polynomial splits over cycles. Returns empty if not monomial.
template <class T> std::vector<T> charpoly_monomial(const Matrix<T> &mat) {
    int n = mat.n;
    std::vector<int> nxt(n, -1);
    std::vector<T> wgt(n, T(0));
    for (int j = 0; j < n; ++j) {
        int cnt = 0;
        for (int i = 0; i < n; ++i)
            if (!is_zero_value(mat(i, j))) {
                if (++cnt > 1) return {};
                nxt[j] = i;
                wgt[j] = mat(i, j);
            }
        if (cnt == 0) return {}; // singular column: fall back
    }
    std::vector<int> seen_row(n, 0);
    for (int j = 0; j < n; ++j) {
        if (nxt[j] >= 0) {
            if (seen_row[nxt[j]]++) return {};
        }
    }
    std::vector<T> cp = {T(1)};
    std::vector<bool> vis(n, false);
    for (int s = 0; s < n; ++s) {
        if (vis[s]) continue;
        int len = 0, j = s;
        T prod(1);
        do {
            vis[j] = true;
            prod = prod * wgt[j];
            j = nxt[j];
            ++len;
        } while (j != s);
        // factor L^len - prod  (sign convention: det(L I - M))
        std::vector<T> nf(cp.size() + len, T(0));
        for (size_t d = 0; d < cp.size(); ++d) {
            nf[d + len] += cp[d];
            nf[d] -= prod * cp[d];
        }
        cp = std::move(nf);
    }
    return cp;
}

template <class T> std::vector<T> charpoly(const Matrix<T> &mat) {
    auto fast = charpoly_monomial(mat);
    if (!fast.empty()) return fast;
    return charpoly_hessenberg(mat);
}

// ---- span utilities on row collections ----

template <class T> struct Span {
    Matrix<T> rr;              // rref'd rows
    std::vector<int> pivots;   // pivot column per row
    int cols = 0;

    explicit Span(int cols_) : rr(0, cols_), cols(cols_) {}
    int rank() const { return rr.n; }
    // returns true if v was independent (and adds it)
    bool add(std::vector<T> v) {
        reduce(v);
        int p = -1;
        for (int j = 0; j < cols; ++j)
            if (!is_zero_value(v[j])) {
                p = j;
                break;
            }
        if (p < 0) return false;
        T inv = T(1) / v[p];
        for (auto &c : v) c = c * inv;
        // insert keeping pivot order, then back-reduce existing rows
        Matrix<T> nr(rr.n + 1, cols);
        std::vector<int> np;
        int i = 0, placed = 0;
        for (int r = 0; r <= rr.n; ++r) {
            if (!placed && (i >= rr.n || p < pivots[i])) {
                for (int j = 0; j < cols; ++j) nr(r, j) = v[j];
                np.push_back(p);
                placed = 1;
            } else {
                for (int j = 0; j < cols; ++j) nr(r, j) = rr(i, j);
                np.push_back(pivots[i]);
                ++i;
            }
        }
        rr = std::move(nr);
        pivots = std::move(np);
        for (int r = 0; r < rr.n; ++r) {
            for (int r2 = 0; r2 < rr.n; ++r2) {
                if (r2 == r) continue;
                T f = rr(r2, pivots[r]);
                if (is_zero_value(f)) continue;
                for (int j = 0; j < cols; ++j) rr(r2, j) -= f * rr(r, j);
            }
        }
        return true;
    }
    void reduce(std::vector<T> &v) const {
        for (int r = 0; r < rr.n; ++r) {
            T f = v[pivots[r]];
            if (is_zero_value(f)) continue;
            for (int j = 0; j < cols; ++j) v[j] -= f * rr(r, j);
        }
    }
    bool contains(std::vector<T> v) const {
        reduce(v);
        for (auto &c : v)
            if (!is_zero_value(c)) return false;
        return true;
    }
};

// polynomial helpers on coefficient vectors (ascending)
template <class T> std::vector<T> poly_mul(const std::vector<T> &a, const std::vector<T> &b) {
    std::vector<T> r(a.size() + b.size() - 1, T(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}
template <class T> std::vector<T> poly_linear_factor(const T &root) {
    return {-root, T(1)}; // (L - root)
}

} // namespace eptl
