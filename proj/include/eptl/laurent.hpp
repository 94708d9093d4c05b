#pragma once

// Multivariate Laurent polynomials in the variables v, x, y, z, w with
// exact rational coefficients, kept as sorted term lists under graded-lex
// monomial order. gcd works by content-and-primitive-part recursion.

#include "eptl/numeric.hpp"

#include <array>
#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

namespace eptl {

constexpr int NVARS = 5;
enum Var : int { VV = 0, VX = 1, VY = 2, VZ = 3, VW = 4 };
inline const char *var_name(int i) {
    static const char *names[NVARS] = {"v", "x", "y", "z", "w"};
    return names[i];
}

struct Mono {
    std::array<int32_t, NVARS> e{};

    static Mono unit() { return {}; }
    static Mono var(int i, int32_t p = 1) {
        Mono m;
        m.e[i] = p;
        return m;
    }
    Mono operator*(const Mono &o) const {
        Mono r;
        for (int i = 0; i < NVARS; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    Mono operator/(const Mono &o) const {
        Mono r;
        for (int i = 0; i < NVARS; ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }
    bool is_unit() const {
        for (int i = 0; i < NVARS; ++i)
            if (e[i]) return false;
        return true;
    }
    long degree() const {
        long d = 0;
        for (int i = 0; i < NVARS; ++i) d += e[i];
        return d;
    }
    // graded lexicographic order
    friend bool operator<(const Mono &a, const Mono &b) {
        long da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e < b.e;
    }
    friend bool operator==(const Mono &a, const Mono &b) { return a.e == b.e; }
    friend bool operator!=(const Mono &a, const Mono &b) { return !(a == b); }
};

class Laurent {
public:
    // terms sorted ascending by monomial; no zero coefficients
    std::vector<std::pair<Mono, Rational>> t;

    Laurent() = default;
    explicit Laurent(Rational c) {
        if (c != 0) t.push_back({Mono::unit(), std::move(c)});
    }
    Laurent(int c) : Laurent(Rational(c)) {}
    static Laurent term(Mono m, Rational c) {
        Laurent l;
        if (c != 0) l.t.push_back({std::move(m), std::move(c)});
        return l;
    }
    static Laurent var(int i, int32_t p = 1) { return term(Mono::var(i, p), 1); }

    bool is_zero() const { return t.empty(); }
    bool is_constant() const { return t.empty() || (t.size() == 1 && t[0].first.is_unit()); }
    bool is_monomial() const { return t.size() == 1; }
    size_t nterms() const { return t.size(); }
    const std::pair<Mono, Rational> &lead() const { return t.back(); }

    friend Laurent operator+(const Laurent &a, const Laurent &b) {
        Laurent r;
        r.t.reserve(a.t.size() + b.t.size());
        size_t i = 0, j = 0;
        while (i < a.t.size() && j < b.t.size()) {
            if (a.t[i].first == b.t[j].first) {
                Rational c = a.t[i].second + b.t[j].second;
                if (c != 0) r.t.push_back({a.t[i].first, std::move(c)});
                ++i, ++j;
            } else if (a.t[i].first < b.t[j].first) {
                r.t.push_back(a.t[i++]);
            } else {
                r.t.push_back(b.t[j++]);
            }
        }
        for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
        for (; j < b.t.size(); ++j) r.t.push_back(b.t[j]);
        return r;
    }
    friend Laurent operator-(const Laurent &a) {
        Laurent r = a;
        for (auto &p : r.t) p.second = -p.second;
        return r;
    }
    friend Laurent operator-(const Laurent &a, const Laurent &b) { return a + (-b); }
    friend Laurent operator*(const Laurent &a, const Laurent &b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (b.is_monomial()) return mono_mul(a, b.t[0].first, b.t[0].second);
        if (a.is_monomial()) return mono_mul(b, a.t[0].first, a.t[0].second);
        Laurent r;
        for (auto &pb : b.t) r = r + mono_mul(a, pb.first, pb.second);
        return r;
    }
    static Laurent mono_mul(const Laurent &a, const Mono &m, const Rational &c) {
        Laurent r;
        if (c == 0) return r;
        r.t.reserve(a.t.size());
        for (auto &p : a.t) r.t.push_back({p.first * m, p.second * c});
        return r;
    }
    Laurent &operator+=(const Laurent &b) { return *this = *this + b; }
    Laurent &operator-=(const Laurent &b) { return *this = *this - b; }
    Laurent &operator*=(const Laurent &b) { return *this = *this * b; }
    friend bool operator==(const Laurent &a, const Laurent &b) { return a.t == b.t; }
    friend bool operator!=(const Laurent &a, const Laurent &b) { return !(a.t == b.t); }
    friend bool operator<(const Laurent &a, const Laurent &b) {
        return std::lexicographical_compare(
            a.t.begin(), a.t.end(), b.t.begin(), b.t.end(), [](auto &p, auto &q) {
                if (p.first != q.first) return p.first < q.first;
                return p.second < q.second;
            });
    }

    // smallest exponent of each variable over all terms (0 if zero poly)
    Mono min_exps() const {
        Mono m;
        if (t.empty()) return m;
        for (int i = 0; i < NVARS; ++i) m.e[i] = INT32_MAX;
        for (auto &p : t)
            for (int i = 0; i < NVARS; ++i) m.e[i] = std::min(m.e[i], p.first.e[i]);
        return m;
    }
    int degree_in(int var) const {
        int d = 0;
        for (auto &p : t) d = std::max(d, (int)p.first.e[var]);
        return d;
    }
    bool depends_on(int var) const {
        for (auto &p : t)
            if (p.first.e[var]) return true;
        return false;
    }

    // coefficient of var^k viewed as a polynomial in `var`
    Laurent coeff_of(int var, int k) const {
        Laurent r;
        for (auto &p : t)
            if (p.first.e[var] == k) {
                Mono m = p.first;
                m.e[var] = 0;
                r.t.push_back({m, p.second});
            }
        std::sort(r.t.begin(), r.t.end(),
                  [](auto &a, auto &b) { return a.first < b.first; });
        return r;
    }
};

// ---- gcd machinery (ordinary polynomials: all exponents >= 0) ----

namespace detail {

// rational content: positive rational c with poly/c integral, primitive and
// positive-leading. Returns c such that dividing makes the poly "monic-ish".
inline Rational rational_content(const Laurent &a) {
    if (a.is_zero()) return 1;
    BigInt g = 0, l = 1;
    for (auto &p : a.t) {
        g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(p.second));
        l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(p.second));
    }
    Rational c(g, l);
    if (a.lead().second < 0) c = -c;
    return c;
}

inline Laurent div_exact_rat(const Laurent &a, const Rational &c) {
    Laurent r = a;
    for (auto &p : r.t) p.second /= c;
    return r;
}

int top_var(const Laurent &a);
Laurent poly_gcd(const Laurent &a, const Laurent &b);

// content of a w.r.t. variable `var`: gcd of the coefficient polynomials
inline Laurent content_in(const Laurent &a, int var) {
    Laurent g;
    for (int k = 0; k <= a.degree_in(var); ++k) {
        Laurent c = a.coeff_of(var, k);
        if (!c.is_zero()) g = poly_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

// exact division a / b, asserts divisibility (used with gcd results)
inline Laurent div_exact(const Laurent &a, const Laurent &b) {
    if (a.is_zero()) return {};
    if (b.is_monomial()) return Laurent::mono_mul(a, Mono::unit() / b.t[0].first, Rational(1) / b.t[0].second);
    Laurent rem = a, q;
    const auto &lb = b.lead();
    while (!rem.is_zero()) {
        const auto &lr = rem.lead();
        Mono m = lr.first / lb.first;
        for (int i = 0; i < NVARS; ++i)
            if (m.e[i] < 0) throw std::runtime_error("div_exact: not divisible");
        Rational c = lr.second / lb.second;
        Laurent piece = Laurent::term(m, c);
        q += piece;
        rem -= piece * b;
    }
    return q;
}

// pseudo-remainder of a by b in variable var
inline Laurent prem(Laurent a, const Laurent &b, int var) {
    int db = b.degree_in(var);
    Laurent lb = b.coeff_of(var, db);
    while (!a.is_zero()) {
        int da = a.degree_in(var);
        if (da < db) break;
        Laurent la = a.coeff_of(var, da);
        // a <- lb*a - la*var^(da-db)*b
        a = lb * a - Laurent::term(Mono::var(var, da - db), 1) * la * b;
    }
    return a;
}

inline int top_var(const Laurent &a) {
    for (int i = NVARS - 1; i >= 0; --i)
        if (a.depends_on(i)) return i;
    return -1;
}

// gcd of ordinary (non-Laurent) polynomials; result primitive, positive lead
inline Laurent poly_gcd(const Laurent &a, const Laurent &b) {
    if (a.is_zero()) return b.is_zero() ? Laurent() : div_exact_rat(b, rational_content(b));
    if (b.is_zero()) return div_exact_rat(a, rational_content(a));
    int va = top_var(a), vb = top_var(b);
    if (va < 0 || vb < 0) return Laurent(1); // both constants (nonzero)
    int var = std::max(va, vb);
    if (va != vb || !a.depends_on(var) || !b.depends_on(var)) {
        // one of them is free of the main variable: gcd divides its content
        const Laurent &free_one = a.depends_on(var) ? b : a;
        const Laurent &other = a.depends_on(var) ? a : b;
        return poly_gcd(free_one, content_in(other, var));
    }
    Laurent ca = content_in(a, var), cb = content_in(b, var);
    Laurent f = div_exact(a, ca), g = div_exact(b, cb);
    Laurent cg = poly_gcd(ca, cb);
    if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
    while (true) {
        Laurent r = prem(f, g, var);
        if (r.is_zero()) break;
        if (r.degree_in(var) == 0) {
            g = Laurent(1);
            break;
        }
        f = g;
        g = div_exact(r, content_in(r, var));
        Rational rc = rational_content(g);
        g = div_exact_rat(g, rc);
    }
    Laurent res = cg * g;
    return div_exact_rat(res, rational_content(res));
}

} // namespace detail

} // namespace eptl
