#pragma once

// The exact coefficient field: normalized ratios of multivariate Laurent
// polynomials in v (v^2 = q), x, y, z, w. Unique normal form: numerator and
// denominator coprime, denominator an ordinary polynomial free of monomial
// factors, content 1, positive leading coefficient. The numerator carries the
// monomial (Laurent) part.

#include "eptl/laurent.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace eptl {

struct Scalar {
    Laurent num, den;

    Scalar() : den(1) {}
    Scalar(int c) : num(c), den(1) {}
    Scalar(Rational c) : num(std::move(c)), den(1) {}
    Scalar(Laurent n, Laurent d) : num(std::move(n)), den(std::move(d)) { normalize(); }
    explicit Scalar(Laurent n) : num(std::move(n)), den(1) { normalize(); }

    static Scalar var(int i, int32_t p = 1) {
        Scalar s;
        s.num = Laurent::var(i, p);
        return s;
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_one() const { return num == den; }

    void normalize() {
        if (den.is_zero()) throw std::runtime_error("Scalar: zero denominator");
        if (num.is_zero()) {
            den = Laurent(1);
            return;
        }
        // split off monomial parts: push den's monomial into num
        Mono mn = num.min_exps(), md = den.min_exps();
        num = Laurent::mono_mul(num, Mono::unit() / mn, 1);
        den = Laurent::mono_mul(den, Mono::unit() / md, 1);
        Mono shift = mn / md;
        Laurent g = detail::poly_gcd(num, den);
        if (!(g.is_constant())) {
            num = detail::div_exact(num, g);
            den = detail::div_exact(den, g);
        }
        Rational cd = detail::rational_content(den);
        den = detail::div_exact_rat(den, cd);
        num = detail::div_exact_rat(num, cd);
        num = Laurent::mono_mul(num, shift, 1);
    }

    friend Scalar operator+(const Scalar &a, const Scalar &b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den == b.den) return Scalar(a.num + b.num, a.den);
        return Scalar(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Scalar operator-(const Scalar &a) {
        Scalar r = a;
        r.num = -r.num;
        return r;
    }
    friend Scalar operator-(const Scalar &a, const Scalar &b) { return a + (-b); }
    friend Scalar operator*(const Scalar &a, const Scalar &b) {
        if (a.is_zero() || b.is_zero()) return Scalar();
        return Scalar(a.num * b.num, a.den * b.den);
    }
    friend Scalar operator/(const Scalar &a, const Scalar &b) {
        if (b.is_zero()) throw std::runtime_error("Scalar: division by zero");
        if (a.is_zero()) return Scalar();
        return Scalar(a.num * b.den, a.den * b.num);
    }
    Scalar &operator+=(const Scalar &b) { return *this = *this + b; }
    Scalar &operator-=(const Scalar &b) { return *this = *this - b; }
    Scalar &operator*=(const Scalar &b) { return *this = *this * b; }
    Scalar &operator/=(const Scalar &b) { return *this = *this / b; }
    friend bool operator==(const Scalar &a, const Scalar &b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }
    friend bool operator<(const Scalar &a, const Scalar &b) {
        if (a.num != b.num) return a.num < b.num;
        return a.den < b.den;
    }

    Scalar inv() const {
        if (is_zero()) throw std::runtime_error("Scalar: inverse of zero");
        return Scalar(den, num);
    }
    Scalar pow(long e) const {
        if (e == 0) return Scalar(1);
        Scalar base = e > 0 ? *this : inv();
        long n = e > 0 ? e : -e;
        Scalar r(1);
        while (n) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    std::string str() const {
        auto poly_str = [](const Laurent &l) {
            if (l.is_zero()) return std::string("0");
            std::string s;
            for (size_t i = l.t.size(); i-- > 0;) {
                const auto &[m, c] = l.t[i];
                std::string term;
                if (m.is_unit()) {
                    term = c.str();
                } else {
                    if (c == -1)
                        term = "-";
                    else if (c != 1)
                        term = c.str() + "*";
                    bool first = true;
                    for (int v = 0; v < NVARS; ++v)
                        if (m.e[v]) {
                            if (!first) term += "*";
                            term += var_name(v);
                            if (m.e[v] != 1) term += "^" + std::to_string(m.e[v]);
                            first = false;
                        }
                }
                if (!s.empty() && term[0] != '-') s += "+";
                s += term;
            }
            return s;
        };
        if (den == Laurent(1)) return poly_str(num);
        return "(" + poly_str(num) + ")/(" + poly_str(den) + ")";
    }
};

// quantum integer [n] = (q^n - q^-n)/(q - q^-1), as even powers of v
inline Scalar qint(long n) {
    if (n < 0) throw std::invalid_argument("qint: n must be >= 0");
    Laurent s;
    // [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}
    for (long j = n - 1; j >= 1 - n; j -= 2) s += Laurent::var(VV, 2 * j);
    return Scalar(s);
}

// {m} = q^m + q^-m
inline Scalar curly(long m) {
    if (m < 0) throw std::invalid_argument("curly: m must be >= 0");
    if (m == 0) return Scalar(2);
    return Scalar(Laurent::var(VV, 2 * m) + Laurent::var(VV, -2 * m));
}

inline Scalar beta_scalar() { return Scalar(-(Laurent::var(VV, 2) + Laurent::var(VV, -2))); }
inline Scalar q_scalar(long p = 1) { return Scalar::var(VV, 2 * p); }
inline Scalar v_scalar(long p = 1) { return Scalar::var(VV, p); }
inline Scalar loop_weight(int var) { return Scalar(Laurent::var(var, 1) + Laurent::var(var, -1)); }

// ---- parameter specialization ----

struct UnassignedVariable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DenominatorVanishes : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Assignment of exact or floating values to the variables. q can be given
// directly (used for even v-powers); odd v-powers require v itself.
template <class T> struct ParamSpec {
    std::optional<T> q; // value of q = v^2
    std::optional<T> vals[NVARS];

    void set(int var, T v) { vals[var] = std::move(v); }
    void set_q(T v) { q = std::move(v); }

    T eval_mono(const Mono &m) const {
        T r(1);
        for (int i = 0; i < NVARS; ++i) {
            int32_t e = m.e[i];
            if (!e) continue;
            T base;
            if (i == VV) {
                if (e % 2 == 0 && q) {
                    base = *q;
                    e /= 2;
                } else if (vals[VV]) {
                    base = *vals[VV];
                } else if (q) {
                    throw UnassignedVariable("odd power of v but only q assigned");
                } else {
                    throw UnassignedVariable("v unassigned");
                }
            } else {
                if (!vals[i]) throw UnassignedVariable(std::string("variable ") + var_name(i) + " unassigned");
                base = *vals[i];
            }
            bool neg = e < 0;
            long n = neg ? -(long)e : e;
            T p(1);
            T b = base;
            while (n) {
                if (n & 1) p = p * b;
                b = b * b;
                n >>= 1;
            }
            if (neg) p = T(1) / p;
            r = r * p;
        }
        return r;
    }
    T eval_poly(const Laurent &l) const {
        T r(0);
        for (auto &[m, c] : l.t) r = r + eval_mono(m) * rat_to<T>(c);
        return r;
    }
    T operator()(const Scalar &s) const {
        T d = eval_poly(s.den);
        if (is_zero_value(d)) throw DenominatorVanishes("denominator vanishes under specialization");
        return eval_poly(s.num) / d;
    }

    template <class U> static U rat_to(const Rational &c) { return U(c); }
};

template <> template <> inline GaussRational ParamSpec<GaussRational>::rat_to<GaussRational>(const Rational &c) {
    return GaussRational(c);
}
template <> template <> inline MPComplex ParamSpec<MPComplex>::rat_to<MPComplex>(const Rational &c) {
    return MPComplex(MPFloat(boost::multiprecision::numerator(c)) / MPFloat(boost::multiprecision::denominator(c)));
}

} // namespace eptl
