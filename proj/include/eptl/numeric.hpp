#pragma once

// Exact coefficient backends: arbitrary-precision rationals, Gaussian
// rationals, and high-precision complex floats for spectral projectors
// whose eigenvalue ring is not rational.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/math/constants/constants.hpp>

#include <cstdint>
#include <string>
#include <sstream>

namespace eptl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using MPFloat = boost::multiprecision::number<
    boost::multiprecision::backends::cpp_bin_float<256, boost::multiprecision::backends::digit_base_2>>;

inline std::string to_string(const Rational &r) { return r.str(); }

// Q(i). Only ever used as an evaluation field, never inside symbolic Scalars.
struct GaussRational {
    Rational re, im;

    GaussRational() = default;
    GaussRational(Rational r) : re(std::move(r)) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussRational(int n) : re(n) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussRational operator+(const GaussRational &a, const GaussRational &b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRational operator-(const GaussRational &a, const GaussRational &b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRational operator-(const GaussRational &a) { return {-a.re, -a.im}; }
    friend GaussRational operator*(const GaussRational &a, const GaussRational &b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRational operator/(const GaussRational &a, const GaussRational &b) {
        Rational n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussRational &operator+=(const GaussRational &b) { return *this = *this + b; }
    GaussRational &operator-=(const GaussRational &b) { return *this = *this - b; }
    GaussRational &operator*=(const GaussRational &b) { return *this = *this * b; }
    GaussRational &operator/=(const GaussRational &b) { return *this = *this / b; }
    friend bool operator==(const GaussRational &a, const GaussRational &b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational &a, const GaussRational &b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        os << re.str();
        if (im != 0) os << (im > 0 ? "+" : "") << im.str() << "*i";
        return os.str();
    }
};

// Complex numbers over 256-bit binary floats.
struct MPComplex {
    MPFloat re, im;

    MPComplex() = default;
    MPComplex(MPFloat r) : re(std::move(r)) {}
    MPComplex(MPFloat r, MPFloat i) : re(std::move(r)), im(std::move(i)) {}
    MPComplex(int n) : re(n) {}

    friend MPComplex operator+(const MPComplex &a, const MPComplex &b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend MPComplex operator-(const MPComplex &a, const MPComplex &b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend MPComplex operator-(const MPComplex &a) { return {-a.re, -a.im}; }
    friend MPComplex operator*(const MPComplex &a, const MPComplex &b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend MPComplex operator/(const MPComplex &a, const MPComplex &b) {
        MPFloat n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    MPComplex &operator+=(const MPComplex &b) { return *this = *this + b; }
    MPComplex &operator-=(const MPComplex &b) { return *this = *this - b; }
    MPComplex &operator*=(const MPComplex &b) { return *this = *this * b; }
    MPComplex &operator/=(const MPComplex &b) { return *this = *this / b; }
    friend bool operator==(const MPComplex &a, const MPComplex &b) {
        return a.re == b.re && a.im == b.im;
    }

    MPFloat abs2() const { return re * re + im * im; }
    std::string str() const {
        std::ostringstream os;
        os << re << (im >= 0 ? "+" : "") << im << "i";
        return os.str();
    }
};

inline MPComplex mpc_unit_root(long num, long den) {
    // exp(i pi num/den)
    MPFloat pi = boost::math::constants::pi<MPFloat>();
    MPFloat th = pi * num / den;
    return {cos(th), sin(th)};
}

// field_traits: uniform zero test across the backends.
template <class T> inline bool is_zero_value(const T &t) { return t == T(0); }
inline bool is_zero_value(const GaussRational &t) { return t.is_zero(); }
inline bool is_zero_value(const MPComplex &t) { return t.re == 0 && t.im == 0; }

} // namespace eptl
