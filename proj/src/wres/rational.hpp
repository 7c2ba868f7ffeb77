// Exact coefficient arithmetic: arbitrary-precision rationals and the
// Gaussian rationals Q(i) used throughout the symbol calculus.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <string>

namespace wres {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r);
}

// a + b*i with exact rational a, b
struct GRat {
    Rational re{0};
    Rational im{0};

    GRat() = default;
    GRat(Rational r) : re(std::move(r)) {}
    GRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GRat(long long n) : re(n) {}

    static GRat i() { return GRat(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GRat operator-() const { return GRat(-re, -im); }
    GRat conj() const { return GRat(re, -im); }

    friend GRat operator+(const GRat& a, const GRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend GRat operator-(const GRat& a, const GRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend GRat operator*(const GRat& a, const GRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GRat operator/(const GRat& a, const GRat& b) {
        Rational n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GRat& operator+=(const GRat& o) { re += o.re; im += o.im; return *this; }
    GRat& operator-=(const GRat& o) { re -= o.re; im -= o.im; return *this; }
    GRat& operator*=(const GRat& o) { *this = *this * o; return *this; }

    friend bool operator==(const GRat& a, const GRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

std::string to_string(const Rational& r);
std::string to_string(const GRat& g);

inline std::string to_string(const Rational& r) {
    std::string s = r.str();
    return s;
}

inline std::string to_string(const GRat& g) {
    if (g.im == 0) return to_string(g.re);
    if (g.re == 0) {
        if (g.im == 1) return "i";
        if (g.im == -1) return "-i";
        return to_string(g.im) + "*i";
    }
    std::string s = to_string(g.re);
    if (g.im > 0) s += "+";
    if (g.im == 1) s += "i";
    else if (g.im == -1) s += "-i";
    else s += to_string(g.im) + "*i";
    return "(" + s + ")";
}

}  // namespace wres
