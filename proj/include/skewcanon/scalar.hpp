#ifndef SKEWCANON_SCALAR_HPP
#define SKEWCANON_SCALAR_HPP

#include <cmath>
#include <cstdlib>
#include <string>
#include <type_traits>

#include "skewcanon/rational.hpp"

namespace skewcanon {

/// Traits tying the two supported base fields (exact rationals, binary
/// doubles) to one arithmetic contract. Every templated algorithm in the
/// library is written against this.
template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool is_exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return x == 0; }
    static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
    static double to_double(const Rational& x) { return x.template convert_to<double>(); }
    static Rational from_int(long v) { return Rational(v); }
    static std::string str(const Rational& x) { return x.str(); }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool is_exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static bool is_zero(double x) { return x == 0.0; }
    static double abs(double x) { return std::fabs(x); }
    static double to_double(double x) { return x; }
    static double from_int(long v) { return static_cast<double>(v); }
    static std::string str(double x) { return std::to_string(x); }
};

template <typename S>
concept BaseScalar = std::is_same_v<S, Rational> || std::is_same_v<S, double>;

/// Complexified scalar: a pair of base scalars with componentwise rules
/// (Gaussian rationals over Rational, plain complex over double). Kept as a
/// plain struct so Matrix<Complex<S>> reuses the generic dense kernels.
template <typename S>
struct Complex {
    S re{};
    S im{};

    Complex() : re(ScalarTraits<S>::zero()), im(ScalarTraits<S>::zero()) {}
    Complex(S r) : re(std::move(r)), im(ScalarTraits<S>::zero()) {}
    Complex(S r, S i) : re(std::move(r)), im(std::move(i)) {}

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        S n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Complex& operator+=(const Complex& b) { *this = *this + b; return *this; }
    Complex& operator-=(const Complex& b) { *this = *this - b; return *this; }
    Complex& operator*=(const Complex& b) { *this = *this * b; return *this; }
    Complex& operator/=(const Complex& b) { *this = *this / b; return *this; }
    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

template <typename S>
Complex<S> conj(const Complex<S>& z) {
    return {z.re, -z.im};
}

template <typename S>
struct ScalarTraits<Complex<S>> {
    static constexpr bool is_exact = ScalarTraits<S>::is_exact;
    static Complex<S> zero() { return Complex<S>(); }
    static Complex<S> one() { return Complex<S>(ScalarTraits<S>::one()); }
    static bool is_zero(const Complex<S>& x) {
        return ScalarTraits<S>::is_zero(x.re) && ScalarTraits<S>::is_zero(x.im);
    }
    // magnitude surrogate; only used for pivot size comparisons
    static S abs(const Complex<S>& x) {
        return ScalarTraits<S>::abs(x.re) + ScalarTraits<S>::abs(x.im);
    }
    static double to_double(const Complex<S>& x) {
        return ScalarTraits<S>::to_double(ScalarTraits<S>::abs(x.re)) +
               ScalarTraits<S>::to_double(ScalarTraits<S>::abs(x.im));
    }
    static Complex<S> from_int(long v) { return Complex<S>(ScalarTraits<S>::from_int(v)); }
    static std::string str(const Complex<S>& x) {
        return "(" + ScalarTraits<S>::str(x.re) + ", " + ScalarTraits<S>::str(x.im) + ")";
    }
};

template <typename S>
struct base_scalar {
    using type = S;
};
template <typename S>
struct base_scalar<Complex<S>> {
    using type = S;
};
template <typename S>
using base_scalar_t = typename base_scalar<S>::type;

} // namespace skewcanon

#endif
