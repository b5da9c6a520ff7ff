#ifndef SKEWCANON_RATIONAL_HPP
#define SKEWCANON_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "skewcanon/errors.hpp"

namespace skewcanon {

/// Arbitrary-precision rational scalar for exact mode. GMP-backed; always
/// stored in lowest terms with positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses "p", "p/q" or a plain integer string. Throws ValidationError on
/// malformed input or zero denominator.
inline Rational parse_rational(const std::string& s) {
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw ValidationError("malformed rational literal: '" + s + "'");
    }
}

/// Exact square root of a rational if it is a perfect square of a rational,
/// otherwise nullopt. Used to decide whether sqrt(x) stays in the field.
inline std::optional<Rational> exact_sqrt(const Rational& x) {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    if (x < 0) return std::nullopt;
    if (x == 0) return Rational(0);
    Integer num = numerator(x);
    Integer den = denominator(x);
    Integer sn = sqrt(num);
    Integer sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

/// Nearest rational with bounded denominator via continued fractions.
/// Candidate generator for the numeric-then-verify factor search: the caller
/// must confirm exactly (division test) before trusting the result.
inline Rational reconstruct_rational(double x, std::int64_t max_den = 1000000) {
    bool neg = x < 0;
    double v = neg ? -x : x;
    // convergents p/q of the continued fraction of v
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(frac);
        if (fl > 9.0e17) break;
        auto a = static_cast<std::int64_t>(fl);
        std::int64_t p2 = a * p1 + p0;
        std::int64_t q2 = a * q1 + q0;
        if (q2 > max_den || p2 < 0 || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15 * (fl > 1 ? fl : 1.0)) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return Rational(0);
    Rational r(p1, q1);
    return neg ? Rational(-r) : r;
}

} // namespace skewcanon

#endif
