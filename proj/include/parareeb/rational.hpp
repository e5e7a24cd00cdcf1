#pragma once

// Exact scalar base: arbitrary-precision rationals plus the handful of
// integer/rational utilities the kernel leans on (canonical strings,
// perfect-square detection, rational sqrt enclosures).

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace parareeb {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational(long n, long d = 1) { return Rational(n, d); }

inline int sign(const Rational& r) { return r.sign(); }

inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Canonical string form: "n" for integers, "p/q" otherwise (q > 0, reduced).
inline std::string rat_to_string(const Rational& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) {
        s += "/";
        s += rat_den(r).str();
    }
    return s;
}

inline Rational rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("rational denominator must be positive: " + s);
    return Rational(num, den);
}

inline double rat_to_double(const Rational& r) { return r.convert_to<double>(); }

inline Integer int_floor(const Rational& r) {
    Integer q = rat_num(r) / rat_den(r);
    if (r < 0 && q * rat_den(r) != rat_num(r)) --q;
    return q;
}

/// Exact square root when the rational is a perfect square.
inline std::optional<Rational> rat_exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Integer n = rat_num(r), d = rat_den(r);
    Integer sn = boost::multiprecision::sqrt(n);
    Integer sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

/// Rational enclosure [lo, hi] of sqrt(x) with hi - lo <= 2^-bits, x >= 0.
inline std::pair<Rational, Rational> rat_sqrt_interval(const Rational& x, unsigned bits) {
    if (x < 0) throw std::domain_error("sqrt of negative rational");
    if (x == 0) return {Rational(0), Rational(0)};
    Integer scale = Integer(1) << (2 * bits);
    Integer m = int_floor(Rational(x * scale));
    Integer s = boost::multiprecision::sqrt(m);
    Rational lo(s, Integer(1) << bits);
    if (lo * lo > x) lo = Rational(s - 1, Integer(1) << bits);
    Rational hi(s + 1, Integer(1) << bits);
    while (hi * hi < x) hi += Rational(1, Integer(1) << bits);
    return {lo, hi};
}

/// Simplest rational (smallest denominator, then numerator) in [lo, hi].
/// Stern-Brocot descent; used to snap tiny isolating intervals onto the
/// rational they likely pin down.
inline Rational simplest_in_interval(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("empty interval");
    if (lo == hi) return lo;
    if (lo <= 0 && hi >= 0) return Rational(0);
    if (hi < 0) return -simplest_in_interval(-hi, -lo);
    // 0 < lo < hi: walk the continued fraction of the interval.
    Integer fl = int_floor(lo);
    Rational fl_r(fl);
    if (lo == fl_r) return lo;
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    Rational sub = simplest_in_interval(Rational(1) / (hi - fl_r), Rational(1) / (lo - fl_r));
    return fl_r + Rational(1) / sub;
}

}  // namespace parareeb
