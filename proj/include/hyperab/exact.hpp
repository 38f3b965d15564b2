#pragma once

// Exact integer and rational arithmetic shared by every hyperab module.
//
// ExactInt and ExactRational are Boost.Multiprecision types; rationals are
// always kept in lowest terms with a positive denominator. Irrational
// quantities (square roots, logarithms, e) only ever appear as rational
// brackets [lo, hi], so every verdict in the library is decided without
// floating point.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

namespace hyperab {

using ExactInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using ExactRational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>, boost::multiprecision::et_off>;

inline ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return ExactRational(num, den);
}

inline ExactInt numerator_of(const ExactRational& r) { return boost::multiprecision::numerator(r); }
inline ExactInt denominator_of(const ExactRational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const ExactInt& x) { return x.str(); }

inline std::string to_string(const ExactRational& r) {
    if (denominator_of(r) == 1) return numerator_of(r).str();
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline ExactInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of a negative integer");
    ExactInt f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline ExactInt ipow(const ExactInt& base, unsigned long e) {
    ExactInt result = 1;
    ExactInt b = base;
    while (e > 0) {
        if (e & 1u) result *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return result;
}

// Integer powers of a rational; negative exponents invert.
inline ExactRational rpow(const ExactRational& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("zero raised to a negative power");
        return rpow(1 / base, -e);
    }
    const auto ue = static_cast<unsigned long>(e);
    return make_rational(ipow(numerator_of(base), ue), ipow(denominator_of(base), ue));
}

inline int sign(const ExactRational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

inline ExactRational abs(const ExactRational& r) { return r < 0 ? ExactRational(-r) : r; }

// floor(x^(1/k)) for x >= 0.
inline ExactInt iroot(const ExactInt& x, unsigned k) {
    if (x < 0) throw std::domain_error("iroot of a negative integer");
    if (k == 0) throw std::domain_error("zeroth root");
    if (x < 2 || k == 1) return x;
    if (k == 2) return boost::multiprecision::sqrt(x);
    const auto bits = boost::multiprecision::msb(x) / k + 1;
    ExactInt lo = 0;
    ExactInt hi = ExactInt(1) << (bits + 1);
    while (hi - lo > 1) {
        ExactInt mid = (lo + hi) >> 1;
        if (ipow(mid, k) <= x) lo = mid; else hi = mid;
    }
    return lo;
}

inline bool is_perfect_power(const ExactInt& x, unsigned k, ExactInt* root = nullptr) {
    if (x < 0) return false;
    ExactInt r = iroot(x, k);
    if (ipow(r, k) != x) return false;
    if (root) *root = r;
    return true;
}

// Exact k-th root of a rational when one exists.
inline bool exact_root(const ExactRational& x, unsigned k, ExactRational* root) {
    if (x < 0) return false;
    ExactInt rn, rd;
    if (!is_perfect_power(numerator_of(x), k, &rn)) return false;
    if (!is_perfect_power(denominator_of(x), k, &rd)) return false;
    *root = make_rational(rn, rd);
    return true;
}

// Closed rational interval.
struct Interval {
    ExactRational lo;
    ExactRational hi;

    static Interval point(const ExactRational& v) { return {v, v}; }
    bool is_point() const { return lo == hi; }
    bool contains(const ExactRational& v) const { return lo <= v && v <= hi; }
};

inline Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
inline Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator*(const Interval& a, const Interval& b) {
    ExactRational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

inline Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains(0)) throw std::domain_error("interval division by an interval containing zero");
    return a * Interval{1 / b.hi, 1 / b.lo};
}

// Rounds r outward to a multiple of 2^-bits.
inline ExactRational round_down(const ExactRational& r, unsigned bits) {
    ExactInt scaled = numerator_of(r) << bits;
    ExactInt q = scaled / denominator_of(r);
    if (q * denominator_of(r) > scaled) --q;  // truncation toward zero on negatives
    return make_rational(q, ExactInt(1) << bits);
}

inline ExactRational round_up(const ExactRational& r, unsigned bits) { return -round_down(-r, bits); }

// Bracket of x^(1/k) for rational x >= 0 with absolute width 2^-bits.
// Exact roots come back as point intervals.
inline Interval root_bracket(const ExactRational& x, unsigned k, unsigned bits) {
    if (x < 0) throw std::domain_error("root of a negative rational");
    ExactRational exact;
    if (exact_root(x, k, &exact)) return Interval::point(exact);
    // x^(1/k) = (num * den^(k-1))^(1/k) / den; scale by 2^bits before the integer root.
    const ExactInt den = denominator_of(x);
    const ExactInt radicand = (numerator_of(x) * ipow(den, k - 1)) << (bits * k);
    const ExactInt r = iroot(radicand, k);
    const ExactInt scale = den << bits;
    return {make_rational(r, scale), make_rational(r + 1, scale)};
}

// sqrt(e) <= f decided by squaring: for e >= 0 this holds iff f >= 0 and e <= f^2.
inline bool sqrt_le(const ExactRational& e, const ExactRational& f) {
    if (e < 0) throw std::domain_error("square root of a negative quantity");
    return f >= 0 && e <= f * f;
}

inline bool sqrt_lt(const ExactRational& e, const ExactRational& f) {
    if (e < 0) throw std::domain_error("square root of a negative quantity");
    return f >= 0 && e < f * f;
}

// f < sqrt(e)
inline bool lt_sqrt(const ExactRational& f, const ExactRational& e) { return !sqrt_le(e, f); }

// f <= sqrt(e)
inline bool le_sqrt(const ExactRational& f, const ExactRational& e) { return !sqrt_lt(e, f); }

namespace detail {

// 2*atanh(z) = ln((1+z)/(1-z)) for 0 <= z <= 1/3, bracketed by truncating the
// odd power series after `terms` terms.
inline Interval two_atanh(const ExactRational& z, unsigned terms, unsigned bits) {
    ExactRational sum = 0;
    ExactRational power = z;
    const ExactRational z2 = z * z;
    for (unsigned j = 0; j < terms; ++j) {
        sum += power / (2 * j + 1);
        power *= z2;
        power = round_up(power, bits + 8);
    }
    const ExactRational tail = power / ((2 * terms + 1) * (1 - z2));
    return {round_down(2 * sum, bits) - ExactRational(make_rational(1, ExactInt(1) << bits)),
            round_up(2 * (sum + tail), bits) + ExactRational(make_rational(1, ExactInt(1) << bits))};
}

}  // namespace detail

// Bracket of e from the factorial series; the tail after K terms is below 2/(K+1)!.
inline const Interval& e_bracket() {
    static const Interval value = [] {
        ExactRational sum = 0;
        ExactInt fact = 1;
        constexpr unsigned K = 60;
        for (unsigned k = 0; k <= K; ++k) {
            if (k > 0) fact *= k;
            sum += make_rational(1, fact);
        }
        return Interval{sum, sum + make_rational(2, fact * (K + 1))};
    }();
    return value;
}

// Bracket of 1 - 1/e.
inline const Interval& one_minus_inv_e() {
    static const Interval value = [] {
        const Interval& e = e_bracket();
        return Interval{round_down(1 - 1 / e.lo, 200), round_up(1 - 1 / e.hi, 200)};
    }();
    return value;
}

inline const Interval& ln2_bracket() {
    static const Interval value = detail::two_atanh(make_rational(1, 3), 90, 240);
    return value;
}

// Bracket of ln(x) for an integer x >= 1: x = 2^k * y with 1 <= y < 2, and
// ln(y) = 2 atanh((y-1)/(y+1)) with (y-1)/(y+1) < 1/3.
inline Interval ln_bracket(const ExactInt& x) {
    if (x < 1) throw std::domain_error("ln of a non-positive integer");
    if (x == 1) return Interval::point(0);
    const unsigned k = static_cast<unsigned>(boost::multiprecision::msb(x));
    const ExactRational y = make_rational(x, ExactInt(1) << k);
    const Interval tail = detail::two_atanh((y - 1) / (y + 1), 80, 200);
    const Interval& ln2 = ln2_bracket();
    return {ln2.lo * k + tail.lo, ln2.hi * k + tail.hi};
}

}  // namespace hyperab
