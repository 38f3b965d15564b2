#pragma once

// Exponential polynomials  sum_j c_j n^{k_j} b_j^n  with rational c_j,
// rational k_j and algebraic bases b_j = r_j^{1/e_j}, together with an exact
// eventual-positivity test.
//
// eventually_positive(P) returns an N such that P(n) > 0 for every n >= N. It
// divides every negative term by the leading term, proves each ratio
// C n^delta beta^n is nonincreasing from some point on, and then finds the
// first N at which an upper bound of the summed ratios drops below 1.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperab/exact.hpp"

namespace hyperab {

// r^{1/e} with r > 0.
struct Base {
    ExactRational r = 1;
    unsigned e = 1;
};

inline Base simplify(Base b) {
    if (b.r <= 0) throw std::domain_error("exponential base must be positive");
    ExactRational root;
    while (b.e % 2 == 0 && exact_root(b.r, 2, &root)) {
        b.r = root;
        b.e /= 2;
    }
    return b;
}

inline int compare(const Base& a, const Base& b) {
    const ExactRational lhs = rpow(a.r, b.e);
    const ExactRational rhs = rpow(b.r, a.e);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

inline Base operator*(const Base& a, const Base& b) { return simplify({rpow(a.r, b.e) * rpow(b.r, a.e), a.e * b.e}); }

inline Base operator/(const Base& a, const Base& b) { return simplify({rpow(a.r, b.e) / rpow(b.r, a.e), a.e * b.e}); }

inline Base sqrt(const Base& a) { return simplify({a.r, 2 * a.e}); }

inline std::string to_string(const Base& b) {
    if (b.e == 1) return to_string(b.r);
    return to_string(b.r) + "^(1/" + std::to_string(b.e) + ")";
}

struct Term {
    ExactRational coef = 0;
    ExactRational k = 0;  // power of n
    Base base;
};

using ExpPoly = std::vector<Term>;

// Growth order: base first, then the power of n.
inline int compare_growth(const Term& a, const Term& b) {
    const int c = compare(a.base, b.base);
    if (c != 0) return c;
    return a.k < b.k ? -1 : (a.k > b.k ? 1 : 0);
}

inline ExpPoly canonical(ExpPoly p) {
    std::stable_sort(p.begin(), p.end(), [](const Term& a, const Term& b) { return compare_growth(a, b) > 0; });
    ExpPoly out;
    for (auto& t : p) {
        if (!out.empty() && compare_growth(out.back(), t) == 0) {
            out.back().coef += t.coef;
        } else {
            out.push_back(t);
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.coef == 0; }), out.end());
    return out;
}

inline ExpPoly poly_constant(const ExactRational& c) { return canonical({Term{c, 0, {}}}); }

inline ExpPoly poly_n() { return {Term{1, 1, {}}}; }

inline ExpPoly poly_exp(const ExactRational& c, const ExactRational& base) { return canonical({Term{c, 0, {base, 1}}}); }

inline ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
    ExpPoly out = a;
    out.insert(out.end(), b.begin(), b.end());
    return canonical(out);
}

inline ExpPoly operator-(const ExpPoly& a) {
    ExpPoly out = a;
    for (auto& t : out) t.coef = -t.coef;
    return out;
}

inline ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }

inline Term operator*(const Term& a, const Term& b) { return {a.coef * b.coef, a.k + b.k, a.base * b.base}; }

inline ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
    ExpPoly out;
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
    return canonical(out);
}

inline ExpPoly operator*(const ExactRational& c, const ExpPoly& a) {
    ExpPoly out = a;
    for (auto& t : out) t.coef *= c;
    return canonical(out);
}

inline ExpPoly divide(const ExpPoly& a, const Term& m) {
    if (m.coef == 0) throw std::domain_error("division by a zero monomial");
    ExpPoly out;
    for (const auto& t : a) out.push_back({t.coef / m.coef, t.k - m.k, t.base / m.base});
    return canonical(out);
}

enum class Rounding { Down, Up };

// sqrt(c n^k b^n) with the coefficient rounded in the requested direction.
inline Term sqrt_term(const Term& t, Rounding dir, unsigned bits = 64) {
    if (t.coef < 0) throw std::domain_error("square root of a negative term");
    const Interval c = root_bracket(t.coef, 2, bits);
    return {dir == Rounding::Up ? c.hi : c.lo, t.k / 2, sqrt(t.base)};
}

inline std::string to_string(const Term& t) {
    std::string s = to_string(t.coef);
    if (t.k != 0) s += "*n^" + (denominator_of(t.k) == 1 ? to_string(t.k) : "(" + to_string(t.k) + ")");
    if (compare(t.base, Base{}) != 0) s += "*(" + to_string(t.base) + ")^n";
    return s;
}

inline std::string to_string(const ExpPoly& p) {
    if (p.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) s += " + ";
        s += to_string(p[i]);
    }
    return s;
}

namespace detail {

// Upper (or lower) bound of N^k for rational k.
inline ExactRational power_bound(long N, const ExactRational& k, Rounding dir, unsigned bits) {
    const ExactInt p = numerator_of(k);
    const unsigned q = static_cast<unsigned>(denominator_of(k));
    const bool negative = p < 0;
    const unsigned long ap = static_cast<unsigned long>(negative ? ExactInt(-p) : p);
    const Interval root = root_bracket(ExactRational(ipow(ExactInt(N), ap)), q, bits);
    if (!negative) return dir == Rounding::Up ? root.hi : root.lo;
    if (root.lo <= 0) throw std::domain_error("power bound underflow");
    return dir == Rounding::Up ? ExactRational(1 / root.lo) : ExactRational(1 / root.hi);
}

// Upper (or lower) bound of b^N.
inline ExactRational base_power_bound(const Base& b, long N, Rounding dir, unsigned bits) {
    const ExactRational v = rpow(b.r, N);
    const Interval root = root_bracket(v, b.e, bits);
    return dir == Rounding::Up ? root.hi : root.lo;
}

// Bits for brackets of b^N: enough to resolve quantities near b^N itself.
inline unsigned bracket_bits(const Base& b, long N) {
    const ExactRational v = rpow(b.r, N);
    const long den_bits = static_cast<long>(boost::multiprecision::msb(denominator_of(v))) + 1;
    const long num_bits = static_cast<long>(boost::multiprecision::msb(numerator_of(v))) + 1;
    const long spread = std::max<long>(0, den_bits - num_bits) / static_cast<long>(b.e);
    return static_cast<unsigned>(64 + spread);
}

}  // namespace detail

// Upper bound of |t(N)|.
inline ExactRational term_magnitude_upper(const Term& t, long N) {
    const unsigned bits = detail::bracket_bits(t.base, N);
    return abs(t.coef) * detail::power_bound(N, t.k, Rounding::Up, bits) *
           detail::base_power_bound(t.base, N, Rounding::Up, bits);
}

struct PositivityTrace {
    std::vector<std::string> lines;
    void add(std::string s) { lines.push_back(std::move(s)); }
};

// Smallest M >= 1 with ((M+1)/M)^delta * beta <= 1; the left side decreases
// in M, so the ratio C n^delta beta^n is nonincreasing from M on.
inline std::optional<long> monotone_threshold(const ExactRational& delta, const Base& beta, long cap) {
    const int beta_cmp = compare(beta, Base{});
    if (beta_cmp > 0) return std::nullopt;
    if (delta <= 0) return 1;
    if (beta_cmp == 0) return std::nullopt;
    const ExactInt p = numerator_of(delta);
    const unsigned long q = static_cast<unsigned long>(denominator_of(delta));
    const long pe = static_cast<long>(p) * static_cast<long>(beta.e);
    auto ok = [&](long M) {
        return rpow(make_rational(M + 1, M), pe) * rpow(beta.r, static_cast<long>(q)) <= 1;
    };
    long hi = 1;
    while (!ok(hi)) {
        if (hi > cap) return std::nullopt;
        hi *= 2;
    }
    long lo = hi / 2;  // ok(lo) is false unless lo == 0
    while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        if (ok(mid)) hi = mid; else lo = mid;
    }
    return hi;
}

// N with P(n) > 0 for all n >= N, searched in [start, cap].
inline std::optional<long> eventually_positive(const ExpPoly& raw, long start, long cap = 10000,
                                               PositivityTrace* trace = nullptr) {
    const ExpPoly p = canonical(raw);
    if (p.empty() || p.front().coef <= 0) {
        if (trace) trace->add("leading coefficient not positive in " + to_string(p));
        return std::nullopt;
    }
    const Term& lead = p.front();
    struct Ratio {
        ExactRational c;
        ExactRational delta;
        Base beta;
    };
    std::vector<Ratio> ratios;
    long from = std::max<long>(start, 1);
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (p[i].coef > 0) continue;
        Ratio r{abs(p[i].coef / lead.coef), p[i].k - lead.k, p[i].base / lead.base};
        const auto m = monotone_threshold(r.delta, r.beta, cap);
        if (!m) {
            if (trace) trace->add("no monotone decay for term " + to_string(p[i]));
            return std::nullopt;
        }
        from = std::max(from, *m);
        ratios.push_back(r);
    }
    if (ratios.empty()) {
        if (trace) trace->add("all terms positive from n = " + std::to_string(from));
        return from;
    }
    auto below_one = [&](long N) {
        ExactRational s = 0;
        for (const auto& r : ratios) s += term_magnitude_upper(Term{r.c, r.delta, r.beta}, N);
        return s < 1;
    };
    long found = -1;
    const long linear_end = std::min(cap, from + 512);
    for (long N = from; N <= linear_end; ++N) {
        if (below_one(N)) {
            found = N;
            break;
        }
    }
    if (found < 0 && linear_end < cap) {
        long lo = linear_end;
        long hi = linear_end;
        while (hi < cap && !below_one(hi)) {
            lo = hi;
            hi = std::min(cap, hi * 2);
        }
        if (below_one(hi)) {
            while (hi - lo > 1) {
                const long mid = lo + (hi - lo) / 2;
                if (below_one(mid)) hi = mid; else lo = mid;
            }
            found = hi;
        }
    }
    if (found < 0) {
        if (trace) trace->add("ratio sum not below 1 up to n = " + std::to_string(cap));
        return std::nullopt;
    }
    if (trace) {
        trace->add("lead " + to_string(lead) + "; " + std::to_string(ratios.size()) +
                   " negative ratio(s) nonincreasing from n = " + std::to_string(from) +
                   ", summed ratio < 1 at n = " + std::to_string(found));
    }
    return found;
}

}  // namespace hyperab
