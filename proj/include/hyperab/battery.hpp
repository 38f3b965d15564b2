#pragma once

// Named Eulerian-number inequalities with certificates: an exhaustive exact
// check over a finite range plus, for ranges unbounded above, an asymptotic
// proof built from
//   (q+1)^n - (n+1) q^n <= A(n, q) <= (q+1)^n          (all n >= 1)
//   (1 - 1/e)(q+1)^n <= A(n, q)   once (q+1)(ln(n+1) + 1) < n.

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hyperab/eulerian.hpp"
#include "hyperab/exact.hpp"
#include "hyperab/exppoly.hpp"
#include "hyperab/expr.hpp"

namespace hyperab {

struct ClaimedRange {
    long lo = 1;
    std::optional<long> hi;  // empty means unbounded above

    bool bounded() const { return hi.has_value(); }
    bool contains(long n) const { return n >= lo && (!hi || n <= *hi); }

    std::string str() const {
        if (!hi) return "n >= " + std::to_string(lo);
        if (*hi == lo) return "n = " + std::to_string(lo);
        return std::to_string(lo) + " <= n <= " + std::to_string(*hi);
    }
};

struct InequalitySpec {
    std::string name;
    ExprPtr lhs;
    Relation rel = Relation::LT;
    ExprPtr rhs;
    ClaimedRange claimed;

    std::string statement() const { return to_string(lhs) + " " + to_string(rel) + " " + to_string(rhs); }
};

enum class CertStatus { VERIFIED, FINITE_ONLY, FAILED };

inline std::string to_string(CertStatus s) {
    switch (s) {
        case CertStatus::VERIFIED: return "VERIFIED";
        case CertStatus::FINITE_ONLY: return "FINITE_ONLY";
        case CertStatus::FAILED: return "FAILED";
    }
    return "?";
}

struct Certificate {
    std::string name;
    std::string statement;
    ClaimedRange claimed;
    std::optional<std::pair<long, long>> finite_checked;
    std::optional<long> asymptotic_threshold;  // first n covered by the asymptotic argument
    CertStatus status = CertStatus::FINITE_ONLY;
    std::optional<long> counterexample;
    std::optional<long> counterexample_r;
    std::vector<std::string> trace;
};

// finite_checked together with [N0, infinity) must contain the claimed range.
inline bool covers_claim(const Certificate& c) {
    const long lo = c.claimed.lo;
    auto finite_covers = [&](long a, long b) {
        return c.finite_checked && c.finite_checked->first <= a && c.finite_checked->second >= b;
    };
    if (c.claimed.bounded()) {
        const long hi = *c.claimed.hi;
        if (c.asymptotic_threshold && *c.asymptotic_threshold <= lo) return true;
        const long finite_end = c.asymptotic_threshold ? std::min(hi, *c.asymptotic_threshold - 1) : hi;
        return finite_covers(lo, finite_end);
    }
    if (!c.asymptotic_threshold) return false;
    if (*c.asymptotic_threshold <= lo) return true;
    return finite_covers(lo, *c.asymptotic_threshold - 1);
}

struct FiniteResult {
    bool passed = true;
    long lo = 0;
    long hi = 0;
    std::optional<long> counterexample;
};

inline FiniteResult check_finite(const InequalitySpec& spec, long n_lo, long n_hi) {
    if (n_lo > n_hi) throw std::invalid_argument("empty finite range");
    if (!spec.lhs || !spec.rhs) throw std::invalid_argument("malformed inequality '" + spec.name + "'");
    FiniteResult r{true, n_lo, n_hi, std::nullopt};
    for (long n = n_lo; n <= n_hi; ++n) {
        if (!compare_at(spec.lhs, spec.rel, spec.rhs, n)) {
            r.passed = false;
            r.counterexample = n;
            return r;
        }
    }
    return r;
}

// Lower bound for 1 - 1/e used in the sandwich coefficients.
inline const ExactRational& patching_constant() {
    static const ExactRational value = round_down(one_minus_inv_e().lo, 64);
    return value;
}

// Smallest n >= 2 with (q+1)(ln(n+1) + 1) < n, using an upper bracket of the
// logarithm; n / (ln(n+1) + 1) increases with n, so the bound holds from here on.
inline long patching_threshold(long q) {
    for (long n = 2;; ++n) {
        if ((q + 1) * (ln_bracket(ExactInt(n + 1)).hi + 1) < n) return n;
    }
}

// Pointwise bounds lo(n) <= e(n) for n >= lo_from and e(n) <= hi(n) for n >= hi_from.
struct AsymptoticBound {
    std::optional<ExpPoly> lo;
    std::optional<ExpPoly> hi;
    long lo_from = 1;
    long hi_from = 1;
};

namespace detail {

struct SignInfo {
    int sign = 0;  // +1 eventually positive, -1 eventually negative, 0 unknown
    long from = 1;
};

inline SignInfo eventual_sign(const AsymptoticBound& b, long cap) {
    if (b.lo) {
        if (b.lo->empty()) return {1, b.lo_from};  // lower bound 0: nonnegative
        if (auto n = eventually_positive(*b.lo, b.lo_from, cap)) return {1, *n};
    }
    if (b.hi) {
        if (auto n = eventually_positive(-*b.hi, b.hi_from, cap)) return {-1, *n};
    }
    return {};
}

// Sign of a single bounding function: +1, -1, 0 for the zero function, 2 if unknown.
inline int poly_sign(const ExpPoly& p, long from, long cap, long* when) {
    *when = from;
    if (p.empty()) return 0;
    if (auto n = eventually_positive(p, from, cap)) {
        *when = *n;
        return 1;
    }
    if (auto n = eventually_positive(-p, from, cap)) {
        *when = *n;
        return -1;
    }
    return 2;
}

// Monomial m with m <= p (below = true) or m >= p eventually.
inline std::optional<std::pair<Term, long>> monomial_bound(const ExpPoly& p, bool below, long from, long cap) {
    if (p.empty() || p.front().coef <= 0) return std::nullopt;
    if (p.size() == 1) return std::make_pair(p.front(), from);
    Term m = p.front();
    m.coef = below ? m.coef / 2 : m.coef * 2;
    const ExpPoly gap = below ? ExpPoly(p - ExpPoly{m}) : ExpPoly(ExpPoly{m} - p);
    if (auto n = eventually_positive(gap, from, cap)) return std::make_pair(m, *n);
    return std::nullopt;
}

inline ExpPoly sqrt_upper(const ExpPoly& p) {
    ExpPoly out;
    for (const auto& t : p)
        if (t.coef > 0) out.push_back(sqrt_term(t, Rounding::Up));
    return canonical(out);
}

struct Side {
    std::optional<ExpPoly> poly;
    long from = 1;
};

inline Side product(const std::optional<ExpPoly>& x, long x_from, const std::optional<ExpPoly>& y, long y_from,
                    long sign_from) {
    if (!x || !y) return {};
    return {*x * *y, std::max({x_from, y_from, sign_from})};
}

}  // namespace detail

inline AsymptoticBound asymptotic_bound(const ExprPtr& e, long cap = 10000) {
    AsymptoticBound out;
    switch (e->op) {
        case ExprOp::Const:
            out.lo = out.hi = poly_constant(e->value);
            return out;
        case ExprOp::N:
            out.lo = out.hi = poly_n();
            return out;
        case ExprOp::Factorial:
            return out;  // no exponential sandwich for n!
        case ExprOp::Eulerian: {
            const ExactRational base = e->q + 1;
            out.hi = poly_exp(1, base);
            out.lo = poly_exp(patching_constant(), base);
            out.lo_from = patching_threshold(e->q);
            return out;
        }
        case ExprOp::Add:
        case ExprOp::Sub: {
            const auto a = asymptotic_bound(e->a, cap);
            const auto b = asymptotic_bound(e->b, cap);
            if (e->op == ExprOp::Add) {
                if (a.lo && b.lo) out.lo = *a.lo + *b.lo;
                if (a.hi && b.hi) out.hi = *a.hi + *b.hi;
                out.lo_from = std::max(a.lo_from, b.lo_from);
                out.hi_from = std::max(a.hi_from, b.hi_from);
            } else {
                if (a.lo && b.hi) out.lo = *a.lo - *b.hi;
                if (a.hi && b.lo) out.hi = *a.hi - *b.lo;
                out.lo_from = std::max(a.lo_from, b.hi_from);
                out.hi_from = std::max(a.hi_from, b.lo_from);
            }
            return out;
        }
        case ExprOp::Mul: {
            const auto a = asymptotic_bound(e->a, cap);
            const auto b = asymptotic_bound(e->b, cap);
            const auto sa = detail::eventual_sign(a, cap);
            const auto sb = detail::eventual_sign(b, cap);
            if (sa.sign == 0 || sb.sign == 0) return out;
            const long s = std::max(sa.from, sb.from);
            detail::Side lo, hi;
            if (sa.sign > 0 && sb.sign > 0) {
                lo = detail::product(a.lo, a.lo_from, b.lo, b.lo_from, s);
                hi = detail::product(a.hi, a.hi_from, b.hi, b.hi_from, s);
            } else if (sa.sign > 0 && sb.sign < 0) {
                lo = detail::product(a.hi, a.hi_from, b.lo, b.lo_from, s);
                hi = detail::product(a.lo, a.lo_from, b.hi, b.hi_from, s);
            } else if (sa.sign < 0 && sb.sign > 0) {
                lo = detail::product(a.lo, a.lo_from, b.hi, b.hi_from, s);
                hi = detail::product(a.hi, a.hi_from, b.lo, b.lo_from, s);
            } else {
                lo = detail::product(a.hi, a.hi_from, b.hi, b.hi_from, s);
                hi = detail::product(a.lo, a.lo_from, b.lo, b.lo_from, s);
            }
            out.lo = lo.poly;
            out.lo_from = lo.from;
            out.hi = hi.poly;
            out.hi_from = hi.from;
            return out;
        }
        case ExprOp::Div: {
            const auto a = asymptotic_bound(e->a, cap);
            const auto b = asymptotic_bound(e->b, cap);
            const auto sb = detail::eventual_sign(b, cap);
            if (sb.sign <= 0) return out;
            // m_below <= b for n >= below->second, b <= m_above for n >= above->second.
            std::optional<std::pair<Term, long>> below, above;
            if (b.lo) below = detail::monomial_bound(*b.lo, true, std::max(b.lo_from, sb.from), cap);
            if (b.hi) above = detail::monomial_bound(*b.hi, false, std::max(b.hi_from, sb.from), cap);
            auto side = [&](const std::optional<ExpPoly>& num, long num_from, bool upper) -> detail::Side {
                if (!num) return {};
                long when = num_from;
                const int s = detail::poly_sign(*num, num_from, cap, &when);
                if (s == 2) return {};
                // Upper: a/b <= num/m_below when num >= 0, num/m_above when num < 0.
                const bool use_below = upper ? (s >= 0) : (s < 0);
                const auto& m = use_below ? below : above;
                if (!m) return {};
                return {divide(*num, m->first), std::max({when, m->second, sb.from})};
            };
            const auto hi = side(a.hi, a.hi_from, true);
            const auto lo = side(a.lo, a.lo_from, false);
            out.hi = hi.poly;
            out.hi_from = hi.from;
            out.lo = lo.poly;
            out.lo_from = lo.from;
            return out;
        }
        case ExprOp::Sqrt: {
            const auto a = asymptotic_bound(e->a, cap);
            if (a.hi) {
                out.hi = detail::sqrt_upper(*a.hi);
                out.hi_from = a.hi_from;
            }
            if (a.lo) {
                if (a.lo->empty()) {
                    out.lo = ExpPoly{};
                    out.lo_from = a.lo_from;
                } else if (auto m = detail::monomial_bound(*a.lo, true, a.lo_from, cap)) {
                    out.lo = ExpPoly{sqrt_term(m->first, Rounding::Down)};
                    out.lo_from = m->second;
                }
            }
            return out;
        }
    }
    return out;
}

namespace detail {

inline long fallback_window_end(long lo) { return lo + 40; }

inline void finish_with_finite(Certificate& cert, const InequalitySpec& spec, long lo, long hi) {
    if (lo > hi) return;
    const auto r = check_finite(spec, lo, hi);
    if (r.passed) {
        cert.finite_checked = std::make_pair(lo, hi);
        cert.trace.push_back("exact check passed for " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
    } else {
        cert.status = CertStatus::FAILED;
        cert.counterexample = r.counterexample;
        if (*r.counterexample > lo) cert.finite_checked = std::make_pair(lo, *r.counterexample - 1);
        cert.trace.push_back("counterexample at n = " + std::to_string(*r.counterexample));
    }
}

}  // namespace detail

// Asymptotic certificate for a spec whose claimed range is unbounded above.
inline Certificate asymptotic_certificate(const InequalitySpec& spec, long cap = 10000) {
    Certificate cert;
    cert.name = spec.name;
    cert.statement = spec.statement();
    cert.claimed = spec.claimed;

    // Prove F(n) > 0 with F = rhs - lhs for < and <=, and F = lhs - rhs for >.
    const ExprPtr& big = spec.rel == Relation::GT ? spec.lhs : spec.rhs;
    const ExprPtr& small = spec.rel == Relation::GT ? spec.rhs : spec.lhs;
    const auto big_b = asymptotic_bound(big, cap);
    const auto small_b = asymptotic_bound(small, cap);

    std::optional<long> n0;
    if (!big_b.lo || !small_b.hi) {
        cert.trace.push_back(contains_factorial(big) || contains_factorial(small)
                                 ? "n! has no exponential bound; asymptotic argument unavailable"
                                 : "no usable bound for one side");
    } else {
        const ExpPoly gap = *big_b.lo - *small_b.hi;
        const long from = std::max({big_b.lo_from, small_b.hi_from, spec.claimed.lo});
        cert.trace.push_back("sandwich bounds valid for n >= " + std::to_string(from));
        cert.trace.push_back("lower bound of the gap: " + to_string(gap));
        PositivityTrace pt;
        n0 = eventually_positive(gap, from, cap, &pt);
        for (auto& l : pt.lines) cert.trace.push_back(l);
    }

    if (n0) {
        cert.asymptotic_threshold = *n0;
        cert.status = CertStatus::VERIFIED;
        cert.trace.push_back("asymptotic argument covers n >= " + std::to_string(*n0));
        detail::finish_with_finite(cert, spec, spec.claimed.lo, *n0 - 1);
        if (cert.status == CertStatus::VERIFIED && !covers_claim(cert)) cert.status = CertStatus::FINITE_ONLY;
    } else {
        cert.status = CertStatus::FINITE_ONLY;
        const long hi = spec.claimed.hi ? *spec.claimed.hi : detail::fallback_window_end(spec.claimed.lo);
        detail::finish_with_finite(cert, spec, spec.claimed.lo, hi);
    }
    return cert;
}

// Certificate on the claimed range: a full exact check when the range is
// bounded, the asymptotic certificate otherwise.
inline Certificate certify(const InequalitySpec& spec, long cap = 10000) {
    if (!spec.claimed.bounded()) return asymptotic_certificate(spec, cap);
    Certificate cert;
    cert.name = spec.name;
    cert.statement = spec.statement();
    cert.claimed = spec.claimed;
    cert.status = CertStatus::VERIFIED;
    detail::finish_with_finite(cert, spec, spec.claimed.lo, *spec.claimed.hi);
    return cert;
}

// The two-parameter inequality A(n, r-1)(A(n, r-1) - 1) > 2 A(n, 3r-2) for
// 3 <= r <= n-2.
inline bool bound_b_holds(long n, long r) {
    const ExactInt a = eulerian(n, r - 1);
    return a * (a - 1) > 2 * eulerian(n, 3 * r - 2);
}

// Exact check of bound B over every (n, r) with n <= n_max; the asymptotic
// part for n > n_max is a fixed argument whose numerical steps are checked
// exactly here:
//   * r >= (n+2)/3: the right side vanishes and A(n, r-1) >= 2.
//   * r < n / (ln(n+1) + 1): A(n, r-1) >= L r^n, and
//     2 (8/9)^N + U 3^-N < L^2 at N = 14 gives the claim for all r >= 3, n >= 14,
//     where L <= 1 - 1/e <= U and (3r-1)/r^2 <= 8/9 for r >= 3.
//   * otherwise take r0 = ceil(sqrt(n)) < n / (ln(n+1) + 1); then
//     A(n, r-1) >= A(n, r0-1) by unimodality and
//     A(n, r0-1)(A(n, r0-1) - 1) > (3/10) n^n > 2 n! >= 2 A(n, 3r-2).
inline Certificate bound_b_certificate(long n_max = 20) {
    Certificate cert;
    cert.name = "bound-B";
    cert.statement = "A(n,r-1)*(A(n,r-1) - 1) > 2*A(n,3r-2) for 3 <= r <= n-2";
    cert.claimed = {5, std::nullopt};
    cert.status = CertStatus::VERIFIED;
    auto fail_step = [&](const std::string& why) {
        cert.status = CertStatus::FINITE_ONLY;
        cert.trace.push_back("step failed: " + why);
    };

    for (long n = 5; n <= n_max; ++n) {
        for (long r = 3; r <= n - 2; ++r) {
            if (!bound_b_holds(n, r)) {
                cert.status = CertStatus::FAILED;
                cert.counterexample = n;
                cert.counterexample_r = r;
                cert.trace.push_back("counterexample at n = " + std::to_string(n) + ", r = " + std::to_string(r));
                return cert;
            }
        }
    }
    cert.finite_checked = std::make_pair(5L, n_max);
    cert.trace.push_back("exact check passed for 5 <= n <= " + std::to_string(n_max) + ", all 3 <= r <= n-2");

    const long N = n_max + 1;
    const ExactRational L = patching_constant();
    const ExactRational U = round_up(one_minus_inv_e().hi, 64);

    // Regime r < n/(ln(n+1)+1).
    {
        const long base_n = 14;
        const ExactRational lhs = 2 * rpow(make_rational(8, 9), base_n) + U * rpow(ExactRational(3), -base_n);
        if (lhs < L * L) {
            cert.trace.push_back("small r: 2(8/9)^14 + U*3^-14 < L^2 holds; monotone in r >= 3 and n >= 14");
        } else {
            fail_step("small-r inequality at n = 14");
        }
    }

    // Existence of r0 = ceil(sqrt(n)) with r0 < n/(ln(n+1)+1).
    {
        long n1 = -1;
        for (long n = N; n <= 1000; ++n) {
            const Interval ln = ln_bracket(ExactInt(n + 1));
            const ExactRational sqrt_hi = root_bracket(ExactRational(n), 2, 64).hi;
            // (sqrt(n) + 1)(ln(n+1) + 1) < n, together with the derivative of
            // n - (sqrt(n)+1)(ln(n+1)+1) being positive there.
            const bool gap = (sqrt_hi + 1) * (ln.hi + 1) < n;
            const ExactRational sqrt_lo = root_bracket(ExactRational(n), 2, 64).lo;
            const bool rising = (ln.hi + 1) / (2 * sqrt_lo) + (sqrt_hi + 1) / (n + 1) < 1;
            if (gap && rising) {
                n1 = n;
                break;
            }
        }
        if (n1 < 0) {
            fail_step("no n1 with (sqrt(n)+1)(ln(n+1)+1) < n");
        } else {
            bool ok = true;
            for (long n = N; n < n1; ++n) {
                const ExactInt r0 = iroot(ExactInt(n), 2) + (is_perfect_power(ExactInt(n), 2) ? 0 : 1);
                if (!(ExactRational(r0) * (ln_bracket(ExactInt(n + 1)).hi + 1) < n)) ok = false;
            }
            if (ok) {
                cert.trace.push_back("r0 = ceil(sqrt(n)) < n/(ln(n+1)+1) checked for " + std::to_string(N) +
                                     " <= n < " + std::to_string(n1) + ", and (sqrt(n)+1)(ln(n+1)+1) < n with a "
                                     "rising gap from n = " + std::to_string(n1));
            } else {
                fail_step("r0 bound below n1");
            }
        }
    }

    // L^2 - U r0^-n > 3/10 with r0 >= ceil(sqrt(N)), and (3/10) n^n > 2 n! at n = N.
    {
        const ExactInt r0_min = iroot(ExactInt(N), 2) + (is_perfect_power(ExactInt(N), 2) ? 0 : 1);
        const ExactRational margin = L * L - U * rpow(ExactRational(r0_min), -N);
        if (margin > make_rational(3, 10)) {
            cert.trace.push_back("L^2 - U r0^-n > 3/10 for r0 >= " + r0_min.str() + ", n >= " + std::to_string(N));
        } else {
            fail_step("L^2 - U r0^-n > 3/10");
        }
        if (3 * ipow(ExactInt(N), static_cast<unsigned long>(N)) > 20 * factorial(N)) {
            cert.trace.push_back("(3/10) n^n > 2 n! at n = " + std::to_string(N) + "; n^n/n! increases with n");
        } else {
            fail_step("(3/10) n^n > 2 n!");
        }
    }

    // Unimodality of Eulerian rows, checked on the rows used in the finite part.
    {
        bool ok = true;
        for (long n = 1; n <= std::max<long>(n_max, 40); ++n) {
            const auto row = eulerian_row(n);
            for (long q = 1; q <= (n - 1) / 2; ++q)
                if (row[static_cast<std::size_t>(q)] < row[static_cast<std::size_t>(q - 1)]) ok = false;
        }
        if (ok) cert.trace.push_back("Eulerian rows nondecreasing up to the middle for n <= 40");
        else fail_step("unimodality");
    }

    if (cert.status == CertStatus::VERIFIED) cert.asymptotic_threshold = N;
    return cert;
}

inline std::vector<InequalitySpec> battery_specs() {
    using expr::A;
    using expr::constant;
    using expr::sqrt;
    const ExprPtr n = expr::n();
    const ExprPtr A1 = A(1), A2 = A(2), A3 = A(3), A4 = A(4), A5 = A(5), A6 = A(6), A7 = A(7);
    const ExprPtr fact = expr::factorial_n();
    auto c = [](long p, long q = 1) { return constant(p, q); };
    const ExactRational r4546 = make_rational(45, 46);

    // Shared summands of the composite bounds.
    auto root_term = [&](long p, long q, const ExprPtr& inside) { return sqrt(c(p, q) * inside) + 1; };
    const ExprPtr m2c_48 = root_term(48, 11, A3 * A1);
    const ExprPtr m2d_48 = c(48, 11) * A3 / A1;
    const ExprPtr m2e_96 = root_term(96, 11, A5 / A1);
    const ExprPtr root_fact = sqrt(2 * fact) + 1;

    std::vector<InequalitySpec> specs;
    specs.push_back({"bound-A3a", A2 / (A1 * A1), Relation::LT, c(1, 27), {11, std::nullopt}});
    specs.push_back({"bound-A3a-mid", A2 / (A1 * A1), Relation::LT, constant(make_rational(4, 27) * r4546 * r4546), {6, 10}});
    specs.push_back({"bound-A3a-5", A2 / (A1 * A1), Relation::LT,
                     constant(make_rational(1, 6) * make_rational(11, 13) * r4546 * r4546), {5, 5}});
    specs.push_back({"bound-A3b", sqrt(2 * A4) + 1, Relation::LE, A1 * A1 / (48 * (n - 1)), {5, 10}});
    specs.push_back({"bound-A3c", A7, Relation::LT, expr::pow(A1, 4) / c(140), {5, std::nullopt}});
    specs.push_back({"bound-A3d", 2 * A1 + m2c_48 + m2d_48 + m2e_96, Relation::LT, A2, {11, std::nullopt}});
    specs.push_back({"bound-A3e",
                     2 * A1 + root_fact + c(1, 2) * root_fact * root_fact / ((A1 / c(2)) * (A1 / c(2))) + m2e_96,
                     Relation::LT, A2, {6, 19}});
    specs.push_back({"bound-A3f", 2 * A1 + c(2) + c(1) + m2e_96, Relation::LT, A2, {5, 5}});
    specs.push_back({"bound-A3g", root_term(36, 11, A3 * A1) + c(36, 11) * A3 / A1 + root_term(72, 11, A5 / A1),
                     Relation::LT, A2, {5, 10}});
    specs.push_back({"bound-A3h", m2c_48 + m2e_96, Relation::LT, A2, {5, 10}});
    specs.push_back({"bound-A3h-n11", m2c_48 + m2e_96, Relation::LT, A2, {5, 11}});
    specs.push_back({"bound-A4a", A2, Relation::LT, c(3, 28) * (A1 - 1) * (A1 - 1), {5, std::nullopt}});
    specs.push_back({"bound-A4b", n + 1 + (n - 1) / c(2) * A1, Relation::LT, A2, {5, std::nullopt}});
    specs.push_back({"bound-A4-twocases", (n - 1) * (n - 1) / c(2), Relation::LT, A1 - 1, {5, std::nullopt}});
    specs.push_back({"bound-A5a", A4, Relation::LT, expr::pow(A1 - 1, 3) / (78 * n), {5, std::nullopt}});
    specs.push_back({"bound-A5b", A2, Relation::LT, A1 * A1 / c(10), {5, std::nullopt}});
    specs.push_back({"bound-A5c", expr::pow(A1, 3), Relation::GT, 341 * A5, {5, std::nullopt}});
    specs.push_back({"bound-A5d", A2, Relation::GT, (n - 1) * A1 / c(2) + (4 * A3 / A1 + 1) + (sqrt(2 * A5) + 1),
                     {5, std::nullopt}});
    specs.push_back({"bound-A5e", 6 * n * A4, Relation::LT, A1 * A1 * A2, {3, std::nullopt}});
    specs.push_back({"bound-A5f", (A2 - 1) * (A2 - 1), Relation::GT, 100 * A6, {5, std::nullopt}});
    return specs;
}

inline InequalitySpec ineq_example_spec() { return battery_specs().front(); }

struct BatteryReport {
    std::vector<Certificate> certificates;

    bool all_pass() const {
        for (const auto& c : certificates)
            if (c.status != CertStatus::VERIFIED || !covers_claim(c)) return false;
        return !certificates.empty();
    }
};

// Certificates for every named bound, computed concurrently and reported in
// declaration order with bound-B last.
inline BatteryReport run_battery(unsigned workers = 1) {
    const auto specs = battery_specs();
    std::vector<std::function<Certificate()>> jobs;
    for (const auto& s : specs) jobs.push_back([s] { return certify(s); });
    jobs.push_back([] { return bound_b_certificate(); });

    // Rows used by several jobs are built before the workers start.
    EulerianTable::shared().reserve(60);

    BatteryReport report;
    report.certificates.resize(jobs.size());
    const unsigned pool_size = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j = next++; j < jobs.size(); j = next++) report.certificates[j] = jobs[j]();
    };
    if (pool_size == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < pool_size; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return report;
}

}  // namespace hyperab
