#pragma once

// A small expression language over n: rational constants, n, n!, A(n, q) for
// fixed q, the four arithmetic operations and square roots. Values are
// computed exactly; square roots enter as rational brackets that are refined
// until a comparison is decided.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "hyperab/eulerian.hpp"
#include "hyperab/exact.hpp"

namespace hyperab {

enum class ExprOp { Const, N, Factorial, Eulerian, Add, Sub, Mul, Div, Sqrt };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprOp op = ExprOp::Const;
    ExactRational value = 0;  // Const
    long q = 0;               // Eulerian
    ExprPtr a;
    ExprPtr b;
};

namespace expr {

inline ExprPtr make(ExprOp op, ExprPtr a = nullptr, ExprPtr b = nullptr) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

inline ExprPtr constant(const ExactRational& v) {
    auto e = std::make_shared<Expr>();
    e->op = ExprOp::Const;
    e->value = v;
    return e;
}

inline ExprPtr constant(long num, long den = 1) { return constant(make_rational(num, den)); }

inline ExprPtr n() { return make(ExprOp::N); }

inline ExprPtr factorial_n() { return make(ExprOp::Factorial); }

inline ExprPtr A(long q) {
    if (q < 0) throw std::invalid_argument("Eulerian atom needs q >= 0");
    auto e = std::make_shared<Expr>();
    e->op = ExprOp::Eulerian;
    e->q = q;
    return e;
}

inline ExprPtr sqrt(ExprPtr x) { return make(ExprOp::Sqrt, std::move(x)); }

inline ExprPtr pow(const ExprPtr& x, unsigned k) {
    if (k == 0) return constant(1);
    ExprPtr out = x;
    for (unsigned i = 1; i < k; ++i) out = make(ExprOp::Mul, out, x);
    return out;
}

}  // namespace expr

inline ExprPtr operator+(ExprPtr x, ExprPtr y) { return expr::make(ExprOp::Add, std::move(x), std::move(y)); }
inline ExprPtr operator-(ExprPtr x, ExprPtr y) { return expr::make(ExprOp::Sub, std::move(x), std::move(y)); }
inline ExprPtr operator*(ExprPtr x, ExprPtr y) { return expr::make(ExprOp::Mul, std::move(x), std::move(y)); }
inline ExprPtr operator/(ExprPtr x, ExprPtr y) { return expr::make(ExprOp::Div, std::move(x), std::move(y)); }

inline ExprPtr operator+(ExprPtr x, long c) { return std::move(x) + expr::constant(c); }
inline ExprPtr operator-(ExprPtr x, long c) { return std::move(x) - expr::constant(c); }
inline ExprPtr operator+(long c, ExprPtr x) { return expr::constant(c) + std::move(x); }
inline ExprPtr operator*(long c, ExprPtr x) { return expr::constant(c) * std::move(x); }
inline ExprPtr operator*(const ExactRational& c, ExprPtr x) { return expr::constant(c) * std::move(x); }

inline bool contains_sqrt(const ExprPtr& e) {
    if (!e) return false;
    return e->op == ExprOp::Sqrt || contains_sqrt(e->a) || contains_sqrt(e->b);
}

inline bool contains_factorial(const ExprPtr& e) {
    if (!e) return false;
    return e->op == ExprOp::Factorial || contains_factorial(e->a) || contains_factorial(e->b);
}

inline long max_eulerian_index(const ExprPtr& e) {
    if (!e) return -1;
    long here = e->op == ExprOp::Eulerian ? e->q : -1;
    return std::max({here, max_eulerian_index(e->a), max_eulerian_index(e->b)});
}

namespace detail {

inline int precedence(ExprOp op) {
    switch (op) {
        case ExprOp::Add:
        case ExprOp::Sub: return 1;
        case ExprOp::Mul:
        case ExprOp::Div: return 2;
        default: return 3;
    }
}

}  // namespace detail

inline std::string to_string(const ExprPtr& e) {
    using detail::precedence;
    auto wrap = [](const ExprPtr& child, int parent, bool right_assoc_sensitive) {
        std::string s = to_string(child);
        const int p = precedence(child->op);
        if (p < parent || (right_assoc_sensitive && p == parent)) return "(" + s + ")";
        if (child->op == ExprOp::Const && child->value < 0) return "(" + s + ")";
        return s;
    };
    switch (e->op) {
        case ExprOp::Const: return to_string(e->value);
        case ExprOp::N: return "n";
        case ExprOp::Factorial: return "n!";
        case ExprOp::Eulerian: return "A(n," + std::to_string(e->q) + ")";
        case ExprOp::Sqrt: return "sqrt(" + to_string(e->a) + ")";
        case ExprOp::Add: return wrap(e->a, 1, false) + " + " + wrap(e->b, 1, false);
        case ExprOp::Sub: return wrap(e->a, 1, false) + " - " + wrap(e->b, 1, true);
        case ExprOp::Mul: return wrap(e->a, 2, false) + "*" + wrap(e->b, 2, false);
        case ExprOp::Div: return wrap(e->a, 2, false) + "/" + wrap(e->b, 2, true);
    }
    return "?";
}

// Cache of A(n, q) for fixed small q at arbitrary n; large n go through the
// closed form so no full rows are built.
class EulerianAtomCache {
public:
    ExactInt get(long n, long q) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = cache_.find({n, q});
            if (it != cache_.end()) return it->second;
        }
        ExactInt v = (n <= 120) ? eulerian(n, q) : eulerian_closed(n, q);
        std::lock_guard<std::mutex> lock(mutex_);
        cache_.emplace(std::make_pair(n, q), v);
        return v;
    }

    static EulerianAtomCache& shared() {
        static EulerianAtomCache c;
        return c;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<long, long>, ExactInt> cache_;
};

// Interval enclosure of e at n, square roots bracketed to 2^-bits.
inline Interval evaluate(const ExprPtr& e, long n, unsigned bits) {
    switch (e->op) {
        case ExprOp::Const: return Interval::point(e->value);
        case ExprOp::N: return Interval::point(ExactRational(n));
        case ExprOp::Factorial: return Interval::point(ExactRational(factorial(n)));
        case ExprOp::Eulerian: return Interval::point(ExactRational(EulerianAtomCache::shared().get(n, e->q)));
        case ExprOp::Add: return evaluate(e->a, n, bits) + evaluate(e->b, n, bits);
        case ExprOp::Sub: return evaluate(e->a, n, bits) - evaluate(e->b, n, bits);
        case ExprOp::Mul: return evaluate(e->a, n, bits) * evaluate(e->b, n, bits);
        case ExprOp::Div: return evaluate(e->a, n, bits) / evaluate(e->b, n, bits);
        case ExprOp::Sqrt: {
            const Interval x = evaluate(e->a, n, bits);
            if (x.lo < 0) throw std::domain_error("square root of a negative quantity at n = " + std::to_string(n));
            if (x.is_point()) return root_bracket(x.lo, 2, bits);
            return {root_bracket(x.lo, 2, bits).lo, root_bracket(x.hi, 2, bits).hi};
        }
    }
    throw std::logic_error("malformed expression");
}

// Exact value for square-root-free expressions.
inline ExactRational evaluate_exact(const ExprPtr& e, long n) {
    if (contains_sqrt(e)) throw std::invalid_argument("expression contains a square root");
    return evaluate(e, n, 0).lo;
}

enum class Relation { LT, LE, GT };

inline std::string to_string(Relation r) {
    switch (r) {
        case Relation::LT: return "<";
        case Relation::LE: return "<=";
        case Relation::GT: return ">";
    }
    return "?";
}

struct UndecidedComparison : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool holds(const ExactRational& l, Relation rel, const ExactRational& r) {
    switch (rel) {
        case Relation::LT: return l < r;
        case Relation::LE: return l <= r;
        case Relation::GT: return l > r;
    }
    return false;
}

// sqrt(E) REL F or F REL sqrt(E) with E, F square-root free: decided by squaring.
inline std::optional<bool> compare_by_squaring(const ExprPtr& lhs, Relation rel, const ExprPtr& rhs, long n) {
    const bool left_root = lhs->op == ExprOp::Sqrt && !contains_sqrt(lhs->a) && !contains_sqrt(rhs);
    const bool right_root = rhs->op == ExprOp::Sqrt && !contains_sqrt(rhs->a) && !contains_sqrt(lhs);
    if (left_root) {
        const ExactRational e = evaluate_exact(lhs->a, n);
        const ExactRational f = evaluate_exact(rhs, n);
        switch (rel) {
            case Relation::LT: return sqrt_lt(e, f);
            case Relation::LE: return sqrt_le(e, f);
            case Relation::GT: return lt_sqrt(f, e);
        }
    }
    if (right_root) {
        const ExactRational f = evaluate_exact(lhs, n);
        const ExactRational e = evaluate_exact(rhs->a, n);
        switch (rel) {
            case Relation::LT: return lt_sqrt(f, e);
            case Relation::LE: return le_sqrt(f, e);
            case Relation::GT: return sqrt_lt(e, f);
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Exact verdict of lhs REL rhs at n.
inline bool compare_at(const ExprPtr& lhs, Relation rel, const ExprPtr& rhs, long n) {
    if (!contains_sqrt(lhs) && !contains_sqrt(rhs)) {
        return detail::holds(evaluate_exact(lhs, n), rel, evaluate_exact(rhs, n));
    }
    if (auto v = detail::compare_by_squaring(lhs, rel, rhs, n)) return *v;
    for (unsigned bits = 64; bits <= 8192; bits *= 2) {
        const Interval diff = evaluate(lhs, n, bits) - evaluate(rhs, n, bits);
        switch (rel) {
            case Relation::LT:
                if (diff.hi < 0) return true;
                if (diff.lo >= 0) return false;
                break;
            case Relation::LE:
                if (diff.hi <= 0) return true;
                if (diff.lo > 0) return false;
                break;
            case Relation::GT:
                if (diff.lo > 0) return true;
                if (diff.hi <= 0) return false;
                break;
        }
    }
    throw UndecidedComparison("comparison at n = " + std::to_string(n) + " not decided by refinement");
}

}  // namespace hyperab
