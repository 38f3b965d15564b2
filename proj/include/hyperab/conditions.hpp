#pragma once

// Adjoint Hodge numbers for the GL / GSp / GO structure groups, the
// "topmost x Hodge numbers" function T, and the numerical conditions built
// on them.

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperab/eulerian.hpp"
#include "hyperab/exact.hpp"
#include "hyperab/hodge.hpp"

namespace hyperab {

enum class GroupKind { GL, GSP, GO };

inline std::string to_string(GroupKind g) {
    switch (g) {
        case GroupKind::GL: return "GL";
        case GroupKind::GSP: return "GSp";
        case GroupKind::GO: return "GO";
    }
    return "?";
}

inline GroupKind parse_group(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "gl") return GroupKind::GL;
    if (s == "gsp") return GroupKind::GSP;
    if (s == "go") return GroupKind::GO;
    throw std::invalid_argument("unknown group '" + s + "' (expected gl, gsp or go)");
}

inline const std::vector<GroupKind>& all_groups() {
    static const std::vector<GroupKind> groups{GroupKind::GL, GroupKind::GSP, GroupKind::GO};
    return groups;
}

// The pairing on H^{n-1} is alternating for even n and symmetric for odd n,
// so GSp structures occur only for even n and GO structures only for odd n.
inline bool structure_occurs(long n, GroupKind group) {
    switch (group) {
        case GroupKind::GL: return true;
        case GroupKind::GSP: return n % 2 == 0;
        case GroupKind::GO: return n % 2 != 0;
    }
    return false;
}

struct AdjointHodgeData {
    GroupKind group = GroupKind::GL;
    ExactInt N = 0;
    std::map<long, ExactInt> adjoint;  // p -> h^p, only nonzero entries
    ExactInt dim_h = 0;
    ExactInt torus_rank = 0;

    ExactInt h(long p) const {
        auto it = adjoint.find(p);
        return it == adjoint.end() ? ExactInt(0) : it->second;
    }

    ExactInt h0() const { return h(0); }

    ExactInt total() const {
        ExactInt s = 0;
        for (const auto& [p, v] : adjoint) s += v;
        return s;
    }

    // sum_{p>0} h^p
    ExactInt positive_mass() const {
        ExactInt s = 0;
        for (const auto& [p, v] : adjoint)
            if (p > 0) s += v;
        return s;
    }

    // sum_{p>0} p h^p
    ExactInt positive_moment() const {
        ExactInt s = 0;
        for (const auto& [p, v] : adjoint)
            if (p > 0) s += p * v;
        return s;
    }
};

namespace detail {

inline void require_n_d(long n, const ExactInt& d) { HypersurfaceData{n, d}.validate(); }

// Halves an integer that must be even.
inline ExactInt exact_half(const ExactInt& x) {
    if (x % 2 != 0) throw std::logic_error("expected an even quantity, got " + x.str());
    return x / 2;
}

}  // namespace detail

// Graded dimensions of Lie(H) for H = GL, GSp, GO acting on the standard
// representation with weight multiplicities d A(n, q). Tensor, symmetric and
// exterior squares pair weights into total weight n-1; the similitude line
// contributes 1 at p = 0 for GSp and GO.
inline AdjointHodgeData adjoint_hodge(long n, const ExactInt& d, GroupKind group) {
    detail::require_n_d(n, d);
    const HodgeProfile prof = hodge_tate_multiplicities({n, d});
    AdjointHodgeData out;
    out.group = group;
    out.N = prof.total();

    for (long p = -(n - 1); p <= n - 1; ++p) {
        ExactInt value = 0;
        if (group == GroupKind::GL) {
            for (long q = 0; q < n; ++q) value += prof.at(q) * prof.at(q - p);
        } else {
            const long total = n - 1 + p;
            ExactInt pairs = 0;
            for (long q = 0; q < n; ++q) pairs += prof.at(q) * prof.at(total - q);
            const ExactInt diagonal = (total % 2 == 0) ? prof.at(total / 2) : ExactInt(0);
            value = detail::exact_half(group == GroupKind::GSP ? ExactInt(pairs + diagonal) : ExactInt(pairs - diagonal));
            if (p == 0) value += 1;
        }
        if (value != 0) out.adjoint[p] = value;
    }

    const ExactInt& N = out.N;
    switch (group) {
        case GroupKind::GL:
            out.dim_h = N * N;
            out.torus_rank = N;
            break;
        case GroupKind::GSP:
            out.dim_h = detail::exact_half(N * (N + 1)) + 1;
            out.torus_rank = N / 2 + 1;
            break;
        case GroupKind::GO:
            out.dim_h = detail::exact_half(N * (N - 1)) + 1;
            out.torus_rank = N / 2 + 1;
            break;
    }
    return out;
}

// h^0 from the closed case formulas written directly in Eulerian numbers:
//   GL:  sum_p d^2 A(n,p)^2
//   GSp: (1/2)[sum_p d^2 A(n,p)^2 + d A(n,(n-1)/2)] + 1
//   GO:  (1/2)[sum_p d^2 A(n,p)^2 - d A(n,(n-1)/2)] + 1
// A(n,(n-1)/2) is 0 when (n-1)/2 is not an integer.
inline ExactInt closed_form_h0(long n, const ExactInt& d, GroupKind group) {
    detail::require_n_d(n, d);
    ExactInt squares = 0;
    for (const auto& a : eulerian_row(n)) squares += d * d * a * a;
    if (group == GroupKind::GL) return squares;
    const ExactInt middle = ((n - 1) % 2 == 0) ? ExactInt(d * eulerian(n, (n - 1) / 2)) : ExactInt(0);
    const ExactInt inner = group == GroupKind::GSP ? ExactInt(squares + middle) : ExactInt(squares - middle);
    return detail::exact_half(inner) + 1;
}

// Continuous piecewise-linear T with T(0) = 0 and slope k while x runs
// through the block of h^k, blocks taken from the top weight downwards.
inline ExactRational t_function_eval(const AdjointHodgeData& data, const ExactRational& x) {
    const ExactInt total = data.total();
    if (x < 0 || x > total) {
        throw std::domain_error("T evaluated at " + to_string(x) + " outside [0, " + total.str() + "]");
    }
    ExactRational remaining = x;
    ExactRational value = 0;
    for (auto it = data.adjoint.rbegin(); it != data.adjoint.rend() && remaining > 0; ++it) {
        const ExactRational block = (remaining < it->second) ? remaining : ExactRational(it->second);
        value += block * it->first;
        remaining -= block;
    }
    return value;
}

// 2 h^0 < dim H + t
inline bool key_inequality_check(long n, const ExactInt& d, GroupKind group) {
    const auto data = adjoint_hodge(n, d, group);
    return 2 * data.h0() < data.dim_h + data.torus_rank;
}

// (1/2)(h^0 - t) < sum_{p>0} h^p
inline bool sufficient_condition_check(long n, const ExactInt& d, GroupKind group) {
    const auto data = adjoint_hodge(n, d, group);
    return make_rational(data.h0() - data.torus_rank, 2) < ExactRational(data.positive_mass());
}

// 2 sum_p A(n,p)^2 <= (n!)^2
inline bool squared_inequality_check(long n) {
    if (n < 2) throw std::invalid_argument("squared inequality needs n >= 2");
    ExactInt squares = 0;
    for (const auto& a : eulerian_row(n)) squares += a * a;
    const ExactInt f = factorial(n);
    return 2 * squares <= f * f;
}

// a_i = sum_p A(n,p) A(n,p-i) / (n!)^2 for -(n-1) <= i <= n-1, stored at
// index i + n - 1.
inline std::vector<ExactRational> autocorrelation(long n) {
    if (n < 2) throw std::invalid_argument("autocorrelation needs n >= 2");
    const auto row = eulerian_row(n);
    const ExactInt f = factorial(n);
    const ExactInt norm = f * f;
    std::vector<ExactRational> out;
    out.reserve(static_cast<std::size_t>(2 * n - 1));
    for (long i = -(n - 1); i <= n - 1; ++i) {
        ExactInt s = 0;
        for (long p = 0; p < n; ++p) {
            const long r = p - i;
            if (r >= 0 && r < n) s += row[static_cast<std::size_t>(p)] * row[static_cast<std::size_t>(r)];
        }
        out.push_back(make_rational(s, norm));
    }
    return out;
}

inline ExactRational second_moment(long n) {
    const auto a = autocorrelation(n);
    ExactRational s = 0;
    for (long i = -(n - 1); i <= n - 1; ++i) s += ExactRational(i * i) * a[static_cast<std::size_t>(i + n - 1)];
    return s;
}

// sum_i i^2 a_i == (n+1)/6
inline bool second_moment_check(long n) { return second_moment(n) == make_rational(n + 1, 6); }

inline ExactRational a0(long n) { return autocorrelation(n)[static_cast<std::size_t>(n - 1)]; }

inline bool a0_bound_check(long n) { return a0(n) <= make_rational(1, 2); }

// a_0 > 1/2
inline bool a0_exceeds_half(long n) { return a0(n) > make_rational(1, 2); }

struct LvVerdict {
    bool first = false;
    std::optional<bool> second;  // empty when a T argument leaves its domain
    ExactRational e;             // (dim X + dim H) / c
    ExactInt lhs_first;          // sum_{p>0} h^p
    ExactInt lhs_second;         // sum_{p>0} p h^p
    std::optional<ExactRational> rhs_second;
};

// Both numerical conditions evaluated on the simple-factor adjoint data.
inline LvVerdict lv_conditions_check(long n, const ExactInt& d, GroupKind group, const ExactInt& c,
                                     const ExactInt& dim_x) {
    if (c < 1) throw std::invalid_argument("c must be a positive integer");
    if (dim_x < 0) throw std::invalid_argument("dim X must be nonnegative");
    const auto data = adjoint_hodge(n, d, group);
    LvVerdict v;
    v.e = make_rational(dim_x + data.dim_h, c);
    v.lhs_first = data.positive_mass();
    v.lhs_second = data.positive_moment();
    v.first = ExactRational(v.lhs_first) >= v.e;

    const ExactRational x1 = v.e;
    const ExactRational x2 = make_rational(data.h0() - data.torus_rank, 2) + v.e;
    const ExactInt total = data.total();
    if (x1 >= 0 && x1 <= total && x2 >= 0 && x2 <= total) {
        v.rhs_second = t_function_eval(data, x1) + t_function_eval(data, x2);
        v.second = ExactRational(v.lhs_second) > *v.rhs_second;
    }
    return v;
}

// Smallest c for which both conditions hold, scanning upward from the first
// c that can satisfy the first condition. Empty if none is found below the cap.
inline std::optional<ExactInt> find_min_c(long n, const ExactInt& d, GroupKind group, const ExactInt& dim_x,
                                          const ExactInt& scan_limit = 1000000) {
    const auto data = adjoint_hodge(n, d, group);
    const ExactInt mass = data.positive_mass();
    if (mass <= 0) return std::nullopt;
    const ExactInt num = dim_x + data.dim_h;
    ExactInt c = (num + mass - 1) / mass;
    if (c < 1) c = 1;
    for (ExactInt steps = 0; steps < scan_limit; ++steps, ++c) {
        const auto v = lv_conditions_check(n, d, group, c, dim_x);
        if (v.first && v.second.value_or(false)) return c;
    }
    return std::nullopt;
}

}  // namespace hyperab
