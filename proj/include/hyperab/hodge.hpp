#pragma once

// Euler characteristics and Hodge-Tate multiplicities of a smooth ample
// hypersurface H of degree d in an n-dimensional abelian variety.

#include <stdexcept>
#include <string>
#include <vector>

#include "hyperab/eulerian.hpp"
#include "hyperab/exact.hpp"

namespace hyperab {

struct HypersurfaceData {
    long n = 2;
    ExactInt d = 1;

    void validate() const {
        if (n < 2) throw std::invalid_argument("hypersurface needs n >= 2, got n = " + std::to_string(n));
        if (d < 1) throw std::invalid_argument("hypersurface needs degree d >= 1, got d = " + d.str());
    }
};

struct HodgeProfile {
    HypersurfaceData base;
    std::vector<ExactInt> weights;  // weights[q] = d * A(n, q)

    ExactInt total() const {
        ExactInt s = 0;
        for (const auto& w : weights) s += w;
        return s;
    }

    // Multiplicity at weight q, zero outside 0..n-1.
    ExactInt at(long q) const {
        if (q < 0 || q >= static_cast<long>(weights.size())) return 0;
        return weights[static_cast<std::size_t>(q)];
    }
};

namespace detail {

inline ExactInt signed_power(long e, const ExactInt& x) { return (e % 2 == 0) ? x : ExactInt(-x); }

inline void require_weight_index(const HypersurfaceData& h, long i) {
    if (i < 0 || i > h.n - 1) {
        throw std::invalid_argument("index i = " + std::to_string(i) + " outside 0.." + std::to_string(h.n - 1));
    }
}

}  // namespace detail

inline ExactInt arithmetic_euler_char(const HypersurfaceData& h) {
    h.validate();
    return detail::signed_power(h.n - 1, h.d);
}

inline ExactInt tannakian_dimension(const HypersurfaceData& h) {
    h.validate();
    return factorial(h.n) * h.d;
}

inline ExactInt topological_euler_char(const HypersurfaceData& h) {
    return detail::signed_power(h.n - 1, tannakian_dimension(h));
}

// chi(H, Omega^i_H) = (-1)^(n-1-i) d A(n, i).
inline ExactInt chi_omega(const HypersurfaceData& h, long i) {
    h.validate();
    detail::require_weight_index(h, i);
    return detail::signed_power(h.n - 1 - i, h.d * eulerian(h.n, i));
}

// chi(L^r (x) Omega^i_H) as the finite sum
//   sum_{j=0}^{i} C(n, i-j) (-1)^j ((r-j)^n - (r-j-1)^n) d.
inline ExactInt chi_twisted(const HypersurfaceData& h, long r, long i) {
    h.validate();
    detail::require_weight_index(h, i);
    auto power = [&](long base) {
        ExactInt b = base;
        return ipow(b, static_cast<unsigned long>(h.n));
    };
    ExactInt sum = 0;
    for (long j = 0; j <= i; ++j) {
        ExactInt term = binomial(h.n, i - j) * (power(r - j) - power(r - j - 1));
        if (j % 2 == 0) sum += term; else sum -= term;
    }
    return sum * h.d;
}

inline HodgeProfile hodge_tate_multiplicities(const HypersurfaceData& h) {
    h.validate();
    HodgeProfile p{h, eulerian_row(h.n)};
    for (auto& w : p.weights) w *= h.d;
    return p;
}

}  // namespace hyperab
