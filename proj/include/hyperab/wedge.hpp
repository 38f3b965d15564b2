#pragma once

// Brute-force analysis of the wedge-power equation
//
//   sum over m_S with 0 <= m_S(i) <= m_H(i), sum m_S = k, sum i m_S(i) = s + q
//   of prod_i C(m_H(i), m_S(i))  =  d A(n, q)      for every integer q.
//
// The left side, as a function of t = s + q, is the coefficient of x^k y^t in
// prod_i (1 + x y^i)^{m_H(i)}.

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hyperab/eulerian.hpp"
#include "hyperab/exact.hpp"
#include "hyperab/sequences.hpp"

namespace hyperab {

// Finitely supported multiplicities i -> m_H(i); zero entries are never stored.
using WeightFunction = std::map<long, long>;

inline long total_mass(const WeightFunction& m_h) {
    long m = 0;
    for (const auto& [i, v] : m_h) m += v;
    return m;
}

inline long weighted_mass(const WeightFunction& m_h) {
    long w = 0;
    for (const auto& [i, v] : m_h) w += i * v;
    return w;
}

inline void validate_weight_function(const WeightFunction& m_h) {
    for (const auto& [i, v] : m_h) {
        if (v < 1) throw std::invalid_argument("weight function entries must be positive (index " + std::to_string(i) + ")");
    }
}

// t -> coefficient of x^k y^t in prod_i (1 + x y^i)^{m_H(i)}.
inline std::map<long, ExactInt> lhs_profile(const WeightFunction& m_h, long k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    validate_weight_function(m_h);
    // layer[j] holds the x^j coefficients as a map t -> value.
    std::vector<std::map<long, ExactInt>> layer(static_cast<std::size_t>(k + 1));
    layer[0][0] = 1;
    for (const auto& [i, c] : m_h) {
        std::vector<std::map<long, ExactInt>> next(layer.size());
        for (long j = 0; j <= k; ++j) {
            for (const auto& [t, v] : layer[static_cast<std::size_t>(j)]) {
                for (long a = 0; a <= c && j + a <= k; ++a) {
                    next[static_cast<std::size_t>(j + a)][t + a * i] += v * binomial(c, a);
                }
            }
        }
        layer = std::move(next);
    }
    std::map<long, ExactInt> out;
    for (auto& [t, v] : layer[static_cast<std::size_t>(k)])
        if (v != 0) out[t] = v;
    return out;
}

struct StructuralData {
    long w = 0;
    long w_prime = 0;
    WeightFunction m_min;
    WeightFunction m_max;
    long small_n_sum = 0;  // must equal n - 1 for a genuine solution
    long min_weight = 0;   // sum i m_min(i), which is s for a solution
    long max_weight = 0;   // sum i m_max(i)
};

// m_min fills the lowest indices first, m_max the highest; w is the top index
// used by m_min and w' the bottom index used by m_max.
inline StructuralData structural_data(const WeightFunction& m_h, long k) {
    validate_weight_function(m_h);
    const long m = total_mass(m_h);
    if (k < 1 || k > m) {
        throw std::invalid_argument("structural data needs 1 <= k <= m (k = " + std::to_string(k) +
                                    ", m = " + std::to_string(m) + ")");
    }
    StructuralData sd;
    long remaining = k;
    for (auto it = m_h.begin(); it != m_h.end() && remaining > 0; ++it) {
        const long take = std::min(it->second, remaining);
        sd.m_min[it->first] = take;
        sd.w = it->first;
        remaining -= take;
    }
    remaining = k;
    for (auto it = m_h.rbegin(); it != m_h.rend() && remaining > 0; ++it) {
        const long take = std::min(it->second, remaining);
        sd.m_max[it->first] = take;
        sd.w_prime = it->first;
        remaining -= take;
    }
    long sum = k * (sd.w_prime - sd.w);
    for (const auto& [i, v] : m_h) {
        if (i < sd.w) sum += (sd.w - i) * v;
        if (i > sd.w_prime) sum += (i - sd.w_prime) * v;
    }
    sd.small_n_sum = sum;
    sd.min_weight = weighted_mass(sd.m_min);
    sd.max_weight = weighted_mass(sd.m_max);
    return sd;
}

inline bool is_solution(long n, const ExactInt& d, long k, const WeightFunction& m_h, long s) {
    if (n < 2 || d < 1) return false;
    const long m = total_mass(m_h);
    if (!(1 < k && k < m - 1)) return false;
    const auto profile = lhs_profile(m_h, k);
    for (const auto& [t, v] : profile) {
        const long q = t - s;
        if (q < 0 || q >= n || v != d * eulerian(n, q)) return false;
    }
    for (long q = 0; q < n; ++q) {
        auto it = profile.find(s + q);
        if (it == profile.end() || it->second != d * eulerian(n, q)) return false;
    }
    return true;
}

enum class WedgeCase { M4K2, N2_FAMILY, N3_FAMILY, UNCLASSIFIED };

inline std::string to_string(WedgeCase c) {
    switch (c) {
        case WedgeCase::M4K2: return "CASE_M4K2";
        case WedgeCase::N2_FAMILY: return "CASE_N2_FAMILY";
        case WedgeCase::N3_FAMILY: return "CASE_N3_FAMILY";
        case WedgeCase::UNCLASSIFIED: return "UNCLASSIFIED";
    }
    return "?";
}

struct WedgeSolution {
    long n = 0;
    ExactInt d = 0;
    long k = 0;
    WeightFunction m_h;
    long s = 0;

    long m() const { return total_mass(m_h); }

    std::vector<long> dense() const {
        std::vector<long> v;
        if (m_h.empty()) return v;
        for (long i = m_h.begin()->first; i <= m_h.rbegin()->first; ++i) {
            auto it = m_h.find(i);
            v.push_back(it == m_h.end() ? 0 : it->second);
        }
        return v;
    }

    friend bool operator==(const WedgeSolution& a, const WedgeSolution& b) {
        return a.n == b.n && a.d == b.d && a.k == b.k && a.m_h == b.m_h && a.s == b.s;
    }

    friend bool operator<(const WedgeSolution& a, const WedgeSolution& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.m() != b.m()) return a.m() < b.m();
        if (a.k != b.k) return a.k < b.k;
        const auto da = a.dense();
        const auto db = b.dense();
        if (da != db) return da < db;
        if (a.s != b.s) return a.s < b.s;
        return a.d < b.d;
    }
};

namespace detail {

inline WeightFunction translate(const WeightFunction& m_h, long shift) {
    WeightFunction out;
    for (const auto& [i, v] : m_h) out[i + shift] = v;
    return out;
}

inline WedgeSolution translated_to_zero(WedgeSolution sol) {
    if (sol.m_h.empty()) return sol;
    const long lo = sol.m_h.begin()->first;
    sol.m_h = translate(sol.m_h, -lo);
    sol.s -= sol.k * lo;
    return sol;
}

inline WeightFunction from_dense(const std::vector<long>& values) {
    WeightFunction out;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] > 0) out[static_cast<long>(i)] = values[i];
    return out;
}

}  // namespace detail

// i -> -i together with k -> m - k: complements of admissible m_S, so
// solutions map to solutions with s -> s - sum_i i m_H(i).
inline WedgeSolution mirror(const WedgeSolution& sol) {
    WedgeSolution out = sol;
    out.m_h.clear();
    for (const auto& [i, v] : sol.m_h) out.m_h[-i] = v;
    out.k = sol.m() - sol.k;
    out.s = sol.s - weighted_mass(sol.m_h);
    return out;
}

// Canonical form: k <= m/2, support starting at index 0, and when k = m/2 the
// one of the solution and its mirror whose value vector is lexicographically larger.
inline WedgeSolution normalize(const WedgeSolution& sol) {
    WedgeSolution a = detail::translated_to_zero(sol);
    const long m = a.m();
    if (2 * a.k > m) return detail::translated_to_zero(mirror(a));
    if (2 * a.k == m) {
        WedgeSolution b = detail::translated_to_zero(mirror(a));
        if (b.dense() > a.dense()) return b;
    }
    return a;
}

inline WedgeCase classify(long n, const WedgeSolution& raw) {
    const WedgeSolution sol = normalize(raw);
    const long m = sol.m();
    const long k = sol.k;
    if (m == 4 && k == 2) return WedgeCase::M4K2;
    if (n == 2 && sol.d == binomial(2 * k - 1, k)) return WedgeCase::N2_FAMILY;
    if (n == 3) {
        const ExactInt kk = k;
        const ExactInt mm = m;
        for (long i = 2;; ++i) {
            const ExactInt a = a_seq(i);
            if (a > kk) break;
            if (a != kk) continue;
            const ExactInt b = a_seq(i + 1);
            if (mm != a + b) break;
            const bool relation = (mm - kk) * (mm - kk) - 4 * (mm - kk) * kk + kk * kk == mm;
            if (relation && 6 * sol.d == binomial(mm, kk)) return WedgeCase::N3_FAMILY;
            break;
        }
    }
    return WedgeCase::UNCLASSIFIED;
}

struct WedgeBounds {
    long m_max = 12;
    long span_max = -1;  // negative selects the widest span allowed by the structural equation
    ExactInt d_max = 0;  // zero means unbounded
    unsigned workers = 1;
};

// The structural equation forces the support into n-1 steps below w, n-1
// steps above w', and w' - w <= (n-1)/k <= (n-1)/2.
inline long structural_span_limit(long n) { return 2 * (n - 1) + (n - 1) / 2; }

namespace detail {

inline void visit_compositions(long remaining, std::size_t pos, std::vector<long>& values,
                               const std::function<void(const std::vector<long>&)>& visit) {
    const std::size_t last = values.size() - 1;
    if (pos == last) {
        if (remaining < 1) return;
        values[pos] = remaining;
        visit(values);
        return;
    }
    const long lo = (pos == 0) ? 1 : 0;
    const long reserve = (last > 0) ? 1 : 0;
    for (long v = lo; v <= remaining - reserve; ++v) {
        values[pos] = v;
        visit_compositions(remaining - v, pos + 1, values, visit);
    }
}

inline void search_mass(long n, long m, long span_max, const ExactInt& d_max, std::vector<WedgeSolution>& out) {
    for (long span = 0; span <= span_max; ++span) {
        if (span + 1 > m) break;
        std::vector<long> values(static_cast<std::size_t>(span + 1));
        visit_compositions(m, 0, values, [&](const std::vector<long>& v) {
            const WeightFunction m_h = from_dense(v);
            for (long k = 2; 2 * k <= m && k < m - 1; ++k) {
                const StructuralData sd = structural_data(m_h, k);
                if (sd.small_n_sum != n - 1) continue;
                const auto profile = lhs_profile(m_h, k);
                auto it = profile.find(sd.min_weight);
                if (it == profile.end()) continue;
                const ExactInt d = it->second;
                if (d_max > 0 && d > d_max) continue;
                if (!is_solution(n, d, k, m_h, sd.min_weight)) continue;
                WedgeSolution sol{n, d, k, m_h, sd.min_weight};
                if (normalize(sol) == sol) out.push_back(std::move(sol));
            }
        });
    }
}

}  // namespace detail

// Every normalized solution with 4 <= m <= m_max and support span within
// bounds. Work is sharded by total mass m; the merged list is sorted.
inline std::vector<WedgeSolution> enumerate_solutions(long n, const WedgeBounds& bounds) {
    if (n < 2) throw std::invalid_argument("enumeration needs n >= 2");
    const long limit = structural_span_limit(n);
    const long span_max = bounds.span_max < 0 ? limit : std::min(bounds.span_max, limit);
    std::vector<long> masses;
    for (long m = 4; m <= bounds.m_max; ++m) masses.push_back(m);

    std::vector<std::vector<WedgeSolution>> shards(masses.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(bounds.workers, static_cast<unsigned>(masses.size())));
    if (workers <= 1) {
        for (std::size_t j = 0; j < masses.size(); ++j) detail::search_mass(n, masses[j], span_max, bounds.d_max, shards[j]);
    } else {
        std::mutex mu;
        std::size_t next = 0;
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                while (true) {
                    std::size_t j;
                    {
                        std::lock_guard<std::mutex> lock(mu);
                        if (next >= masses.size()) return;
                        j = next++;
                    }
                    detail::search_mass(n, masses[j], span_max, bounds.d_max, shards[j]);
                }
            });
        }
        for (auto& t : pool) t.join();
    }
    std::vector<WedgeSolution> all;
    for (auto& shard : shards)
        for (auto& sol : shard) all.push_back(std::move(sol));
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace hyperab
