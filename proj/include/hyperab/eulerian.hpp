#pragma once

// Eulerian numbers A(n, q) and binomial coefficients over exact integers.
//
// A(n, q) counts permutations of {1..n} with exactly q ascents. Following the
// usual convention, A(n, q) = 0 unless 0 <= q < n. Two independent routes
// are provided: the memoized recurrence table and the alternating-sum closed
// form
//
//   (-1)^n sum_{j=0}^{q+1} (-1)^j C(n+1, q+1-j) j^n = (-1)^(n-1-q) A(n, q).

#include <deque>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperab/exact.hpp"

namespace hyperab {

// Binomial coefficient; generalized to negative n through the falling
// factorial, and zero for k < 0 (or k > n when n >= 0).
inline ExactInt binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0 && k > n) return 0;
    if (n >= 0 && k > n - k) k = n - k;
    ExactInt result = 1;
    for (long i = 0; i < k; ++i) {
        result *= (n - i);
        result /= (i + 1);
    }
    return result;
}

namespace detail {

inline void require_positive_n(long n) {
    if (n <= 0) throw std::invalid_argument("Eulerian numbers need n >= 1, got n = " + std::to_string(n));
}

inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

// Signed alternating sum (-1)^n sum_j (-1)^j C(n+1, i+1-j) j^n.
inline ExactInt alternating_sum(long n, long i) {
    ExactInt sum = 0;
    for (long j = 0; j <= i + 1; ++j) {
        ExactInt term = binomial(n + 1, i + 1 - j) * ipow(ExactInt(j), static_cast<unsigned long>(n));
        if (j % 2 == 0) sum += term; else sum -= term;
    }
    return parity_sign(n) * sum;
}

}  // namespace detail

// Memoized rows of Eulerian numbers built by the recurrence
// A(n, q) = (q+1) A(n-1, q) + (n-q) A(n-1, q-1).
//
// Requesting any entry materializes the whole row (and all rows below it).
// Rows are never moved once built, so references returned by row() stay
// valid; growth is serialized by a mutex and reads of built rows are safe
// from any thread.
class EulerianTable {
public:
    const std::vector<ExactInt>& row(long n) {
        detail::require_positive_n(n);
        std::lock_guard<std::mutex> lock(mutex_);
        while (static_cast<long>(rows_.size()) < n) extend();
        return rows_[static_cast<std::size_t>(n - 1)];
    }

    ExactInt at(long n, long q) {
        const auto& r = row(n);
        if (q < 0 || q >= n) return 0;
        return r[static_cast<std::size_t>(q)];
    }

    // Builds every row up to n_max ahead of concurrent use.
    void reserve(long n_max) {
        if (n_max >= 1) row(n_max);
    }

    long rows_built() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return static_cast<long>(rows_.size());
    }

    static EulerianTable& shared() {
        static EulerianTable table;
        return table;
    }

private:
    void extend() {
        const long n = static_cast<long>(rows_.size()) + 1;
        std::vector<ExactInt> next(static_cast<std::size_t>(n));
        if (n == 1) {
            next[0] = 1;
        } else {
            const auto& prev = rows_.back();
            for (long q = 0; q < n; ++q) {
                ExactInt v = 0;
                if (q < n - 1) v += (q + 1) * prev[static_cast<std::size_t>(q)];
                if (q >= 1) v += (n - q) * prev[static_cast<std::size_t>(q - 1)];
                next[static_cast<std::size_t>(q)] = std::move(v);
            }
        }
        rows_.push_back(std::move(next));
    }

    mutable std::mutex mutex_;
    std::deque<std::vector<ExactInt>> rows_;
};

// A(n, q) from the shared recurrence table. Out-of-range q gives 0.
inline ExactInt eulerian(long n, long q) {
    detail::require_positive_n(n);
    return EulerianTable::shared().at(n, q);
}

// A(n, q) from the alternating closed form; costs O(q) big-integer terms, so
// it is the route of choice for small q and large n.
inline ExactInt eulerian_closed(long n, long q) {
    detail::require_positive_n(n);
    if (q < 0 || q >= n) return 0;
    return detail::parity_sign(n - 1 - q) * detail::alternating_sum(n, q);
}

inline std::vector<ExactInt> eulerian_row(long n) {
    detail::require_positive_n(n);
    return EulerianTable::shared().row(n);
}

// Evaluates both sides of the alternating identity exactly.
inline bool alternating_identity_check(long n, long i) {
    if (n < 1 || i < 0 || i >= n) return false;
    return detail::alternating_sum(n, i) == detail::parity_sign(n - 1 - i) * eulerian(n, i);
}

template <typename T>
bool is_palindromic(const std::vector<T>& xs) {
    for (std::size_t i = 0, j = xs.size(); i < j; ++i) {
        --j;
        if (i < j && xs[i] != xs[j]) return false;
    }
    return true;
}

// x_q^2 >= x_{q-1} x_{q+1} at every interior index.
template <typename T>
bool is_log_concave(const std::vector<T>& xs) {
    for (std::size_t q = 1; q + 1 < xs.size(); ++q) {
        if (xs[q] * xs[q] < xs[q - 1] * xs[q + 1]) return false;
    }
    return true;
}

}  // namespace hyperab
