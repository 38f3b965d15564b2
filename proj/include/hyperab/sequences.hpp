#pragma once

// The sequences a(i), d(i) and the Diophantine equation a^2 - 4ab + b^2 = a + b.
//
//   a(1) = 1, a(2) = 5, a(i+2) = 4 a(i+1) + 1 - a(i)
//   d(i) = C(a(i) + a(i+1), a(i))

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperab/eulerian.hpp"
#include "hyperab/exact.hpp"

namespace hyperab {

using DiophantinePair = std::pair<ExactInt, ExactInt>;

struct SequencePair {
    long i = 1;
    ExactInt a;
    ExactInt d;
};

inline ExactInt a_seq(long i) {
    if (i < 1) throw std::invalid_argument("a(i) needs i >= 1, got i = " + std::to_string(i));
    ExactInt prev = 1;
    ExactInt cur = 5;
    if (i == 1) return prev;
    for (long k = 2; k < i; ++k) {
        ExactInt next = 4 * cur + 1 - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline ExactInt binomial(const ExactInt& n, const ExactInt& k) {
    if (k < 0 || k > n) return 0;
    ExactInt kk = (k > n - k) ? ExactInt(n - k) : k;
    ExactInt result = 1;
    for (ExactInt i = 0; i < kk; ++i) {
        result *= (n - i);
        result /= (i + 1);
    }
    return result;
}

inline ExactInt d_seq(long i) {
    if (i < 1) throw std::invalid_argument("d(i) needs i >= 1, got i = " + std::to_string(i));
    const ExactInt a = a_seq(i);
    const ExactInt b = a_seq(i + 1);
    return binomial(ExactInt(a + b), a);
}

inline std::vector<SequencePair> sequence_table(long i_max) {
    std::vector<SequencePair> rows;
    for (long i = 1; i <= i_max; ++i) rows.push_back({i, a_seq(i), d_seq(i)});
    return rows;
}

inline bool is_diophantine_solution(const ExactInt& a, const ExactInt& b) {
    return a * a - 4 * a * b + b * b == a + b;
}

// For each a <= bound, the equation is a quadratic in b with discriminant
// 12a^2 + 12a + 1; an integer b needs that to be a perfect square.
inline std::vector<DiophantinePair> diophantine_scan(const ExactInt& bound) {
    std::vector<DiophantinePair> out;
    for (ExactInt a = 1; a <= bound; ++a) {
        const ExactInt disc = 12 * a * a + 12 * a + 1;
        ExactInt root;
        if (!is_perfect_power(disc, 2, &root)) continue;
        for (const ExactInt& twice_b : {ExactInt(4 * a + 1 + root), ExactInt(4 * a + 1 - root)}) {
            if (twice_b % 2 != 0) continue;
            const ExactInt b = twice_b / 2;
            if (b >= a && b <= bound && is_diophantine_solution(a, b)) out.emplace_back(a, b);
        }
    }
    return out;
}

// (a, b) -> (b, 4b + 1 - a) starting from (1, 5).
inline std::vector<DiophantinePair> diophantine_forward(const ExactInt& bound) {
    std::vector<DiophantinePair> out;
    ExactInt a = 1;
    ExactInt b = 5;
    while (b <= bound) {
        out.emplace_back(a, b);
        ExactInt next = 4 * b + 1 - a;
        a = std::move(b);
        b = std::move(next);
    }
    return out;
}

// All 1 <= a <= b <= bound solving the equation; the scan and the forward
// iteration must agree or a logic_error is raised.
inline std::vector<DiophantinePair> diophantine_solutions(const ExactInt& bound) {
    auto scan = diophantine_scan(bound);
    if (scan != diophantine_forward(bound)) {
        throw std::logic_error("Diophantine scan and forward iteration disagree below " + bound.str());
    }
    return scan;
}

struct BaseCaseReached : std::domain_error {
    BaseCaseReached() : std::domain_error("descent reached the base case a = 1, b = 5") {}
};

// (a, b) -> (4a + 1 - b, a)
inline DiophantinePair descent_step(const ExactInt& a, const ExactInt& b) {
    if (a < 1 || b < a || !is_diophantine_solution(a, b)) {
        throw std::invalid_argument("(" + a.str() + ", " + b.str() + ") is not a solution with 1 <= a <= b");
    }
    if (a == 1) throw BaseCaseReached();
    return {4 * a + 1 - b, a};
}

// Descends until the base case and returns the visited pairs, starting pair first.
inline std::vector<DiophantinePair> descent_chain(ExactInt a, ExactInt b) {
    std::vector<DiophantinePair> chain{{a, b}};
    while (true) {
        try {
            auto next = descent_step(a, b);
            a = next.first;
            b = next.second;
            chain.emplace_back(a, b);
        } catch (const BaseCaseReached&) {
            return chain;
        }
    }
}

struct Admissibility {
    bool admissible = true;
    std::optional<long> witness;  // index i >= 2 with d(i) | input
    long terms_checked = 0;
};

// True iff no d(i) with i >= 2 divides the input.
inline Admissibility admissible_intersection(const ExactInt& triple_product) {
    if (triple_product < 1) throw std::invalid_argument("intersection number must be positive");
    Admissibility out;
    for (long i = 2;; ++i) {
        const ExactInt d = d_seq(i);
        if (d > triple_product) break;
        ++out.terms_checked;
        if (triple_product % d == 0) {
            out.admissible = false;
            out.witness = i;
            break;
        }
    }
    return out;
}

}  // namespace hyperab
