#include <functional>
#include <set>
#include <vector>

#include <catch_amalgamated.hpp>

#include "hyperab/sequences.hpp"
#include "hyperab/wedge.hpp"
#include "oracles.hpp"

using namespace hyperab;
using oracle::all_vectors;
using oracle::direct_profile;

namespace {

// Normalized solutions found without any structural pruning.
std::set<WedgeSolution> naive_solutions(long n, long m_max, long span_max) {
    std::set<WedgeSolution> out;
    for (long m = 4; m <= m_max; ++m) {
        all_vectors(m, span_max, [&](const std::vector<long>& v) {
            const WeightFunction m_h = oracle::from_vector(v);
            for (long k = 2; k < m - 1; ++k) {
                const auto prof = direct_profile(m_h, k);
                if (static_cast<long>(prof.size()) != n) continue;
                const long s = prof.begin()->first;
                if (prof.rbegin()->first != s + n - 1) continue;
                const ExactInt d = prof.begin()->second;
                bool ok = true;
                for (long q = 0; q < n && ok; ++q) ok = prof.at(s + q) == d * eulerian(n, q);
                if (ok) out.insert(normalize(WedgeSolution{n, d, k, m_h, s}));
            }
        });
    }
    return out;
}

}  // namespace

TEST_CASE("profile examples") {
    CHECK(lhs_profile({{0, 2}, {1, 2}}, 2) == std::map<long, ExactInt>{{0, 1}, {1, 4}, {2, 1}});
    CHECK(lhs_profile({{0, 5}, {1, 1}}, 3) == std::map<long, ExactInt>{{0, 10}, {1, 10}});
    for (long m = 1; m <= 9; ++m)
        for (long k = 0; k <= m; ++k) CHECK(lhs_profile({{0, m}}, k) == std::map<long, ExactInt>{{0, binomial(m, k)}});
    CHECK_THROWS_AS(lhs_profile({{0, 2}}, -1), std::invalid_argument);
    CHECK_THROWS_AS(lhs_profile({{0, 0}}, 1), std::invalid_argument);
}

TEST_CASE("generating function equals direct enumeration for m <= 12") {
    for (long m = 1; m <= 12; ++m) {
        all_vectors(m, 3, [&](const std::vector<long>& v) {
            const WeightFunction m_h = oracle::from_vector(v, -1);
            for (long k = 0; k <= m; ++k) {
                const auto prof = lhs_profile(m_h, k);
                REQUIRE(prof == direct_profile(m_h, k));
                ExactInt total = 0;
                for (const auto& [t, x] : prof) total += x;
                REQUIRE(total == binomial(m, k));
            }
        });
    }
}

TEST_CASE("profile mass is C(m, k) up to m = 16") {
    for (long m = 13; m <= 16; ++m) {
        const WeightFunction m_h{{0, m - 5}, {1, 2}, {3, 2}, {4, 1}};
        for (long k = 0; k <= m; ++k) {
            ExactInt total = 0;
            for (const auto& [t, x] : lhs_profile(m_h, k)) total += x;
            CHECK(total == binomial(m, k));
        }
    }
}

TEST_CASE("solution predicate") {
    CHECK(is_solution(3, 1, 2, {{0, 2}, {1, 2}}, 0));
    CHECK(is_solution(2, 10, 3, {{0, 5}, {1, 1}}, 0));
    CHECK_FALSE(is_solution(4, 1, 2, {{0, 2}, {1, 2}}, 0));
    CHECK_FALSE(is_solution(3, 1, 2, {{0, 2}, {1, 2}}, 1));
    CHECK_FALSE(is_solution(3, 2, 2, {{0, 2}, {1, 2}}, 0));
}

TEST_CASE("structural data examples") {
    const auto a = structural_data({{0, 2}, {1, 2}}, 2);
    CHECK(a.w == 0);
    CHECK(a.w_prime == 1);
    CHECK(a.small_n_sum == 2);
    CHECK(a.m_min == WeightFunction{{0, 2}});
    CHECK(a.m_max == WeightFunction{{1, 2}});

    const auto b = structural_data({{0, 5}, {1, 1}}, 3);
    CHECK(b.w == 0);
    CHECK(b.w_prime == 0);
    CHECK(b.small_n_sum == 1);

    const auto c = structural_data({{0, 4}}, 4);
    CHECK(c.w == 0);
    CHECK(c.w_prime == 0);
    CHECK(c.small_n_sum == 0);

    CHECK_THROWS_AS(structural_data({{0, 2}}, 3), std::invalid_argument);
}

TEST_CASE("classification of known solutions") {
    CHECK(classify(3, {3, 1, 2, {{0, 2}, {1, 2}}, 0}) == WedgeCase::M4K2);
    const WedgeSolution n2{2, binomial(9, 5), 5, {{0, 9}, {1, 1}}, 0};
    REQUIRE(is_solution(n2.n, n2.d, n2.k, n2.m_h, n2.s));
    CHECK(classify(2, n2) == WedgeCase::N2_FAMILY);

    for (long i = 2; i <= 3; ++i) {
        const long k = static_cast<long>(a_seq(i));
        const long m = static_cast<long>(a_seq(i) + a_seq(i + 1));
        const WedgeSolution n3{3, binomial(m - 2, k - 1), k, {{0, 1}, {1, m - 2}, {2, 1}}, k - 1};
        REQUIRE(is_solution(n3.n, n3.d, n3.k, n3.m_h, n3.s));
        CHECK(6 * n3.d == binomial(m, k));
        CHECK((m - k) * (m - k) - 4 * (m - k) * k + k * k == m);
        CHECK(classify(3, n3) == WedgeCase::N3_FAMILY);
    }
    CHECK(binomial(23, 4) == 8855);
    CHECK(classify(5, {5, 1, 3, {{0, 3}, {1, 4}}, 0}) == WedgeCase::UNCLASSIFIED);
    CHECK(to_string(WedgeCase::N3_FAMILY) == "CASE_N3_FAMILY");
}

TEST_CASE("mirror maps solutions to solutions and normalize is idempotent") {
    for (long n = 2; n <= 3; ++n) {
        for (const auto& sol : naive_solutions(n, n == 2 ? 10 : 8, 3)) {
            const WedgeSolution r = mirror(sol);
            CHECK(is_solution(r.n, r.d, r.k, r.m_h, r.s));
            CHECK(mirror(r) == sol);
            CHECK(normalize(r) == normalize(sol));
            CHECK(normalize(normalize(sol)) == normalize(sol));
        }
    }
    const WeightFunction m_h{{-1, 2}, {0, 3}, {2, 1}};
    const long m = total_mass(m_h);
    const long W = weighted_mass(m_h);
    for (long k = 0; k <= m; ++k) {
        WeightFunction flipped;
        for (const auto& [i, v] : m_h) flipped[-i] = v;
        const auto a = lhs_profile(m_h, k);
        const auto b = lhs_profile(flipped, m - k);
        std::map<long, ExactInt> shifted;
        for (const auto& [t, v] : a) shifted[t - W] = v;
        CHECK(shifted == b);
    }
}

TEST_CASE("n = 2 search is exactly the C(2k-1, k) family") {
    WedgeBounds b;
    b.m_max = 12;
    b.span_max = 3;
    const auto sols = enumerate_solutions(2, b);
    REQUIRE(sols.size() == 5);
    for (std::size_t j = 0; j < sols.size(); ++j) {
        const long k = static_cast<long>(j) + 2;
        CHECK(sols[j].k == k);
        CHECK(sols[j].m_h == WeightFunction{{0, 2 * k - 1}, {1, 1}});
        CHECK(sols[j].d == binomial(2 * k - 1, k));
        CHECK(classify(2, sols[j]) != WedgeCase::UNCLASSIFIED);
    }
    const auto naive = naive_solutions(2, 12, 4);
    CHECK(std::set<WedgeSolution>(sols.begin(), sols.end()) == naive);
}

TEST_CASE("n = 3 search finds only the m = 4, k = 2 solution") {
    WedgeBounds b;
    b.m_max = 10;
    b.span_max = 4;
    const auto sols = enumerate_solutions(3, b);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].m_h == WeightFunction{{0, 2}, {1, 2}});
    CHECK(sols[0].d == 1);
    CHECK(classify(3, sols[0]) == WedgeCase::M4K2);
    CHECK(std::set<WedgeSolution>(sols.begin(), sols.end()) == naive_solutions(3, 10, 5));
}

TEST_CASE("n = 4 search is empty and threading does not change results") {
    WedgeBounds b;
    b.m_max = 14;
    b.span_max = 6;
    b.workers = 4;
    CHECK(enumerate_solutions(4, b).empty());

    WedgeBounds serial;
    serial.m_max = 12;
    WedgeBounds parallel = serial;
    parallel.workers = 3;
    CHECK(enumerate_solutions(2, serial) == enumerate_solutions(2, parallel));
}

TEST_CASE("every found solution satisfies the structural equation") {
    for (long n = 2; n <= 3; ++n) {
        WedgeBounds b;
        b.m_max = n == 2 ? 12 : 10;
        for (const auto& sol : enumerate_solutions(n, b)) {
            CHECK(structural_data(sol.m_h, sol.k).small_n_sum == n - 1);
            CHECK(2 * sol.k <= sol.m());
            CHECK(sol.m_h.begin()->first == 0);
        }
    }
}

TEST_CASE("degree cap filters solutions") {
    WedgeBounds b;
    b.m_max = 12;
    b.d_max = 40;
    const auto sols = enumerate_solutions(2, b);
    REQUIRE(sols.size() == 3);
    for (const auto& s : sols) CHECK(s.d <= 40);
    CHECK_THROWS_AS(enumerate_solutions(1, b), std::invalid_argument);
}
