#include <algorithm>
#include <vector>

#include <catch_amalgamated.hpp>

#include "hyperab/sequences.hpp"

using namespace hyperab;

TEST_CASE("a(i) and d(i) values") {
    const std::vector<long> expected{1, 5, 20, 76, 285, 1065};
    for (long i = 1; i <= 6; ++i) CHECK(a_seq(i) == expected[static_cast<std::size_t>(i - 1)]);
    CHECK(a_seq(7) == 3976);
    CHECK(d_seq(1) == 6);
    CHECK(d_seq(2) == 53130);
    CHECK(d_seq(3) == ExactInt("216182590635135019896"));
    CHECK_THROWS_AS(a_seq(0), std::invalid_argument);
    CHECK_THROWS_AS(d_seq(0), std::invalid_argument);
}

TEST_CASE("sequence identities") {
    for (long i = 1; i <= 20; ++i) {
        const ExactInt a = a_seq(i), b = a_seq(i + 1);
        CHECK(a_seq(i + 2) == 4 * b + 1 - a);
        if (i <= 7) {
            CHECK(d_seq(i) == binomial(a + b, a));
            CHECK(d_seq(i) == binomial(a + b, b));
        }
        const ExactInt m = a + b, k = a;
        CHECK((m - k) * (m - k) - 4 * (m - k) * k + k * k == m);
        CHECK(is_diophantine_solution(a, b));
    }
    const auto table = sequence_table(6);
    REQUIRE(table.size() == 6);
    CHECK(table.back().i == 6);
    CHECK(table.back().a == 1065);
    CHECK(table[2].d == d_seq(3));
}

TEST_CASE("Diophantine solutions for small bounds") {
    using P = DiophantinePair;
    CHECK(diophantine_solutions(5) == std::vector<P>{{1, 5}});
    CHECK(diophantine_solutions(100) == std::vector<P>{{1, 5}, {5, 20}, {20, 76}});
    CHECK(diophantine_solutions(0).empty());
    CHECK(diophantine_solutions(4).empty());
}

TEST_CASE("exhaustive scan to 10^5 matches consecutive pairs") {
    const auto scan = diophantine_scan(100000);
    std::vector<DiophantinePair> expected;
    for (long i = 1; a_seq(i + 1) <= 100000; ++i) expected.emplace_back(a_seq(i), a_seq(i + 1));
    CHECK(scan == expected);
    CHECK(diophantine_forward(100000) == expected);
    CHECK(diophantine_solutions(100000) == expected);
}

TEST_CASE("scan agrees with a naive double loop") {
    std::vector<DiophantinePair> naive;
    for (long b = 1; b <= 400; ++b)
        for (long a = 1; a <= b; ++a)
            if (a * a - 4 * a * b + b * b == a + b) naive.emplace_back(a, b);
    std::sort(naive.begin(), naive.end());
    CHECK(diophantine_scan(400) == naive);
}

TEST_CASE("descent steps") {
    CHECK(descent_step(5, 20) == DiophantinePair{1, 5});
    CHECK(descent_step(20, 76) == DiophantinePair{5, 20});
    CHECK_THROWS_AS(descent_step(1, 5), BaseCaseReached);
    CHECK_THROWS_AS(descent_step(5, 21), std::invalid_argument);

    const auto chain = descent_chain(285, 1065);
    REQUIRE(chain.size() == 5);
    CHECK(chain.front() == DiophantinePair{285, 1065});
    CHECK(chain.back() == DiophantinePair{1, 5});
}

TEST_CASE("descent then forward map is the identity") {
    for (long i = 2; i <= 15; ++i) {
        const ExactInt a = a_seq(i), b = a_seq(i + 1);
        const auto [c, e] = descent_step(a, b);
        CHECK(c == a_seq(i - 1));
        CHECK(e == a);
        CHECK(DiophantinePair{e, 4 * e + 1 - c} == DiophantinePair{a, b});
    }
}

TEST_CASE("admissible intersection numbers") {
    const auto x = admissible_intersection(53130);
    CHECK_FALSE(x.admissible);
    REQUIRE(x.witness.has_value());
    CHECK(*x.witness == 2);

    CHECK(admissible_intersection(6).admissible);
    CHECK(admissible_intersection(53131).admissible);
    CHECK(admissible_intersection(1).admissible);

    const auto y = admissible_intersection(2 * d_seq(3));
    CHECK_FALSE(y.admissible);
    CHECK(*y.witness == 3);

    const auto z = admissible_intersection(53130 * 7);
    CHECK(*z.witness == 2);
    CHECK_THROWS_AS(admissible_intersection(0), std::invalid_argument);
}
