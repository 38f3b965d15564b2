#include <catch_amalgamated.hpp>

#include "hyperab/exppoly.hpp"
#include "hyperab/expr.hpp"

using namespace hyperab;
using expr::A;
using expr::constant;

namespace {

// Exact value of an exponential polynomial whose bases and powers are integral.
ExactRational eval_rational(const ExpPoly& p, long n) {
    ExactRational s = 0;
    for (const auto& t : p) {
        REQUIRE(t.base.e == 1);
        REQUIRE(denominator_of(t.k) == 1);
        s += t.coef * rpow(ExactRational(n), static_cast<long>(numerator_of(t.k))) * rpow(t.base.r, n);
    }
    return s;
}

}  // namespace

TEST_CASE("expression printing") {
    const ExprPtr n = expr::n();
    CHECK(to_string(A(2) / (A(1) * A(1))) == "A(n,2)/(A(n,1)*A(n,1))");
    CHECK(to_string(n + 1 + (n - 1) / constant(2) * A(1)) == "n + 1 + (n - 1)/2*A(n,1)");
    CHECK(to_string(expr::sqrt(2 * A(4)) + 1) == "sqrt(2*A(n,4)) + 1");
    CHECK(to_string(constant(-3) * n) == "(-3)*n");
    CHECK(to_string(n - (n - 1)) == "n - (n - 1)");
    CHECK_THROWS_AS(A(-1), std::invalid_argument);
}

TEST_CASE("exact evaluation") {
    CHECK(evaluate_exact(A(1) * A(1), 5) == 676);
    CHECK(evaluate_exact(A(1) * A(1) / constant(10), 5) == make_rational(676, 10));
    CHECK(evaluate_exact(expr::factorial_n() - expr::n(), 5) == 115);
    CHECK(evaluate_exact(A(7), 5) == 0);
    CHECK(evaluate_exact(expr::pow(A(1), 3), 4) == 1331);
    CHECK_THROWS_AS(evaluate_exact(expr::sqrt(A(1)), 4), std::invalid_argument);
    CHECK(max_eulerian_index(A(2) + A(5) * A(1)) == 5);
    CHECK(contains_factorial(expr::sqrt(expr::factorial_n())));
    CHECK_FALSE(contains_sqrt(A(2) + A(1)));
}

TEST_CASE("square-root comparisons are exact at equality") {
    const ExprPtr four = constant(4), two = constant(2);
    CHECK(compare_at(expr::sqrt(four), Relation::LE, two, 1));
    CHECK_FALSE(compare_at(expr::sqrt(four), Relation::LT, two, 1));
    CHECK_FALSE(compare_at(two, Relation::GT, expr::sqrt(four), 1));
    CHECK_FALSE(compare_at(two, Relation::LT, expr::sqrt(four), 1));
    CHECK(compare_at(two, Relation::LE, expr::sqrt(four), 1));
    CHECK_FALSE(compare_at(expr::sqrt(four), Relation::GT, two, 1));
    CHECK(compare_at(expr::sqrt(constant(5)), Relation::GT, two, 1));
    CHECK(compare_at(expr::sqrt(constant(3)), Relation::LT, two, 1));
    CHECK_FALSE(compare_at(expr::sqrt(constant(4)), Relation::LT, constant(-1), 1));
    CHECK(compare_at(constant(-1), Relation::LT, expr::sqrt(constant(0)), 1));
}

TEST_CASE("nested square roots are decided by refinement") {
    const ExprPtr lhs = expr::sqrt(constant(2)) + expr::sqrt(constant(3));
    CHECK(compare_at(lhs, Relation::LT, expr::sqrt(constant(10)), 1));
    CHECK_FALSE(compare_at(lhs, Relation::GT, expr::sqrt(constant(10)), 1));
    const ExprPtr twice = expr::sqrt(constant(2)) + expr::sqrt(constant(2));
    CHECK_THROWS_AS(compare_at(twice, Relation::LT, expr::sqrt(constant(8)), 1), UndecidedComparison);
    CHECK_THROWS_AS(evaluate(expr::sqrt(constant(-1)), 1, 64), std::domain_error);
}

TEST_CASE("interval enclosures contain the true value") {
    for (unsigned bits : {16u, 64u, 256u}) {
        const Interval r = root_bracket(ExactRational(2), 2, bits);
        CHECK(r.lo * r.lo <= 2);
        CHECK(r.hi * r.hi >= 2);
        CHECK(r.hi - r.lo <= rpow(ExactRational(2), -static_cast<long>(bits) + 1));
    }
    const Interval x = evaluate(expr::sqrt(A(1)) * expr::sqrt(A(1)), 6, 128);
    CHECK(x.lo <= 57);
    CHECK(x.hi >= 57);
}

TEST_CASE("bases simplify and compare") {
    const Base b = simplify({ExactRational(9), 2});
    CHECK(b.r == 3);
    CHECK(b.e == 1);
    CHECK(compare(Base{2, 1}, Base{8, 2}) < 0);
    CHECK(compare(Base{3, 1}, Base{9, 2}) == 0);
    const Base q = Base{3, 1} / Base{4, 1};
    CHECK(q.r == make_rational(3, 4));
    CHECK_THROWS_AS(simplify({ExactRational(-1), 1}), std::domain_error);
}

TEST_CASE("canonical form merges like terms") {
    const ExpPoly p = poly_exp(2, 3) + poly_exp(-2, 3) + poly_n();
    REQUIRE(p.size() == 1);
    CHECK(p.front().k == 1);
    const ExpPoly q = poly_exp(1, 2) * poly_exp(1, 3);
    REQUIRE(q.size() == 1);
    CHECK(q.front().base.r == 6);
}

TEST_CASE("monotone thresholds") {
    CHECK(monotone_threshold(0, Base{make_rational(1, 2), 1}, 1000) == 1);
    CHECK_FALSE(monotone_threshold(1, Base{1, 1}, 1000).has_value());
    CHECK_FALSE(monotone_threshold(0, Base{2, 1}, 1000).has_value());
    const auto m = monotone_threshold(1, Base{make_rational(3, 4), 1}, 1000);
    REQUIRE(m.has_value());
    // (M+1)/M * 3/4 <= 1 first holds at M = 3.
    CHECK(*m == 3);
}

TEST_CASE("eventual positivity thresholds are sound") {
    const ExpPoly n_poly = poly_n();
    const std::vector<ExpPoly> cases{
        poly_exp(1, 3) - n_poly * poly_exp(1, 2),
        poly_exp(1, 2) - n_poly * n_poly * n_poly,
        poly_exp(make_rational(1, 27), 1) + poly_exp(-5, make_rational(3, 4)),
        poly_exp(1, 4) - poly_exp(30, 3) - n_poly * poly_exp(7, 2),
        poly_constant(3) - poly_exp(100, make_rational(1, 2)),
    };
    for (const auto& p : cases) {
        const auto N = eventually_positive(p, 1);
        REQUIRE(N.has_value());
        for (long n = *N; n <= *N + 300; ++n) REQUIRE(eval_rational(p, n) > 0);
    }
    CHECK_FALSE(eventually_positive(poly_exp(-1, 3), 1).has_value());
    CHECK_FALSE(eventually_positive(poly_exp(1, 2) - poly_exp(1, 3), 1).has_value());
    CHECK_FALSE(eventually_positive(poly_exp(1, 3) - poly_exp(1, 3) * n_poly, 1).has_value());
    CHECK_FALSE(eventually_positive(poly_exp(1, 2) - poly_exp(2, 2), 1).has_value());
    CHECK(eventually_positive(poly_exp(1, 2), 7) == 7);
}

TEST_CASE("positivity search respects the cap") {
    const ExpPoly slow = poly_exp(1, make_rational(10001, 10000)) - poly_exp(1000, 1);
    CHECK_FALSE(eventually_positive(slow, 1, 10000).has_value());
    const ExpPoly far = poly_exp(1, make_rational(101, 100)) - poly_exp(1000000, 1);
    const auto N = eventually_positive(far, 1, 10000);
    REQUIRE(N.has_value());
    CHECK(*N > 512);
    CHECK(rpow(make_rational(101, 100), *N) > 1000000);
}
