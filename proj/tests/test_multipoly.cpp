#include <doctest.h>

#include "pfh/multipoly.hpp"

using namespace pfh;

TEST_CASE("degrevlex order") {
    DegRevLexGreater gt;
    // Degree dominates.
    CHECK(gt({2, 0}, {1, 0}));
    CHECK(!gt({0, 1}, {2, 0}));
    // Same degree: x^2 > xy > y^2 in two variables.
    CHECK(gt({2, 0}, {1, 1}));
    CHECK(gt({1, 1}, {0, 2}));
    // In three variables y^2 > x*z under degrevlex (xz carries the last variable).
    CHECK(gt({0, 2, 0}, {1, 0, 1}));
    CHECK(!gt({1, 1}, {1, 1}));
}

TEST_CASE("arithmetic and canonical form") {
    MultiPoly x = MultiPoly::variable(2, 0);
    MultiPoly y = MultiPoly::variable(2, 1);
    MultiPoly p = (x + y) * (x - y);
    MultiPoly expected = x * x - y * y;
    CHECK(p == expected);
    CHECK(p.term_count() == 2);
    CHECK((p - p).is_zero());
    CHECK(p.degree() == 2);
    CHECK(p.is_homogeneous());
    CHECK(!(p + MultiPoly::constant(2, 1)).is_homogeneous());
    CHECK(p.leading_exponents() == Exponents{2, 0});
}

TEST_CASE("exponent helpers") {
    Exponents a{3, 1, 0}, b{1, 2, 0};
    CHECK(exp_lcm(a, b) == Exponents{3, 2, 0});
    CHECK(exp_gcd(a, b) == Exponents{1, 1, 0});
    CHECK(exp_mul(a, b) == Exponents{4, 3, 0});
    CHECK(!divides(a, b));
    CHECK(divides(exp_gcd(a, b), a));
    CHECK(total_degree(a) == 4);
}

TEST_CASE("string rendering") {
    MultiPoly x = MultiPoly::variable(2, 0);
    MultiPoly y = MultiPoly::variable(2, 1);
    MultiPoly p = x * x - y.scaled(Rat(1, 2));
    CHECK(p.str({"x", "y"}) == "x^2 - 1/2*y");
    CHECK(MultiPoly(2).str() == "0");
}
