#include <doctest.h>

#include "pfh/identities.hpp"

using namespace pfh;

TEST_CASE("q_value vanishes on known spot cases") {
    CHECK(q_value({1, 2, 2, 0}) == 0);
    CHECK(q_value({0, 0, 1, 1}) == 0);
    CHECK(q_value({2, 3, 4, 2}) == 0);
    CHECK_THROWS(q_value({0, 0, 1, -1}));
}

TEST_CASE("q_value support bounds: widening adds only zero terms") {
    for (long w = -4; w <= 6; ++w)
        for (long t = -2; t <= 5; ++t)
            for (long I = -2; I <= 7; ++I)
                for (long a = 0; a <= 4; ++a)
                    CHECK(q_value({w, t, I, a}) == q_value({w, t, I, a}, 3));
}

TEST_CASE("prop_hypotheses_hold") {
    CHECK(prop_hypotheses_hold({1, 2, 2, 0}));
    CHECK(!prop_hypotheses_hold({0, -1, 1, 0}));
    CHECK(!prop_hypotheses_hold({-3, 5, 1, 2}));
    CHECK(!prop_hypotheses_hold({0, 0, 0, 0}));  // I - 1 negative
}

TEST_CASE("recurrence residual vanishes on the hypothesis domain") {
    CHECK(recurrence_residual(1, 0, 1, 0) == 0);
    CHECK(recurrence_residual(0, 2, 3, 1) == 0);
    CHECK(recurrence_residual(2, 4, 5, 3) == 0);
}

TEST_CASE("alternating_partial_sum") {
    CHECK(alternating_partial_sum(5, 2) == 6);
    CHECK(alternating_partial_sum(7, -1) == 0);
    CHECK(alternating_partial_sum(0, 4) == 1);
}

TEST_CASE("ku92 identity") {
    CHECK(ku92_residual(0, 0, 0) == 0);
    CHECK(ku92_residual(2, 0, -1) == 0);
    CHECK(ku92_residual(3, 5, -2) == 0);
    CHECK_THROWS(ku92_residual(-1, 0, 0));
}

TEST_CASE("convolution identity") {
    CHECK(convolution_residual(2, 2, 1) == 0);
    CHECK(convolution_residual(2, 2, 2) == 0);
    CHECK(convolution_residual(3, 1, 3) == 0);
    CHECK_THROWS(convolution_residual(3, 1, 0));  // below floor((n+1)/2)
    CHECK_THROWS(convolution_residual(3, 1, 4));
}

TEST_CASE("unit series expansion identity") {
    CHECK(unit_series_residual(3, 2, 0) == 0);
    CHECK(unit_series_residual(3, 2, 1) == 0);
    CHECK(unit_series_residual(5, 4, 4) == 0);
    CHECK_THROWS(unit_series_residual(3, 2, 4));
}
