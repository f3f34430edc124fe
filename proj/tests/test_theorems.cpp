#include "doctest.h"

#include <stdexcept>

#include "picod/model.hpp"
#include "picod/rational.hpp"
#include "picod/theorems.hpp"

using namespace picod;

TEST_CASE("fractional consecutive lengths") {
    CHECK(optimal_length_consecutive(3, 1, 2, 2) == Rational(3, 2));
    CHECK(optimal_length_consecutive(4, 2, 2, 2) == Rational(12, 5));
    CHECK(optimal_length_consecutive(4, 1, 3, 3) == Rational(4, 3));
    CHECK(optimal_length_consecutive(6, 3, 3, 3) == Rational(60, 19));
    // n - 1 = 1 collapses the fraction to an integer
    CHECK(optimal_length_consecutive(2, 1, 1, 1) == Rational(2));
}

TEST_CASE("windowed consecutive lengths") {
    CHECK(optimal_length_consecutive(3, 1, 1, 2) == Rational(2));
    CHECK(optimal_length_consecutive(5, 1, 1, 3) == Rational(4));
    CHECK(optimal_length_consecutive(6, 2, 1, 3) == Rational(5));
    CHECK(optimal_length_consecutive(8, 3, 0, 5) == Rational(8));
    CHECK(optimal_length_consecutive(5, 2, 0, 3) == Rational(5));
    // smax+t wins when the tail is long
    CHECK(optimal_length_consecutive(8, 1, 0, 2) == Rational(3));
}

TEST_CASE("consecutive range validation") {
    CHECK_THROWS_AS(optimal_length_consecutive(3, 1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(optimal_length_consecutive(3, 1, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(optimal_length_consecutive(3, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("complement lengths") {
    // |S| = (m-t+1) - excised
    CHECK(optimal_length_complement(6, 2, 1, 3) == Rational(4));
    CHECK(optimal_length_complement(7, 2, 2, 3) == Rational(6));
    // m wins when the size set is rich enough
    CHECK(optimal_length_complement(5, 3, 1, 1) == Rational(5));
    CHECK(optimal_length_complement(4, 2, 1, 1) == Rational(4));
    CHECK_THROWS_AS(optimal_length_complement(6, 2, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(optimal_length_complement(6, 2, 1, 4), std::invalid_argument);
}

TEST_CASE("counting lower bound applies only to the single top size") {
    CHECK(fano_lower_bound(3, 1, 2) == Rational(3, 2));
    CHECK(fano_lower_bound(4, 2, 2) == Rational(12, 5));
    CHECK(fano_lower_bound(4, 1, 3) == Rational(4, 3));
    CHECK_THROWS_AS(fano_lower_bound(4, 1, 2), std::invalid_argument);
}

TEST_CASE("centralized comparison") {
    // fractional regime: centralized collapses to t, decentralized does not
    ProblemInstance frac = ProblemInstance::consecutive(3, 1, 2, 2);
    CHECK(centralized_length(frac) == Rational(1));
    CHECK(optimal_length(frac).value == Rational(3, 2));

    ProblemInstance window = ProblemInstance::consecutive(5, 1, 1, 3);
    CHECK(centralized_length(window) == Rational(4));
    CHECK(optimal_length(window).value == centralized_length(window));

    ProblemInstance comp = ProblemInstance::complement(6, 2, 1, 3);
    CHECK(centralized_length(comp) == optimal_length(comp).value);

    ProblemInstance odd = ProblemInstance::complete(6, 2, {0, 2, 4});
    CHECK_THROWS_AS(centralized_length(odd), std::domain_error);
}

TEST_CASE("dispatch labels the closed-form case") {
    LengthBound frac = optimal_length(ProblemInstance::consecutive(4, 2, 2, 2));
    CHECK(frac.value == Rational(12, 5));
    CHECK(frac.source == "consecutive-fractional");
    CHECK_FALSE(frac.below_floor);

    LengthBound window = optimal_length(ProblemInstance::consecutive(6, 2, 1, 3));
    CHECK(window.value == Rational(5));
    CHECK(window.source == "consecutive-minimum");
    CHECK_FALSE(window.below_floor);

    LengthBound comp = optimal_length(ProblemInstance::complement(7, 2, 2, 3));
    CHECK(comp.value == Rational(6));
    CHECK(comp.source == "complement-minimum");
    CHECK_FALSE(comp.below_floor);

    CHECK_THROWS_AS(optimal_length(ProblemInstance::complete(6, 2, {0, 2, 4})),
                    std::domain_error);
}

TEST_CASE("closed forms never dip under the trivial floor on valid ranges") {
    for (int m = 2; m <= 8; ++m) {
        for (int t = 1; t <= 3 && t < m; ++t) {
            for (int smin = 0; smin <= m - t; ++smin) {
                for (int smax = smin; smax <= m - t; ++smax) {
                    if (smin == 0 && smax == 0) continue;
                    LengthBound b =
                        optimal_length(ProblemInstance::consecutive(m, t, smin, smax));
                    CHECK_FALSE(b.below_floor);
                    CHECK(Rational(t) < b.value);
                }
            }
            for (int smin = 1; smin + 1 <= m - t; ++smin) {
                for (int smax = smin; smax + 1 <= m - t; ++smax) {
                    LengthBound b =
                        optimal_length(ProblemInstance::complement(m, t, smin, smax));
                    CHECK_FALSE(b.below_floor);
                }
            }
        }
    }
}

TEST_CASE("rational arithmetic stays exact") {
    Rational a(3, 2);
    Rational b(12, 5);
    CHECK(a + b == Rational(39, 10));
    CHECK(b - a == Rational(9, 10));
    CHECK(a * b == Rational(18, 5));
    CHECK(b / a == Rational(8, 5));
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-3, -2) == Rational(3, 2));
    CHECK(a < b);
    CHECK(picod::min(a, b) == a);
    CHECK(picod::max(a, b) == b);
    CHECK(Rational(4).is_integer());
    CHECK_FALSE(a.is_integer());
    CHECK(a.str() == "3/2");
    CHECK(Rational(4).str() == "4");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}
