#include <doctest.h>

#include <cmath>

#include "rotlab/geom.hpp"
#include "rotlab/solve.hpp"

using namespace rotlab;

TEST_CASE("lift points live in the closed lower half plane") {
    LiftPoint p(3.25, -0.5);
    CHECK(p.x1 == 3.25);
    CHECK(p.r == -0.5);
    CHECK_NOTHROW(LiftPoint(0.0, 0.0));  // boundary circle allowed
    CHECK_THROWS_AS(LiftPoint(0.0, 0.25), precondition_error);
    CHECK_THROWS_AS(LiftPoint(0.0, std::nan("")), precondition_error);
}

TEST_CASE("deck transformation shifts the first coordinate only") {
    LiftPoint p(0.75, -1.5);
    LiftPoint q = deck(p, 3);
    CHECK(q.x1 == 3.75);
    CHECK(q.r == -1.5);
    LiftPoint back = deck(q, -3);
    CHECK(back.x1 == p.x1);
    CHECK(back.r == p.r);
}

TEST_CASE("distance and nearest-integer helpers") {
    CHECK(dist(LiftPoint(0, 0), LiftPoint(3, -4)) == doctest::Approx(5.0));
    CHECK(frac_dist(2.75) == doctest::Approx(0.25));
    CHECK(frac_dist(-0.4) == doctest::Approx(0.4));
    CHECK(frac_dist(7.0) == 0.0);
}

TEST_CASE("monotone solver recovers roots to high accuracy") {
    auto f = [](double x) { return x * x * x; };
    auto df = [](double x) { return 3.0 * x * x; };
    double root = solve_increasing(f, df, 8.0, 0.0, 3.0);
    CHECK(root == doctest::Approx(2.0).epsilon(1e-13));

    // Endpoint hits are returned directly.
    CHECK(solve_increasing(f, df, 0.0, 0.0, 3.0) == 0.0);
    CHECK(solve_increasing(f, df, 27.0, 0.0, 3.0) == 3.0);

    CHECK_THROWS_AS(solve_increasing(f, df, 100.0, 0.0, 3.0), precondition_error);
    CHECK_THROWS_AS(solve_increasing(f, df, -1.0, 0.0, 3.0), precondition_error);
}

TEST_CASE("solver handles flat derivatives via the bisection safeguard") {
    // f'(0) = 0: the pure Newton step explodes; the bracket keeps it safe.
    auto f = [](double x) { return x * x * x - x * x * x * x / 4.0; };
    auto df = [](double x) { return 3.0 * x * x - x * x * x; };
    double root = solve_increasing(f, df, 0.002, -0.5, 1.0);
    CHECK(f(root) == doctest::Approx(0.002).epsilon(1e-10));
}
