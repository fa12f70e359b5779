#include <doctest.h>

#include <cmath>

#include "georoute/geometry.hpp"
#include "georoute/rng.hpp"

using namespace georoute;

TEST_CASE("distance basics") {
    CHECK(distance({0, 0}, {0, 0}) == 0.0);
    CHECK(distance({0, 0}, {3, 4}) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(distance({1, 1}, {4, 5}) == doctest::Approx(5.0).epsilon(1e-12));
    // symmetry
    CHECK(distance({2, -7}, {-1, 3}) == distance({-1, 3}, {2, -7}));
}

TEST_CASE("direction basics and degenerate query") {
    CHECK(direction({0, 0}, {5, 0}).angle() == doctest::Approx(0.0));
    CHECK(direction({0, 0}, {0, 2}).angle() == doctest::Approx(M_PI / 2));
    CHECK(direction({2, 2}, {1, 1}).angle() == doctest::Approx(5 * M_PI / 4));
    CHECK_THROWS_AS(direction({1, 1}, {1, 1}), CoincidentPoints);
}

TEST_CASE("step displaces by exactly delta") {
    Point p = step({0, 0}, Direction::from_angle(0.0), 1.0);
    CHECK(p.x == doctest::Approx(1.0));
    CHECK(p.y == doctest::Approx(0.0).scale(1.0));
    p = step({0, 0}, Direction::from_angle(M_PI / 2), 2.0);
    CHECK(p.x == doctest::Approx(0.0).scale(1.0));
    CHECK(p.y == doctest::Approx(2.0));
    p = step({1, 0}, Direction::from_angle(M_PI), 1.0);
    CHECK(p.x == doctest::Approx(0.0).scale(1.0));
    CHECK_THROWS_AS(step({0, 0}, Direction::from_angle(0.3), 0.0), NonPositiveStep);
    CHECK_THROWS_AS(step({0, 0}, Direction::from_angle(0.3), -1.0), NonPositiveStep);
}

TEST_CASE("step then distance across ten decades of delta") {
    RandomStream rs(7, 0);
    for (int i = 0; i < 200; ++i) {
        const double delta = std::pow(10.0, -6.0 + 12.0 * rs.uniform());
        const Point p{rs.uniform() * 100 - 50, rs.uniform() * 100 - 50};
        const Direction d = Direction::from_angle(rs.uniform() * 2 * M_PI);
        CHECK(distance(p, step(p, d, delta)) == doctest::Approx(delta).epsilon(1e-9));
    }
}

TEST_CASE("alpha_from_sigma closed forms") {
    CHECK(alpha_from_sigma(1.0) == 0.0);
    CHECK(alpha_from_sigma(2.0) == doctest::Approx(M_PI / 3).epsilon(1e-12));
    // arccos(1/1.1), frozen from an arbitrary-precision evaluation
    CHECK(alpha_from_sigma(1.1) == doctest::Approx(0.42969966615142452).epsilon(1e-12));
    CHECK_THROWS_AS(alpha_from_sigma(0.99), InvalidStretch);
}

TEST_CASE("alpha_from_sigma inverts sigma = 1/cos(alpha)") {
    for (double alpha = 0.01; alpha < M_PI / 2 - 0.01; alpha += 0.037) {
        CHECK(alpha_from_sigma(1.0 / std::cos(alpha)) == doctest::Approx(alpha).epsilon(1e-12));
    }
    // monotone in sigma
    double prev = 0.0;
    for (double sigma = 1.0; sigma < 8.0; sigma += 0.25) {
        const double a = alpha_from_sigma(sigma);
        CHECK(a >= prev);
        prev = a;
    }
}

TEST_CASE("max_deviation_angle closed forms") {
    CHECK(max_deviation_angle({0, 0}, {2, 0}, 1.0) == doctest::Approx(M_PI / 6).epsilon(1e-12));
    CHECK(max_deviation_angle({0, 0}, {10, 0}, 10.0 * std::sin(0.1)) ==
          doctest::Approx(0.1).epsilon(1e-12));
    CHECK_THROWS_AS(max_deviation_angle({0, 0}, {1, 0}, 1.0), InsideAggregate);
    CHECK_THROWS_AS(max_deviation_angle({0, 0}, {1, 0}, 2.0), InsideAggregate);
}

TEST_CASE("max_deviation_angle dominates the angle to any interior point") {
    RandomStream rs(11, 0);
    for (int i = 0; i < 50; ++i) {
        const Point c{rs.uniform() * 20 - 10, rs.uniform() * 20 - 10};
        const double r = 0.1 + rs.uniform() * 3.0;
        Point p;
        do {
            p = Point{rs.uniform() * 40 - 20, rs.uniform() * 40 - 20};
        } while (distance(p, c) <= r * 1.01);
        const double bound = max_deviation_angle(p, c, r);
        for (int k = 0; k < 200; ++k) {
            Point q;
            do {
                q = Point{c.x + (2 * rs.uniform() - 1) * r, c.y + (2 * rs.uniform() - 1) * r};
            } while (distance(q, c) > r);
            CHECK(angle_between(direction(p, c), direction(p, q)) <= bound + 1e-12);
        }
    }
}
