#pragma once

// Planar primitives: points, unit directions and the angular bounds that
// drive aggregate usability. Everything here is a pure function over
// immutable values; safe to call from any thread.

#include <cmath>

#include "georoute/errors.hpp"

namespace georoute {

struct Point {
    double x{0.0};
    double y{0.0};

    friend bool operator==(const Point&, const Point&) = default;
};

/// Unit vector. Construct via direction() or from_angle(); the invariant
/// ux^2 + uy^2 = 1 holds within 1e-12.
struct Direction {
    double ux{1.0};
    double uy{0.0};

    static Direction from_angle(double radians) {
        return Direction{std::cos(radians), std::sin(radians)};
    }

    friend bool operator==(const Direction&, const Direction&) = default;

    /// Angle in [0, 2*pi).
    double angle() const {
        double a = std::atan2(uy, ux);
        if (a < 0.0) a += 2.0 * M_PI;
        return a;
    }
};

inline double distance(Point a, Point b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// Unit vector pointing from `from` to `to`. Throws CoincidentPoints on a
/// degenerate query.
inline Direction direction(Point from, Point to) {
    const double dx = to.x - from.x;
    const double dy = to.y - from.y;
    const double n = std::hypot(dx, dy);
    if (n == 0.0) throw CoincidentPoints("direction: coincident points");
    return Direction{dx / n, dy / n};
}

/// Displace p by delta along d.
inline Point step(Point p, Direction d, double delta) {
    if (!(delta > 0.0)) throw NonPositiveStep("step: delta must be positive");
    return Point{p.x + delta * d.ux, p.y + delta * d.uy};
}

/// Maximum angular size alpha = arccos(1/sigma) that still guarantees
/// stretch sigma. Monotonically increasing in sigma, 0 at sigma = 1.
inline double alpha_from_sigma(double sigma) {
    if (!(sigma >= 1.0)) throw InvalidStretch("alpha_from_sigma: sigma < 1");
    return std::acos(1.0 / sigma);
}

/// Exact maximum angle at p between the direction to `center` and the
/// direction to any point of the ball B(center, radius). Requires p
/// strictly outside the ball.
inline double max_deviation_angle(Point p, Point center, double radius) {
    const double d = distance(p, center);
    if (!(d > radius))
        throw InsideAggregate("max_deviation_angle: point inside the ball");
    return std::asin(radius / d);
}

/// Unsigned angle between two unit directions, in [0, pi].
inline double angle_between(Direction a, Direction b) {
    double c = a.ux * b.ux + a.uy * b.uy;
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return std::acos(c);
}

}  // namespace georoute
