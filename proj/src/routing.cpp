#include "georoute/routing.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <ostream>

namespace georoute {
namespace {

constexpr double kHalfDiagFactor = 0.70710678118654757;  // sqrt(2)/2

double check_alpha(double alpha) {
    if (!(alpha > 0.0) || !(alpha < M_PI / 2.0))
        throw DegenerateAngle("alpha must lie in (0, pi/2)");
    return alpha;
}

/// Distance from p to the nearest point of the axis-aligned square of side
/// `side` centered at c.
double square_min_dist(Point p, Point c, double side) {
    const double dx = std::max(std::abs(p.x - c.x) - side / 2.0, 0.0);
    const double dy = std::max(std::abs(p.y - c.y) - side / 2.0, 0.0);
    return std::hypot(dx, dy);
}

/// Distance from p to the farthest corner of that square.
double square_max_dist(Point p, Point c, double side) {
    const double dx = std::abs(p.x - c.x) + side / 2.0;
    const double dy = std::abs(p.y - c.y) + side / 2.0;
    return std::hypot(dx, dy);
}

}  // namespace

RoutingParams RoutingParams::create(double sigma, double r0, double delta, long max_steps) {
    if (!(sigma >= 1.0)) throw InvalidStretch("RoutingParams: sigma < 1");
    if (sigma == 1.0)
        throw DegenerateAngle("RoutingParams: sigma = 1 makes every aggregate unusable");
    if (!(r0 > 0.0)) throw Error("RoutingParams: non-positive r0");
    if (!(delta > 0.0) || !(delta <= r0 / 10.0))
        throw Error("RoutingParams: delta must satisfy 0 < delta <= r0/10");
    RoutingParams p;
    p.sigma = sigma;
    p.alpha = alpha_from_sigma(sigma);
    p.r0 = r0;
    p.delta = delta;
    p.max_steps = max_steps;
    return p;
}

double min_usable_distance(int order, const RoutingParams& params, double s) {
    check_alpha(params.alpha);
    double r = params.r0;
    for (int i = 0; i < order; ++i) r *= s;
    return r / std::tan(params.alpha);
}

bool usable(Point p, const Aggregate& a, const RoutingParams& params, double /*s*/) {
    check_alpha(params.alpha);
    const double f = a.radius / std::tan(params.alpha);
    return distance(p, a.center) >= f + a.radius;
}

int target_order(double d, const MultilevelCover& cover, const RoutingParams& params) {
    check_alpha(params.alpha);
    const double t = std::tan(params.alpha);
    int chosen = -1;
    for (int j = 0; j <= cover.top_order(); ++j) {
        const double r = cover.level(j).radius();
        if (r / t + 2.0 * r <= d)
            chosen = j;
        else
            break;
    }
    return chosen;
}

LookupResult lookup(Point p, Point destination, const MultilevelCover& cover,
                    const RoutingParams& params) {
    if (p == destination) throw CoincidentPoints("lookup: coincident query");
    const double d = distance(p, destination);
    if (d <= params.r0) return LookupResult{direction(p, destination), -1, destination};
    const int j = target_order(d, cover, params);
    if (j < 0) return LookupResult{direction(p, destination), -1, destination};

    const LevelCover& level = cover.level(j);
    const Point c = level.nearest_center(destination);
    const Aggregate a{j, c, level.radius()};
    if (!a.contains(destination) || !usable(p, a, params, cover.scale()))
        throw RoutingHole("lookup: cover defect, guaranteed aggregate missing");
    return LookupResult{direction(p, c), j, c};
}

std::size_t RoutingTable::size() const {
    std::size_t n = 0;
    for (const auto& v : by_order_) n += v.size();
    return n;
}

LookupResult RoutingTable::lookup(Point destination) const {
    if (owner_ == destination) throw CoincidentPoints("table lookup: coincident query");
    const double d = distance(owner_, destination);
    if (d <= params_.r0) return LookupResult{direction(owner_, destination), -1, destination};

    const double t = std::tan(check_alpha(params_.alpha));
    int chosen = -1;
    double r = r0_;
    double chosen_r = r0_;
    for (int j = 0; j < order_count(); ++j) {
        if (r / t + 2.0 * r <= d) {
            chosen = j;
            chosen_r = r;
        } else {
            break;
        }
        r *= s_;
    }
    if (chosen < 0) return LookupResult{direction(owner_, destination), -1, destination};

    const RoutingTableEntry* best = nullptr;
    double best_d = 0.0;
    for (const RoutingTableEntry& e : entries(chosen)) {
        if (!e.aggregate.contains(destination)) continue;
        const double dc = distance(e.aggregate.center, destination);
        if (best == nullptr || dc < best_d ||
            (dc == best_d && (e.aggregate.center.x < best->aggregate.center.x ||
                              (e.aggregate.center.x == best->aggregate.center.x &&
                               e.aggregate.center.y < best->aggregate.center.y)))) {
            best = &e;
            best_d = dc;
        }
    }
    if (best == nullptr)
        throw RoutingHole("table lookup: no containing entry at the guaranteed order");
    (void)chosen_r;
    return LookupResult{direction(owner_, best->aggregate.center), chosen,
                        best->aggregate.center};
}

RoutingTable assemble_table(Point p, const MultilevelCover& cover, const RoutingParams& params) {
    const double t = std::tan(check_alpha(params.alpha));
    const double R = cover.world_radius();
    if (std::hypot(p.x, p.y) > R * (1.0 + 1e-12))
        throw OutsideWorld("assemble_table: owner beyond the world ball");

    const double reach = std::hypot(p.x, p.y) + R;  // farthest world point from p
    std::vector<std::vector<RoutingTableEntry>> by_order(
        static_cast<std::size_t>(cover.top_order() + 1));

    for (int j = 0; j <= cover.top_order(); ++j) {
        const double r = cover.level(j).radius();
        const double lo = r / t + 2.0 * r;
        double hi = std::numeric_limits<double>::infinity();
        if (j < cover.top_order()) {
            const double rn = cover.level(j + 1).radius();
            hi = rn / t + 2.0 * rn;
        }
        if (lo > reach) continue;  // annulus beyond every world point

        const LevelCover& level = cover.level(j);
        const double half_diag = kHalfDiagFactor * r * (1.0 + 1e-12);
        const double box = std::min(hi, reach) + half_diag + r;
        const long ix_lo = static_cast<long>(std::floor((p.x - box) / r));
        const long ix_hi = static_cast<long>(std::ceil((p.x + box) / r));
        const long iy_lo = static_cast<long>(std::floor((p.y - box) / r));
        const long iy_hi = static_cast<long>(std::ceil((p.y + box) / r));

        auto& entries = by_order[static_cast<std::size_t>(j)];
        for (long ix = ix_lo; ix <= ix_hi; ++ix) {
            for (long iy = iy_lo; iy <= iy_hi; ++iy) {
                if (!level.in_level(ix, iy)) continue;
                const Point c = level.center_at(ix, iy);
                // Voronoi cell of c must meet the annulus [lo, hi) around p
                if (!(square_min_dist(p, c, r) < hi)) continue;
                if (!(square_max_dist(p, c, r) >= lo)) continue;
                // ... and the world ball
                if (square_min_dist(Point{0.0, 0.0}, c, r) > R) continue;
                const Aggregate a{j, c, r};
                assert(usable(p, a, params, cover.scale()));
                entries.push_back(RoutingTableEntry{a, direction(p, c)});
            }
        }
    }
    return RoutingTable(p, params, cover.scale(), cover.r0(), R, std::move(by_order));
}

double RoutePath::length() const {
    double len = 0.0;
    for (std::size_t i = 1; i < waypoints.size(); ++i)
        len += distance(waypoints[i - 1], waypoints[i]);
    return len;
}

RoutePath route(Point source, Point destination, const MultilevelCover& cover,
                const RoutingParams& params) {
    if (source == destination) throw CoincidentPoints("route: coincident endpoints");
    const double d0 = distance(source, destination);
    long max_steps = params.max_steps;
    if (max_steps <= 0) {
        max_steps =
            static_cast<long>(std::ceil(d0 / (params.delta * std::cos(params.alpha)) * 1.05)) + 16;
    }

    RoutePath path;
    path.source = source;
    path.destination = destination;
    path.waypoints.reserve(static_cast<std::size_t>(std::min<long>(max_steps, 1 << 22)) + 2);
    path.waypoints.push_back(source);

    Point x = source;
    long n = 0;
    for (;;) {
        const double d = distance(x, destination);
        if (d <= params.delta) {
            path.waypoints.push_back(destination);
            path.steps.push_back(StepRecord{-1, 0.0});
            break;
        }
        const LookupResult lr = lookup(x, destination, cover, params);
        const double dev = angle_between(lr.dir, direction(x, destination));
        x = step(x, lr.dir, params.delta);
        path.waypoints.push_back(x);
        path.steps.push_back(StepRecord{lr.order, dev});
        if (++n > max_steps)
            throw StepLimitExceeded("route: no progress within the step budget");
    }
    return path;
}

double path_stretch(const RoutePath& path) {
    if (path.waypoints.size() < 2) throw Error("path_stretch: path has no segments");
    return path.length() / distance(path.source, path.destination);
}

void write_path(std::ostream& out, const RoutePath& path) {
    char buf[160];
    for (std::size_t i = 0; i < path.waypoints.size(); ++i) {
        const Point& w = path.waypoints[i];
        int order = -1;
        double dev = 0.0;
        if (i < path.steps.size()) {
            order = path.steps[i].order;
            dev = path.steps[i].deviation;
        }
        std::snprintf(buf, sizeof buf, "%.12g %.12g %d %.12g\n", w.x, w.y, order, dev);
        out << buf;
    }
}

}  // namespace georoute
