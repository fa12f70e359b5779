#pragma once

// The forwarding core: aggregate usability under the angular-size rule,
// per-point routing tables, destination lookup and the small-step greedy
// forwarding loop.
//
// Lookup at distance d from the destination uses aggregates of order
// j(d) = max{ j : f_j + 2 r_j <= d }, where f_j = r_j / tan(alpha) is the
// usability distance. At that range every ball covering the destination is
// guaranteed usable, the per-order table footprint is an annulus of
// constant ball count, and the angular deviation stays under alpha. Below
// f_0 + 2 r_0 no order is guaranteed (and below f_0 none can exist), so
// the router falls back to direct forwarding, which trivially respects the
// deviation bound.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "georoute/cover.hpp"
#include "georoute/geometry.hpp"

namespace georoute {

struct RoutingParams {
    double sigma{0.0};   ///< target stretch bound, > 1
    double alpha{0.0};   ///< arccos(1/sigma), in (0, pi/2)
    double r0{0.0};      ///< base radius / direct-delivery range
    double delta{0.0};   ///< forwarding step, 0 < delta <= r0/10
    long max_steps{0};   ///< 0 = derive from the termination bound

    /// Validates and fills alpha. Throws InvalidStretch for sigma < 1,
    /// DegenerateAngle for sigma == 1, Error for a bad delta.
    static RoutingParams create(double sigma, double r0, double delta, long max_steps = 0);
};

/// Usability distance f_i = r_0 s^i / tan(alpha): minimum distance to the
/// ball surface at which an order-i aggregate subtends an angle <= alpha.
double min_usable_distance(int order, const RoutingParams& params, double s);

/// True iff the ball's nearest surface point is at least f_i from p, i.e.
/// distance(p, center) >= f_i + radius. Implies
/// max_deviation_angle(p, center, radius) <= alpha.
bool usable(Point p, const Aggregate& a, const RoutingParams& params, double s);

/// Order used for a destination at distance d: the largest j whose usable
/// coverage is guaranteed (f_j + 2 r_j <= d), or -1 for direct forwarding
/// (d <= r0 or inside the near-field band below f_0 + 2 r_0).
int target_order(double d, const MultilevelCover& cover, const RoutingParams& params);

struct LookupResult {
    Direction dir;   ///< forwarding direction from the query point
    int order{-1};   ///< chosen aggregate order, -1 = direct delivery
    Point target;    ///< representative vertex (== destination when direct)

    friend bool operator==(const LookupResult&, const LookupResult&) = default;
};

/// Forwarding decision for one packet position. Deterministic: among the
/// containing usable order-j(d) aggregates the one with center nearest the
/// destination wins, remaining ties broken by lexicographic center.
/// Throws CoincidentPoints if p == destination, RoutingHole on a cover
/// defect (a level that fails coverage).
LookupResult lookup(Point p, Point destination, const MultilevelCover& cover,
                    const RoutingParams& params);

struct RoutingTableEntry {
    Aggregate aggregate;
    Direction to_representative;
};

/// Materialized per-point table: for every order the aggregates whose
/// lattice Voronoi cell meets both the order's annulus around the owner
/// and the world ball. Reproduces lookup() exactly.
class RoutingTable {
public:
    RoutingTable(Point owner, RoutingParams params, double s, double r0, double world_radius,
                 std::vector<std::vector<RoutingTableEntry>> by_order)
        : owner_(owner),
          params_(params),
          s_(s),
          r0_(r0),
          world_radius_(world_radius),
          by_order_(std::move(by_order)) {}

    Point owner() const { return owner_; }
    const RoutingParams& params() const { return params_; }
    int order_count() const { return static_cast<int>(by_order_.size()); }
    const std::vector<RoutingTableEntry>& entries(int order) const {
        return by_order_.at(static_cast<std::size_t>(order));
    }
    std::size_t size() const;

    /// Same contract and tie-breaks as the free lookup(); must agree with
    /// it on every destination.
    LookupResult lookup(Point destination) const;

private:
    Point owner_;
    RoutingParams params_;
    double s_;
    double r0_;
    double world_radius_;
    std::vector<std::vector<RoutingTableEntry>> by_order_;
};

RoutingTable assemble_table(Point p, const MultilevelCover& cover, const RoutingParams& params);

struct StepRecord {
    int order{-1};          ///< aggregate order chosen at this step
    double deviation{0.0};  ///< angle between chosen direction and true direction
};

struct RoutePath {
    Point source;
    Point destination;
    std::vector<Point> waypoints;   ///< steps + 1 positions, last == destination
    std::vector<StepRecord> steps;  ///< one record per advance

    double length() const;
};

/// Small-step greedy forwarding: advance by delta along lookup()'s
/// direction until the remaining distance fits in one exact final step.
/// Throws StepLimitExceeded if the termination bound is violated.
RoutePath route(Point source, Point destination, const MultilevelCover& cover,
                const RoutingParams& params);

/// Path length divided by the straight source-destination distance.
double path_stretch(const RoutePath& path);

/// Line-oriented export, one waypoint per line:
///   x y chosen-order deviation-angle
/// (the final waypoint repeats order -1 / deviation 0), 12 significant digits.
void write_path(std::ostream& out, const RoutePath& path);

}  // namespace georoute
