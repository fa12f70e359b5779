#pragma once

// k-fat symmetric level covers and multilevel self-similar cover stacks.
//
// A level cover is a square lattice of equal balls: order-i balls have
// radius r_i = r0 * s^i and sit on a lattice of pitch r_i with the origin
// as a lattice point. The farthest point of a lattice cell is r_i*sqrt(2)/2
// away from its center, so the balls cover the plane with constant fatness.
// Levels are never materialized by default (the order-0 level of a large
// world holds hundreds of millions of balls); queries run directly against
// the lattice arithmetic, and materialize() exists for small worlds,
// serialization and brute-force oracles.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "georoute/geometry.hpp"

namespace georoute {

struct Aggregate {
    int order{0};
    Point center;
    double radius{0.0};

    Point representative() const { return center; }

    bool contains(Point p) const { return distance(p, center) <= radius; }
};

/// One order of a multilevel cover: an implicit square lattice of balls of
/// a single radius, clipped to centers within world_radius + radius of the
/// origin. Immutable after construction.
class LevelCover {
public:
    LevelCover(int order, double radius, double world_radius);

    int order() const { return order_; }
    double radius() const { return radius_; }
    double pitch() const { return radius_; }  // lattice pitch g_i = r_i
    double world_radius() const { return world_radius_; }

    /// Center of the (ix, iy) lattice cell.
    Point center_at(long ix, long iy) const {
        return Point{static_cast<double>(ix) * radius_, static_cast<double>(iy) * radius_};
    }

    /// Whether the lattice ball at (ix, iy) belongs to this cover.
    bool in_level(long ix, long iy) const {
        Point c = center_at(ix, iy);
        return std::hypot(c.x, c.y) <= world_radius_ + radius_;
    }

    /// All aggregates of this level whose closed ball contains p. Throws
    /// OutsideWorld if p is beyond the world ball. Never empty (coverage).
    std::vector<Aggregate> covering(Point p) const;

    /// The in-level lattice center nearest to p (ties broken by
    /// lexicographic center comparison, x then y).
    Point nearest_center(Point p) const;

    /// Number of balls in the level, computed row by row.
    std::size_t aggregate_count() const;

    /// Explicit ball list; row-major deterministic order. Intended for
    /// small worlds and test oracles.
    std::vector<Aggregate> materialize() const;

private:
    int order_;
    double radius_;
    double world_radius_;
};

/// Stack of level covers scaled by s, with a top order m large enough that
/// a single order-m ball can contain the whole world (r0 * s^m >= 2R).
class MultilevelCover {
public:
    MultilevelCover(double r0, double s, double world_radius, std::vector<LevelCover> levels)
        : r0_(r0), s_(s), world_radius_(world_radius), levels_(std::move(levels)) {}

    double r0() const { return r0_; }
    double scale() const { return s_; }
    double world_radius() const { return world_radius_; }
    int top_order() const { return static_cast<int>(levels_.size()) - 1; }
    const LevelCover& level(int order) const { return levels_.at(static_cast<std::size_t>(order)); }
    const std::vector<LevelCover>& levels() const { return levels_; }

private:
    double r0_;
    double s_;
    double world_radius_;
    std::vector<LevelCover> levels_;
};

LevelCover build_level_cover(int order, double r0, double s, double world_radius);

MultilevelCover build_multilevel_cover(double r0, double s, double world_radius);

/// Empirical fatness: maximum number of covering balls over sample_count
/// seeded world points. Deterministic given the seed; parallelized.
int measure_fatness(const LevelCover& cover, int sample_count, std::uint64_t seed);

/// Line-oriented text dump, one aggregate per line:
///   order center-x center-y radius
/// 12 significant digits, for debugging and cross-implementation diffs.
void write_cover(std::ostream& out, const MultilevelCover& cover);

}  // namespace georoute
