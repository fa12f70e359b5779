#include "georoute/cover.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "georoute/rng.hpp"

namespace georoute {

LevelCover::LevelCover(int order, double radius, double world_radius)
    : order_(order), radius_(radius), world_radius_(world_radius) {
    if (!(world_radius > 0.0)) throw EmptyWorld("LevelCover: non-positive world radius");
    if (!(radius > 0.0)) throw EmptyWorld("LevelCover: non-positive ball radius");
}

std::vector<Aggregate> LevelCover::covering(Point p) const {
    if (std::hypot(p.x, p.y) > world_radius_ * (1.0 + 1e-12))
        throw OutsideWorld("covering: point beyond the world ball");
    std::vector<Aggregate> out;
    const long ix_lo = static_cast<long>(std::floor((p.x - radius_) / radius_));
    const long ix_hi = static_cast<long>(std::ceil((p.x + radius_) / radius_));
    const long iy_lo = static_cast<long>(std::floor((p.y - radius_) / radius_));
    const long iy_hi = static_cast<long>(std::ceil((p.y + radius_) / radius_));
    for (long ix = ix_lo; ix <= ix_hi; ++ix) {
        for (long iy = iy_lo; iy <= iy_hi; ++iy) {
            if (!in_level(ix, iy)) continue;
            Point c = center_at(ix, iy);
            if (distance(p, c) <= radius_) out.push_back(Aggregate{order_, c, radius_});
        }
    }
    return out;
}

Point LevelCover::nearest_center(Point p) const {
    const long ix0 = static_cast<long>(std::floor(p.x / radius_));
    const long iy0 = static_cast<long>(std::floor(p.y / radius_));
    Point best{};
    double best_d = -1.0;
    for (long ix = ix0; ix <= ix0 + 1; ++ix) {
        for (long iy = iy0; iy <= iy0 + 1; ++iy) {
            if (!in_level(ix, iy)) continue;
            Point c = center_at(ix, iy);
            const double d = distance(p, c);
            if (best_d < 0.0 || d < best_d ||
                (d == best_d && (c.x < best.x || (c.x == best.x && c.y < best.y)))) {
                best = c;
                best_d = d;
            }
        }
    }
    return best;
}

std::size_t LevelCover::aggregate_count() const {
    const double reach = world_radius_ + radius_;
    const long ix_max = static_cast<long>(std::floor(reach / radius_));
    std::size_t count = 0;
    for (long ix = -ix_max; ix <= ix_max; ++ix) {
        const double x = static_cast<double>(ix) * radius_;
        const double rest = reach * reach - x * x;
        if (rest < 0.0) continue;
        // |iy| * r <= sqrt(rest), with the same inclusive rule as in_level
        long iy = static_cast<long>(std::floor(std::sqrt(rest) / radius_));
        while (!in_level(ix, iy) && iy > 0) --iy;
        while (in_level(ix, iy + 1)) ++iy;
        count += static_cast<std::size_t>(2 * iy + 1);
    }
    return count;
}

std::vector<Aggregate> LevelCover::materialize() const {
    std::vector<Aggregate> out;
    out.reserve(aggregate_count());
    const double reach = world_radius_ + radius_;
    const long ix_max = static_cast<long>(std::floor(reach / radius_));
    for (long ix = -ix_max; ix <= ix_max; ++ix) {
        for (long iy = -ix_max; iy <= ix_max; ++iy) {
            if (in_level(ix, iy)) out.push_back(Aggregate{order_, center_at(ix, iy), radius_});
        }
    }
    return out;
}

LevelCover build_level_cover(int order, double r0, double s, double world_radius) {
    if (order < 0) throw Error("build_level_cover: negative order");
    if (!(s > 1.0)) throw DegenerateScale("build_level_cover: s <= 1");
    if (!(r0 > 0.0)) throw Error("build_level_cover: non-positive r0");
    if (!(world_radius > 0.0)) throw EmptyWorld("build_level_cover: non-positive world radius");
    double radius = r0;
    for (int i = 0; i < order; ++i) radius *= s;
    return LevelCover(order, radius, world_radius);
}

MultilevelCover build_multilevel_cover(double r0, double s, double world_radius) {
    if (!(s > 1.0)) throw DegenerateScale("build_multilevel_cover: s <= 1");
    if (!(r0 > 0.0)) throw Error("build_multilevel_cover: non-positive r0");
    if (!(world_radius >= r0)) throw EmptyWorld("build_multilevel_cover: world radius < r0");
    // top order m = ceil(log_s(2R / r0)), found by repeated multiplication so
    // exact powers land on the right level count
    std::vector<LevelCover> levels;
    double radius = r0;
    int order = 0;
    for (;;) {
        levels.emplace_back(order, radius, world_radius);
        if (radius >= 2.0 * world_radius) break;
        radius *= s;
        ++order;
    }
    return MultilevelCover(r0, s, world_radius, std::move(levels));
}

int measure_fatness(const LevelCover& cover, int sample_count, std::uint64_t seed) {
    if (sample_count < 1) throw Error("measure_fatness: sample_count < 1");
    std::vector<int> counts(static_cast<std::size_t>(sample_count), 0);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < sample_count; ++i) {
        RandomStream rs(seed, static_cast<std::uint64_t>(i));
        Point p = rs.in_disk(cover.world_radius());
        counts[static_cast<std::size_t>(i)] = static_cast<int>(cover.covering(p).size());
    }
    return *std::max_element(counts.begin(), counts.end());
}

void write_cover(std::ostream& out, const MultilevelCover& cover) {
    char buf[128];
    for (const LevelCover& level : cover.levels()) {
        for (const Aggregate& a : level.materialize()) {
            std::snprintf(buf, sizeof buf, "%d %.12g %.12g %.12g\n", a.order, a.center.x,
                          a.center.y, a.radius);
            out << buf;
        }
    }
}

}  // namespace georoute
