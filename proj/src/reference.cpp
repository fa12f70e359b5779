#include "georoute/reference.hpp"

#include <algorithm>
#include <cmath>

#include "georoute/rng.hpp"

namespace georoute::reference {

std::vector<std::vector<Aggregate>> materialize_levels(const MultilevelCover& cover) {
    std::vector<std::vector<Aggregate>> levels;
    levels.reserve(cover.levels().size());
    for (const LevelCover& level : cover.levels()) levels.push_back(level.materialize());
    return levels;
}

LookupResult lookup_scan(Point p, Point destination,
                         const std::vector<std::vector<Aggregate>>& levels,
                         const MultilevelCover& cover, const RoutingParams& params) {
    if (p == destination) throw CoincidentPoints("lookup_scan: coincident query");
    const double d = distance(p, destination);
    if (d <= params.r0) return LookupResult{direction(p, destination), -1, destination};
    const int j = target_order(d, cover, params);
    if (j < 0) return LookupResult{direction(p, destination), -1, destination};

    const Aggregate* best = nullptr;
    double best_d = 0.0;
    for (const Aggregate& a : levels.at(static_cast<std::size_t>(j))) {
        if (!a.contains(destination)) continue;
        if (!usable(p, a, params, cover.scale())) continue;
        const double dc = distance(a.center, destination);
        if (best == nullptr || dc < best_d ||
            (dc == best_d &&
             (a.center.x < best->center.x ||
              (a.center.x == best->center.x && a.center.y < best->center.y)))) {
            best = &a;
            best_d = dc;
        }
    }
    if (best == nullptr) throw RoutingHole("lookup_scan: no usable containing aggregate");
    return LookupResult{direction(p, best->center), j, best->center};
}

std::vector<std::vector<Aggregate>> table_by_grid(Point p, const MultilevelCover& cover,
                                                 const RoutingParams& params, int refine) {
    const double t = std::tan(params.alpha);
    const double R = cover.world_radius();
    std::vector<std::vector<Aggregate>> by_order(
        static_cast<std::size_t>(cover.top_order() + 1));

    for (int j = 0; j <= cover.top_order(); ++j) {
        const double r = cover.level(j).radius();
        const double lo = r / t + 2.0 * r;
        if (lo > std::hypot(p.x, p.y) + R) continue;
        double hi = std::hypot(p.x, p.y) + R;
        if (j < cover.top_order()) {
            const double rn = cover.level(j + 1).radius();
            hi = std::min(hi, rn / t + 2.0 * rn);
        }
        // destinations of this order live in the annulus [lo, hi) around p
        const double pitch = r / refine;
        const long i_lo = static_cast<long>(std::floor((p.x - hi) / pitch));
        const long i_hi = static_cast<long>(std::ceil((p.x + hi) / pitch));
        const long k_lo = static_cast<long>(std::floor((p.y - hi) / pitch));
        const long k_hi = static_cast<long>(std::ceil((p.y + hi) / pitch));
        std::vector<Aggregate>& found = by_order[static_cast<std::size_t>(j)];
        auto seen = [&](Point c) {
            for (const Aggregate& a : found)
                if (a.center.x == c.x && a.center.y == c.y) return true;
            return false;
        };
        for (long ix = i_lo; ix <= i_hi; ++ix) {
            for (long iy = k_lo; iy <= k_hi; ++iy) {
                const Point q{static_cast<double>(ix) * pitch, static_cast<double>(iy) * pitch};
                if (std::hypot(q.x, q.y) > R) continue;
                const double d = distance(p, q);
                if (d < lo || d >= hi || d <= params.r0) continue;
                const LookupResult lr = lookup(p, q, cover, params);
                if (lr.order != j) continue;
                if (!seen(lr.target))
                    found.push_back(Aggregate{j, lr.target, cover.level(j).radius()});
            }
        }
        std::sort(found.begin(), found.end(), [](const Aggregate& a, const Aggregate& b) {
            return a.center.x < b.center.x ||
                   (a.center.x == b.center.x && a.center.y < b.center.y);
        });
    }
    return by_order;
}

int measure_fatness_explicit(const std::vector<Aggregate>& aggregates, double world_radius,
                             int sample_count, std::uint64_t seed) {
    int k = 0;
    for (int i = 0; i < sample_count; ++i) {
        RandomStream rs(seed, static_cast<std::uint64_t>(i));
        const Point p = rs.in_disk(world_radius);
        int c = 0;
        for (const Aggregate& a : aggregates)
            if (a.contains(p)) ++c;
        k = std::max(k, c);
    }
    return k;
}

StretchReport run_stretch_experiment_serial(const ExperimentConfig& config) {
    config.validate();
    const RoutingParams params = RoutingParams::create(config.sigma, config.r0, config.delta);
    std::vector<StretchTrial> trials(config.world_radii.size() *
                                     static_cast<std::size_t>(config.trial_count));
    for (std::size_t ri = 0; ri < config.world_radii.size(); ++ri) {
        const double R = config.world_radii[ri];
        const MultilevelCover cover = build_multilevel_cover(config.r0, config.s, R);
        const int base = static_cast<int>(ri) * config.trial_count;
        for (int t = 0; t < config.trial_count; ++t) {
            trials[static_cast<std::size_t>(base + t)] =
                detail::stretch_trial(config, cover, params, R, base + t);
        }
    }
    return detail::reduce_stretch(config, std::move(trials));
}

ScalingReport run_scaling_experiment_serial(const ExperimentConfig& config) {
    config.validate();
    const RoutingParams params = RoutingParams::create(config.sigma, config.r0, config.delta);
    std::vector<RadiusRecord> radii(config.world_radii.size());
    int k_measured = 0;
    for (std::size_t ri = 0; ri < config.world_radii.size(); ++ri) {
        const double R = config.world_radii[ri];
        const MultilevelCover cover = build_multilevel_cover(config.r0, config.s, R);
        k_measured = std::max(k_measured, detail::measure_cover_fatness(config, cover));
        RadiusRecord& rr = radii[ri];
        rr.world_radius = R;
        rr.log_ratio = std::log(R / config.r0) / std::log(config.s);
        rr.owners.resize(static_cast<std::size_t>(config.trial_count));
        const int base = static_cast<int>(ri) * config.trial_count;
        for (int t = 0; t < config.trial_count; ++t) {
            rr.owners[static_cast<std::size_t>(t)] =
                detail::owner_sample(config, cover, params, base + t);
        }
    }
    return detail::reduce_scaling(config, std::move(radii), k_measured);
}

}  // namespace georoute::reference
