// Compares the OpenMP experiment kernels against the serial reference
// implementations: same seeds, same reports, wall-clock side by side.
// Usage: georoute_bench [trials] [world_radius_multiple]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "georoute/analysis.hpp"
#include "georoute/reference.hpp"

using namespace georoute;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

bool same_stretch(const StretchReport& a, const StretchReport& b) {
    return a.trials == b.trials && a.max_stretch == b.max_stretch &&
           a.violation_count == b.violation_count;
}

bool same_scaling(const ScalingReport& a, const ScalingReport& b) {
    return a.radii == b.radii && a.slope == b.slope && a.r_squared == b.r_squared &&
           a.k_measured == b.k_measured;
}

}  // namespace

int main(int argc, char** argv) {
    const int trials = argc > 1 ? std::atoi(argv[1]) : 100;
    const double mult = argc > 2 ? std::atof(argv[2]) : 200.0;

    ExperimentConfig cfg;
    cfg.r0 = 1.0;
    cfg.s = 2.0;
    cfg.sigma = 1.25;
    cfg.world_radii = {mult};
    cfg.trial_count = trials;
    cfg.delta = cfg.r0 / 50.0;
    cfg.seed = 1;

    std::printf("stretch experiment: %d trials, R = %g r0\n", trials, mult);
    auto t0 = clock_type::now();
    const StretchReport serial = reference::run_stretch_experiment_serial(cfg);
    const double ts = seconds_since(t0);
    t0 = clock_type::now();
    const StretchReport parallel = run_stretch_experiment(cfg);
    const double tp = seconds_since(t0);
    std::printf("  serial   %8.3f s\n  openmp   %8.3f s   speedup %.2fx   identical: %s\n", ts,
                tp, ts / tp, same_stretch(serial, parallel) ? "yes" : "NO");

    cfg.world_radii = {mult / 2.0, mult, mult * 2.0};
    cfg.trial_count = std::max(8, trials / 4);
    std::printf("scaling experiment: %d owners x %zu radii\n", cfg.trial_count,
                cfg.world_radii.size());
    t0 = clock_type::now();
    const ScalingReport serial_sc = reference::run_scaling_experiment_serial(cfg);
    const double ts2 = seconds_since(t0);
    t0 = clock_type::now();
    const ScalingReport parallel_sc = run_scaling_experiment(cfg);
    const double tp2 = seconds_since(t0);
    std::printf("  serial   %8.3f s\n  openmp   %8.3f s   speedup %.2fx   identical: %s\n", ts2,
                tp2, ts2 / tp2, same_scaling(serial_sc, parallel_sc) ? "yes" : "NO");

    const bool ok = same_stretch(serial, parallel) && same_scaling(serial_sc, parallel_sc);
    return ok ? 0 : 1;
}
