#pragma once

// Experiments and closed-form checks behind the quantitative claims:
// the per-order ball count bound, logarithmic table growth, stretch
// compliance, the near-perfect-stretch asymptotic and scale-factor
// optimization. Experiment kernels are OpenMP parallel maps over
// independent trials; per-trial randomness derives from (seed, index) so
// reports are bit-identical for any thread count.

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "georoute/cover.hpp"
#include "georoute/routing.hpp"

namespace georoute {

struct ExperimentConfig {
    double r0{0.0};
    double s{0.0};
    double sigma{0.0};
    std::vector<double> world_radii;  ///< strictly increasing
    int trial_count{0};               ///< pairs (stretch) / owners per radius (scaling)
    double delta{0.0};
    std::uint64_t seed{0};
    double epsilon{-1.0};      ///< discretization allowance; <= -1 = default delta/r0
    int fatness_samples{4000}; ///< samples per level for k measurement

    double effective_epsilon() const { return epsilon <= -1.0 ? delta / r0 : epsilon; }
    void validate() const;  // throws Error on a bad field
};

struct StretchTrial {
    int index{0};
    double world_radius{0.0};
    Point source;
    Point destination;
    double straight{0.0};
    double length{0.0};
    double stretch{0.0};
    double max_deviation{0.0};
    long steps{0};
    long progress_violations{0};  ///< steps advancing less than delta*cos(alpha) - delta^2/d

    friend bool operator==(const StretchTrial&, const StretchTrial&) = default;
};

struct StretchReport {
    ExperimentConfig config;
    double threshold{0.0};  ///< sigma * (1 + epsilon)
    std::vector<StretchTrial> trials;
    double max_stretch{0.0};
    double mean_stretch{0.0};
    long violation_count{0};
    long progress_violation_count{0};

    bool pass() const { return violation_count == 0; }
};

struct OwnerSample {
    int index{0};
    Point owner;
    std::size_t table_size{0};
    std::vector<std::size_t> order_counts;

    friend bool operator==(const OwnerSample&, const OwnerSample&) = default;
};

struct RadiusRecord {
    double world_radius{0.0};
    double log_ratio{0.0};  ///< log_s(R / r0)
    std::vector<OwnerSample> owners;
    std::size_t size_min{0};
    std::size_t size_max{0};
    double size_mean{0.0};

    friend bool operator==(const RadiusRecord&, const RadiusRecord&) = default;
};

struct ScalingReport {
    ExperimentConfig config;
    std::vector<RadiusRecord> radii;
    double slope{0.0};
    double intercept{0.0};
    double r_squared{0.0};
    int k_measured{0};
    double per_order_bound{0.0};  ///< per_order_entry_bound with the measured k
    long bound_violations{0};

    bool fit_pass() const { return r_squared >= 0.95 && slope > 0.0; }
    bool bound_pass() const { return bound_violations == 0; }
};

/// Area of the ball that still needs aggregates of orders below i,
/// B_i = pi * r0^2 * (1/tan(alpha) + 4)^2 * s^(2 i).
double lower_order_ball_area(int order, double r0, double s, double alpha);

/// Per-order aggregate count bound (1/tan(alpha) + 4)^2 * s^2 * k,
/// independent of the order.
double per_order_entry_bound(double alpha, double s, double k);

StretchReport run_stretch_experiment(const ExperimentConfig& config);

ScalingReport run_scaling_experiment(const ExperimentConfig& config);

/// For each o: cot(arccos(1/(1+o))) * sqrt(o). Converges to 1/sqrt(2) as
/// o -> 0, which is the tg^-1(alpha) ~ o^-1/2 asymptotic.
std::vector<std::pair<double, double>> near_perfect_asymptotic(const std::vector<double>& o_values);

struct ScaleOptimum {
    double s_star{0.0};
    double predicted_total{0.0};
};

/// Minimizes per_order_entry_bound(alpha, s, k) * ceil(log_s(R / r0)) over
/// s in (1, 16] by a deterministic grid scan (1e-3) plus local refinement.
ScaleOptimum optimize_scale_factor(double world_radius, double r0, double sigma, double k);

// ---- report serialization (CSV + flat key=value summary, 12 sig. digits) ----

void write_csv(std::ostream& out, const StretchReport& report);
void write_summary(std::ostream& out, const StretchReport& report);
void write_csv(std::ostream& out, const ScalingReport& report);
void write_order_counts_csv(std::ostream& out, const ScalingReport& report);
void write_summary(std::ostream& out, const ScalingReport& report);

namespace detail {

/// One stretch trial; shared verbatim by the OpenMP and serial drivers.
StretchTrial stretch_trial(const ExperimentConfig& config, const MultilevelCover& cover,
                           const RoutingParams& params, double world_radius, int index);

/// One owner sample of the scaling experiment.
OwnerSample owner_sample(const ExperimentConfig& config, const MultilevelCover& cover,
                         const RoutingParams& params, int index);

/// Deterministic reduction shared by both drivers.
StretchReport reduce_stretch(const ExperimentConfig& config, std::vector<StretchTrial> trials);
ScalingReport reduce_scaling(const ExperimentConfig& config, std::vector<RadiusRecord> radii,
                             int k_measured);

int measure_cover_fatness(const ExperimentConfig& config, const MultilevelCover& cover);

}  // namespace detail

}  // namespace georoute
