#pragma once

// Serial reference implementations kept for testing: brute-force full-scan
// lookup over materialized levels, the dense-grid table oracle, explicit
// aggregate-list fatness, and serial (no OpenMP) experiment loops. The
// primary implementations in routing.hpp / analysis.hpp must agree with
// these exactly; the benchmark target compares their speed.

#include <cstdint>
#include <vector>

#include "georoute/analysis.hpp"
#include "georoute/cover.hpp"
#include "georoute/routing.hpp"

namespace georoute::reference {

/// Materialized level stack for full scans. Small worlds only.
std::vector<std::vector<Aggregate>> materialize_levels(const MultilevelCover& cover);

/// Same selection rule as georoute::lookup, found by scanning every
/// aggregate of the target order instead of lattice arithmetic.
LookupResult lookup_scan(Point p, Point destination,
                         const std::vector<std::vector<Aggregate>>& levels,
                         const MultilevelCover& cover, const RoutingParams& params);

/// Table membership by the definition: route a dense deterministic grid of
/// destinations through lookup() and keep every chosen aggregate. Grid
/// pitch is the level radius divided by `refine` per order.
std::vector<std::vector<Aggregate>> table_by_grid(Point p, const MultilevelCover& cover,
                                                  const RoutingParams& params, int refine);

/// Fatness of an explicit aggregate list (supports stacked / duplicated
/// covers, unlike the lattice-backed measure_fatness).
int measure_fatness_explicit(const std::vector<Aggregate>& aggregates, double world_radius,
                             int sample_count, std::uint64_t seed);

/// Serial twins of the analysis kernels; must produce bit-identical
/// reports to the OpenMP versions.
StretchReport run_stretch_experiment_serial(const ExperimentConfig& config);
ScalingReport run_scaling_experiment_serial(const ExperimentConfig& config);

}  // namespace georoute::reference
