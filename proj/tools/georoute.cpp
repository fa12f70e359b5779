// georoute: reproducible experiment runner for plane geo-aggregated routing.
//
// Subcommands:
//   cover-stats  per-level ball counts, measured fatness, top order
//   route        forward one packet, dump the path, print the stretch
//   stretch-exp  seeded random-pair stretch compliance experiment
//   table-exp    table-size scaling experiment (log fit + per-order bound)
//   optimize-s   scale-factor minimizing the predicted table size
//
// Every subcommand reads a flat key=value config (--config), writes under
// --out, and exits 0 (all checks pass), 1 (invariant/runtime violation) or
// 2 (invalid config).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "georoute/analysis.hpp"
#include "georoute/config.hpp"
#include "georoute/cover.hpp"
#include "georoute/routing.hpp"

namespace fs = std::filesystem;
using namespace georoute;

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir = ".";
    std::string format = "both";
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "key = value config file")->required();
    cmd->add_option("--out", args.out_dir, "output directory");
    cmd->add_option("--format", args.format, "csv|summary|both")
        ->check(CLI::IsMember({"csv", "summary", "both"}));
}

std::ofstream open_out(const CommonArgs& args, const std::string& name) {
    fs::create_directories(args.out_dir);
    const fs::path p = fs::path(args.out_dir) / name;
    std::ofstream out(p);
    if (!out) throw Error("cannot open output file " + p.string());
    return out;
}

/// Config-derived experiment setup. Any validation failure here is a
/// config error (exit 2).
ExperimentConfig experiment_config(const Config& cfg, bool radius_list) {
    ExperimentConfig ec;
    ec.r0 = cfg.number("r0");
    ec.s = cfg.number("s");
    ec.sigma = cfg.sigma();
    if (radius_list && cfg.has("world_radii"))
        ec.world_radii = cfg.list("world_radii");
    else
        ec.world_radii = {cfg.number("world_radius")};
    ec.trial_count = static_cast<int>(cfg.integer("trials"));
    ec.delta = cfg.number_or("delta", ec.r0 / 50.0);
    ec.seed = cfg.integer("seed");
    ec.epsilon = cfg.number_or("epsilon", -1.0);
    ec.fatness_samples = static_cast<int>(cfg.integer_or("fatness_samples", 4000));
    try {
        ec.validate();
        (void)RoutingParams::create(ec.sigma, ec.r0, ec.delta);
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    return ec;
}

int cmd_cover_stats(const CommonArgs& args) {
    const Config cfg = Config::load(args.config_path);
    const double r0 = cfg.number("r0");
    const double s = cfg.number("s");
    const double R = cfg.number("world_radius");
    const std::uint64_t seed = cfg.integer("seed");
    const int samples = static_cast<int>(cfg.integer_or("fatness_samples", 4000));
    if (!(r0 > 0.0) || !(s > 1.0) || !(R >= r0))
        throw ConfigError("cover-stats requires r0 > 0, s > 1 and world_radius >= r0");

    const MultilevelCover cover = build_multilevel_cover(r0, s, R);
    std::ofstream out = open_out(args, "cover_stats.txt");
    char buf[160];
    std::snprintf(buf, sizeof buf, "r0 = %.12g\ns = %.12g\nworld_radius = %.12g\n", r0, s, R);
    out << buf;
    std::snprintf(buf, sizeof buf, "top_order = %d\nlevels = %d\n", cover.top_order(),
                  cover.top_order() + 1);
    out << buf;
    int k_max = 0;
    for (const LevelCover& level : cover.levels()) {
        const int k = measure_fatness(level, samples, seed + static_cast<std::uint64_t>(level.order()));
        k_max = std::max(k_max, k);
        std::snprintf(buf, sizeof buf, "level_%d_radius = %.12g\nlevel_%d_count = %zu\nlevel_%d_k = %d\n",
                      level.order(), level.radius(), level.order(), level.aggregate_count(),
                      level.order(), k);
        out << buf;
    }
    std::snprintf(buf, sizeof buf, "k_measured = %d\n", k_max);
    out << buf;
    return 0;
}

int cmd_route(const CommonArgs& args) {
    const Config cfg = Config::load(args.config_path);
    const double r0 = cfg.number("r0");
    const double s = cfg.number("s");
    const double R = cfg.number("world_radius");
    (void)cfg.integer("seed");  // reproducibility contract: seed is always explicit
    const Point src{cfg.number("source_x"), cfg.number("source_y")};
    const Point dst{cfg.number("dest_x"), cfg.number("dest_y")};
    if (src == dst) throw ConfigError("route: coincident source and destination");

    RoutingParams params;
    MultilevelCover cover = [&] {
        try {
            params = RoutingParams::create(cfg.sigma(), r0, cfg.number("delta"),
                                           cfg.integer_or("max_steps", 0));
            return build_multilevel_cover(r0, s, R);
        } catch (const Error& e) {
            throw ConfigError(e.what());
        }
    }();

    const RoutePath path = route(src, dst, cover, params);
    std::ofstream out = open_out(args, "path.txt");
    write_path(out, path);
    std::printf("stretch = %.6f\n", path_stretch(path));
    return 0;
}

int cmd_stretch_exp(const CommonArgs& args) {
    const Config cfg = Config::load(args.config_path);
    const ExperimentConfig ec = experiment_config(cfg, true);
    const StretchReport report = run_stretch_experiment(ec);
    if (args.format != "summary") {
        std::ofstream out = open_out(args, "stretch.csv");
        write_csv(out, report);
    }
    if (args.format != "csv") {
        std::ofstream out = open_out(args, "stretch.summary");
        write_summary(out, report);
    }
    if (!report.pass() || report.progress_violation_count != 0) {
        std::fprintf(stderr, "stretch-exp: %ld threshold violations, %ld progress violations\n",
                     report.violation_count, report.progress_violation_count);
        return 1;
    }
    return 0;
}

int cmd_table_exp(const CommonArgs& args) {
    const Config cfg = Config::load(args.config_path);
    const ExperimentConfig ec = experiment_config(cfg, true);
    const ScalingReport report = run_scaling_experiment(ec);
    if (args.format != "summary") {
        std::ofstream out = open_out(args, "scaling.csv");
        write_csv(out, report);
        std::ofstream orders = open_out(args, "scaling_orders.csv");
        write_order_counts_csv(orders, report);
    }
    if (args.format != "csv") {
        std::ofstream out = open_out(args, "scaling.summary");
        write_summary(out, report);
    }
    if (!report.fit_pass() || !report.bound_pass()) {
        std::fprintf(stderr, "table-exp: fit_pass=%d bound_pass=%d (r2=%.4f, violations=%ld)\n",
                     report.fit_pass(), report.bound_pass(), report.r_squared,
                     report.bound_violations);
        return 1;
    }
    return 0;
}

int cmd_optimize_s(const CommonArgs& args) {
    const Config cfg = Config::load(args.config_path);
    const double r0 = cfg.number("r0");
    const double R = cfg.number("world_radius");
    const double sigma = cfg.sigma();
    const double k = cfg.number("k");
    (void)cfg.integer("seed");
    if (!(R > r0) || !(sigma > 1.0) || !(k >= 1.0))
        throw ConfigError("optimize-s requires world_radius > r0, sigma > 1, k >= 1");

    const ScaleOptimum opt = optimize_scale_factor(R, r0, sigma, k);
    if (args.format != "summary") {
        std::ofstream out = open_out(args, "optimize.csv");
        out << "s,predicted_total\n";
        const double alpha = alpha_from_sigma(sigma);
        char buf[96];
        for (double s = 1.001; s <= 16.0 + 5e-4; s += 1e-3) {
            const double total =
                per_order_entry_bound(alpha, s, k) * std::ceil(std::log(R / r0) / std::log(s));
            std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", s, total);
            out << buf;
        }
    }
    if (args.format != "csv") {
        std::ofstream out = open_out(args, "optimize.summary");
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "experiment = optimize_s\nworld_radius = %.12g\nr0 = %.12g\nsigma = "
                      "%.12g\nk = %.12g\ns_star = %.12g\npredicted_total = %.12g\n",
                      R, r0, sigma, k, opt.s_star, opt.predicted_total);
        out << buf;
    }
    std::printf("s_star = %.6f\npredicted_total = %.6f\n", opt.s_star, opt.predicted_total);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geo-aggregated routing experiments"};
    app.require_subcommand(1);

    CommonArgs cover_args, route_args, stretch_args, table_args, opt_args;
    CLI::App* c_cover = app.add_subcommand("cover-stats", "cover construction statistics");
    CLI::App* c_route = app.add_subcommand("route", "forward a single packet");
    CLI::App* c_stretch = app.add_subcommand("stretch-exp", "stretch compliance experiment");
    CLI::App* c_table = app.add_subcommand("table-exp", "table-size scaling experiment");
    CLI::App* c_opt = app.add_subcommand("optimize-s", "optimal cover scale factor");
    add_common(c_cover, cover_args);
    add_common(c_route, route_args);
    add_common(c_stretch, stretch_args);
    add_common(c_table, table_args);
    add_common(c_opt, opt_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (c_cover->parsed()) return cmd_cover_stats(cover_args);
        if (c_route->parsed()) return cmd_route(route_args);
        if (c_stretch->parsed()) return cmd_stretch_exp(stretch_args);
        if (c_table->parsed()) return cmd_table_exp(table_args);
        if (c_opt->parsed()) return cmd_optimize_s(opt_args);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
