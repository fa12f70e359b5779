#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "georoute/analysis.hpp"
#include "georoute/config.hpp"

namespace fs = std::filesystem;
using namespace georoute;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "georoute_cli" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& text) {
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Runs the CLI binary, captures stdout+stderr, returns the exit code.
int run_cli(const std::string& args, const fs::path& dir, std::string* output = nullptr) {
    const fs::path log = dir / "run.log";
    const std::string cmd =
        std::string(GEOROUTE_CLI_PATH) + " " + args + " > '" + log.string() + "' 2>&1";
    const int status = std::system(cmd.c_str());
    if (output) *output = slurp(log);
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

double summary_value(const std::string& text, const std::string& key) {
    const std::string needle = key + " = ";
    const auto pos = text.find(needle);
    REQUIRE(pos != std::string::npos);
    return std::stod(text.substr(pos + needle.size()));
}

}  // namespace

TEST_CASE("config parsing: comments, unit suffixes, lists") {
    const Config cfg = Config::parse(
        "# experiment\n"
        "r0_km = 2000   # meters after conversion\n"
        "alpha_deg = 45\n"
        "world_radii_km = 1000, 2000,4000\n"
        "seed = 42\n"
        "trials=10\n");
    CHECK(cfg.number("r0") == doctest::Approx(2e6).epsilon(1e-15));
    CHECK(cfg.number("alpha") == doctest::Approx(M_PI / 4).epsilon(1e-12));
    CHECK(cfg.sigma() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    const auto radii = cfg.list("world_radii");
    REQUIRE(radii.size() == 3);
    CHECK(radii[0] == doctest::Approx(1e6));
    CHECK(radii[2] == doctest::Approx(4e6));
    CHECK(cfg.integer("seed") == 42);
    CHECK(cfg.integer_or("missing", 7) == 7);
    CHECK(cfg.number_or("missing", 2.5) == 2.5);
}

TEST_CASE("config parsing rejections") {
    CHECK_THROWS_AS(Config::parse("just words\n"), ConfigError);
    CHECK_THROWS_AS(Config::parse("a =\n"), ConfigError);
    CHECK_THROWS_AS(Config::parse("a = 1\na = 2\n"), ConfigError);
    CHECK_THROWS_AS(Config::parse("a_km = 1\na = 2\n"), ConfigError);  // same key post-suffix
    CHECK_THROWS_AS(Config::parse("a = 1x\n").number("a"), ConfigError);
    CHECK_THROWS_AS(Config::parse("a = 1\n").number("b"), ConfigError);
    CHECK_THROWS_AS(Config::parse("sigma = 1.2\nalpha_deg = 30\n").sigma(), ConfigError);
    CHECK_THROWS_AS(Config::parse("r0 = 1\n").sigma(), ConfigError);
    CHECK_THROWS_AS(Config::load("/nonexistent/georoute.cfg"), ConfigError);
}

TEST_CASE("cli: missing subcommand or config file exits 2") {
    const fs::path dir = scratch("badargs");
    CHECK(run_cli("", dir) == 2);
    CHECK(run_cli("cover-stats", dir) == 2);
    CHECK(run_cli("cover-stats --config " + (dir / "absent.cfg").string(), dir) == 2);
}

TEST_CASE("cli cover-stats: level counts, top order, measured fatness") {
    const fs::path dir = scratch("coverstats");
    const fs::path cfg = write_file(dir, "cover.cfg",
                                    "r0 = 1\ns = 2\nworld_radius = 1024\nseed = 3\n");
    std::string out;
    CHECK(run_cli("cover-stats --config " + cfg.string() + " --out " + dir.string(), dir, &out) ==
          0);
    const std::string stats = slurp(dir / "cover_stats.txt");
    CHECK(summary_value(stats, "top_order") == 11);
    CHECK(summary_value(stats, "levels") == 12);
    const double k = summary_value(stats, "k_measured");
    CHECK(k >= 1);
    CHECK(k <= 5);
    CHECK(stats.find("level_0_radius = 1\n") != std::string::npos);
    CHECK(stats.find("level_11_radius = 2048\n") != std::string::npos);
}

TEST_CASE("cli cover-stats: world smaller than r0 is a config error") {
    const fs::path dir = scratch("tinyworld");
    const fs::path cfg =
        write_file(dir, "bad.cfg", "r0 = 2\ns = 2\nworld_radius = 1\nseed = 1\n");
    std::string out;
    CHECK(run_cli("cover-stats --config " + cfg.string() + " --out " + dir.string(), dir, &out) ==
          2);
    CHECK(out.find("config error") != std::string::npos);
}

TEST_CASE("cli route: prints the stretch and writes a byte-stable path") {
    const fs::path dir = scratch("route");
    const fs::path cfg = write_file(dir, "route.cfg",
                                    "r0 = 1\ns = 2\nworld_radius = 200\nsigma = 1.25\n"
                                    "delta = 0.02\nseed = 5\n"
                                    "source_x = -80\nsource_y = 10\ndest_x = 90\ndest_y = -20\n");
    std::string out1, out2;
    CHECK(run_cli("route --config " + cfg.string() + " --out " + (dir / "a").string(), dir,
                  &out1) == 0);
    CHECK(out1.find("stretch = ") != std::string::npos);
    const double stretch = summary_value(out1, "stretch");
    CHECK(stretch >= 1.0);
    CHECK(stretch <= 1.25 * 1.02);
    CHECK(run_cli("route --config " + cfg.string() + " --out " + (dir / "b").string(), dir,
                  &out2) == 0);
    CHECK(slurp(dir / "a" / "path.txt") == slurp(dir / "b" / "path.txt"));
    CHECK(out1 == out2);
}

TEST_CASE("cli route: coincident endpoints and missing seed exit 2") {
    const fs::path dir = scratch("routebad");
    const fs::path same = write_file(dir, "same.cfg",
                                     "r0 = 1\ns = 2\nworld_radius = 100\nsigma = 1.25\n"
                                     "delta = 0.02\nseed = 5\n"
                                     "source_x = 3\nsource_y = 3\ndest_x = 3\ndest_y = 3\n");
    CHECK(run_cli("route --config " + same.string() + " --out " + dir.string(), dir) == 2);
    const fs::path noseed = write_file(dir, "noseed.cfg",
                                       "r0 = 1\ns = 2\nworld_radius = 100\nsigma = 1.25\n"
                                       "delta = 0.02\n"
                                       "source_x = 0\nsource_y = 0\ndest_x = 9\ndest_y = 0\n");
    CHECK(run_cli("route --config " + noseed.string() + " --out " + dir.string(), dir) == 2);
}

TEST_CASE("cli route: exhausted step budget is a runtime failure, exit 1") {
    const fs::path dir = scratch("routelimit");
    const fs::path cfg = write_file(dir, "limit.cfg",
                                    "r0 = 1\ns = 2\nworld_radius = 100\nsigma = 1.25\n"
                                    "delta = 0.02\nseed = 5\nmax_steps = 3\n"
                                    "source_x = -50\nsource_y = 0\ndest_x = 50\ndest_y = 0\n");
    std::string out;
    CHECK(run_cli("route --config " + cfg.string() + " --out " + dir.string(), dir, &out) == 1);
}

TEST_CASE("cli stretch-exp: compliant run exits 0 with pass = true") {
    const fs::path dir = scratch("stretch");
    const fs::path cfg = write_file(dir, "exp.cfg",
                                    "r0 = 1\ns = 2\nsigma = 1.25\nworld_radius = 100\n"
                                    "trials = 40\ndelta = 0.02\nseed = 11\n");
    std::string out;
    CHECK(run_cli("stretch-exp --config " + cfg.string() + " --out " + dir.string(), dir, &out) ==
          0);
    const std::string summary = slurp(dir / "stretch.summary");
    CHECK(summary.find("pass = true\n") != std::string::npos);
    CHECK(summary_value(summary, "violations") == 0);
    CHECK(summary_value(summary, "max_stretch") <= 1.25 * 1.02);
    CHECK(fs::exists(dir / "stretch.csv"));
}

TEST_CASE("cli stretch-exp: a sabotaged threshold is detected and exits 1") {
    // epsilon = -0.9 drops the acceptance threshold to 0.125 sigma, far
    // below any achievable stretch; every trial must be flagged.
    const fs::path dir = scratch("stretchfail");
    const fs::path cfg = write_file(dir, "exp.cfg",
                                    "r0 = 1\ns = 2\nsigma = 1.25\nworld_radius = 100\n"
                                    "trials = 10\ndelta = 0.02\nseed = 11\nepsilon = -0.9\n");
    std::string out;
    CHECK(run_cli("stretch-exp --config " + cfg.string() + " --out " + dir.string(), dir, &out) ==
          1);
    const std::string summary = slurp(dir / "stretch.summary");
    CHECK(summary.find("pass = false\n") != std::string::npos);
    CHECK(summary_value(summary, "violations") == 10);
}

TEST_CASE("cli table-exp: log fit summary with per-order bound intact") {
    const fs::path dir = scratch("table");
    const fs::path cfg = write_file(dir, "exp.cfg",
                                    "r0 = 1\ns = 2\nsigma = 1.25\n"
                                    "world_radii = 50, 200, 800\n"
                                    "trials = 6\ndelta = 0.02\nseed = 13\n");
    std::string out;
    CHECK(run_cli("table-exp --config " + cfg.string() + " --out " + dir.string(), dir, &out) ==
          0);
    const std::string summary = slurp(dir / "scaling.summary");
    CHECK(summary_value(summary, "r_squared") >= 0.95);
    CHECK(summary_value(summary, "slope") > 0.0);
    CHECK(summary_value(summary, "bound_violations") == 0);
    CHECK(summary.find("pass = true\n") != std::string::npos);
    CHECK(fs::exists(dir / "scaling.csv"));
    CHECK(fs::exists(dir / "scaling_orders.csv"));
}

TEST_CASE("cli optimize-s matches the library optimizer") {
    const fs::path dir = scratch("optimize");
    const fs::path cfg = write_file(dir, "opt.cfg",
                                    "r0 = 1\nworld_radius = 1000\nsigma = 1.25\nk = 4\nseed = 1\n");
    std::string out;
    CHECK(run_cli("optimize-s --config " + cfg.string() + " --out " + dir.string() +
                      " --format summary",
                  dir, &out) == 0);
    const ScaleOptimum opt = optimize_scale_factor(1000.0, 1.0, 1.25, 4.0);
    CHECK(summary_value(out, "s_star") == doctest::Approx(opt.s_star).epsilon(1e-5));
    const std::string summary = slurp(dir / "optimize.summary");
    CHECK(summary_value(summary, "s_star") == doctest::Approx(opt.s_star).epsilon(1e-11));
    CHECK(summary_value(summary, "predicted_total") ==
          doctest::Approx(opt.predicted_total).epsilon(1e-11));
    CHECK(!fs::exists(dir / "optimize.csv"));  // summary-only format
}
