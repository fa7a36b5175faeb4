#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rotlab/config.hpp"
#include "rotlab/experiment.hpp"
#include "rotlab/gallery.hpp"
#include "rotlab/series_io.hpp"

using namespace rotlab;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(static_cast<bool>(in));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string out_prefix(const std::string& stem) {
    std::filesystem::create_directories("io_cli_out");
    return "io_cli_out/" + stem;
}

}  // namespace

TEST_CASE("config files: sections, comments, trimming, typed access") {
    Config c = Config::parse(
        "# top comment\n"
        "alpha = 1\n"
        "name =  spaced out  \n"
        "empty =\n"
        "\n"
        "[experiment]\n"
        "system = transverse\n"
        "horizon = 300\n"
        "[tolerances]\n"
        "angle = 1e-9\n");

    CHECK(c.has("alpha"));
    CHECK(c.get("alpha") == "1");
    CHECK(c.get("name") == "spaced out");
    CHECK(c.get("empty").empty());
    CHECK(c.get("experiment.system") == "transverse");
    CHECK(c.get_long("experiment.horizon") == 300);
    CHECK(c.get_double("tolerances.angle") == 1e-9);

    auto tol = c.section("tolerances");
    CHECK(tol.size() == 1);
    CHECK(tol.at("angle") == "1e-9");

    CHECK(c.get_or("missing", "fallback") == "fallback");
    CHECK_THROWS_AS(c.get("missing"), precondition_error);
    CHECK_THROWS_AS(c.get_double("name"), precondition_error);
    CHECK_THROWS_AS(c.get_long("name"), precondition_error);

    c.set("experiment.system", "boomerang");
    CHECK(c.get("experiment.system") == "boomerang");
}

TEST_CASE("config files: malformed input is an io error") {
    CHECK_THROWS_AS(Config::parse("key value\n"), io_error);
    CHECK_THROWS_AS(Config::parse("[oops\n"), io_error);
    CHECK_THROWS_AS(Config::parse("= value\n"), io_error);
    CHECK_THROWS_AS(Config::load("no/such/config/file.cfg"), io_error);
}

TEST_CASE("experiment settings come from the [experiment] section or bare keys") {
    ExperimentConfig e = experiment_from_config(Config::parse(
        "[experiment]\n"
        "system = periodic:1/3\n"
        "seed = m\n"
        "horizon = 300\n"
        "direction = backward\n"
        "rho = 0.25\n"
        "output = somewhere/run\n"
        "[tolerances]\n"
        "gap = 1e-8\n"));
    CHECK(e.system == "periodic:1/3");
    CHECK(e.seed == "m");
    CHECK(e.horizon == 300);
    CHECK(e.direction == Direction::backward);
    REQUIRE(e.rho.has_value());
    CHECK(*e.rho == 0.25);
    CHECK(e.output == "somewhere/run");
    CHECK(e.tolerances.at("gap") == 1e-8);

    ExperimentConfig bare = experiment_from_config(
        Config::parse("system = transverse\nhorizon = 10\noutput = o\n"));
    CHECK(bare.system == "transverse");
    CHECK(bare.seed.empty());
    CHECK(bare.direction == Direction::forward);
    CHECK_FALSE(bare.rho.has_value());
    CHECK(bare.tolerances.empty());

    CHECK_THROWS_AS(experiment_from_config(Config::parse("direction = sideways\n")),
                    precondition_error);
    CHECK_THROWS_AS(experiment_from_config(Config::parse("horizon = 12x\n")),
                    precondition_error);
    CHECK_THROWS_AS(experiment_from_config(Config::parse("rho = abc\n")),
                    precondition_error);
    CHECK_THROWS_AS(
        experiment_from_config(Config::parse("[tolerances]\ngap = wide\n")),
        precondition_error);
}

TEST_CASE("orbit runs write a reproducible CSV and JSON summary") {
    ExperimentConfig cfg;
    cfg.system = "periodic:1/3";
    cfg.seed = "m";
    cfg.horizon = 300;
    cfg.output = out_prefix("p13");

    OrbitRunResult res = run_orbit(cfg);
    CHECK(res.series_path == cfg.output + ".series.csv");
    CHECK(res.summary_path == cfg.output + ".summary.json");

    // summary: exactly the documented keys, with values that survive the JSON
    // round trip bit for bit
    nlohmann::json j = nlohmann::json::parse(res.summary);
    CHECK(j.size() == 7);
    for (const char* key : {"rotation_estimate", "tail_slope", "residual", "drift_max",
                            "drift_min", "min_r", "classification"})
        CHECK(j.contains(key));

    MarkedSystem sys = system_by_name(cfg.system);
    OrbitSeries series =
        iterate_orbit(*sys.source, sys.marked_by_name("m").seed, 300, Direction::forward);
    RotationEstimate fit = rotation_estimate(series);
    DriftSeries drift = drift_series(series, *sys.rho_hat);
    CHECK(j["rotation_estimate"].get<double>() == fit.estimate);
    CHECK(j["tail_slope"].get<double>() == fit.tail_slope);
    CHECK(j["drift_max"].get<double>() == drift.max);
    CHECK(j["min_r"].get<double>() == series.min_r);
    CHECK(fit.estimate == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    // rounding-level drift must never read as escaping rotation
    std::string klass = j["classification"].get<std::string>();
    CHECK((klass == "Bounded" || klass == "Inconclusive"));

    // CSV: header plus one row per time step, seed row written exactly
    std::string csv = slurp(res.series_path);
    std::istringstream lines(csv);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "n,x1,r,drift");
    REQUIRE(std::getline(lines, line));
    CHECK(line == "0,0,-1,0");
    long rows = 1;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 301);

    // rerunning reproduces both files byte for byte
    std::string summary_before = slurp(res.summary_path);
    OrbitRunResult res2 = run_orbit(cfg);
    CHECK(slurp(res2.series_path) == csv);
    CHECK(slurp(res2.summary_path) == summary_before);
}

TEST_CASE("orbit runs accept coordinate seeds and string-system seeds") {
    ExperimentConfig cfg;
    cfg.system = "periodic:1/3";
    cfg.seed = "0.25,-1.25";
    cfg.horizon = 300;
    cfg.output = out_prefix("coords");
    nlohmann::json j = nlohmann::json::parse(run_orbit(cfg).summary);
    CHECK(j["min_r"].get<double>() == -1.25);
    CHECK(j["rotation_estimate"].get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    // coded horseshoe orbit: drift relative to its own estimate vanishes
    ExperimentConfig hs;
    hs.system = "horseshoe";
    hs.seed = "periodic:10";
    hs.horizon = 300;
    hs.output = out_prefix("hshoe");
    nlohmann::json h = nlohmann::json::parse(run_orbit(hs).summary);
    CHECK(h["rotation_estimate"].get<double>() == 0.5);
    CHECK(h["drift_max"].get<double>() == 0.0);
    CHECK(h["drift_min"].get<double>() == 0.0);
    CHECK(h["classification"].get<std::string>() == "Bounded");

    // short backward run on the boomerang: classification stays at the
    // default verdict below the classifier's minimum horizon
    ExperimentConfig bm;
    bm.system = "boomerang";
    bm.seed = "q";
    bm.horizon = 64;
    bm.direction = Direction::backward;
    bm.rho = 0.0;
    bm.output = out_prefix("boom");
    nlohmann::json b = nlohmann::json::parse(run_orbit(bm).summary);
    CHECK(b["min_r"].get<double>() < -1.5);
    CHECK(b["classification"].get<std::string>() == "Inconclusive");
}

TEST_CASE("orbit runs reject bad requests up front") {
    ExperimentConfig cfg;
    cfg.system = "periodic:1/3";
    cfg.seed = "m";
    cfg.horizon = 300;
    cfg.output = out_prefix("err");

    ExperimentConfig bad = cfg;
    bad.horizon = 0;
    CHECK_THROWS_AS(run_orbit(bad), precondition_error);

    bad = cfg;
    bad.system.clear();
    CHECK_THROWS_AS(run_orbit(bad), precondition_error);

    bad = cfg;
    bad.system = "nope";
    CHECK_THROWS_AS(run_orbit(bad), precondition_error);

    bad = cfg;
    bad.output.clear();
    CHECK_THROWS_AS(run_orbit(bad), precondition_error);

    // a name that is neither a marked point nor resolvable by the source
    bad = cfg;
    bad.system = "transverse";
    bad.seed = "zzz";
    CHECK_THROWS_AS(run_orbit(bad), precondition_error);
}

TEST_CASE("series writers flag inconsistent input and unwritable paths") {
    MarkedSystem sys = system_by_name("periodic:1/2");
    OrbitSeries series =
        iterate_orbit(*sys.source, sys.marked_by_name("m").seed, 8, Direction::forward);
    DriftSeries drift = drift_series(series, 0.5);
    DriftSeries chopped = drift;
    chopped.n.pop_back();
    chopped.values.pop_back();
    CHECK_THROWS_AS(write_series_csv(out_prefix("x") + ".series.csv", series, chopped),
                    precondition_error);
    CHECK_THROWS_AS(write_series_csv("no/such/dir/x.csv", series, drift), io_error);
    CHECK_THROWS_AS(write_text_file("no/such/dir/x.json", "{}"), io_error);
}
