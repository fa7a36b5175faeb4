#include "rotlab/experiment.hpp"

#include <cerrno>
#include <cstdlib>
#include <utility>

#include "rotlab/gallery.hpp"
#include "rotlab/series_io.hpp"

namespace rotlab {
namespace {

std::string lookup(const Config& c, const std::string& key, const std::string& dflt) {
    return c.get_or("experiment." + key, c.get_or(key, dflt));
}

double parse_number(const std::string& what, const std::string& v) {
    errno = 0;
    char* end = nullptr;
    double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0' || errno == ERANGE)
        throw precondition_error("experiment: " + what + " is not a number: '" + v + "'");
    return x;
}

}  // namespace

ExperimentConfig experiment_from_config(const Config& c) {
    ExperimentConfig e;
    e.system = lookup(c, "system", "");
    e.seed = lookup(c, "seed", "");
    e.output = lookup(c, "output", "");

    std::string horizon = lookup(c, "horizon", "");
    if (!horizon.empty()) {
        errno = 0;
        char* end = nullptr;
        e.horizon = std::strtol(horizon.c_str(), &end, 10);
        if (end == horizon.c_str() || *end != '\0' || errno == ERANGE)
            throw precondition_error("experiment: horizon is not an integer: '" + horizon +
                                     "'");
    }

    std::string dir = lookup(c, "direction", "forward");
    if (dir == "forward")
        e.direction = Direction::forward;
    else if (dir == "backward")
        e.direction = Direction::backward;
    else
        throw precondition_error(
            "experiment: direction must be 'forward' or 'backward', got '" + dir + "'");

    std::string rho = lookup(c, "rho", "");
    if (!rho.empty()) e.rho = parse_number("rho", rho);

    for (const auto& [k, v] : c.section("tolerances"))
        e.tolerances[k] = parse_number("tolerance '" + k + "'", v);
    return e;
}

OrbitRunResult run_orbit(const ExperimentConfig& cfg) {
    if (cfg.system.empty())
        throw precondition_error("experiment: no system named (key 'system')");
    if (cfg.horizon < 1)
        throw precondition_error("experiment: horizon must be >= 1, got " +
                                 std::to_string(cfg.horizon));
    if (cfg.output.empty())
        throw precondition_error("experiment: no output prefix (key 'output')");

    MarkedSystem sys = system_by_name(cfg.system);

    OrbitSeed seed;
    if (cfg.seed.empty()) {
        if (sys.marked.empty())
            throw precondition_error("experiment: system '" + cfg.system +
                                     "' has no marked points; name a seed explicitly");
        seed = sys.marked.front().seed;
    } else if (cfg.seed.find(',') != std::string::npos) {
        std::size_t comma = cfg.seed.find(',');
        double x1 = parse_number("seed x1", cfg.seed.substr(0, comma));
        double r = parse_number("seed r", cfg.seed.substr(comma + 1));
        seed = OrbitSeed::point(LiftPoint(x1, r));
    } else {
        // A name: prefer the system's marked points (full maps need a concrete
        // starting point); anything else goes to the source, which may resolve
        // it itself (the coded-orbit system accepts code literals here).
        seed = OrbitSeed::named(cfg.seed);
        for (const MarkedPoint& m : sys.marked)
            if (m.name == cfg.seed) {
                seed = m.seed;
                break;
            }
    }

    OrbitSeries series = iterate_orbit(*sys.source, seed, cfg.horizon, cfg.direction);
    RotationEstimate fit = rotation_estimate(series);
    double rho = cfg.rho             ? *cfg.rho
                 : sys.rho_hat       ? *sys.rho_hat
                                     : fit.estimate;
    DriftSeries drift = drift_series(series, rho);

    // Horizons below the classifier's dyadic-window minimum report the
    // default verdict instead of failing the whole run.
    DriftClass klass;
    if (std::abs(series.n.back()) >= 256) klass = classify_drift(drift);

    OrbitRunResult res;
    res.series_path = cfg.output + ".series.csv";
    res.summary_path = cfg.output + ".summary.json";
    write_series_csv(res.series_path, series, drift);
    res.summary = summary_json(series, drift, fit, klass);
    write_text_file(res.summary_path, res.summary);
    return res;
}

}  // namespace rotlab
