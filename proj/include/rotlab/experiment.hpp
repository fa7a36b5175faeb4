#pragma once
// Config-driven orbit experiments: resolve a system and a starting point,
// iterate, and emit the series CSV plus the JSON summary.

#include <map>
#include <optional>
#include <string>

#include "rotlab/config.hpp"
#include "rotlab/orbit.hpp"

namespace rotlab {

struct ExperimentConfig {
    std::string system;  // gallery name, e.g. "periodic:1/3" or "transverse"
    std::string seed;    // marked-point name, code literal, or "x,r" coordinates;
                         // empty selects the system's first marked point
    long horizon = 0;    // must be >= 1
    Direction direction = Direction::forward;
    std::optional<double> rho;  // drift reference; when absent the system's known
                                // boundary rotation is used, else the run's own estimate
    std::map<std::string, double> tolerances;
    std::string output;  // path prefix for <prefix>.series.csv / <prefix>.summary.json
};

// Reads keys system / seed / horizon / direction / rho / output from the
// [experiment] section (bare top-level keys work too) and numeric entries of
// [tolerances].  Throws precondition_error on invalid values.
ExperimentConfig experiment_from_config(const Config& c);

struct OrbitRunResult {
    std::string series_path;
    std::string summary_path;
    std::string summary;  // JSON text, as written to summary_path
};

// Runs the experiment and writes both output files.  Reruns with the same
// config reproduce the files byte for byte.  Throws precondition_error for
// unknown systems/seeds or horizon < 1, io_error on write failure.
OrbitRunResult run_orbit(const ExperimentConfig& cfg);

}  // namespace rotlab
