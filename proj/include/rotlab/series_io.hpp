#pragma once
// Deterministic text output for orbit experiments.

#include <string>

#include "rotlab/orbit.hpp"

namespace rotlab {

// CSV with header "n,x1,r,drift"; doubles carry 17 significant digits so the
// files are byte-identical across runs and round-trip exactly.
void write_series_csv(const std::string& path, const OrbitSeries& series,
                      const DriftSeries& drift);

// Two-space-indented JSON summary with fields rotation_estimate, tail_slope,
// residual, drift_max, drift_min, min_r, classification.
std::string summary_json(const OrbitSeries& series, const DriftSeries& drift,
                         const RotationEstimate& fit, const DriftClass& klass);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace rotlab
