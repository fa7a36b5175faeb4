#pragma once
// Orbits, rotation-number estimates, drift series and their classification.

#include <optional>
#include <string>
#include <vector>

#include "rotlab/geom.hpp"
#include "rotlab/system.hpp"

namespace rotlab {

enum class Direction { forward, backward };

// Seed of an orbit: an explicit point (full maps) or a named seed of a
// string system.
struct OrbitSeed {
    std::optional<LiftPoint> pt;
    std::string name;

    static OrbitSeed point(const LiftPoint& p) { return {p, {}}; }
    static OrbitSeed named(std::string s) { return {std::nullopt, std::move(s)}; }
};

struct OrbitSeries {
    Direction direction = Direction::forward;
    std::vector<long> n;       // strictly monotone from 0 (decreasing if backward)
    std::vector<LiftPoint> p;  // p[i] = orbit point at time n[i]
    double min_r = 0.0;
    bool escaped = false;      // min_r fell below the source's compactness cutoff
};

// Computes n_steps iterates in the given direction (plus the seed itself).
// Backward orbits require an invertible map or a seed with backward support.
OrbitSeries iterate_orbit(const OrbitSource& src, const OrbitSeed& seed, long n_steps,
                          Direction dir = Direction::forward);

struct RotationEstimate {
    double estimate = 0.0;    // (x1(n_last) - x1(0)) / n_last
    double tail_slope = 0.0;  // least-squares slope of x1 vs n over the last half
    double residual = 0.0;    // |estimate - tail_slope|, a convergence diagnostic
};

RotationEstimate rotation_estimate(const OrbitSeries& series);

struct DriftSeries {
    double rho = 0.0;
    std::vector<long> n;
    std::vector<double> values;  // x1(n) - x1(0) - n * rho; values[0] == 0
    double max = 0.0, min = 0.0;
    long argmax = 0, argmin = 0;
};

DriftSeries drift_series(const OrbitSeries& series, double rho);

enum class DriftKind {
    bounded,
    unbounded_above,
    unbounded_below,
    oscillating,
    inconclusive,
};

const char* to_string(DriftKind k);

// Classification evidence: extrema over dyadic windows |n| in [2^j, 2^(j+1))
// (the last window may be partial).  Growth "up" means the window maxima
// strictly increase across the last four windows and the final maximum
// exceeds three times the first window's maximum (and an absolute noise
// floor of 1e-9, so rounding-level drift never reads as growth); "down"
// symmetrically for minima.  Both directions growing is oscillating, neither
// trend is bounded, a trend without the factor-three margin is inconclusive.
struct DriftClass {
    DriftKind kind = DriftKind::inconclusive;
    double bound = 0.0;  // sup |drift| when kind == bounded
    std::vector<double> window_max, window_min;
    bool grew_up = false, grew_down = false;
};

// Requires the series to reach |n| >= 256 so at least nine windows exist.
DriftClass classify_drift(const DriftSeries& drift);

struct GapReport {
    double max_gap = 0.0;  // max |drift(bn+k) - drift(m)|, m in [bn+k, b(n+1)+k)
    double bound = 0.0;    // b * D + (b + |k|) * |rho|, D the displacement bound
    double d_sup = 0.0;
    bool pass = false;
};

// Compares the drift sampled along times bn+k with the full drift series.
// Full-map sources only: the displacement bound D is evaluated over the
// radial extent actually visited by the orbit (padded by 0.05, density 256).
GapReport subsampled_drift_gap(const OrbitSource& src, const OrbitSeed& seed, long b,
                               long k, double rho, long n_max);

struct H1Report {
    bool holds_limsup = false;  // drift wrt a/b grows unboundedly above
    bool holds_linear = false;  // tail slope exceeds a/b by > 3 residuals
    DriftKind drift_kind = DriftKind::inconclusive;
    RotationEstimate fit;
};

// Examines one forward orbit series against the reference rotation a/b.
H1Report h1_check(const OrbitSeries& series, long a, long b);

struct H2Witness {
    LiftPoint q0;          // normalized recurrent point
    long n_first = 0, n_second = 0;
    double move_dist = 0.0;      // |T^-a F^b shift| at the representative
    double cluster_diameter = 0.0;
};

// Searches times bn+k, n = 1..horizon, for two visits to a common eps-cell
// after normalizing by T^(-an) and deck reduction; reports the first cell
// whose representative is moved by more than delta under T^-a F^b.
std::optional<H2Witness> h2_witness_search(const OrbitSource& src, const OrbitSeed& seed,
                                           long a, long b, long k, long horizon,
                                           double eps = 1e-2, double delta = 1e-1);

struct MeasureRotation {
    double value = 0.0;              // orbit average of the displacement
    double telescoping_error = 0.0;  // |sum of displacements - (x1(n) - x1(0))|
};

// Time average of u along a forward orbit of a full map; the telescoping
// error measures pure accumulation roundoff and should stay below n * 1e-12.
MeasureRotation empirical_measure_rotation(const OrbitSource& src, const LiftPoint& seed,
                                           long n);

}  // namespace rotlab
