#pragma once
// Orbit sources: dynamics presented either as an invertible lifted map of the
// cover (FullMap) or as closed-form orbit formulas indexed by named seeds
// (StringSystem).  Every source commutes with the deck transformation T.

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rotlab/geom.hpp"

namespace rotlab {

enum class SourceKind { full_map, string_system };

class OrbitSource {
public:
    virtual ~OrbitSource() = default;

    virtual SourceKind kind() const = 0;
    virtual std::string name() const = 0;

    // Radial level below which an orbit is flagged as escaping toward the
    // open end of the annulus.
    virtual double compactness_cutoff() const { return -1e9; }

    // Radial band where the dynamics is interesting; used when sampling
    // diagnostic points.  The band must satisfy r <= 0.
    virtual std::pair<double, double> sample_band() const { return {-3.0, 0.0}; }
};

// Dynamics given by an explicit homeomorphism lift and its inverse.
class FullMap : public OrbitSource {
public:
    SourceKind kind() const final { return SourceKind::full_map; }

    virtual LiftPoint map(const LiftPoint& p) const = 0;
    virtual LiftPoint inverse(const LiftPoint& p) const = 0;

    // Batched displacement u(p) = (F(p))_1 - p_1 over parallel arrays.
    // The default loops map(); subclasses may override with vector kernels.
    virtual void displacement_batch(const double* x1, const double* r, double* u,
                                    std::size_t n) const;
};

// Dynamics known only along distinguished orbits ("strings"), each identified
// by a seed name; positions are produced by closed-form recurrences.
class StringSystem : public OrbitSource {
public:
    SourceKind kind() const final { return SourceKind::string_system; }

    virtual std::vector<std::string> seeds() const = 0;
    virtual bool has_backward(const std::string& seed) const = 0;

    // Position of the orbit of `seed` at time n (n < 0 requires
    // has_backward).  Throws precondition_error for unknown seeds.
    virtual LiftPoint at(const std::string& seed, long n) const = 0;

    // Positions for n = 0, step, 2*step, ..., inclusive of n_last, where
    // step = sign(n_last); n_last = 0 yields just the seed point.  The
    // default loops at(); subclasses may override with batched recurrences.
    virtual std::vector<LiftPoint> range(const std::string& seed, long n_last) const;
};

// u(p) for a full-map source.  Throws precondition_error when the source is
// a string system (no map to evaluate off the strings).
double displacement(const OrbitSource& src, const LiftPoint& p);

struct DisplacementBound {
    double value = 0.0;   // grid sup of |u| times a 1.1 safety factor
    double grid_sup = 0.0;
    double r_min = 0.0, r_max = 0.0;
    int density = 0;
};

// Bound for sup |u| over S^1 x [r_min, r_max], estimated on a density^2 grid
// (x1 = j/density for j = 0..density-1; r = r_min + (i+0.5)*(r_max-r_min)/density)
// and inflated by 1.1.  Requires r_min < r_max <= 0 and density >= 2.
DisplacementBound displacement_bound(const OrbitSource& src, double r_min, double r_max,
                                     int density);

struct CommutationReport {
    double max_error = 0.0;  // max over samples of dist(F(T(p)), T(F(p)))
    int samples = 0;
    bool pass = false;
};

// Checks F o T = T o F on random points of the sample band (both directions
// of the map are exercised).  Deterministic for a fixed rng_seed.
CommutationReport check_deck_commutation(const OrbitSource& src, int samples, double tol,
                                         std::uint64_t rng_seed = 0);

}  // namespace rotlab
