#pragma once
// Gallery of explicit systems, each packaged with its invariant set, marked
// points, and (when one is designated) the boundary-circle dynamics standing
// in for the rotation number seen from the boundary.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rotlab/geom.hpp"
#include "rotlab/orbit.hpp"
#include "rotlab/system.hpp"

namespace rotlab {

struct MarkedPoint {
    std::string name;
    OrbitSeed seed;
    bool has_backward = true;
    std::string note;
};

struct MarkedSystem {
    std::string name;
    std::shared_ptr<const OrbitSource> source;
    std::vector<MarkedPoint> marked;

    // Rotation number of the designated boundary dynamics, when known.
    std::optional<double> rho_hat;

    // Membership test for the invariant set X (x1 compared mod deck) and a
    // sampler of random points of X; absent for coded-orbit systems.
    std::function<bool(const LiftPoint&, double tol)> member;
    std::function<LiftPoint(std::mt19937_64&)> sample_member;

    // Lift of the designated boundary circle dynamics; absent when none.
    std::function<double(double)> proxy_lift;
    std::string proxy_note;

    const MarkedPoint& marked_by_name(const std::string& n) const;
};

// Rigid rotation by a/b carrying b vertical strings (gcd(|a|, b) = 1, b >= 1).
// X = strings at x1 = j/b for r <= -1, plus the full annulus below r = -2;
// marked point "m" at (0, -1).
MarkedSystem build_periodic_strings(long a, long b);

// Compressed twist band over s in (-2, -1] with a radial transverse kick;
// identity elsewhere.  Strings hang at angles 0 and 1/2; the marked points
// "q" (0, -1.5) and "p" (1/2, -1.5) ride them.  The boundary circle is fixed
// pointwise, so the designated boundary rotation number is 0 while the
// marked drifts oscillate unboundedly.
MarkedSystem build_transverse_example();

// Coded orbits on twisted strings indexed by the integers, presented as a
// string system with the single seed "q"; forward and backward drifts grow
// without bound although every rotation estimate tends to 0.
MarkedSystem build_boomerang_example();

// Coded horseshoe orbits (see horseshoe.hpp); any code literal is a seed.
MarkedSystem build_horseshoe_system();

std::vector<std::string> gallery_names();

// "periodic:a/b", "transverse", "boomerang", "horseshoe".
MarkedSystem system_by_name(const std::string& name);

struct InvarianceReport {
    int samples = 0;
    int kept = 0;
    double fraction = 0.0;
};

// Samples points of X and checks that their images remain in X within tol.
// Full-map systems with membership data only.
InvarianceReport verify_invariance(const MarkedSystem& sys, int samples, double tol,
                                   std::uint64_t rng_seed = 0);

// Rotation estimate (g^n(1/2) - 1/2)/n of the designated boundary dynamics.
double proxy_prime_end_rotation(const MarkedSystem& sys, long n);

}  // namespace rotlab
