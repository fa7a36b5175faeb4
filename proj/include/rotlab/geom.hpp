#pragma once
// Core types for dynamics on the universal cover of the half-open annulus
// A = S^1 x (-inf, 0].  The cover is R x (-inf, 0]; the deck transformation
// is T(x1, r) = (x1 + 1, r).

#include <cmath>
#include <stdexcept>
#include <string>

namespace rotlab {

// Violation of a documented precondition (bad arguments, invalid geometry).
// The CLI maps this to exit code 2.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// File/parse failures.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Point of the universal cover.  x1 is the lifted angular coordinate in deck
// units (never reduced mod 1 -- rotation and drift quantities are differences
// of lifted coordinates), r <= 0 the radial coordinate.
struct LiftPoint {
    double x1 = 0.0;
    double r = 0.0;

    LiftPoint() = default;
    LiftPoint(double x1_, double r_) : x1(x1_), r(r_) {
        if (!(r_ <= 0.0))
            throw precondition_error("LiftPoint: r must be <= 0, got " + std::to_string(r_));
    }
};

// Deck transformation T^k.
inline LiftPoint deck(const LiftPoint& p, long k) {
    return LiftPoint(p.x1 + static_cast<double>(k), p.r);
}

inline double dist(const LiftPoint& a, const LiftPoint& b) {
    return std::hypot(a.x1 - b.x1, a.r - b.r);
}

// Distance of a to the nearest integer.
inline double frac_dist(double a) {
    return std::fabs(a - std::round(a));
}

inline constexpr double two_pi = 6.283185307179586476925286766559;

}  // namespace rotlab
