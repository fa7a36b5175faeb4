#pragma once
// Relative winding number of one hanging arc around another.
//
// Unit convention: half turns.  The direction of the difference vector
// g2(t) - g(t) is tracked through the double cover x -> exp(i*pi*x) of the
// circle of directions, so one full turn of the difference vector changes
// the winding by 2.  With both base points on the boundary circle and the
// bases ordered g before g2, the initial direction is the positive
// horizontal axis and the angle function starts at 0.

#include <optional>

#include "rotlab/arc.hpp"
#include "rotlab/geom.hpp"

namespace rotlab {

struct WindingResult {
    double w = 0.0;                    // total angle change in half turns
    std::optional<long> nearest;       // absent when w is within tie_tol of a half integer
    int refinement_depth = 0;          // deepest adaptive bisection used
};

// Nearest integer to a; throws precondition_error when a is within tie_tol
// of a half integer (the rounding would be meaningless).
long nearest_integer(double a, double tie_tol = 1e-6);

// Relative winding of g2 around g in half turns.  Preconditions: both arcs
// valid and simple, bases ordered (g base strictly left of g2 base), and the
// arcs never touch at matched parameters: |g2(t) - g(t)| > tol on the merged
// parameter grid and on every refinement point.  Angle steps of at least
// half a half-turn trigger adaptive bisection (depth capped at 32); failure
// to separate the arcs there raises precondition_error.
WindingResult relative_winding(const HangingArc& g, const HangingArc& g2,
                               double tol = 1e-9, double tie_tol = 1e-6);

}  // namespace rotlab
