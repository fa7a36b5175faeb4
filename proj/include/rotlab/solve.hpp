#pragma once
// Scalar root solving for strictly monotone functions on a bracket.

#include <cmath>

#include "rotlab/geom.hpp"

namespace rotlab {

// Solve f(x) = target for strictly increasing f with f(lo) <= target <= f(hi).
// Newton iteration safeguarded by the shrinking bracket: any step leaving the
// bracket is replaced by bisection, so convergence is guaranteed.  Stops when
// the bracket or the Newton step is below xtol.
template <class F, class DF>
double solve_increasing(F f, DF df, double target, double lo, double hi, double xtol = 1e-14) {
    double flo = f(lo) - target;
    double fhi = f(hi) - target;
    if (flo > 0.0 || fhi < 0.0)
        throw precondition_error("solve_increasing: bracket does not contain the root");
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;

    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 128; ++it) {
        double fx = f(x) - target;
        if (fx == 0.0) return x;
        if (fx > 0.0) hi = x; else lo = x;

        double d = df(x);
        double step = fx / d;
        double xn = x - step;
        if (!(xn > lo) || !(xn < hi) || !std::isfinite(xn))
            xn = 0.5 * (lo + hi);  // bisect when Newton leaves the bracket
        if (std::fabs(xn - x) < xtol || hi - lo < xtol)
            return xn;
        x = xn;
    }
    return x;
}

}  // namespace rotlab
