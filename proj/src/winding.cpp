#include "rotlab/winding.hpp"

#include <algorithm>
#include <cmath>

namespace rotlab {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxDepth = 32;

struct Diff {
    double x, y;
};

// Difference vector g2(t) - g(t); must stay away from 0.
Diff diff_at(const HangingArc& g, const HangingArc& g2, double t, double tol) {
    LiftPoint a = arc_eval(g, t);
    LiftPoint b = arc_eval(g2, t);
    Diff d{b.x1 - a.x1, b.r - a.r};
    if (std::hypot(d.x, d.y) <= tol)
        throw precondition_error("relative_winding: arcs touch at matched parameter t = " +
                                 std::to_string(t));
    return d;
}

// Principal signed angle from v0 to v1 in half turns, in (-1, 1].
double step_half_turns(const Diff& v0, const Diff& v1) {
    double cross = v0.x * v1.y - v0.y * v1.x;
    double dot = v0.x * v1.x + v0.y * v1.y;
    return std::atan2(cross, dot) / kPi;
}

struct Accum {
    double w = 0.0;
    int depth = 0;
};

// The two polylines are linear in t between merged grid nodes, so the
// difference path is a straight segment there and the principal angle is the
// exact winding unless the segment passes near the origin; such steps are
// bisected (a first step of half a half-turn triggers refinement, refined
// steps must fall below a quarter).
void accumulate(const HangingArc& g, const HangingArc& g2, double t0, const Diff& d0,
                double t1, const Diff& d1, double tol, int depth, Accum& acc) {
    double step = step_half_turns(d0, d1);
    double threshold = depth == 0 ? 0.5 : 0.25;
    if (std::fabs(step) < threshold) {
        acc.w += step;
        acc.depth = std::max(acc.depth, depth);
        return;
    }
    if (depth >= kMaxDepth)
        throw precondition_error(
            "relative_winding: cannot resolve the direction step near t = " +
            std::to_string(t0) + "; arcs nearly touch");
    double tm = 0.5 * (t0 + t1);
    Diff dm = diff_at(g, g2, tm, tol);
    accumulate(g, g2, t0, d0, tm, dm, tol, depth + 1, acc);
    accumulate(g, g2, tm, dm, t1, d1, tol, depth + 1, acc);
}

}  // namespace

long nearest_integer(double a, double tie_tol) {
    if (frac_dist(a + 0.5) < tie_tol)
        throw precondition_error("nearest_integer: value " + std::to_string(a) +
                                 " is within tie_tol of a half integer");
    return std::lround(a);
}

WindingResult relative_winding(const HangingArc& g, const HangingArc& g2, double tol,
                               double tie_tol) {
    validate_arc(g);
    validate_arc(g2);
    if (!arc_is_simple(g) || !arc_is_simple(g2))
        throw precondition_error("relative_winding: arcs must be simple");
    if (!(g.base().x1 < g2.base().x1))
        throw precondition_error(
            "relative_winding: base points must be ordered (g strictly left of g2)");
    if (!(tol > 0.0) || !(tie_tol > 0.0) || !(tie_tol < 0.5))
        throw precondition_error("relative_winding: bad tolerances");

    // Merged parameter grid of both arcs.
    std::vector<double> ts;
    ts.reserve(g.t.size() + g2.t.size());
    ts.insert(ts.end(), g.t.begin(), g.t.end());
    ts.insert(ts.end(), g2.t.begin(), g2.t.end());
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    Accum acc;
    Diff prev = diff_at(g, g2, ts.front(), tol);
    for (std::size_t i = 1; i < ts.size(); ++i) {
        Diff cur = diff_at(g, g2, ts[i], tol);
        accumulate(g, g2, ts[i - 1], prev, ts[i], cur, tol, 0, acc);
        prev = cur;
    }

    WindingResult res;
    res.w = acc.w;
    res.refinement_depth = acc.depth;
    if (std::fabs(res.w - std::round(res.w)) < 0.5 - tie_tol)
        res.nearest = std::lround(res.w);
    return res;
}

}  // namespace rotlab
