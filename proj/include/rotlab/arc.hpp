#pragma once
// Hanging arcs: simple polyline arcs in the cover that start on the boundary
// circle r = 0 and immediately descend into r < 0, ending at an interior
// landing point.

#include <string>
#include <vector>

#include "rotlab/geom.hpp"
#include "rotlab/system.hpp"

namespace rotlab {

struct HangingArc {
    // Strictly increasing parameters, t.front() == 0 and t.back() == 1.
    std::vector<double> t;
    // vertices[0].r == 0 (the hanging point); every later vertex has r < 0.
    std::vector<LiftPoint> v;

    const LiftPoint& base() const { return v.front(); }
    const LiftPoint& landing() const { return v.back(); }
};

// Build an arc with uniform parameters over the given vertices.
HangingArc make_arc(std::vector<LiftPoint> vertices);
// Build an arc with explicit parameters (same length as vertices).
HangingArc make_arc(std::vector<double> params, std::vector<LiftPoint> vertices);

// Shape invariants: >= 2 vertices, parameter monotonicity and endpoints,
// boundary base, interior r < 0.  Throws precondition_error on violation.
// Does not test simplicity (see arc_is_simple).
void validate_arc(const HangingArc& g);

// True when the polyline has no self-intersection (adjacent segments may
// share only their common vertex).  Quadratic in the vertex count.
bool arc_is_simple(const HangingArc& g);

// Piecewise-linear evaluation at t in [0, 1].
LiftPoint arc_eval(const HangingArc& g, double t);

// Deck translate T^k of an arc (parameters unchanged).
HangingArc deck_arc(const HangingArc& g, long k);

// Extremes of the first coordinate over the arc (attained at vertices).
struct ArcExtrema {
    double min_x1 = 0.0;
    double max_x1 = 0.0;
};
ArcExtrema lead_line_extrema(const HangingArc& g);

struct Disjointness {
    bool disjoint = false;            // no point in common at all
    bool shares_landing_only = false; // equal landing points, no other contact
};

// Exact segment-intersection test between two arcs.  A pair with equal
// landing points but no other contact reports disjoint = false together with
// shares_landing_only = true.
Disjointness arcs_disjoint(const HangingArc& g, const HangingArc& g2);

enum class BaseOrder { less, greater };

// Orders two arcs by their boundary base points.  Requires the arcs to be
// disjoint (shared landing allowed) with distinct bases.
BaseOrder compare_by_base(const HangingArc& g, const HangingArc& g2);

// Image of an arc under a full-map source, refined adaptively until every
// image segment is shorter than seg_tol.  Parameters keep their original
// meaning (refinement inserts midpoints in t).  Throws precondition_error if
// the source is not a full map, if refinement cannot reach seg_tol, or if
// the image fails the simplicity check.
HangingArc map_arc(const OrbitSource& src, const HangingArc& g, double seg_tol);

// Plain-text arc files: header line "hanging-arc v1", then one line per
// vertex "t x1 r" with enough digits to round-trip doubles exactly.
HangingArc read_arc(const std::string& path);
void write_arc(const std::string& path, const HangingArc& g);

}  // namespace rotlab
