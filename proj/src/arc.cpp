#include "rotlab/arc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rotlab {
namespace {

// Sign of the cross product (b - a) x (c - a); exact double arithmetic, no
// epsilon: near-touching configurations count as non-intersecting.
int orient(const LiftPoint& a, const LiftPoint& b, const LiftPoint& c) {
    double d = (b.x1 - a.x1) * (c.r - a.r) - (b.r - a.r) * (c.x1 - a.x1);
    return (d > 0.0) - (d < 0.0);
}

// For p collinear with [a, b]: does p lie within the segment's bounding box?
bool on_segment(const LiftPoint& a, const LiftPoint& b, const LiftPoint& p) {
    return std::min(a.x1, b.x1) <= p.x1 && p.x1 <= std::max(a.x1, b.x1) &&
           std::min(a.r, b.r) <= p.r && p.r <= std::max(a.r, b.r);
}

bool segs_intersect(const LiftPoint& p1, const LiftPoint& p2, const LiftPoint& p3,
                    const LiftPoint& p4) {
    int d1 = orient(p3, p4, p1);
    int d2 = orient(p3, p4, p2);
    int d3 = orient(p1, p2, p3);
    int d4 = orient(p1, p2, p4);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment(p3, p4, p1)) return true;
    if (d2 == 0 && on_segment(p3, p4, p2)) return true;
    if (d3 == 0 && on_segment(p1, p2, p3)) return true;
    if (d4 == 0 && on_segment(p1, p2, p4)) return true;
    return false;
}

bool points_equal(const LiftPoint& a, const LiftPoint& b) {
    return a.x1 == b.x1 && a.r == b.r;
}

// Two segments sharing exactly the endpoint p: do they meet anywhere else?
// Only possible when collinear and overlapping.
bool meet_beyond_shared_endpoint(const LiftPoint& a, const LiftPoint& p, const LiftPoint& b) {
    if (orient(a, p, b) != 0) return false;
    return on_segment(a, p, b) || on_segment(b, p, a);
}

}  // namespace

HangingArc make_arc(std::vector<LiftPoint> vertices) {
    std::size_t n = vertices.size();
    if (n < 2) throw precondition_error("make_arc: need at least 2 vertices");
    std::vector<double> params(n);
    for (std::size_t i = 0; i < n; ++i)
        params[i] = static_cast<double>(i) / static_cast<double>(n - 1);
    return make_arc(std::move(params), std::move(vertices));
}

HangingArc make_arc(std::vector<double> params, std::vector<LiftPoint> vertices) {
    HangingArc g;
    g.t = std::move(params);
    g.v = std::move(vertices);
    validate_arc(g);
    return g;
}

void validate_arc(const HangingArc& g) {
    if (g.t.size() != g.v.size())
        throw precondition_error("arc: parameter and vertex counts differ");
    if (g.v.size() < 2) throw precondition_error("arc: need at least 2 vertices");
    if (g.t.front() != 0.0 || g.t.back() != 1.0)
        throw precondition_error("arc: parameters must run from 0 to 1");
    for (std::size_t i = 1; i < g.t.size(); ++i)
        if (!(g.t[i] > g.t[i - 1]))
            throw precondition_error("arc: parameters must be strictly increasing");
    if (g.v.front().r != 0.0)
        throw precondition_error("arc: first vertex must lie on the boundary circle r = 0");
    for (std::size_t i = 1; i < g.v.size(); ++i) {
        if (!(g.v[i].r < 0.0))
            throw precondition_error("arc: vertices after the first must have r < 0");
        if (points_equal(g.v[i - 1], g.v[i]))
            throw precondition_error("arc: consecutive vertices must be distinct");
    }
}

bool arc_is_simple(const HangingArc& g) {
    std::size_t m = g.v.size() - 1;  // segment count
    for (std::size_t i = 0; i + 1 < m; ++i) {
        // Adjacent pair: allowed to meet only at the shared vertex.
        if (meet_beyond_shared_endpoint(g.v[i], g.v[i + 1], g.v[i + 2])) return false;
        for (std::size_t j = i + 2; j < m; ++j)
            if (segs_intersect(g.v[i], g.v[i + 1], g.v[j], g.v[j + 1])) return false;
    }
    return true;
}

LiftPoint arc_eval(const HangingArc& g, double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw precondition_error("arc_eval: t must lie in [0, 1]");
    if (t <= 0.0) return g.v.front();
    if (t >= 1.0) return g.v.back();
    auto it = std::upper_bound(g.t.begin(), g.t.end(), t);
    std::size_t hi = static_cast<std::size_t>(it - g.t.begin());
    std::size_t lo = hi - 1;
    double s = (t - g.t[lo]) / (g.t[hi] - g.t[lo]);
    double x = std::lerp(g.v[lo].x1, g.v[hi].x1, s);
    double r = std::lerp(g.v[lo].r, g.v[hi].r, s);
    return LiftPoint(x, std::min(r, 0.0));
}

HangingArc deck_arc(const HangingArc& g, long k) {
    HangingArc out = g;
    double dk = static_cast<double>(k);
    for (auto& p : out.v) p.x1 += dk;
    return out;
}

ArcExtrema lead_line_extrema(const HangingArc& g) {
    validate_arc(g);
    ArcExtrema e{g.v.front().x1, g.v.front().x1};
    for (const auto& p : g.v) {
        e.min_x1 = std::min(e.min_x1, p.x1);
        e.max_x1 = std::max(e.max_x1, p.x1);
    }
    return e;
}

Disjointness arcs_disjoint(const HangingArc& g, const HangingArc& g2) {
    validate_arc(g);
    validate_arc(g2);
    bool landing_shared = points_equal(g.landing(), g2.landing());
    std::size_t ma = g.v.size() - 1, mb = g2.v.size() - 1;

    bool contact = false;
    for (std::size_t i = 0; i < ma && !contact; ++i) {
        for (std::size_t j = 0; j < mb; ++j) {
            if (landing_shared && i == ma - 1 && j == mb - 1) {
                // Final segments share the landing point by construction;
                // flag only contact beyond it.
                if (meet_beyond_shared_endpoint(g.v[ma - 1], g.landing(), g2.v[mb - 1]))
                    contact = true;
            } else if (segs_intersect(g.v[i], g.v[i + 1], g2.v[j], g2.v[j + 1])) {
                contact = true;
            }
            if (contact) break;
        }
    }

    Disjointness d;
    if (contact) {
        d.disjoint = false;
        d.shares_landing_only = false;
    } else if (landing_shared) {
        d.disjoint = false;
        d.shares_landing_only = true;
    } else {
        d.disjoint = true;
    }
    return d;
}

BaseOrder compare_by_base(const HangingArc& g, const HangingArc& g2) {
    Disjointness d = arcs_disjoint(g, g2);
    if (!d.disjoint && !d.shares_landing_only)
        throw precondition_error("compare_by_base: arcs intersect; order undefined");
    double a = g.base().x1, b = g2.base().x1;
    if (a == b) throw precondition_error("compare_by_base: equal base points");
    return a < b ? BaseOrder::less : BaseOrder::greater;
}

namespace {

void refine_image(const FullMap& fm, const HangingArc& g, double t0, const LiftPoint& q0,
                  double t1, const LiftPoint& q1, double seg_tol, int depth,
                  std::vector<double>& ts, std::vector<LiftPoint>& vs) {
    if (dist(q0, q1) <= seg_tol) {
        ts.push_back(t1);
        vs.push_back(q1);
        return;
    }
    if (depth >= 24)
        throw precondition_error("map_arc: cannot refine image segment to seg_tol");
    double tm = 0.5 * (t0 + t1);
    LiftPoint qm = fm.map(arc_eval(g, tm));
    refine_image(fm, g, t0, q0, tm, qm, seg_tol, depth + 1, ts, vs);
    refine_image(fm, g, tm, qm, t1, q1, seg_tol, depth + 1, ts, vs);
}

}  // namespace

HangingArc map_arc(const OrbitSource& src, const HangingArc& g, double seg_tol) {
    const auto* fm = dynamic_cast<const FullMap*>(&src);
    if (!fm)
        throw precondition_error("map_arc: source '" + src.name() +
                                 "' does not provide a pointwise map");
    if (!(seg_tol > 0.0)) throw precondition_error("map_arc: seg_tol must be positive");
    validate_arc(g);
    if (!arc_is_simple(g)) throw precondition_error("map_arc: input arc is not simple");

    std::vector<double> ts{g.t.front()};
    std::vector<LiftPoint> vs{fm->map(g.v.front())};
    for (std::size_t i = 0; i + 1 < g.v.size(); ++i)
        refine_image(*fm, g, g.t[i], fm->map(g.v[i]), g.t[i + 1], fm->map(g.v[i + 1]),
                     seg_tol, 0, ts, vs);

    HangingArc out = make_arc(std::move(ts), std::move(vs));
    if (!arc_is_simple(out))
        throw precondition_error(
            "map_arc: image fails the simplicity check "
            "(insufficient refinement or non-injective input)");
    return out;
}

HangingArc read_arc(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("read_arc: cannot open '" + path + "'");
    std::string header;
    if (!std::getline(in, header) || header != "hanging-arc v1")
        throw io_error("read_arc: malformed header in '" + path + "'");

    std::vector<double> params;
    std::vector<LiftPoint> verts;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        double t, x1, r;
        if (!(ls >> t >> x1 >> r))
            throw io_error("read_arc: malformed vertex line in '" + path + "'");
        params.push_back(t);
        try {
            verts.emplace_back(x1, r);
        } catch (const precondition_error& e) {
            throw io_error("read_arc: " + std::string(e.what()) + " in '" + path + "'");
        }
    }
    return make_arc(std::move(params), std::move(verts));
}

void write_arc(const std::string& path, const HangingArc& g) {
    validate_arc(g);
    std::ofstream out(path);
    if (!out) throw io_error("write_arc: cannot open '" + path + "'");
    out << "hanging-arc v1\n";
    char buf[128];
    for (std::size_t i = 0; i < g.v.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", g.t[i], g.v[i].x1, g.v[i].r);
        out << buf;
    }
    if (!out) throw io_error("write_arc: write failed for '" + path + "'");
}

}  // namespace rotlab
