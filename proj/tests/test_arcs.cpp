#include <doctest.h>

#include <cstdio>
#include <string>

#include "rotlab/arc.hpp"
#include "rotlab/gallery.hpp"

using namespace rotlab;

namespace {
const std::string kFixtures = ROTLAB_FIXTURE_DIR;
}

TEST_CASE("arc construction enforces the shape invariants") {
    CHECK_NOTHROW(make_arc({{0.0, 0.0}, {0.5, -1.0}}));

    // fewer than two vertices
    CHECK_THROWS_AS(make_arc({{0.0, 0.0}}), precondition_error);
    // base off the boundary circle
    CHECK_THROWS_AS(make_arc({{0.0, -0.1}, {0.5, -1.0}}), precondition_error);
    // interior vertex back on the boundary
    CHECK_THROWS_AS(make_arc({{0.0, 0.0}, {0.5, 0.0}}), precondition_error);
    // parameters must strictly increase from 0 to 1
    CHECK_THROWS_AS(make_arc({0.0, 0.9}, {{0.0, 0.0}, {0.5, -1.0}}), precondition_error);
    CHECK_THROWS_AS(make_arc({0.0, 0.5, 0.5, 1.0},
                             {{0.0, 0.0}, {0.1, -0.5}, {0.2, -0.6}, {0.5, -1.0}}),
                    precondition_error);
    // parameter/vertex length mismatch
    CHECK_THROWS_AS(make_arc({0.0, 0.5, 1.0}, {{0.0, 0.0}, {0.5, -1.0}}),
                    precondition_error);
}

TEST_CASE("simplicity detects self intersections") {
    HangingArc stairs =
        make_arc({{0.0, 0.0}, {0.3, -0.5}, {-0.2, -1.0}, {0.4, -1.5}});
    CHECK(arc_is_simple(stairs));

    // bowtie: the last segment crosses the first
    HangingArc bow = make_arc({{0.0, 0.0}, {0.0, -2.0}, {1.0, -2.0}, {1.0, -0.5},
                               {-0.5, -1.8}});
    CHECK_FALSE(arc_is_simple(bow));
}

TEST_CASE("evaluation, deck translation, and extrema") {
    HangingArc g = make_arc({{0.0, 0.0}, {1.0, -2.0}});
    LiftPoint mid = arc_eval(g, 0.5);
    CHECK(mid.x1 == doctest::Approx(0.5));
    CHECK(mid.r == doctest::Approx(-1.0));
    CHECK(arc_eval(g, 0.0).x1 == 0.0);
    CHECK(arc_eval(g, 1.0).r == -2.0);

    HangingArc h = deck_arc(g, -2);
    CHECK(h.base().x1 == -2.0);
    CHECK(h.landing().x1 == -1.0);
    CHECK(h.t == g.t);

    ArcExtrema ex = lead_line_extrema(
        make_arc({{0.2, 0.0}, {-0.7, -1.0}, {1.4, -2.0}}));
    CHECK(ex.min_x1 == -0.7);
    CHECK(ex.max_x1 == 1.4);
}

TEST_CASE("disjointness distinguishes crossing and shared landings") {
    HangingArc ua = read_arc(kFixtures + "/under_a.arc");
    HangingArc ub = read_arc(kFixtures + "/under_b.arc");
    Disjointness dj = arcs_disjoint(ua, ub);
    CHECK(dj.disjoint);
    CHECK_FALSE(dj.shares_landing_only);

    HangingArc ca = read_arc(kFixtures + "/crossing_a.arc");
    HangingArc cb = read_arc(kFixtures + "/crossing_b.arc");
    Disjointness cross = arcs_disjoint(ca, cb);
    CHECK_FALSE(cross.disjoint);
    CHECK_FALSE(cross.shares_landing_only);

    HangingArc la = make_arc({{0.0, 0.0}, {0.2, -1.0}});
    HangingArc lb = make_arc({{1.0, 0.0}, {0.2, -1.0}});
    Disjointness shared = arcs_disjoint(la, lb);
    CHECK_FALSE(shared.disjoint);
    CHECK(shared.shares_landing_only);
}

TEST_CASE("base comparison orders by boundary point") {
    HangingArc left = make_arc({{0.0, 0.0}, {0.3, -1.0}});
    HangingArc right = make_arc({{2.0, 0.0}, {1.7, -1.0}});
    CHECK(compare_by_base(left, right) == BaseOrder::less);
    CHECK(compare_by_base(right, left) == BaseOrder::greater);

    HangingArc same = make_arc({{0.0, 0.0}, {-0.3, -1.0}});
    CHECK_THROWS_AS(compare_by_base(left, same), precondition_error);
}

TEST_CASE("mapping an arc through a rigid rotation translates it") {
    MarkedSystem sys = system_by_name("periodic:1/2");
    HangingArc g = make_arc({{0.25, 0.0}, {0.1, -0.8}, {0.5, -1.6}});
    HangingArc img = map_arc(*sys.source, g, 0.05);
    // the image is the same polyline shifted by 1/2 (refinement may add
    // collinear vertices, so compare by evaluation)
    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        LiftPoint a = arc_eval(g, t);
        LiftPoint b = arc_eval(img, t);
        CHECK(b.x1 == doctest::Approx(a.x1 + 0.5).epsilon(1e-12));
        CHECK(b.r == doctest::Approx(a.r).epsilon(1e-12));
    }

    // string systems have no pointwise map to push an arc through
    MarkedSystem boom = system_by_name("boomerang");
    CHECK_THROWS_AS(map_arc(*boom.source, g, 0.05), precondition_error);
}

TEST_CASE("arc files round-trip exactly") {
    HangingArc g = make_arc({{0.125, 0.0},
                             {1.0 / 3.0, -0.7071067811865476},
                             {-0.1, -1.9999999999999998}});
    std::string path = "roundtrip_tmp.arc";
    write_arc(path, g);
    HangingArc h = read_arc(path);
    REQUIRE(h.v.size() == g.v.size());
    for (std::size_t i = 0; i < g.v.size(); ++i) {
        CHECK(h.t[i] == g.t[i]);
        CHECK(h.v[i].x1 == g.v[i].x1);
        CHECK(h.v[i].r == g.v[i].r);
    }
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_arc(kFixtures + "/no_such_file.arc"), io_error);
}
