#include <doctest.h>

#include <cmath>

#include "rotlab/geom.hpp"
#include "rotlab/horseshoe.hpp"

using namespace rotlab;

TEST_CASE("code literals parse and round-trip") {
    CHECK(parse_code("periodic:100").literal() == "periodic:100");
    CHECK(parse_code("list:0110").literal() == "list:0110");
    CHECK(parse_code("blocks:0*4,1*16").literal() == "blocks:0*4,1*16");
    CHECK(parse_code("blocks:0*4,1*16,...").literal() == "blocks:0*4,1*16,...");

    CHECK_THROWS_AS(parse_code("periodic:"), precondition_error);
    CHECK_THROWS_AS(parse_code("periodic:012"), precondition_error);
    CHECK_THROWS_AS(parse_code("blocks:2*4"), precondition_error);
    CHECK_THROWS_AS(parse_code("nope:10"), precondition_error);
}

TEST_CASE("symbol access and the running count of ones") {
    SymbolCode pc = parse_code("periodic:100");
    CHECK(pc.at(0) == 1);
    CHECK(pc.at(1) == 0);
    CHECK(pc.at(2) == 0);
    CHECK(pc.at(3) == 1);
    CHECK(pc.size() == -1);
    CHECK(pc.ones_before(0) == 0);
    CHECK(pc.ones_before(3) == 1);
    CHECK(pc.ones_before(3000) == 1000);

    SymbolCode fc = parse_code("list:0110");
    CHECK(fc.size() == 4);
    CHECK(fc.ones_before(4) == 2);
    CHECK_THROWS_AS(fc.at(4), precondition_error);

    SymbolCode sh = fc.shifted(1);
    CHECK(sh.size() == 3);
    CHECK(sh.at(0) == 1);
    CHECK(sh.at(2) == 0);

    // ones_before agrees with summing at()
    SymbolCode blk = parse_code("blocks:1*3,0*5,...");
    long ones = 0;
    for (long i = 0; i < 500; ++i) {
        CHECK(blk.ones_before(i) == ones);
        ones += blk.at(i);
    }
}

TEST_CASE("continued blocks keep growing by the last ratio") {
    // 0^4 1^16 0^64 1^256 ...: the continuation multiplies lengths by 4 and
    // alternates symbols
    SymbolCode dbl = parse_code("blocks:0*4,1*16,...");
    CHECK(dbl.ones_before(4) == 0);
    CHECK(dbl.ones_before(20) == 16);
    CHECK(dbl.at(20) == 0);
    CHECK(dbl.at(83) == 0);
    CHECK(dbl.at(84) == 1);
    CHECK(dbl.ones_before(84) == 16);
    CHECK(dbl.ones_before(340) == 272);  // 16 + 256 ones through 0^4 1^16 0^64 1^256
}

TEST_CASE("cantor coordinates of two-periodic itineraries") {
    // fixed points of the two-step contraction x -> (x/5 + 3a)/5:
    // 10-cycle 15/24, 01-cycle 3/24 (exact geometric sums)
    CHECK(cantor_x(parse_code("periodic:10"), 24) == doctest::Approx(0.625).epsilon(1e-14));
    CHECK(cantor_x(parse_code("periodic:01"), 24) == doctest::Approx(0.125).epsilon(1e-14));
    // all-zeros code sits at the fixed point 0 of branch 0
    CHECK(cantor_x(parse_code("periodic:0"), 24) == doctest::Approx(0.0).epsilon(1e-14));
    // symbol 1 contributes 3/5 at the top level
    CHECK(cantor_x(parse_code("periodic:1"), 24) == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("coded orbit points advance with the ones count") {
    SymbolCode pc = parse_code("periodic:10");
    LiftPoint p0 = code_point(pc, 0);
    CHECK(p0.x1 == doctest::Approx(0.625).epsilon(1e-14));
    CHECK(p0.r == -1.5);
    LiftPoint p1 = code_point(pc, 1);
    CHECK(p1.x1 == doctest::Approx(1.125).epsilon(1e-14));  // one 1 consumed
    LiftPoint p2 = code_point(pc, 2);
    CHECK(p2.x1 == doctest::Approx(1.625).epsilon(1e-14));

    // finite codes stop past their end
    SymbolCode fc = parse_code("list:11010");
    CHECK_NOTHROW(code_point(fc, 5));  // landing exactly at the end is allowed
    CHECK_THROWS_AS(code_point(fc, 6), precondition_error);
}

TEST_CASE("branch map moves strip points and commutes with the deck") {
    LiftPoint a = horseshoe_step(LiftPoint(0.1, -1.5), 0);
    CHECK(a.x1 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(a.r == doctest::Approx(-1.9).epsilon(1e-15));

    LiftPoint b = horseshoe_step(LiftPoint(0.7, -1.5), 1);
    CHECK(b.x1 == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(b.r == doctest::Approx(-1.1).epsilon(1e-15));

    // a deck translate of the input yields the deck translate of the output
    LiftPoint c = horseshoe_step(LiftPoint(3.1, -1.5), 0);
    CHECK(c.x1 == doctest::Approx(3.5).epsilon(1e-13));
    CHECK(c.r == doctest::Approx(-1.9).epsilon(1e-15));

    // outside the named strip
    CHECK_THROWS_AS(horseshoe_step(LiftPoint(0.3, -1.5), 0), precondition_error);
    CHECK_THROWS_AS(horseshoe_step(LiftPoint(0.1, -1.5), 1), precondition_error);
    // outside the r band
    CHECK_THROWS_AS(horseshoe_step(LiftPoint(0.1, -0.5), 0), precondition_error);
}

TEST_CASE("shift accounting stays within one deck unit") {
    ShiftBoundReport rep = verify_shift_bound(parse_code("periodic:10"), 1000);
    CHECK(rep.pass);
    // offsets alternate between the 10-cycle (0.625) and the 01-cycle (0.125)
    CHECK(rep.max_dev == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rep.arg_k == 1);

    CHECK(verify_shift_bound(parse_code("blocks:0*4,1*16,..."), 1000).pass);
}

TEST_CASE("rotation bounds from code densities") {
    // frozen from an independent running-count computation
    // (tools/oracles/horseshoe_oracle.py): tail window extrema of
    // ones_before(k)/k for the growing-block code
    SymbolCode dbl = parse_code("blocks:0*4,1*16,...");
    RotationBounds b3 = rotation_bounds_from_code(dbl, 1000);
    CHECK(b3.lo == doctest::Approx(0.272).epsilon(1e-9));
    CHECK(b3.hi == doctest::Approx(0.544).epsilon(1e-9));
    RotationBounds b4 = rotation_bounds_from_code(dbl, 10000);
    CHECK(b4.lo == doctest::Approx(0.4368).epsilon(1e-9));
    CHECK(b4.hi == doctest::Approx(0.8).epsilon(1e-9));

    RotationBounds p = rotation_bounds_from_code(parse_code("periodic:110"), 3000);
    CHECK(p.estimate == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(p.lo <= p.estimate);
    CHECK(p.hi >= p.estimate);
}

TEST_CASE("coded orbits agree with the branch map digit by digit") {
    CHECK(itinerary_shift_check(parse_code("periodic:10"), 10, 60));
    CHECK(itinerary_shift_check(parse_code("blocks:0*4,1*16,..."), 12, 50));
    CHECK_THROWS_AS(itinerary_shift_check(parse_code("periodic:10"), 10, 10),
                    precondition_error);
}

TEST_CASE("horseshoe orbits are forward-only string orbits") {
    auto src = make_horseshoe_source();
    CHECK(src->kind() == SourceKind::string_system);
    CHECK_FALSE(src->has_backward("periodic:10"));
    LiftPoint p = src->at("periodic:10", 4);
    CHECK(p.x1 == doctest::Approx(2.625).epsilon(1e-12));
    CHECK(p.r == -1.5);
    CHECK_THROWS_AS(src->at("periodic:10", -1), precondition_error);
    CHECK_THROWS_AS(src->at("garbled", 0), precondition_error);
}
