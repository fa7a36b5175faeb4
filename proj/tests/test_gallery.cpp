#include <doctest.h>

#include <cmath>
#include <random>

#include "rotlab/gallery.hpp"
#include "rotlab/orbit.hpp"

using namespace rotlab;

TEST_CASE("every gallery name resolves to a system of the same name") {
    std::vector<std::string> names = gallery_names();
    CHECK(names.size() == 7);
    for (const std::string& n : names) {
        MarkedSystem sys = system_by_name(n);
        CHECK(sys.name == n);
        CHECK(sys.source != nullptr);
        CHECK_FALSE(sys.marked.empty());
    }
}

TEST_CASE("malformed system names are rejected") {
    CHECK_THROWS_AS(system_by_name("nope"), precondition_error);
    CHECK_THROWS_AS(system_by_name("periodic:2/4"), precondition_error);  // not lowest terms
    CHECK_THROWS_AS(system_by_name("periodic:11"), precondition_error);   // no slash
    CHECK_THROWS_AS(system_by_name("periodic:x/y"), precondition_error);
    CHECK_THROWS_AS(system_by_name("periodic:1/0"), precondition_error);
    CHECK_THROWS_AS(system_by_name("transverse").marked_by_name("z"), precondition_error);
}

TEST_CASE("rigid strings: membership, rotation, invariance") {
    MarkedSystem sys = build_periodic_strings(1, 3);
    CHECK(sys.rho_hat.has_value());
    CHECK(*sys.rho_hat == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    const MarkedPoint& m = sys.marked_by_name("m");
    CHECK(m.has_backward);
    REQUIRE(m.seed.pt.has_value());
    CHECK(m.seed.pt->x1 == 0.0);
    CHECK(m.seed.pt->r == -1.0);

    // strings hang at x1 = j/3 for -2 < r <= -1; everything below r = -2 is in
    CHECK(sys.member(LiftPoint(0.0, -1.0), 1e-9));
    CHECK(sys.member(LiftPoint(1.0 / 3.0, -1.7), 1e-9));
    CHECK(sys.member(LiftPoint(5.0 + 2.0 / 3.0, -1.2), 1e-9));
    CHECK_FALSE(sys.member(LiftPoint(0.5, -1.0), 1e-9));
    CHECK(sys.member(LiftPoint(0.5, -2.5), 1e-9));
    CHECK_FALSE(sys.member(LiftPoint(0.0, -0.5), 1e-9));

    InvarianceReport inv = verify_invariance(sys, 300, 1e-9, 7);
    CHECK(inv.samples == 300);
    CHECK(inv.fraction == 1.0);

    CommutationReport com = check_deck_commutation(*sys.source, 100, 1e-9, 7);
    CHECK(com.pass);

    CHECK(proxy_prime_end_rotation(sys, 1000) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(proxy_prime_end_rotation(system_by_name("periodic:2/5"), 1000) ==
          doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("transverse kick: fixed boundary, oscillating marked drifts") {
    MarkedSystem sys = build_transverse_example();
    REQUIRE(sys.rho_hat.has_value());
    CHECK(*sys.rho_hat == 0.0);
    CHECK(proxy_prime_end_rotation(sys, 1000) == 0.0);

    // one-step displacement at the marked point q, frozen from an independent
    // closed-form evaluation (tools/oracles/transverse_oracle.py)
    const MarkedPoint& q = sys.marked_by_name("q");
    REQUIRE(q.seed.pt.has_value());
    double uq = displacement(*sys.source, *q.seed.pt);
    CHECK(uq == doctest::Approx(0.6465637775217212).epsilon(1e-12));

    // drift extrema of the marked orbits at horizon 10^4, frozen from the
    // radius-recurrence computation in tools/oracles/transverse_oracle.py
    OrbitSeries fwd = iterate_orbit(*sys.source, q.seed, 10000, Direction::forward);
    DriftSeries df = drift_series(fwd, 0.0);
    CHECK(std::fabs(df.max - 17.250715) < 1e-4);
    CHECK(df.argmax == 8558);
    CHECK(std::fabs(df.min - (-17.750695)) < 1e-4);
    CHECK(df.argmin == 9323);

    const MarkedPoint& p = sys.marked_by_name("p");
    OrbitSeries bwd = iterate_orbit(*sys.source, p.seed, 10000, Direction::backward);
    DriftSeries db = drift_series(bwd, 0.0);
    CHECK(std::fabs(db.max - 17.250715) < 1e-4);
    CHECK(db.argmax == -8563);
    CHECK(std::fabs(db.min - (-17.750688)) < 1e-4);
    CHECK(db.argmin == -9328);

    InvarianceReport inv = verify_invariance(sys, 300, 1e-9, 11);
    CHECK(inv.fraction == 1.0);
    CHECK(check_deck_commutation(*sys.source, 100, 1e-9, 11).pass);
}

TEST_CASE("boomerang strings: frozen orbit points both ways") {
    MarkedSystem sys = build_boomerang_example();
    const auto* src = dynamic_cast<const StringSystem*>(sys.source.get());
    REQUIRE(src != nullptr);
    CHECK(sys.marked_by_name("q").has_backward);
    CHECK(src->has_backward("q"));

    // expected positions frozen from the closed-form radius/angle recurrences
    // in tools/oracles/boomerang_oracle.py
    LiftPoint p0 = src->at("q", 0);
    CHECK(p0.x1 == 1.5);
    CHECK(p0.r == -1.5);

    LiftPoint p1 = src->at("q", 1);
    CHECK(p1.x1 == doctest::Approx(1.65).epsilon(1e-12));
    CHECK(p1.r == doctest::Approx(-1.5).epsilon(1e-15));

    LiftPoint p2 = src->at("q", 2);
    CHECK(p2.x1 == doctest::Approx(2.177067852523549).epsilon(1e-12));
    CHECK(p2.r == doctest::Approx(4.0 / 13.0 - 2.0).epsilon(1e-12));

    CHECK(src->at("q", 100).r == doctest::Approx(-1.9025937320067443).epsilon(1e-9));
    CHECK(src->at("q", 100).x1 - p0.x1 == doctest::Approx(2.510278723).epsilon(1e-6));

    LiftPoint m1 = src->at("q", -1);
    CHECK(m1.x1 == doctest::Approx(1.877397198273543).epsilon(1e-9));
    CHECK(m1.r == doctest::Approx(-1.6823278038280192).epsilon(1e-9));
    CHECK(src->at("q", -2).r == doctest::Approx(-1.7395343290546406).epsilon(1e-9));
    CHECK(src->at("q", -100).x1 - p0.x1 == doctest::Approx(1.536898634).epsilon(1e-6));

    // the closed-form recurrences are capped
    CHECK_NOTHROW(src->at("q", 20000));
    CHECK_THROWS_AS(src->at("q", 20001), precondition_error);
    CHECK_THROWS_AS(src->at("q", -20001), precondition_error);
    CHECK_THROWS_AS(src->at("w", 0), precondition_error);

    // orbit points lie in the invariant set; so do sampled members
    for (long n : {0L, 1L, 5L, 60L, -4L}) CHECK(sys.member(src->at("q", n), 1e-9));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) CHECK(sys.member(sys.sample_member(rng), 1e-9));

    // no pointwise map, so there is nothing for the invariance check to apply
    CHECK_THROWS_AS(verify_invariance(sys, 10, 1e-9), precondition_error);

    // boundary dynamics: pinch map with rotation number 0; finite-time
    // estimate frozen from tools/oracles/boomerang_oracle.py
    CHECK(std::fabs(proxy_prime_end_rotation(sys, 10000) - 4.9996625836686735e-05) < 1e-12);
}

TEST_CASE("horseshoe system is coded-orbit only") {
    MarkedSystem sys = build_horseshoe_system();
    CHECK_FALSE(sys.rho_hat.has_value());
    CHECK_FALSE(sys.marked_by_name("periodic:10").has_backward);
    CHECK_THROWS_AS(verify_invariance(sys, 10, 1e-9), precondition_error);
    CHECK_THROWS_AS(proxy_prime_end_rotation(sys, 100), precondition_error);
}
