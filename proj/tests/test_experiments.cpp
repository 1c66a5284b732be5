#include "hessdyn/experiments.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hessdyn;

TEST_CASE("interval statistics are deterministic and conserve the count") {
    auto a = experiments::real_orbit_stats(MpFloat("12345.25"), 2000, 256);
    auto b = experiments::real_orbit_stats(MpFloat("12345.25"), 2000, 256);
    CHECK(a.lp == b.lp);
    CHECK(a.lpp == b.lpp);
    CHECK(a.mp == b.mp);
    CHECK(a.mpp == b.mpp);
    CHECK(a.rp == b.rp);
    CHECK(a.rpp == b.rpp);
    CHECK(a.boundary_hits == b.boundary_hits);
    CHECK(a.stable == b.stable);
    CHECK(a.L() + a.M() + a.R() + a.boundary_hits == 2000);
    CHECK(a.n == 2000);
    CHECK(a.precision_bits == 256);
}

TEST_CASE("interval statistics input validation") {
    CHECK_THROWS(experiments::real_orbit_stats(MpFloat(0), 100, 256));
    CHECK_THROWS(experiments::real_orbit_stats(MpFloat(5), 0, 256));
    // a fixed point of H drifts away numerically rather than trapping the
    // orbit: 1728 is repelling, so the run still completes
    auto st = experiments::real_orbit_stats(MpFloat(1728), 500, 256);
    CHECK(st.L() + st.M() + st.R() + st.boundary_hits == 500);
}

TEST_CASE("p-adic valuation traces") {
    // v_3(3456/7) = 3; one step later the orbit leaves Z_3
    auto t3 = experiments::padic_orbit(Rational(3456, 7), 3, 8);
    REQUIRE(t3.valuations.size() == 9);
    CHECK(t3.valuations[0] == 3);
    CHECK(!t3.hit_infinity);
    CHECK(!t3.blowup);

    // cross-check each recorded valuation against a direct recomputation
    Rational x(3456, 7);
    for (size_t i = 0; i < t3.valuations.size(); ++i) {
        CHECK(t3.valuations[i] == padic_valuation(x, 3));
        Rational d = 6912 - x;
        Rational next = d * d * d / (27 * x * x);
        if (i + 1 < t3.valuations.size()) CHECK(t3.diff_valuations[i] == padic_valuation(next - x, 3));
        x = next;
    }

    // the critical orbit 6912 -> 0 -> infinity truncates with a marker
    auto tc = experiments::padic_orbit(Rational(6912), 2, 10);
    CHECK(tc.hit_infinity);
    CHECK(tc.valuations.size() == 2);
    CHECK(!tc.valuations[1].has_value());  // v_2(0) = +infinity

    // valuation of zero is +infinity also in the difference trace
    auto tf = experiments::padic_orbit(Rational(1728), 2, 3);
    CHECK(!tf.diff_valuations[1].has_value());  // fixed point: H(1728) - 1728 = 0
}

TEST_CASE("p-adic probe rejects bad input and caps blowup") {
    CHECK_THROWS(experiments::padic_orbit(Rational(5), 4, 10));  // 4 is not prime
    CHECK_THROWS(experiments::padic_orbit(Rational(0), 2, 10));  // pole
    auto t = experiments::padic_orbit(Rational(5, 7), 2, 200, 2000);
    CHECK(t.blowup);
    CHECK(t.valuations.size() < 201);
}

TEST_CASE("refined upper threshold constant") {
    PrecisionGuard guard(256);
    MpFloat u = experiments::upper_threshold();
    // root of the defining cubic relation: ((u/6912) - 19)^3 interlocks with 2
    MpFloat w = (u / 6912 - 19);
    // w = 15*2^(1/3) + 12*4^(1/3) satisfies w^3 - 1080 w - 13662 = 0
    MpFloat residual = w * w * w - 1080 * w - 13662;
    CHECK(fabs(residual) < pow(MpFloat(2), -200));
}
