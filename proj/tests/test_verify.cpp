#include "hessdyn/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hessdyn;

TEST_CASE("verification suite passes on the real map") {
    auto report = verify::run_suite(hmap::hmap(), 4, 2000, 16);
    CHECK(report.all_passed());
    CHECK(report.first_failure() == nullptr);
    CHECK(report.checks.size() == 6);
}

TEST_CASE("negative control: a corrupted constant is caught") {
    // (6913 - j)^3 / (27 j^2) instead of (6912 - j)^3 / (27 j^2)
    RatPoly z = RatPoly::variable();
    RatFunQ bad((RatPoly::constant(6913) - z).pow(3), Rational(27) * z * z);
    auto report = verify::run_suite(bad, 3, 100, 8);
    CHECK(!report.all_passed());
    const auto* f = report.first_failure();
    REQUIRE(f != nullptr);
    CHECK(f->name == "critical_orbits_preperiodic");
}
