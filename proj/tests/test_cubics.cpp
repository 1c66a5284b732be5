#include "hessdyn/cubics.hpp"
#include "hessdyn/hmap.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hessdyn;

namespace {

TriForm<Rational> random_cubic(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-5, 5);
    TriForm<Rational> f(3);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; i + j <= 3; ++j) f.add_term({i, j, 3 - i - j}, Rational(c(rng)));
    if (f.coeffs().empty()) f.add_term({3, 0, 0}, 1);
    return f;
}

Mat3<Rational> random_invertible(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-4, 4);
    while (true) {
        Mat3<Rational> m;
        for (auto& row : m)
            for (auto& v : row) v = Rational(c(rng));
        if (det3(m) != 0) return m;
    }
}

std::array<Rational, 3> random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-6, 6);
    while (true) {
        std::array<Rational, 3> q{Rational(c(rng)), Rational(c(rng)), Rational(c(rng))};
        if (q[0] != 0 || q[1] != 0 || q[2] != 0) return q;
    }
}

}  // namespace

TEST_CASE("symbolic normal-form identities hold") {
    CHECK(cubics::verify_hessian_normal_form());
    CHECK(cubics::verify_hessian_j_formula());
}

TEST_CASE("j-invariant of short Weierstrass curves") {
    CHECK(cubics::weierstrass_j({Rational(-1), Rational(0)}) == ExtRat(Rational(1728)));
    CHECK(cubics::weierstrass_j({Rational(0), Rational(1)}) == ExtRat(Rational(0)));
    // singular: 4a^3 + 27b^2 = 0
    CHECK(cubics::weierstrass_j({Rational(-3), Rational(2)}) == ExtRat::infinity());
}

TEST_CASE("Hessian covariance under linear substitution") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        TriForm<Rational> f = random_cubic(rng);
        TriForm<Rational> hf = hessian_form(f);
        if (hf.coeffs().empty()) continue;  // degenerate sample, nothing to compare
        Mat3<Rational> m = random_invertible(rng);
        // Hess(f o M) = det(M)^2 (Hess f) o M
        TriForm<Rational> lhs = hessian_form(f.substitute(m));
        TriForm<Rational> rhs = hf.substitute(m);
        CHECK(proportional(lhs, rhs));
        Rational d = det3(m);
        CHECK(lhs == d * d * rhs);
    }
}

TEST_CASE("polar covariance under linear substitution") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        TriForm<Rational> f = random_cubic(rng);
        Mat3<Rational> m = random_invertible(rng);
        auto q = random_point(rng);
        // polar(f o M, q) = polar(f, Mq) o M
        TriForm<Rational> lhs = polar(f.substitute(m), q);
        TriForm<Rational> rhs = polar(f, apply3(m, q)).substitute(m);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("degenerate polar conics detect the Hessian curve") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        TriForm<Rational> f = random_cubic(rng);
        auto q = random_point(rng);
        // the call itself cross-checks det(conic matrix) against Hess(f)(q)
        bool deg = cubics::polar_conic_degenerate(f, q);
        CHECK(deg == (hessian_form(f).eval(q[0], q[1], q[2]) == 0));
    }
}

TEST_CASE("pencil hessian is again a pencil member") {
    auto c = cubics::pencil_hessian_scalar();
    REQUIRE(c.has_value());
    // scalar -54 t^2
    CHECK(*c == UniPoly<Rational>(std::vector<Rational>{0, 0, -54}));
}

TEST_CASE("t-map on fibers matches H on j-invariants") {
    std::mt19937_64 rng(44);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 20);
    int done = 0;
    while (done < 20) {
        ExtRat t(Rational(num(rng), den(rng)));
        if (t.v == 0 || cubics::pencil_fiber_singular(t)) continue;
        ExtRat j = cubics::pencil_j(t);
        ExtRat s = cubics::pencil_hessian_t(t);
        ExtRat lhs = cubics::pencil_j(s);
        ExtRat rhs = eval_ext(hmap::hmap(), j);
        CHECK(lhs == rhs);
        ++done;
    }
    // pole conventions: t = 0 and t = infinity both reach the triangle
    CHECK(cubics::pencil_hessian_t(ExtRat(Rational(0))) == ExtRat::infinity());
    CHECK(cubics::pencil_hessian_t(ExtRat::infinity()) == ExtRat::infinity());
    CHECK(cubics::pencil_fiber_singular(ExtRat(Rational(1))));
    CHECK(cubics::pencil_j(ExtRat::infinity()) == ExtRat::infinity());
}

TEST_CASE("fiber orbit certificates for the small torsion conditions") {
    // order 2: t^6 - 20 t^3 - 8 = b(t)/54, orbit closes in 2 steps
    auto c2 = cubics::fiber_orbit(poly_from_string("t^6 - 20*t^3 - 8"), 24);
    REQUIRE(c2.per_factor.size() == 1);
    CHECK(c2.per_factor[0].orbit_length == 2u);
    CHECK(!c2.split_occurred);

    // order 3: degree-24 pullback of a^6 + 9 a^3 b^2 + 27 b^4
    auto m3 = cubics::order3_condition();
    CHECK(m3.deg() == 24);
    auto c3 = cubics::fiber_orbit(m3, 24);
    for (const auto& f : c3.per_factor) {
        REQUIRE(f.orbit_length.has_value());
        CHECK(*f.orbit_length == 3);
    }

    // order 4: pullback of the verified quadratic pair of period-2 j-values
    auto res = cubics::resolve_order2_pair();
    CHECK(res.minimal_polynomial == poly_from_string("t^2 - 34560*t - 23887872"));
    auto c4 = cubics::fiber_orbit(cubics::pullback_j_condition(res.minimal_polynomial), 24);
    for (const auto& f : c4.per_factor) {
        REQUIRE(f.orbit_length.has_value());
        CHECK(*f.orbit_length == 4);
    }

    // order 6: pullback of the degree-4 condition in j
    auto c6 = cubics::fiber_orbit(cubics::pullback_j_condition(cubics::order6_j_quartic()), 24);
    CHECK(!c6.per_factor.empty());
    for (const auto& f : c6.per_factor) {
        REQUIRE(f.orbit_length.has_value());
        CHECK(*f.orbit_length == 6);
    }
}

TEST_CASE("malformed fiber moduli are rejected") {
    CHECK_THROWS(cubics::fiber_orbit(RatPoly::constant(3), 10));
}
