#include "hessdyn/polynomial.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hessdyn;
using RatPoly = UniPoly<Rational>;

namespace {

RatPoly random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), num(-9, 9), den(1, 5);
    std::vector<Rational> cs(deg(rng) + 1);
    for (auto& c : cs) c = Rational(num(rng), den(rng));
    if (cs.back() == 0) cs.back() = 1;
    return RatPoly(cs);
}

}  // namespace

TEST_CASE("basic polynomial arithmetic") {
    RatPoly z = RatPoly::variable();
    RatPoly f = z * z - 1;
    RatPoly g = z - 1;
    CHECK(f.deg() == 2);
    CHECK((f * g).deg() == 3);
    CHECK(f.eval(Rational(3)) == 8);
    CHECK(f.derivative() == Rational(2) * z);
    CHECK(RatPoly().deg() == -1);

    auto [q, r] = divmod(f, g);
    CHECK(q == z + 1);
    CHECK(r.is_zero());
}

TEST_CASE("gcd worked examples") {
    RatPoly z = RatPoly::variable();
    CHECK(poly_gcd(z * z - 1, z - 1) == z - 1);

    RatPoly num = (RatPoly::constant(6912) - z).pow(3);
    RatPoly den = Rational(27) * z * z;
    CHECK(poly_gcd(num, den) == RatPoly::constant(1));

    // gcd with zero returns the monic form of the other argument
    CHECK(poly_gcd(RatPoly(), Rational(3) * z + 6) == z + 2);
    CHECK(poly_gcd(Rational(3) * z + 6, RatPoly()) == z + 2);
    CHECK(poly_gcd(RatPoly(), RatPoly()).is_zero());
}

TEST_CASE("gcd is monic and divides both arguments") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        RatPoly f = random_poly(rng, 5), g = random_poly(rng, 5), h = random_poly(rng, 3);
        RatPoly d = poly_gcd(f * h, g * h);
        REQUIRE(!d.is_zero());
        CHECK(d.leading() == 1);
        CHECK(divmod(f * h, d).second.is_zero());
        CHECK(divmod(g * h, d).second.is_zero());
        // h divides the gcd of fh and gh
        CHECK(divmod(d, make_monic(h)).second.is_zero());
    }
}

TEST_CASE("extended gcd bezout identity") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        RatPoly f = random_poly(rng, 6), g = random_poly(rng, 4);
        auto x = poly_xgcd(f, g);
        CHECK(x.s * f + x.t * g == x.g);
        CHECK(x.g == poly_gcd(f, g));
    }
}

TEST_CASE("modular coprimality certificate agrees with the exact gcd") {
    std::mt19937_64 rng(13);
    RatPoly z = RatPoly::variable();
    CHECK(coprime_mod_prime_certificate((RatPoly::constant(6912) - z).pow(3), Rational(27) * z * z));
    for (int trial = 0; trial < 20; ++trial) {
        RatPoly f = random_poly(rng, 6), g = random_poly(rng, 6);
        bool exact_coprime = poly_gcd(f, g).deg() == 0;
        bool cert = coprime_mod_prime_certificate(f, g);
        // certificate is one-sided: a positive answer implies coprimality
        if (cert) CHECK(exact_coprime);
        if (!exact_coprime) CHECK(!cert);
    }
}

TEST_CASE("polynomial text round-trip is bit exact") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        RatPoly f = random_poly(rng, 8);
        CHECK(poly_from_string(poly_to_string(f)) == f);
    }
    CHECK(poly_to_string(RatPoly()) == "0");
    CHECK(poly_from_string("0").is_zero());
    RatPoly m = poly_from_string("t^6 - 20*t^3 - 8");
    CHECK(m == RatPoly(std::vector<Rational>{-8, 0, 0, -20, 0, 0, 1}));
    CHECK_THROWS(poly_from_string("t^^2"));
}

TEST_CASE("composition of polynomials") {
    RatPoly z = RatPoly::variable();
    RatPoly f = z * z + 1;
    RatPoly g = z - 2;
    CHECK(f.compose(g) == (z - 2) * (z - 2) + 1);
    CHECK(f.compose(g).eval(Rational(5)) == f.eval(g.eval(Rational(5))));
}
