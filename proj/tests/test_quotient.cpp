#include "hessdyn/quotient.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hessdyn;

TEST_CASE("reduction in Q[t]/(t^6 - 20t^3 - 8)") {
    RatPoly m = poly_from_string("t^6 - 20*t^3 - 8");
    auto mod = QuotElem::make_modulus(m);
    QuotElem t = QuotElem::generator(mod);

    QuotElem t5 = t * t * t * t * t;
    CHECK((t * t5).rep() == poly_from_string("20*t^3 + 8"));

    QuotElem t3 = t * t * t;
    CHECK((t3 * t3).rep() == poly_from_string("20*t^3 + 8"));

    // t is invertible: t * t^(-1) = 1
    QuotElem one = QuotElem::from_rational(1, mod);
    CHECK(t * t.invert() == one);
}

TEST_CASE("zero divisors raise NotInvertible with a factor witness") {
    RatPoly m = poly_from_string("t^2 - 1");
    auto mod = QuotElem::make_modulus(m);
    QuotElem t = QuotElem::generator(mod);
    QuotElem one = QuotElem::from_rational(1, mod);

    try {
        (t - one).invert();
        FAIL("expected NotInvertible");
    } catch (const NotInvertible& e) {
        CHECK(e.witness() == poly_from_string("t - 1"));
    }
}

TEST_CASE("moduli must match") {
    auto m1 = QuotElem::make_modulus(poly_from_string("t^2 - 1"));
    auto m2 = QuotElem::make_modulus(poly_from_string("t^2 + 1"));
    CHECK_THROWS_AS(QuotElem::generator(m1) + QuotElem::generator(m2), ModulusMismatch);
    CHECK_THROWS(QuotElem::make_modulus(RatPoly::constant(5)));
}

TEST_CASE("ring axioms on random elements") {
    RatPoly m = poly_from_string("t^4 + 3*t - 1");
    auto mod = QuotElem::make_modulus(m);
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> coeff(-5, 5);
    auto rand_elem = [&]() {
        std::vector<Rational> cs(4);
        for (auto& c : cs) c = coeff(rng);
        return QuotElem(RatPoly(cs), mod);
    };
    QuotElem zero = QuotElem::from_rational(0, mod);
    QuotElem one = QuotElem::from_rational(1, mod);
    for (int trial = 0; trial < 25; ++trial) {
        QuotElem a = rand_elem(), b = rand_elem(), c = rand_elem();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + zero == a);
        CHECK(a * one == a);
        CHECK(a - a == zero);
        if (!a.is_zero()) {
            // t^4 + 3t - 1 is irreducible, so every nonzero element inverts
            CHECK(a * a.invert() == one);
        }
    }
}
