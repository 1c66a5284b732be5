#include "hessdyn/hmap.hpp"
#include "hessdyn/quotient.hpp"
#include "hessdyn/ratfun.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hessdyn;

namespace {

RatFunQ random_ratfun(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), c(-6, 6);
    auto rand_poly = [&](int d) {
        std::vector<Rational> cs(d + 1);
        for (auto& x : cs) x = c(rng);
        if (cs.back() == 0) cs.back() = 1;
        return UniPoly<Rational>(cs);
    };
    UniPoly<Rational> den = rand_poly(deg(rng));
    return RatFunQ(rand_poly(deg(rng)), den);
}

}  // namespace

TEST_CASE("construction reduces by the gcd and nothing else") {
    RatPoly z = RatPoly::variable();
    RatFunQ f((z * z - 1) * 2, (z - 1) * 2);
    // common factor z - 1 removed; the scalar 2 is not normalized away
    CHECK(f.num() == Rational(2) * z + 2);
    CHECK(f.den() == RatPoly::constant(2));
    CHECK(f == RatFunQ(z + 1, RatPoly::constant(1)));

    CHECK_THROWS_AS(RatFunQ(z, RatPoly()), std::domain_error);
}

TEST_CASE("H evaluated at special points") {
    const RatFunQ& h = hmap::hmap();
    CHECK(eval_ext(h, ExtRat(Rational(6912))) == ExtRat(Rational(0)));
    CHECK(eval_ext(h, ExtRat(Rational(0))) == ExtRat::infinity());
    CHECK(eval_ext(h, ExtRat::infinity()) == ExtRat::infinity());
    CHECK(eval_ext(h, ExtRat(Rational(1728))) == ExtRat(Rational(1728)));
    CHECK(eval_ext(h, ExtRat(Rational(-13824))) == ExtRat(Rational(1728)));
}

TEST_CASE("second iterate matches the expanded closed form") {
    const RatFunQ& h = hmap::hmap();
    RatFunQ h2 = h.iterate(2);
    CHECK(h2 == h.compose(h));

    RatPoly z = RatPoly::variable();
    RatPoly cubic = poly_from_string("t^3 + 165888*t^2 + 143327232*t - 330225942528");
    RatPoly den = Rational(729) * z * z * (z - 6912).pow(6);
    CHECK(h2 == RatFunQ(cubic.pow(3), den));
    CHECK(h2.num() == cubic.pow(3));
    CHECK(h2.den() == den);
}

TEST_CASE("iterate degrees, leading coefficients, and composition laws") {
    const RatFunQ& h = hmap::hmap();
    for (unsigned n = 1; n <= 4; ++n) {
        RatFunQ hn = h.iterate(n);
        int expected = 1;
        for (unsigned i = 0; i < n; ++i) expected *= 3;
        CHECK(std::max(hn.num().deg(), hn.den().deg()) == expected);
        CHECK(hn.num().leading() == (n % 2 ? -1 : 1));
        CHECK(hn.den().leading() == Rational(pow_int(27, n)));
        if (n >= 2) CHECK(hn == h.compose(h.iterate(n - 1)));
    }
}

TEST_CASE("composition is associative on random inputs") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        RatFunQ f = random_ratfun(rng, 3), g = random_ratfun(rng, 3), k = random_ratfun(rng, 3);
        CHECK(f.compose(g).compose(k) == f.compose(g.compose(k)));
    }
}

TEST_CASE("derivative satisfies the chain rule") {
    const RatFunQ& h = hmap::hmap();
    RatFunQ lhs = h.compose(h).derivative();
    RatFunQ rhs = h.derivative().compose(h) * h.derivative();
    CHECK(lhs == rhs);

    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 8; ++trial) {
        RatFunQ f = random_ratfun(rng, 3), g = random_ratfun(rng, 3);
        CHECK(f.compose(g).derivative() == f.derivative().compose(g) * g.derivative());
    }
}

TEST_CASE("numeric evaluation agrees with exact evaluation") {
    const RatFunQ& h = hmap::hmap();
    PrecisionGuard guard(256);
    Cplx x{MpFloat(5), MpFloat(-2)};
    ExtComplex y = eval_ext(h, ExtComplex::finite(x), 256);
    REQUIRE(!y.inf);

    // exact value at 5 - 2i through Q[t]/(t^2 + 1)
    auto mod = QuotElem::make_modulus(poly_from_string("t^2 + 1"));
    QuotElem z(poly_from_string("5 - 2*t"), mod);
    QuotElem d = QuotElem::from_rational(6912, mod) - z;
    QuotElem exact = (d * d * d) * (QuotElem::from_rational(27, mod) * z * z).invert();
    Rational re = exact.rep()[0], im = exact.rep().deg() >= 1 ? exact.rep()[1] : Rational(0);
    MpFloat tol = pow(MpFloat(2), -200);
    auto to_float = [](const Rational& q) {
        return MpFloat(numerator(q).str()) / MpFloat(denominator(q).str());
    };
    CHECK(fabs(y.v.re - to_float(re)) < tol * fabs(y.v.re));
    CHECK(fabs(y.v.im - to_float(im)) < tol * fabs(y.v.im));

    // pole detection
    CHECK(eval_ext(h, ExtComplex::finite(Cplx{MpFloat(0), MpFloat(0)}), 256).inf);
}

TEST_CASE("rational-function text round-trip") {
    const RatFunQ& h = hmap::hmap();
    CHECK(ratfun_from_string(ratfun_to_string(h)) == h);
    RatPoly z = RatPoly::variable();
    RatFunQ f(Rational(3456, 7) * z + 1, z * z - 2);
    CHECK(ratfun_from_string(ratfun_to_string(f)) == f);
}
