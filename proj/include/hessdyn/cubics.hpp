#pragma once

#include "quotient.hpp"
#include "ratfun.hpp"
#include "triform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hessdyn {
namespace cubics {

// Bivariate polynomials Q[a][b]: coefficients in b are polynomials in a.
// Only identity checking is needed here, so fractions are compared by
// cross-multiplication and no multivariate gcd exists.
using PolyA = UniPoly<Rational>;
using BivPoly = UniPoly<PolyA>;

inline BivPoly biv_const(const Rational& c) { return BivPoly::constant(PolyA::constant(c)); }
inline BivPoly biv_a() { return BivPoly::constant(PolyA::variable()); }
inline BivPoly biv_b() { return BivPoly::monomial(PolyA::constant(1), 1); }

// ---- Weierstrass data -------------------------------------------------------

template <typename R>
struct WeierstrassParams {
    R a, b;
    // 4a^3 + 27b^2, the denominator of the j formula; zero marks the
    // degenerate (singular) case.
    R discriminant_factor() const { return R(4) * a * a * a + R(27) * b * b; }
};

// y^2 z - x^3 - a x z^2 - b z^3 over any ring.
template <typename R>
TriForm<R> weierstrass_form(const R& a, const R& b) {
    TriForm<R> f(3);
    f.add_term({0, 2, 1}, R(1));
    f.add_term({3, 0, 0}, R(-1));
    f.add_term({1, 0, 2}, R() - a);
    f.add_term({0, 0, 3}, R() - b);
    return f;
}

// j = 1728 * 4a^3 / (4a^3 + 27b^2), infinity at the pole.
inline ExtRat weierstrass_j(const WeierstrassParams<Rational>& p) {
    Rational den = p.discriminant_factor();
    if (den == 0) return ExtRat::infinity();
    return ExtRat(Rational(1728) * 4 * p.a * p.a * p.a / den);
}

// ---- polar machinery --------------------------------------------------------

// The polar conic of a cubic is one polar application; it is degenerate
// (reducible) exactly when its symmetric matrix is singular, which happens
// exactly when Q lies on the Hessian curve. Both routes are computed and
// must agree.
template <typename R>
bool polar_conic_degenerate(const TriForm<R>& f, const std::array<R, 3>& q) {
    if (f.degree() != 3) throw std::invalid_argument("polar_conic_degenerate expects a cubic");
    TriForm<R> conic = polar(f, q);
    // Matrix G of the conic with G_jj = 2 c_jj, G_jk = c_jk: this is the
    // Hesse matrix of f evaluated at Q, so det G = hessian_form(f)(Q).
    Mat3<R> g;
    Monomial unit[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            Monomial m = {unit[j][0] + unit[k][0], unit[j][1] + unit[k][1],
                          unit[j][2] + unit[k][2]};
            R c = conic.coeff(m[0], m[1], m[2]);
            g[j][k] = (j == k) ? R(2) * c : c;
        }
    R det = det3(g);
    R hess_at_q = hessian_form(f).eval(q[0], q[1], q[2]);
    if (!(det == hess_at_q))
        throw std::logic_error("polar-conic determinant disagrees with Hessian value");
    return det == R();
}

// ---- symbolic verification of the Hessian normal form and j formula ---------

// Derives, over the symbolic Weierstrass cubic, the Hessian curve and its
// normalization chain through the coordinate changes (x,z swap;
// x -> a^2 x + 3b z, z -> a^2 z), and checks the closed forms for 4V^3 and
// 4V^3 + 27U^2, all as exact polynomial identities in Q[a,b]. Cube and square roots never materialize: V^3 and
// U^2 only involve alpha = A and beta = B polynomially.
inline bool verify_hessian_normal_form() {
    const BivPoly a = biv_a(), b = biv_b();
    TriForm<BivPoly> f = weierstrass_form(a, b);

    TriForm<BivPoly> h = hessian_form(f);
    // 24 x y^2 - 8 a^2 z^3 + 24 a x^2 z + 72 b x z^2
    TriForm<BivPoly> expected(3);
    expected.add_term({1, 2, 0}, biv_const(24));
    expected.add_term({0, 0, 3}, biv_const(-8) * a * a);
    expected.add_term({2, 0, 1}, biv_const(24) * a);
    expected.add_term({1, 0, 2}, biv_const(72) * b);
    if (h != expected) return false;

    // Swap x and z, drop the overall factor 8.
    Mat3<BivPoly> swap_xz{};
    swap_xz[0][2] = biv_const(1);
    swap_xz[1][1] = biv_const(1);
    swap_xz[2][0] = biv_const(1);
    TriForm<BivPoly> h2 = biv_const(Rational(1, 8)) * h.substitute(swap_xz);

    // x -> a^2 x + 3b z, z -> a^2 z.
    Mat3<BivPoly> shear{};
    shear[0][0] = a * a;
    shear[0][2] = biv_const(3) * b;
    shear[1][1] = biv_const(1);
    shear[2][2] = a * a;
    TriForm<BivPoly> h3 = h2.substitute(shear);

    // Coefficients of the near-Weierstrass form
    // A y^2 z + B x^3 + G x z^2 + D z^3.
    BivPoly A = h3.coeff(0, 2, 1);
    BivPoly B = h3.coeff(3, 0, 0);
    BivPoly G = h3.coeff(1, 0, 2);
    BivPoly D = h3.coeff(0, 0, 3);
    if (!(A == biv_const(3) * a * a)) return false;
    if (!(B == biv_const(-1) * a.pow(8))) return false;
    if (!(G == biv_const(3) * a.pow(7) + biv_const(27) * a.pow(4) * b * b)) return false;
    if (!(D == biv_const(9) * a.pow(5) * b + biv_const(54) * a * a * b * b * b)) return false;
    // The remaining monomials must vanish: h3 has exactly these four terms.
    if (h3.coeffs().size() != 4) return false;

    // With V = alpha^(1/3) G / (A B) and U = -D / (A B), alpha^(1/3) cubes
    // away: 4V^3 = 4 G^3 / (A^2 B^3) and 4V^3 + 27U^2 = (4G^3 + 27 D^2 B)
    // / (A^2 B^3). The closed forms, cross-multiplied:
    const BivPoly a3_9b2 = a.pow(3) + biv_const(9) * b * b;
    const BivPoly disc = biv_const(4) * a.pow(3) + biv_const(27) * b * b;
    // 4 G^3 * a^16 == -12 (a^3 + 9b^2)^3 * A^2 B^3
    if (!(biv_const(4) * G.pow(3) * biv_const(1) * BivPoly::constant(PolyA::monomial(1, 16)) ==
          biv_const(-12) * a3_9b2.pow(3) * A * A * B.pow(3)))
        return false;
    // (4G^3 + 27 D^2 B) * a^10 == -3 (4a^3 + 27b^2) * A^2 B^3
    if (!((biv_const(4) * G.pow(3) + biv_const(27) * D * D * B) *
              BivPoly::constant(PolyA::monomial(1, 10)) ==
          biv_const(-3) * disc * A * A * B.pow(3)))
        return false;

    // j(Hess C) = 1728 * 4V^3 / (4V^3 + 27U^2) = 1728*4 (a^3+9b^2)^3 /
    // (a^6 (4a^3+27b^2)), and that equals j(C) * (a^3+9b^2)^3 / a^9 with
    // j(C) = 1728*4a^3 / (4a^3+27b^2); cross-multiplied:
    const BivPoly a6 = BivPoly::constant(PolyA::monomial(1, 6));
    const BivPoly a9 = BivPoly::constant(PolyA::monomial(1, 9));
    const BivPoly a3 = BivPoly::constant(PolyA::monomial(1, 3));
    BivPoly lhs = biv_const(1728 * 4) * a3_9b2.pow(3) * a9 * disc;
    BivPoly rhs = biv_const(1728 * 4) * a3 * a3_9b2.pow(3) * a6 * disc;
    return lhs == rhs;
}

// H(j(a,b)) == j(a,b) * (a^3+9b^2)^3 / a^9 as an exact rational-function
// identity in Q(a,b), checked by cross-multiplication with N = 6912 a^3
// and D = 4a^3 + 27b^2:
//   (6912 D - N)^3 * D * a^9 == 27 N^2 D * N (a^3+9b^2)^3.
inline bool verify_hessian_j_formula() {
    const BivPoly a = biv_a(), b = biv_b();
    const BivPoly N = biv_const(6912) * a.pow(3);
    const BivPoly D = biv_const(4) * a.pow(3) + biv_const(27) * b * b;
    const BivPoly a9 = BivPoly::constant(PolyA::monomial(1, 9));
    const BivPoly a3_9b2 = a.pow(3) + biv_const(9) * b * b;
    BivPoly lhs = (biv_const(6912) * D - N).pow(3) * D * a9;
    BivPoly rhs = biv_const(27) * N.pow(2) * D * N * a3_9b2.pow(3);
    return lhs == rhs;
}

// ---- the standard Hesse pencil ----------------------------------------------

// E_t = V(x^3 + y^3 + z^3 - 3t xyz); t = infinity is the triangle V(xyz).
using PencilFiber = ExtRat;

inline UniPoly<Rational> pencil_a_poly() {
    // -27 t (t^3 + 8) = -27 t^4 - 216 t
    return UniPoly<Rational>(std::vector<Rational>{0, -216, 0, 0, -27});
}
inline UniPoly<Rational> pencil_b_poly() {
    // 54 (t^6 - 20 t^3 - 8)
    return UniPoly<Rational>(std::vector<Rational>{-432, 0, 0, -1080, 0, 0, 54});
}

inline Rational pencil_a(const Rational& t) { return pencil_a_poly().eval(t); }
inline Rational pencil_b(const Rational& t) { return pencil_b_poly().eval(t); }

// Singular fibers: 4a(t)^3 + 27b(t)^2 = 0, along with t = infinity.
inline bool pencil_fiber_singular(const PencilFiber& t) {
    if (t.inf) return true;
    WeierstrassParams<Rational> p{pencil_a(t.v), pencil_b(t.v)};
    return p.discriminant_factor() == 0;
}

// Exact j-invariant of the fiber E_t.
inline ExtRat pencil_j(const PencilFiber& t) {
    if (t.inf) return ExtRat::infinity();  // triangle fiber
    return weierstrass_j({pencil_a(t.v), pencil_b(t.v)});
}

// The t-map of the Hesse derivative: the Hessian of E_t is E_s, s = (4 - t^3)/(3t^2),
// with 0 and infinity both mapping to the triangle parameter infinity.
inline PencilFiber pencil_hessian_t(const PencilFiber& t) {
    if (t.inf || t.v == 0) return ExtRat::infinity();
    Rational t3 = t.v * t.v * t.v;
    return ExtRat((4 - t3) / (3 * t.v * t.v));
}

// Symbolic form of the same fact: hessian_form(x^3+y^3+z^3-3t xyz) is
// c(t) (x^3+y^3+z^3) + d(t) xyz with d t^2 = -(4 - t^3) c. Returns the
// proportionality scalar c(t).
inline std::optional<UniPoly<Rational>> pencil_hessian_scalar() {
    using PolyT = UniPoly<Rational>;
    TriForm<PolyT> f(3);
    f.add_term({3, 0, 0}, PolyT::constant(1));
    f.add_term({0, 3, 0}, PolyT::constant(1));
    f.add_term({0, 0, 3}, PolyT::constant(1));
    f.add_term({1, 1, 1}, PolyT::constant(-3) * PolyT::variable());
    TriForm<PolyT> h = hessian_form(f);
    PolyT c = h.coeff(3, 0, 0);
    PolyT d = h.coeff(1, 1, 1);
    if (h.coeffs().size() != 4) return std::nullopt;
    if (!(h.coeff(0, 3, 0) == c && h.coeff(0, 0, 3) == c)) return std::nullopt;
    // d(t) t^2 == -(4 - t^3) c(t)
    PolyT t2 = PolyT::monomial(1, 2);
    PolyT neg4_t3(std::vector<Rational>{-4, 0, 0, 1});
    if (!(d * t2 == neg4_t3 * c)) return std::nullopt;
    return c;
}

// ---- exact fiber-orbit certificates -----------------------------------------

// One t-map step in Q[t]/(m): s = (4 - x^3) * (3 x^2)^(-1).
inline QuotElem hessian_t_step(const QuotElem& x) {
    QuotElem x2 = x * x;
    QuotElem x3 = x2 * x;
    QuotElem four = QuotElem::from_rational(4, x.modulus());
    QuotElem three = QuotElem::from_rational(3, x.modulus());
    return (four - x3) * (three * x2).invert();
}

struct FactorResult {
    std::string modulus;        // text form of the (monic) factor
    std::optional<unsigned> orbit_length;  // minimal n with t_n = t_0, if found
    bool hits_infinity = false; // the orbit ran through the triangle fiber
    std::string note;
};

struct FiberOrbitCertificate {
    std::string modulus;  // the input, monic
    unsigned max_n = 0;
    bool squarefree_reduced = false;  // repeated factors were stripped first
    bool split_occurred = false;
    std::vector<std::string> split_factors;
    std::vector<FactorResult> per_factor;
    std::vector<std::string> notes;  // discrepancies and preprocessing remarks
};

// Iterates the t-map exactly in Q[t]/(m) and reports, per surviving factor,
// the minimal n <= max_n with t_n = t_0 (equality of reduced
// representatives, i.e. equality of fibers for every root of the factor).
// NotInvertible witnesses split the modulus, and both factors are retried.
inline FiberOrbitCertificate fiber_orbit(const RatPoly& m_in, unsigned max_n) {
    if (m_in.deg() < 1) throw std::invalid_argument("fiber_orbit requires a nonconstant modulus");
    FiberOrbitCertificate cert;
    RatPoly m = make_monic(m_in);
    cert.modulus = poly_to_string(m);
    cert.max_n = max_n;

    // A repeated factor can never satisfy t_n = t_0 as a congruence; the
    // orbit statement is about the roots, so reduce to the squarefree part.
    RatPoly sf = poly_gcd(m, m.derivative());
    if (sf.deg() > 0) {
        m = divmod(m, sf).first;
        cert.squarefree_reduced = true;
        cert.notes.push_back("repeated factors stripped; squarefree part: " + poly_to_string(m));
    }

    std::vector<RatPoly> queue{m};
    while (!queue.empty()) {
        RatPoly mod = std::move(queue.back());
        queue.pop_back();
        if (mod.deg() < 1) continue;
        auto modulus = QuotElem::make_modulus(mod);
        QuotElem t0 = QuotElem::generator(modulus);
        FactorResult fr;
        fr.modulus = poly_to_string(*modulus);
        QuotElem x = t0;
        try {
            for (unsigned n = 1; n <= max_n; ++n) {
                x = hessian_t_step(x);
                if (x == t0) {
                    fr.orbit_length = n;
                    break;
                }
            }
            if (!fr.orbit_length) fr.note = "no return within bound";
            cert.per_factor.push_back(std::move(fr));
        } catch (const NotInvertible& e) {
            const RatPoly& w = e.witness();
            if (w.deg() == mod.deg()) {
                // Non-invertible everywhere: the fiber parameter hits t = 0
                // and the orbit passes through the triangle fiber.
                fr.hits_infinity = true;
                fr.note = "orbit reaches the triangle fiber t = infinity";
                cert.per_factor.push_back(std::move(fr));
            } else {
                cert.split_occurred = true;
                cert.split_factors.push_back(poly_to_string(w));
                queue.push_back(w);
                queue.push_back(divmod(mod, w).first);
            }
        }
    }
    return cert;
}

// ---- pullbacks of j-conditions to t-conditions -------------------------------

// q(j) = sum c_k j^k pulled back through j = N(t)/D(t) with N = 6912 a(t)^3
// and D = 4a(t)^3 + 27b(t)^2: returns sum c_k N^k D^(deg q - k). The
// elimination relation j D - N is linear in j, so this substitution equals
// the resultant of q and jD - N up to a nonzero constant.
inline RatPoly pullback_j_condition(const RatPoly& q) {
    if (q.deg() < 1) throw std::invalid_argument("j-condition must be nonconstant");
    RatPoly a = pencil_a_poly(), b = pencil_b_poly();
    RatPoly N = Rational(6912) * (a * a * a);
    RatPoly D = Rational(4) * (a * a * a) + Rational(27) * (b * b);
    int d = q.deg();
    RatPoly total;
    for (int k = 0; k <= d; ++k) {
        if (q[static_cast<size_t>(k)] == 0) continue;
        total = total + q[static_cast<size_t>(k)] * (N.pow(k) * D.pow(d - k));
    }
    return total;
}

// Degree-24 condition for fibers whose j-invariant is one of the two
// non-real fixed points: a(t)^6 + 9 a(t)^3 b(t)^2 + 27 b(t)^4.
inline RatPoly order3_condition() {
    RatPoly a = pencil_a_poly(), b = pencil_b_poly();
    RatPoly a3 = a * a * a, b2 = b * b;
    return a3 * a3 + Rational(9) * (a3 * b2) + Rational(27) * (b2 * b2);
}

// Two candidate closed forms circulate for the real order-2 pair:
// 3456(5 +- 3 sqrt 3) and 3456(5 +- sqrt 3). Checked exactly in
// Q[u]/(u^2 - 3): the winner satisfies H(H(j)) = j with H(j) != j.
struct Order2PairResolution {
    RatPoly minimal_polynomial;  // of the verified pair, in j
    std::string verified_pair;
    std::string discrepancy;
};

namespace detail {

inline QuotElem apply_hmap(const QuotElem& j) {
    QuotElem c6912 = QuotElem::from_rational(6912, j.modulus());
    QuotElem c27 = QuotElem::from_rational(27, j.modulus());
    QuotElem diff = c6912 - j;
    return (diff * diff * diff) * (c27 * j * j).invert();
}

}  // namespace detail

inline Order2PairResolution resolve_order2_pair() {
    auto modulus = QuotElem::make_modulus(
        UniPoly<Rational>(std::vector<Rational>{-3, 0, 1}));  // u^2 - 3
    auto check = [&](const Rational& scale, const Rational& coeff_u) {
        // j = scale + coeff_u * u with u = sqrt 3
        QuotElem j(RatPoly(std::vector<Rational>{scale, coeff_u}), modulus);
        QuotElem h1 = detail::apply_hmap(j);
        QuotElem h2 = detail::apply_hmap(h1);
        return h2 == j && !(h1 == j);
    };
    const Rational s = 3456 * 5;
    bool pair3 = check(s, 3456 * 3);  // 3456(5 + 3 sqrt 3)
    bool pair1 = check(s, 3456);      // 3456(5 + sqrt 3)
    Order2PairResolution r;
    if (pair3 && !pair1) {
        // min poly: j^2 - 34560 j - 2*3456^2
        r.minimal_polynomial =
            RatPoly(std::vector<Rational>{Rational(-2) * 3456 * 3456, -34560, 1});
        r.verified_pair = "3456(5 +- 3 sqrt 3)";
        r.discrepancy =
            "3456(5 +- sqrt 3) does not satisfy H(H(j)) = j; the pair with 3 sqrt 3 does";
    } else if (pair1 && !pair3) {
        r.minimal_polynomial =
            RatPoly(std::vector<Rational>{Rational(22) * 3456 * 3456, -34560, 1});
        r.verified_pair = "3456(5 +- sqrt 3)";
        r.discrepancy =
            "3456(5 +- 3 sqrt 3) does not satisfy H(H(j)) = j; the pair without 3 does";
    } else {
        throw std::logic_error("order-2 pair resolution failed: neither or both pairs verify");
    }
    return r;
}

// Quartic j-condition for the remaining order-2 points.
inline RatPoly order6_j_quartic() {
    return RatPoly(std::vector<Rational>{Rational("2282521714753536"),
                                         Rational("-5283615080448"), Rational("4586471424"),
                                         Rational(-89856), Rational(13)});
}

}  // namespace cubics
}  // namespace hessdyn
