#pragma once

#include "orbits.hpp"
#include "ratfun.hpp"
#include "rootfind.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace hessdyn {
namespace hmap {

// Exact periodic-point polynomials are supported through n = 6 (degree 729);
// numeric root finding and orbit grouping default to n <= 4 (degree 81).
inline constexpr unsigned kExactCap = 6;
inline constexpr unsigned kNumericCap = 4;

// H(j) = (6912 - j)^3 / (27 j^2), the induced map on j-invariants.
inline const RatFunQ& hmap() {
    static const RatFunQ h = [] {
        UniPoly<Rational> lin(std::vector<Rational>{6912, -1});  // 6912 - j
        UniPoly<Rational> den(std::vector<Rational>{0, 0, 27});  // 27 j^2
        return RatFunQ(lin.pow(3), den, true);
    }();
    return h;
}

inline const RatFunQ& hmap_derivative() {
    static const RatFunQ d = hmap().derivative();
    return d;
}

// P_n(z) - z Q_n(z) where H^n = P_n / Q_n; its 3^n roots are the points of
// period dividing n.
inline UniPoly<Rational> fixed_point_poly(unsigned n) {
    if (n < 1 || n > kExactCap)
        throw std::invalid_argument("fixed_point_poly supports 1 <= n <= " +
                                    std::to_string(kExactCap));
    RatFunQ hn = hmap().iterate(n);
    return hn.num() - UniPoly<Rational>::variable() * hn.den();
}

struct SquarefreeCertificate {
    bool squarefree;
    UniPoly<Rational> gcd_with_derivative;  // constant iff squarefree
};

inline SquarefreeCertificate squarefree_check(unsigned n) {
    auto f = fixed_point_poly(n);
    auto g = poly_gcd(f, f.derivative());
    return {g.deg() == 0, g};
}

// The 3^n distinct roots of fixed_point_poly(n), to working precision.
inline std::vector<Cplx> find_periodic_points(unsigned n, unsigned precision_bits) {
    auto f = fixed_point_poly(n);
    auto roots = find_roots(f, precision_bits);
    if (roots.size() != static_cast<size_t>(f.deg()))
        throw RootFindingFailed("periodic point count != 3^n");
    return roots;
}

enum class Stability { attracting, repelling, indifferent };

inline const char* to_string(Stability s) {
    switch (s) {
        case Stability::attracting: return "attracting";
        case Stability::repelling: return "repelling";
        default: return "indifferent";
    }
}

struct OrbitRecord {
    std::vector<ExtComplex> points;  // one full cycle, in iteration order
    unsigned exact_period = 0;
    Cplx multiplier;
    Stability classification = Stability::repelling;
};

class OrbitMatchingAmbiguous : public std::runtime_error {
public:
    OrbitMatchingAmbiguous()
        : std::runtime_error(
              "two candidate next-points within matching tolerance; raise precision") {}
};

// Band half-width around |multiplier| = 1 inside which a cycle is reported
// indifferent.
inline const MpFloat& indifferent_band() {
    static const MpFloat band("1e-9");
    return band;
}

inline Stability classify(const Cplx& multiplier) {
    MpFloat m = multiplier.abs();
    if (abs(m - 1) < indifferent_band()) return Stability::indifferent;
    return m < 1 ? Stability::attracting : Stability::repelling;
}

// Partitions the 3^n periodic points into cycles by one numeric application
// of H with nearest-point matching, then reads exact periods off the cycle
// structure and accumulates multipliers along each cycle.
inline std::vector<OrbitRecord> group_orbits(unsigned n, unsigned precision_bits) {
    PrecisionGuard guard(precision_bits);
    auto points = find_periodic_points(n, precision_bits);
    const size_t count = points.size();
    const MpFloat tol = pow(MpFloat(2), -static_cast<int>(precision_bits / 4));

    std::vector<size_t> next(count);
    for (size_t i = 0; i < count; ++i) {
        ExtComplex img = eval_ext(hmap(), ExtComplex::finite(points[i]), precision_bits);
        if (img.inf)
            throw OrbitMatchingAmbiguous();  // finite periodic points never map to infinity
        MpFloat best = -1, second = -1;
        size_t best_j = 0;
        for (size_t j = 0; j < count; ++j) {
            MpFloat d = (img.v - points[j]).abs();
            if (best < 0 || d < best) {
                second = best;
                best = d;
                best_j = j;
            } else if (second < 0 || d < second) {
                second = d;
            }
        }
        MpFloat ref = tol * (img.v.abs() + 1);
        if (best > ref || (second >= 0 && second < ref)) throw OrbitMatchingAmbiguous();
        next[i] = best_j;
    }

    std::vector<OrbitRecord> records;
    std::vector<bool> seen(count, false);
    for (size_t i = 0; i < count; ++i) {
        if (seen[i]) continue;
        OrbitRecord rec;
        size_t j = i;
        Cplx multiplier(MpFloat(1));
        do {
            seen[j] = true;
            rec.points.push_back(ExtComplex::finite(points[j]));
            ExtComplex d = eval_ext(hmap_derivative(), ExtComplex::finite(points[j]),
                                    precision_bits);
            if (d.inf) throw OrbitMatchingAmbiguous();
            multiplier = multiplier * d.v;
            j = next[j];
        } while (j != i && !seen[j]);
        if (j != i) throw OrbitMatchingAmbiguous();  // tail ran into another cycle
        rec.exact_period = static_cast<unsigned>(rec.points.size());
        if (n % rec.exact_period != 0)
            throw OrbitMatchingAmbiguous();  // cycle length must divide n
        rec.multiplier = multiplier;
        rec.classification = classify(multiplier);
        records.push_back(std::move(rec));
    }
    std::sort(records.begin(), records.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
        return a.exact_period < b.exact_period;
    });
    return records;
}

// The fixed point at infinity. The multiplier is the derivative at 0 of the
// conjugate G(w) = 1/H(1/w), computed exactly; the reciprocal convention
// 1/H'(infinity) is evaluated as well and asserted consistent.
inline OrbitRecord fixed_point_extras() {
    RatFunQ inv(UniPoly<Rational>::constant(1), UniPoly<Rational>::variable());
    RatFunQ chart = inv.compose(hmap().compose(inv));
    ExtRat chart_mult = eval_ext(chart.derivative(), ExtRat(Rational(0)));
    ExtRat dinf = eval_ext(hmap_derivative(), ExtRat::infinity());
    if (chart_mult.inf || dinf.inf || dinf.v == 0 || chart_mult.v != 1 / dinf.v)
        throw std::logic_error("multiplier conventions at infinity disagree");
    OrbitRecord rec;
    rec.points.push_back(ExtComplex::infinity());
    rec.exact_period = 1;
    rec.multiplier = Cplx(chart_mult.v);
    rec.classification = classify(rec.multiplier);
    return rec;
}

// ---- exact rational-root machinery ------------------------------------------

namespace detail {

inline std::optional<Rational> reconstruct_rational(const MpFloat& x, unsigned precision_bits) {
    // Continued-fraction expansion, accepted when a convergent reproduces x
    // to well within working precision.
    const MpFloat eps = pow(MpFloat(2), -static_cast<int>(precision_bits / 2));
    const MpFloat ref = fabs(x) + 1;
    Int p0 = 1, q0 = 0;
    Int a0 = Int(static_cast<boost::multiprecision::mpz_int>(floor(x)));
    Int p1 = a0, q1 = 1;
    MpFloat frac = x - MpFloat(a0);
    for (int k = 0; k < 128; ++k) {
        Rational cand(p1, q1);
        MpFloat approx = MpFloat(numerator(cand)) / MpFloat(denominator(cand));
        if (fabs(x - approx) < eps * ref) return cand;
        if (frac == 0) break;
        MpFloat inv = 1 / frac;
        Int a = Int(static_cast<boost::multiprecision::mpz_int>(floor(inv)));
        frac = inv - MpFloat(a);
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        if (msb(abs(p1) + 1) + msb(q1 + 1) > precision_bits) break;  // digits exhausted
    }
    return std::nullopt;
}

}  // namespace detail

struct RationalRoots {
    std::vector<std::pair<Rational, unsigned>> roots;  // (root, multiplicity)
    UniPoly<Rational> residual;  // the factor with no rational roots
};

// Rational roots with multiplicities: numeric roots of the squarefree part
// are reconstructed by continued fractions, then verified and divided out
// exactly -- every reported root and multiplicity is exact.
inline RationalRoots rational_roots(const UniPoly<Rational>& f, unsigned precision_bits = 256) {
    if (f.deg() < 1) return {{}, f};
    PrecisionGuard guard(precision_bits);
    auto sqfree = divmod(f, poly_gcd(f, f.derivative())).first;
    auto numeric = find_roots(sqfree, precision_bits);
    const MpFloat im_tol = pow(MpFloat(2), -static_cast<int>(precision_bits / 2));
    RationalRoots result;
    result.residual = f;
    for (const auto& z : numeric) {
        if (fabs(z.im) > im_tol * (z.abs() + 1)) continue;
        auto cand = detail::reconstruct_rational(z.re, precision_bits);
        if (!cand) continue;
        if (f.eval(*cand) != 0) continue;
        UniPoly<Rational> lin(std::vector<Rational>{-*cand, 1});
        unsigned mult = 0;
        while (true) {
            auto [q, r] = divmod(result.residual, lin);
            if (!r.is_zero()) break;
            result.residual = q;
            ++mult;
        }
        if (mult > 0) result.roots.emplace_back(*cand, mult);
    }
    std::sort(result.roots.begin(), result.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return result;
}

// Critical points of H: the roots 6912 (double) and -13824 of the numerator
// of H', plus 0, which ramifies through the pole (H' has no zero there; the
// triple pole of H at 0 makes it critical).
struct CriticalPoint {
    Rational value;
    unsigned multiplicity;
    bool from_pole;
};

inline std::vector<CriticalPoint> critical_points() {
    auto num_roots = rational_roots(hmap_derivative().num());
    std::vector<CriticalPoint> cps;
    for (const auto& [r, m] : num_roots.roots) cps.push_back({r, m, false});
    std::sort(cps.begin(), cps.end(),
              [](const CriticalPoint& a, const CriticalPoint& b) { return a.value > b.value; });
    cps.push_back({Rational(0), 1, true});
    return cps;
}

// ---- post-critical finiteness -----------------------------------------------

struct CriticalOrbit {
    Rational start;
    std::vector<ExtRat> orbit;  // forward orbit up to and including the first repeat
    bool finite = false;
    bool strictly_preperiodic = false;
};

struct PcfReport {
    std::vector<CriticalOrbit> orbits;
    bool pcf = false;
    bool no_periodic_critical_point = false;
    bool julia_is_whole_sphere = false;  // Corollary for PCF maps with no periodic critical point
};

// Exact forward iteration of every critical point; each orbit must revisit
// a value within a small bound for H (it does by step 3).
inline PcfReport pcf_verify() {
    PcfReport report;
    report.pcf = true;
    report.no_periodic_critical_point = true;
    for (const auto& cp : critical_points()) {
        CriticalOrbit co;
        co.start = cp.value;
        ExtRat x(cp.value);
        co.orbit.push_back(x);
        const unsigned bound = 16;
        for (unsigned i = 0; i < bound; ++i) {
            ExtRat y = eval_ext(hmap(), co.orbit.back());
            bool repeat = std::any_of(co.orbit.begin(), co.orbit.end(),
                                      [&y](const ExtRat& p) { return p == y; });
            co.orbit.push_back(y);
            if (repeat) {
                co.finite = true;
                break;
            }
        }
        co.strictly_preperiodic =
            co.finite && std::none_of(co.orbit.begin() + 1, co.orbit.end(),
                                      [&](const ExtRat& p) { return p == co.orbit.front(); });
        report.pcf = report.pcf && co.finite;
        report.no_periodic_critical_point =
            report.no_periodic_critical_point && co.strictly_preperiodic;
        report.orbits.push_back(std::move(co));
    }
    report.julia_is_whole_sphere = report.pcf && report.no_periodic_critical_point;
    return report;
}

// Preimage fiber H^{-1}(v): the polynomial (6912 - j)^3 - 27 v j^2 with its
// rational roots extracted exactly; non-rational factors stay in residual.
struct PreimageData {
    UniPoly<Rational> poly;
    std::vector<std::pair<Rational, unsigned>> rational_roots;
    UniPoly<Rational> residual;
};

inline PreimageData preimages_of(const Rational& v) {
    UniPoly<Rational> lin(std::vector<Rational>{6912, -1});
    UniPoly<Rational> jsq(std::vector<Rational>{0, 0, 1});
    UniPoly<Rational> f = lin.pow(3) - (Rational(27) * v) * jsq;
    auto rr = rational_roots(f);
    return {f, rr.roots, rr.residual};
}

}  // namespace hmap
}  // namespace hessdyn
