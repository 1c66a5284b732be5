#pragma once

#include "complexfp.hpp"
#include "ratfun.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hessdyn {
namespace experiments {

class PrecisionExhausted : public std::runtime_error {
public:
    PrecisionExhausted()
        : std::runtime_error("orbit magnitude left the representable window; raise precision") {}
};

class ExactBlowup : public std::runtime_error {
public:
    ExactBlowup()
        : std::runtime_error("exact iterate exceeded the bit-size cap; lower n or raise the cap") {}
};

// Interval classification of a finite real H-orbit. The six refined
// intervals are bounded by -13824, 0, 1728, 6912 and the cube-root
// constant 6912(19 + 15*2^(1/3) + 12*4^(1/3)); iterates within tolerance
// of a boundary (the pole 0 included) are counted separately, never
// assigned to a side.
struct IntervalStats {
    unsigned n = 0;
    unsigned precision_bits = 0;
    // refined counts, left to right on the real line
    unsigned long lp = 0, lpp = 0, mp = 0, mpp = 0, rp = 0, rpp = 0;
    unsigned long boundary_hits = 0;
    std::array<MpFloat, 5> thresholds;  // -13824, 0, 1728, 6912, upper cube-root constant
    bool stable = false;  // statistics agree across a precision doubling

    unsigned long L() const { return lp + lpp; }
    unsigned long M() const { return mp + mpp; }
    unsigned long R() const { return rp + rpp; }
};

// 6912 (19 + 15 * 2^(1/3) + 12 * 4^(1/3)), the refined upper threshold,
// at the ambient precision; treated as an opaque constant.
inline MpFloat upper_threshold() {
    MpFloat c2 = cbrt(MpFloat(2));
    return 6912 * (19 + 15 * c2 + 12 * c2 * c2);
}

namespace detail {

inline IntervalStats run_once(const MpFloat& j0_in, unsigned n, unsigned precision_bits) {
    PrecisionGuard guard(precision_bits);
    IntervalStats st;
    st.n = n;
    st.precision_bits = precision_bits;
    st.thresholds = {MpFloat(-13824), MpFloat(0), MpFloat(1728), MpFloat(6912),
                     upper_threshold()};
    const MpFloat tol = pow(MpFloat(2), -static_cast<int>(precision_bits / 4));
    const MpFloat mag_cap = pow(MpFloat(2), static_cast<int>(precision_bits / 2));
    const MpFloat mag_floor = 1 / mag_cap;

    MpFloat x = j0_in;
    for (unsigned i = 1; i <= n; ++i) {
        // H(x) = (6912 - x)^3 / (27 x^2)
        MpFloat d = 6912 - x;
        x = d * d * d / (27 * x * x);
        MpFloat ax = fabs(x);
        if (ax > mag_cap || (x != 0 && ax < mag_floor)) throw PrecisionExhausted();

        bool boundary = false;
        for (const auto& b : st.thresholds) {
            if (fabs(x - b) < tol * (fabs(b) + 1)) {
                boundary = true;
                break;
            }
        }
        if (boundary) {
            ++st.boundary_hits;
            continue;
        }
        if (x < st.thresholds[0]) ++st.lp;
        else if (x < st.thresholds[1]) ++st.lpp;
        else if (x < st.thresholds[2]) ++st.mp;
        else if (x < st.thresholds[3]) ++st.mpp;
        else if (x < st.thresholds[4]) ++st.rp;
        else ++st.rpp;
    }
    return st;
}

}  // namespace detail

// Iterates H in precision_bits floating arithmetic from j0 and classifies
// every iterate. The returned stability flag compares against a run at
// half precision: floating orbits of H shadow no true orbit for long
// (J(H) is the whole sphere), so only precision-robust statistics are
// meaningful. Counts always satisfy L + M + R + boundary_hits = n.
inline IntervalStats real_orbit_stats(const MpFloat& j0, unsigned n, unsigned precision_bits) {
    if (n < 1) throw std::invalid_argument("real_orbit_stats requires n >= 1");
    if (j0 == 0) throw std::invalid_argument("j0 = 0 is the pole of H");
    IntervalStats full = detail::run_once(j0, n, precision_bits);
    try {
        IntervalStats half = detail::run_once(j0, n, precision_bits / 2);
        auto close = [&](unsigned long a, unsigned long b) {
            double fa = static_cast<double>(a) / n, fb = static_cast<double>(b) / n;
            return fa < fb ? fb - fa <= 0.01 : fa - fb <= 0.01;
        };
        full.stable = close(full.L(), half.L()) && close(full.M(), half.M()) &&
                      close(full.R(), half.R()) && close(full.lp, half.lp) &&
                      close(full.lpp, half.lpp) && close(full.mp, half.mp) &&
                      close(full.mpp, half.mpp) && close(full.rp, half.rp) &&
                      close(full.rpp, half.rpp);
    } catch (const PrecisionExhausted&) {
        full.stable = false;
    }
    return full;
}

// ---- p-adic probes ----------------------------------------------------------

// Valuation trace of an exact H-orbit. nullopt encodes v_p(0) = +infinity.
struct PadicTrace {
    Int p;
    std::vector<std::optional<long>> valuations;        // v_p(H^i(j)), i = 0..
    std::vector<std::optional<long>> diff_valuations;   // v_p(H^(i+1)(j) - H^i(j))
    bool hit_infinity = false;   // orbit reached the pole and then infinity
    bool blowup = false;         // bit-size cap exceeded before n steps
    // Difference valuations strictly increase over the last quarter of the
    // run: an empirical signal only, never a convergence claim.
    bool cauchy_trend = false;
};

inline size_t rational_bits(const Rational& q) {
    return msb(abs(numerator(q)) + 1) + msb(denominator(q) + 1);
}

inline PadicTrace padic_orbit(const Rational& j0, const Int& p, unsigned n,
                              size_t bit_cap = 1000000) {
    if (j0 == 0) throw std::invalid_argument("j0 = 0 is the pole of H");
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    PadicTrace trace;
    trace.p = p;
    Rational x = j0;
    trace.valuations.push_back(padic_valuation(x, p));
    for (unsigned i = 0; i < n; ++i) {
        if (x == 0) {
            // H(0) = infinity; the trace truncates with an infinity marker.
            trace.hit_infinity = true;
            break;
        }
        Rational d = 6912 - x;
        Rational next = d * d * d / (27 * x * x);
        if (rational_bits(next) > bit_cap) {
            trace.blowup = true;
            break;
        }
        trace.diff_valuations.push_back(padic_valuation(next - x, p));
        trace.valuations.push_back(padic_valuation(next, p));
        x = next;
    }
    // Trend over the last quarter of recorded differences.
    size_t m = trace.diff_valuations.size();
    if (m >= 4) {
        size_t start = m - m / 4;
        bool increasing = m / 4 >= 2;
        for (size_t i = start; i + 1 < m && increasing; ++i) {
            const auto& a = trace.diff_valuations[i];
            const auto& b = trace.diff_valuations[i + 1];
            if (!b) continue;             // +infinity dominates everything
            if (!a || *a >= *b) increasing = false;
        }
        trace.cauchy_trend = increasing;
    }
    return trace;
}

}  // namespace experiments
}  // namespace hessdyn
