#pragma once

#include "complexfp.hpp"
#include "polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace hessdyn {

class RootFindingFailed : public std::runtime_error {
public:
    explicit RootFindingFailed(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

struct CplxPoly {
    std::vector<Cplx> c;  // lowest degree first

    Cplx eval(const Cplx& z) const {
        Cplx acc;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
        return acc;
    }
    // max_i |c_i| max(1,|z|)^i, the local coefficient scale for residual tests
    MpFloat scale_at(const MpFloat& zabs) const {
        MpFloat s = 0, m = zabs < 1 ? MpFloat(1) : zabs, mp = 1;
        for (const auto& ci : c) {
            MpFloat v = ci.abs() * mp;
            if (v > s) s = v;
            mp *= m;
        }
        return s > 0 ? s : MpFloat(1);
    }
};

inline CplxPoly to_cplx_poly(const UniPoly<Rational>& f) {
    CplxPoly p;
    p.c.reserve(f.coeffs().size());
    for (const auto& q : f.coeffs()) p.c.push_back(Cplx(q));
    return p;
}

inline CplxPoly derivative(const CplxPoly& p) {
    CplxPoly d;
    if (p.c.size() <= 1) return d;
    d.c.reserve(p.c.size() - 1);
    for (size_t i = 1; i < p.c.size(); ++i) d.c.push_back(Cplx(MpFloat(i)) * p.c[i]);
    return d;
}

}  // namespace detail

// Simultaneous root finding by Aberth-Ehrlich iteration with Newton
// polishing, at the given working precision. Input must be squarefree;
// throws RootFindingFailed if the clustered root count differs from the
// degree (insufficient precision, or a repeated root).
inline std::vector<Cplx> find_roots(const UniPoly<Rational>& f, unsigned precision_bits) {
    if (f.deg() < 1) throw std::invalid_argument("find_roots requires degree >= 1");
    PrecisionGuard guard(precision_bits);
    const int n = f.deg();
    detail::CplxPoly p = detail::to_cplx_poly(f);
    detail::CplxPoly dp = detail::derivative(p);

    // Fujiwara root bound, 2 max_k |a_{n-k}/a_n|^(1/k), for initial guesses
    // on a circle; an irrational angular offset keeps guesses off symmetry
    // axes. The fixed-point polynomials have root moduli spanning several
    // orders of magnitude, and this bound stays near the largest root.
    MpFloat lead = p.c.back().abs();
    MpFloat start_r = 0;
    for (int k = 1; k <= n; ++k) {
        MpFloat a = p.c[static_cast<size_t>(n - k)].abs();
        if (a == 0) continue;
        MpFloat r = pow(a / lead, MpFloat(1) / k);
        if (r > start_r) start_r = r;
    }
    start_r = 2 * start_r + 1;
    const MpFloat pi = 4 * atan(MpFloat(1));
    std::vector<Cplx> z(n);
    for (int i = 0; i < n; ++i) {
        MpFloat theta = 2 * pi * (MpFloat(i) + MpFloat("0.3573")) / n + MpFloat("0.1234");
        z[i] = Cplx(start_r * cos(theta), start_r * sin(theta));
    }

    const MpFloat tol = pow(MpFloat(2), -static_cast<int>(precision_bits)) * 16;
    const int max_iters = 400 + 8 * n;
    for (int iter = 0; iter < max_iters; ++iter) {
        MpFloat worst = 0;
        for (int i = 0; i < n; ++i) {
            Cplx pv = p.eval(z[i]);
            Cplx dv = dp.eval(z[i]);
            if (pv.abs2() == 0) continue;
            Cplx newton = pv / dv;
            Cplx repulsion;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                repulsion = repulsion + Cplx(MpFloat(1)) / (z[i] - z[j]);
            }
            Cplx denom = Cplx(MpFloat(1)) - newton * repulsion;
            Cplx w = newton / denom;
            z[i] = z[i] - w;
            MpFloat rel = w.abs() / (z[i].abs() + 1);
            if (rel > worst) worst = rel;
        }
        if (worst < tol) break;
    }

    // Newton polish and residual acceptance.
    const MpFloat resid_tol = pow(MpFloat(2), -static_cast<int>(precision_bits / 2));
    for (int i = 0; i < n; ++i) {
        for (int it = 0; it < 8; ++it) {
            Cplx pv = p.eval(z[i]);
            if (pv.abs() <= resid_tol * p.scale_at(z[i].abs())) break;
            Cplx dv = dp.eval(z[i]);
            if (dv.abs2() == 0) break;
            z[i] = z[i] - pv / dv;
        }
        Cplx pv = p.eval(z[i]);
        if (pv.abs() > resid_tol * p.scale_at(z[i].abs()))
            throw RootFindingFailed("Newton polish did not reach residual tolerance");
    }

    // Distinctness at clustering radius 2^(-bits/4), relative to magnitude.
    const MpFloat cluster = pow(MpFloat(2), -static_cast<int>(precision_bits / 4));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            MpFloat sep = (z[i] - z[j]).abs();
            MpFloat ref = z[i].abs() + z[j].abs() + 1;
            if (sep < cluster * ref)
                throw RootFindingFailed("root cluster detected: count != degree at this precision");
        }
    return z;
}

}  // namespace hessdyn
