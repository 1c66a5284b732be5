#pragma once

#include "complexfp.hpp"
#include "polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace hessdyn {

// Signalled by numeric sphere evaluation when numerator and denominator
// both vanish below threshold at a finite point: the working precision is
// insufficient or the function is not actually reduced.
class Indeterminate : public std::runtime_error {
public:
    Indeterminate() : std::runtime_error("0/0 within tolerance at a finite point") {}
};

// Exact point of Q union {infinity}, for the exact evaluation path.
struct ExtRat {
    bool inf = false;
    Rational v;

    ExtRat() = default;
    ExtRat(Rational q) : v(std::move(q)) {}
    static ExtRat infinity() {
        ExtRat e;
        e.inf = true;
        return e;
    }
    bool is_finite() const { return !inf; }
    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        return a.inf == b.inf && (a.inf || a.v == b.v);
    }
};

// Reduced rational function over a field F. Reduction removes only the
// polynomial gcd; the representation is never rescaled beyond that, so
// leading coefficients produced by composition are preserved exactly.
// Equality is therefore by cross-multiplication, not representation.
template <typename F>
class RatFun {
public:
    using Poly = UniPoly<F>;

    RatFun() : num_(), den_(Poly::constant(F(1))) {}
    RatFun(Poly num, Poly den, bool already_reduced = false)
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (!already_reduced) reduce();
    }
    static RatFun constant(F c) { return RatFun(Poly::constant(std::move(c)), Poly::constant(F(1)), true); }
    static RatFun identity() { return RatFun(Poly::variable(), Poly::constant(F(1)), true); }
    static RatFun from_poly(Poly p) { return RatFun(std::move(p), Poly::constant(F(1)), true); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    int degree() const { return std::max(num_.deg(), den_.deg()); }
    int ddeg() const { return num_.deg() - den_.deg(); }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a) { return RatFun(-a.num_, a.den_, true); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }

    // f(g): clears denominators homogeneously, P = sum p_i u^i v^(N-i).
    // When both operands have difference-degree 1 the result is reduced
    // already and no gcd pass runs; otherwise one gcd pass is applied.
    RatFun compose(const RatFun& g) const {
        const Poly& u = g.num_;
        const Poly& v = g.den_;
        int N = std::max(num_.deg(), den_.deg());
        auto homog = [&](const Poly& p) {
            Poly acc, upow = Poly::constant(F(1));
            std::vector<Poly> upows;
            upows.reserve(N + 1);
            for (int i = 0; i <= N; ++i) {
                upows.push_back(upow);
                if (i < N) upow = upow * u;
            }
            Poly vpow = Poly::constant(F(1));
            for (int i = N; i >= 0; --i) {
                if (!(p[static_cast<size_t>(i)] == F()))
                    acc = acc + p[static_cast<size_t>(i)] * (upows[i] * vpow);
                vpow = vpow * v;
            }
            return acc;
        };
        bool skip_gcd = (ddeg() == 1 && g.ddeg() == 1);
        return RatFun(homog(num_), homog(den_), skip_gcd);
    }

    // n-fold self-composition, n >= 1.
    RatFun iterate(unsigned n) const {
        if (n == 0) throw std::invalid_argument("iterate requires n >= 1");
        RatFun acc = *this;
        for (unsigned i = 1; i < n; ++i) acc = compose(acc);
        return acc;
    }

    // Quotient rule, reduced.
    RatFun derivative() const {
        return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

private:
    void reduce() {
        Poly g = poly_gcd(num_, den_);
        if (g.deg() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
    }
    Poly num_, den_;
};

using RatFunQ = RatFun<Rational>;

// ---- evaluation on the extended plane --------------------------------------

// Exact path: reducedness rules out 0/0 at finite rational points.
inline ExtRat eval_ext(const RatFunQ& f, const ExtRat& x) {
    if (x.inf) {
        int d = f.ddeg();
        if (d > 0) return ExtRat::infinity();
        if (d < 0) return ExtRat(Rational(0));
        return ExtRat(f.num().leading() / f.den().leading());
    }
    Rational n = f.num().eval(x.v);
    Rational d = f.den().eval(x.v);
    if (d == 0) {
        if (n == 0) throw Indeterminate();  // impossible for reduced input
        return ExtRat::infinity();
    }
    return ExtRat(n / d);
}

// Numeric path at the ambient MPFR precision. A finite point where the
// denominator falls below 2^(-precision/2), scaled by the coefficient
// magnitude and the point, maps to infinity; both falling below throws.
inline ExtComplex eval_ext(const RatFunQ& f, const ExtComplex& x, unsigned precision_bits) {
    if (x.inf) {
        int d = f.ddeg();
        if (d > 0) return ExtComplex::infinity();
        if (d < 0) return ExtComplex::finite(Cplx(0));
        return ExtComplex::finite(Cplx(f.num().leading()) / Cplx(f.den().leading()));
    }
    auto scale = [&](const UniPoly<Rational>& p) {
        MpFloat s = 0, xm = x.v.abs(), xp = 1;
        if (xm < 1) xm = 1;
        for (const auto& c : p.coeffs()) {
            MpFloat m = Cplx(c).abs() * xp;
            if (m > s) s = m;
            xp *= xm;
        }
        return s > 0 ? s : MpFloat(1);
    };
    Cplx n = f.num().template eval<Cplx>(x.v);
    Cplx d = f.den().template eval<Cplx>(x.v);
    MpFloat thresh = pow(MpFloat(2), -static_cast<int>(precision_bits / 2));
    bool n_small = n.abs() < thresh * scale(f.num());
    bool d_small = d.abs() < thresh * scale(f.den());
    if (d_small) {
        if (n_small) throw Indeterminate();
        return ExtComplex::infinity();
    }
    return ExtComplex::finite(n / d);
}

inline std::string ratfun_to_string(const RatFunQ& f, const std::string& var = "t") {
    return poly_to_string(f.num(), var) + " / " + poly_to_string(f.den(), var);
}

// The separator is " / " with spaces; bare '/' belongs to rational
// coefficients like 3456/7.
inline RatFunQ ratfun_from_string(const std::string& s, const std::string& var = "t") {
    auto pos = s.find(" / ");
    if (pos == std::string::npos)
        return RatFunQ::from_poly(poly_from_string(s, var));
    return RatFunQ(poly_from_string(s.substr(0, pos), var),
                   poly_from_string(s.substr(pos + 3), var));
}

}  // namespace hessdyn
