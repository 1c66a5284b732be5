#pragma once

#include "rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace hessdyn {

using MpFloat = boost::multiprecision::mpfr_float;

// Scoped working precision, in bits. MPFR precision is ambient per thread;
// every entry point that takes precision_bits installs one of these.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits)
        : saved_(MpFloat::default_precision()) {
        MpFloat::default_precision(digits10(bits));
    }
    ~PrecisionGuard() { MpFloat::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

    static unsigned digits10(unsigned bits) {
        return static_cast<unsigned>(bits * 0.30103) + 4;
    }

private:
    unsigned saved_;
};

// Minimal complex arithmetic over MpFloat; std::complex is not specified
// for multiprecision types.
struct Cplx {
    MpFloat re, im;

    Cplx() : re(0), im(0) {}
    Cplx(MpFloat r, MpFloat i = MpFloat(0)) : re(std::move(r)), im(std::move(i)) {}
    explicit Cplx(const Rational& q) : re(numerator(q)), im(0) { re /= MpFloat(denominator(q)); }
    explicit Cplx(const Int& n) : re(n), im(0) {}
    explicit Cplx(int n) : re(n), im(0) {}

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        MpFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }

    MpFloat abs2() const { return re * re + im * im; }
    MpFloat abs() const { return sqrt(abs2()); }
};

inline MpFloat abs(const Cplx& z) { return z.abs(); }

// Point of the Riemann sphere: a finite complex value at the ambient
// working precision, or the point at infinity.
struct ExtComplex {
    bool inf = false;
    Cplx v;

    static ExtComplex infinity() { return {true, {}}; }
    static ExtComplex finite(Cplx z) { return {false, std::move(z)}; }
};

inline std::string to_decimal_string(const MpFloat& x, unsigned digits) {
    return x.str(digits);
}

}  // namespace hessdyn
