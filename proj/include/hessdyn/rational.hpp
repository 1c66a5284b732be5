#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace hessdyn {

// Arbitrary-precision scalars. Rational is always stored canonically
// (gcd(|num|, den) = 1, den > 0, zero = 0/1); GMP maintains this.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Int pow_int(const Int& base, unsigned exp) {
    Int r = 1, b = base;
    for (unsigned e = exp; e; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

inline Rational pow_rat(const Rational& base, unsigned exp) {
    return Rational(pow_int(numerator(base), exp), pow_int(denominator(base), exp));
}

// p-adic valuation of a nonzero rational; std::nullopt encodes v_p(0) = +inf.
inline std::optional<long> padic_valuation(const Rational& q, const Int& p) {
    if (q == 0) return std::nullopt;
    auto count = [&p](Int x) {
        long v = 0;
        while (x % p == 0) { x /= p; ++v; }
        return v;
    };
    return count(abs(numerator(q))) - count(denominator(q));
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.backend().data(), 40) != 0;
}

// Parses "p" or "p/q" with optional sign.
inline Rational parse_rational(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

}  // namespace hessdyn
