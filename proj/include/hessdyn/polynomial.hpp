#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hessdyn {

// Univariate polynomial over a commutative ring R with exact equality.
// Coefficients are stored lowest degree first with no trailing zeros;
// deg() of the zero polynomial is -1 (the "minus infinity" sentinel:
// every arithmetic rule treats it as smaller than any true degree).
template <typename R>
class UniPoly {
public:
    UniPoly() = default;
    // Constant embedding, so UniPoly itself satisfies the coefficient-ring
    // requirements (nested polynomials realize Q[a][b]).
    UniPoly(int v) {
        if (v != 0) c_.push_back(R(v));
    }
    explicit UniPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(R v) { return UniPoly(std::vector<R>{std::move(v)}); }
    // c * t^k
    static UniPoly monomial(R c, int k) {
        std::vector<R> v(static_cast<size_t>(k) + 1, R());
        v.back() = std::move(c);
        return UniPoly(std::move(v));
    }
    static UniPoly variable() { return monomial(R(1), 1); }

    bool is_zero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<R>& coeffs() const { return c_; }

    // Coefficient of t^k; zero beyond the stored range.
    const R& operator[](size_t k) const {
        static const R zero{};
        return k < c_.size() ? c_[k] : zero;
    }
    const R& leading() const { return c_.back(); }

    bool is_constant() const { return c_.size() <= 1; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<R> r(std::max(a.c_.size(), b.c_.size()), R());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> r(a.c_.size() + b.c_.size() - 1, R());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }

    friend UniPoly operator*(const R& s, const UniPoly& a) {
        if (s == R()) return {};
        UniPoly r = a;
        for (auto& x : r.c_) x = s * x;
        r.trim();
        return r;
    }

    template <typename S>
    S eval(const S& x) const {
        S acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + S(*it);
        return acc;
    }
    R eval(const R& x) const { return eval<R>(x); }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<R> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = R(static_cast<int>(i)) * c_[i];
        return UniPoly(std::move(r));
    }

    UniPoly pow(unsigned e) const {
        UniPoly r = constant(R(1)), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r = r * b;
            if (e > 1) b = b * b;
        }
        return r;
    }

    // Substitution t -> g(t); same Horner scheme as eval.
    UniPoly compose(const UniPoly& g) const {
        UniPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it);
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == R()) c_.pop_back();
    }
    std::vector<R> c_;
};

// ---- field-coefficient algorithms -----------------------------------------

// Requires R to be a field (operator/ is exact inverse-multiplication).
template <typename R>
std::pair<UniPoly<R>, UniPoly<R>> divmod(const UniPoly<R>& a, const UniPoly<R>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    UniPoly<R> q, r = a;
    const R lb = b.leading();
    while (!r.is_zero() && r.deg() >= b.deg()) {
        R c = r.leading() / lb;
        int k = r.deg() - b.deg();
        auto m = UniPoly<R>::monomial(c, k);
        q = q + m;
        r = r - m * b;
    }
    return {q, r};
}

template <typename R>
UniPoly<R> make_monic(const UniPoly<R>& f) {
    if (f.is_zero()) return f;
    return (R(1) / f.leading()) * f;
}

// Monic gcd by the Euclidean algorithm; gcd(0, g) is the monic form of g
// and gcd(0, 0) = 0. Fine for generic fields; the Rational overload below
// controls coefficient growth on large inputs.
template <typename R>
UniPoly<R> poly_gcd_euclid(UniPoly<R> a, UniPoly<R> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

template <typename R>
UniPoly<R> poly_gcd(const UniPoly<R>& a, const UniPoly<R>& b) {
    return poly_gcd_euclid(a, b);
}

namespace detail {

// Clears denominators and strips integer content.
inline UniPoly<Int> primitive_int_poly(const UniPoly<Rational>& f) {
    Int lcm = 1;
    for (const auto& c : f.coeffs()) lcm = lcm / gcd(lcm, denominator(c)) * denominator(c);
    std::vector<Int> v;
    v.reserve(f.coeffs().size());
    Int content = 0;
    for (const auto& c : f.coeffs()) {
        Int x = numerator(c) * (lcm / denominator(c));
        content = gcd(content, x);
        v.push_back(std::move(x));
    }
    if (content > 1)
        for (auto& x : v) x /= content;
    return UniPoly<Int>(std::move(v));
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, over Z.
inline UniPoly<Int> pseudo_rem(UniPoly<Int> a, const UniPoly<Int>& b) {
    const Int lb = b.leading();
    int steps = a.deg() - b.deg() + 1;
    for (int i = 0; i < steps && !a.is_zero() && a.deg() >= b.deg(); ++i) {
        int k = a.deg() - b.deg();
        UniPoly<Int> shifted = UniPoly<Int>::monomial(a.leading(), k) * b;
        a = lb * a - shifted;
    }
    return a;
}

inline UniPoly<Int> primitive_part(const UniPoly<Int>& f) {
    Int content = 0;
    for (const auto& c : f.coeffs()) content = gcd(content, c);
    if (content <= 1) return f;
    std::vector<Int> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) v.push_back(c / content);
    return UniPoly<Int>(std::move(v));
}

}  // namespace detail

// Primitive pseudo-remainder sequence over Z: keeps intermediate
// coefficients near subresultant size instead of the exponential blowup
// of plain rational Euclid. The fixed-point polynomials reach degree 81
// with ~300-digit coefficients, where this matters.
inline UniPoly<Rational> poly_gcd(const UniPoly<Rational>& a, const UniPoly<Rational>& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    UniPoly<Int> f = detail::primitive_int_poly(a);
    UniPoly<Int> g = detail::primitive_int_poly(b);
    if (f.deg() < g.deg()) std::swap(f, g);
    while (!g.is_zero()) {
        UniPoly<Int> r = detail::primitive_part(detail::pseudo_rem(f, g));
        f = std::move(g);
        g = std::move(r);
    }
    std::vector<Rational> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) v.push_back(Rational(c, f.leading()));
    return UniPoly<Rational>(std::move(v));
}

// One-prime coprimality certificate: if gcd(f mod p, g mod p) is constant
// and p divides neither leading coefficient nor any denominator, then
// deg gcd_Q(f, g) <= deg gcd_p = 0, so f and g are coprime over Q. Used
// where the exact PRS would be needlessly expensive (degree ~729 inputs).
// Returns false only when no sampled prime yields a constant gcd, which
// for genuinely coprime inputs has vanishing probability.
inline bool coprime_mod_prime_certificate(const UniPoly<Rational>& a, const UniPoly<Rational>& b) {
    if (a.is_zero() || b.is_zero()) return false;
    static const unsigned long primes[] = {1000003, 1000033, 1000037, 1000039, 1000081};
    for (unsigned long p : primes) {
        auto reduce = [p](const UniPoly<Rational>& f, std::vector<unsigned long>& out) -> bool {
            out.assign(f.coeffs().size(), 0);
            for (size_t i = 0; i < f.coeffs().size(); ++i) {
                Int den = denominator(f[i]);
                if (den % p == 0) return false;
                Int num = numerator(f[i]) % p;
                if (num < 0) num += p;
                Int dinv;
                Int pp = p;
                Int d = den % p;
                if (mpz_invert(dinv.backend().data(), d.backend().data(), pp.backend().data()) == 0)
                    return false;
                out[i] = static_cast<unsigned long>(Int(num * dinv % p));
            }
            while (!out.empty() && out.back() == 0) out.pop_back();
            return !out.empty();
        };
        std::vector<unsigned long> f, g;
        if (!reduce(a, f) || !reduce(b, g)) continue;
        if (f.size() != a.coeffs().size() || g.size() != b.coeffs().size()) continue;  // lc dropped
        // gcd over F_p by plain Euclid on machine words.
        auto mulmod = [p](unsigned long x, unsigned long y) {
            return static_cast<unsigned long>((__uint128_t)x * y % p);
        };
        auto invmod = [&](unsigned long x) {
            unsigned long r = 1, e = p - 2, base = x;
            for (; e; e >>= 1) {
                if (e & 1) r = mulmod(r, base);
                base = mulmod(base, base);
            }
            return r;
        };
        while (!g.empty()) {
            unsigned long linv = invmod(g.back());
            while (f.size() >= g.size() && !f.empty()) {
                unsigned long c = mulmod(f.back(), linv);
                size_t off = f.size() - g.size();
                for (size_t i = 0; i < g.size(); ++i) {
                    unsigned long s = mulmod(c, g[i]);
                    f[off + i] = (f[off + i] + p - s) % p;
                }
                while (!f.empty() && f.back() == 0) f.pop_back();
            }
            std::swap(f, g);
        }
        return f.size() == 1;
    }
    return false;
}

// Extended gcd over a field: returns (g, s, t) monic with s*a + t*b = g.
template <typename R>
struct XgcdResult {
    UniPoly<R> g, s, t;
};

template <typename R>
XgcdResult<R> poly_xgcd(const UniPoly<R>& a, const UniPoly<R>& b) {
    UniPoly<R> r0 = a, r1 = b;
    UniPoly<R> s0 = UniPoly<R>::constant(R(1)), s1;
    UniPoly<R> t0, t1 = UniPoly<R>::constant(R(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly<R> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UniPoly<R> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        R inv = R(1) / r0.leading();
        r0 = inv * r0;
        s0 = inv * s0;
        t0 = inv * t0;
    }
    return {r0, s0, t0};
}

// ---- text format -----------------------------------------------------------
// Sparse "coeff*t^k" sums, highest degree first, exact rational coefficients.
// Round-trips bit-exactly: print(parse(s)) == print(poly) for canonical forms.

inline std::string poly_to_string(const UniPoly<Rational>& f, const std::string& var = "t") {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = f.deg(); k >= 0; --k) {
        const Rational& c = f[static_cast<size_t>(k)];
        if (c == 0) continue;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool unit = (a == 1);
        if (k == 0) {
            os << a;
        } else {
            if (!unit) os << a << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

inline UniPoly<Rational> poly_from_string(const std::string& text, const std::string& var = "t") {
    std::vector<Rational> coeffs;
    auto bump = [&coeffs](int k, const Rational& c) {
        if (k >= static_cast<int>(coeffs.size())) coeffs.resize(k + 1, Rational(0));
        coeffs[k] += c;
    };
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("empty polynomial text");
    bool any = false;
    while (i < text.size()) {
        skip_ws();
        int sign = 1;
        while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sign = -sign;
            ++i;
            skip_ws();
        }
        if (i >= text.size()) throw std::invalid_argument("dangling sign in polynomial text");
        Rational coeff = 1;
        bool saw_coeff = false;
        if (std::isdigit((unsigned char)text[i])) {
            size_t j = i;
            while (j < text.size() && (std::isdigit((unsigned char)text[j]) || text[j] == '/')) ++j;
            coeff = parse_rational(text.substr(i, j - i));
            i = j;
            saw_coeff = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        int k = 0;
        if (i < text.size() && text.compare(i, var.size(), var) == 0) {
            i += var.size();
            skip_ws();
            k = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                size_t j = i;
                while (j < text.size() && std::isdigit((unsigned char)text[j])) ++j;
                if (j == i) throw std::invalid_argument("missing exponent in polynomial text");
                k = std::stoi(text.substr(i, j - i));
                i = j;
            }
        } else if (!saw_coeff) {
            throw std::invalid_argument("unexpected token in polynomial text at offset " +
                                        std::to_string(i));
        }
        bump(k, sign < 0 ? Rational(-coeff) : coeff);
        any = true;
        skip_ws();
    }
    if (!any) throw std::invalid_argument("empty polynomial text");
    return UniPoly<Rational>(std::move(coeffs));
}

}  // namespace hessdyn
