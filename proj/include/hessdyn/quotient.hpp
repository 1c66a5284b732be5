#pragma once

#include "polynomial.hpp"

#include <memory>
#include <stdexcept>
#include <utility>

namespace hessdyn {

using RatPoly = UniPoly<Rational>;

// Thrown when inverting a zero divisor in Q[t]/(m). Carries the nontrivial
// gcd so callers can split a reducible modulus and retry per factor.
class NotInvertible : public std::domain_error {
public:
    explicit NotInvertible(RatPoly witness)
        : std::domain_error("element not invertible modulo " + poly_to_string(witness)),
          witness_(std::move(witness)) {}
    const RatPoly& witness() const { return witness_; }

private:
    RatPoly witness_;
};

class ModulusMismatch : public std::logic_error {
public:
    ModulusMismatch() : std::logic_error("quotient-ring operands have different moduli") {}
};

// Element of Q[t]/(m(t)), m monic of degree >= 1, stored shared so that
// equality of moduli is cheap and element values stay immutable.
class QuotElem {
public:
    using Modulus = std::shared_ptr<const RatPoly>;

    static Modulus make_modulus(const RatPoly& m) {
        if (m.deg() < 1) throw std::invalid_argument("modulus must have degree >= 1");
        return std::make_shared<const RatPoly>(make_monic(m));
    }

    QuotElem(RatPoly rep, Modulus m) : m_(std::move(m)) {
        rep_ = divmod(rep, *m_).second;
    }
    static QuotElem from_rational(const Rational& c, Modulus m) {
        return QuotElem(RatPoly::constant(c), std::move(m));
    }
    static QuotElem generator(Modulus m) { return QuotElem(RatPoly::variable(), std::move(m)); }

    const RatPoly& rep() const { return rep_; }
    const Modulus& modulus() const { return m_; }
    bool is_zero() const { return rep_.is_zero(); }

    friend bool operator==(const QuotElem& a, const QuotElem& b) {
        a.check(b);
        return a.rep_ == b.rep_;
    }
    friend bool operator!=(const QuotElem& a, const QuotElem& b) { return !(a == b); }

    friend QuotElem operator+(const QuotElem& a, const QuotElem& b) {
        a.check(b);
        return QuotElem(a.rep_ + b.rep_, a.m_);
    }
    friend QuotElem operator-(const QuotElem& a, const QuotElem& b) {
        a.check(b);
        return QuotElem(a.rep_ - b.rep_, a.m_);
    }
    friend QuotElem operator*(const QuotElem& a, const QuotElem& b) {
        a.check(b);
        return QuotElem(a.rep_ * b.rep_, a.m_);
    }

    // Extended-gcd inversion; throws NotInvertible with the offending gcd
    // when the representative shares a factor with the modulus.
    QuotElem invert() const {
        auto x = poly_xgcd(rep_, *m_);
        if (x.g.deg() != 0) throw NotInvertible(x.g);
        return QuotElem(x.s, m_);
    }

    friend QuotElem operator/(const QuotElem& a, const QuotElem& b) { return a * b.invert(); }

private:
    void check(const QuotElem& o) const {
        if (m_ != o.m_ && !(*m_ == *o.m_)) throw ModulusMismatch();
    }
    RatPoly rep_;
    Modulus m_;
};

}  // namespace hessdyn
