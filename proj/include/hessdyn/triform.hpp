#pragma once

#include "polynomial.hpp"

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hessdyn {

// Exponent triple (i, j, k) with i + j + k = degree. Ordering is graded
// lexicographic with x > y > z, used for serialization and normalization.
using Monomial = std::array<int, 3>;

struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
        if (da != db) return da > db;
        if (a[0] != b[0]) return a[0] > b[0];
        if (a[1] != b[1]) return a[1] > b[1];
        return a[2] > b[2];
    }
};

// Homogeneous trivariate form with exact coefficients in a commutative
// ring R. Zero coefficients are never stored; every stored monomial has
// exponent sum equal to the form's degree.
template <typename R>
class TriForm {
public:
    using Coeffs = std::map<Monomial, R, GradedLexLess>;

    TriForm() = default;
    explicit TriForm(int degree) : deg_(degree) {}
    TriForm(int degree, Coeffs coeffs) : deg_(degree), c_(std::move(coeffs)) {
        for (auto it = c_.begin(); it != c_.end();) {
            if (it->first[0] + it->first[1] + it->first[2] != deg_)
                throw std::invalid_argument("monomial degree mismatch in TriForm");
            if (it->second == R())
                it = c_.erase(it);
            else
                ++it;
        }
    }

    int degree() const { return deg_; }
    bool is_zero() const { return c_.empty(); }
    const Coeffs& coeffs() const { return c_; }

    const R& coeff(int i, int j, int k) const {
        static const R zero{};
        auto it = c_.find({i, j, k});
        return it == c_.end() ? zero : it->second;
    }

    void add_term(const Monomial& m, const R& v) {
        if (m[0] + m[1] + m[2] != deg_) throw std::invalid_argument("monomial degree mismatch");
        if (v == R()) return;
        auto [it, inserted] = c_.try_emplace(m, v);
        if (!inserted) {
            it->second = it->second + v;
            if (it->second == R()) c_.erase(it);
        }
    }

    friend bool operator==(const TriForm& a, const TriForm& b) {
        return a.deg_ == b.deg_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TriForm& a, const TriForm& b) { return !(a == b); }

    friend TriForm operator+(const TriForm& a, const TriForm& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.deg_ != b.deg_) throw std::invalid_argument("adding forms of different degree");
        TriForm r = a;
        for (const auto& [m, v] : b.c_) r.add_term(m, v);
        return r;
    }
    friend TriForm operator-(const TriForm& a, const TriForm& b) { return a + (R(-1) * b); }

    friend TriForm operator*(const R& s, const TriForm& a) {
        TriForm r(a.deg_);
        if (s == R()) return r;
        for (const auto& [m, v] : a.c_) {
            R sv = s * v;
            if (!(sv == R())) r.c_.emplace(m, std::move(sv));
        }
        return r;
    }

    friend TriForm operator*(const TriForm& a, const TriForm& b) {
        TriForm r(a.deg_ + b.deg_);
        for (const auto& [ma, va] : a.c_)
            for (const auto& [mb, vb] : b.c_)
                r.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, va * vb);
        return r;
    }

    // Partial derivative with respect to variable 0 (x), 1 (y), or 2 (z).
    TriForm partial(int var) const {
        TriForm r(deg_ - 1);
        for (const auto& [m, v] : c_) {
            if (m[var] == 0) continue;
            Monomial d = m;
            d[var] -= 1;
            r.add_term(d, R(m[var]) * v);
        }
        return r;
    }

    R eval(const R& x, const R& y, const R& z) const {
        R total{};
        for (const auto& [m, v] : c_) {
            R term = v;
            for (int i = 0; i < m[0]; ++i) term = term * x;
            for (int i = 0; i < m[1]; ++i) term = term * y;
            for (int i = 0; i < m[2]; ++i) term = term * z;
            total = total + term;
        }
        return total;
    }

    // Linear substitution x_i -> sum_j M[i][j] x_j, i.e. f(Mx).
    TriForm substitute(const std::array<std::array<R, 3>, 3>& M) const {
        std::array<TriForm, 3> lin;
        for (int i = 0; i < 3; ++i) {
            lin[i] = TriForm(1);
            Monomial ms[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
            for (int j = 0; j < 3; ++j)
                if (!(M[i][j] == R())) lin[i].add_term(ms[j], M[i][j]);
        }
        TriForm result(deg_);
        for (const auto& [m, v] : c_) {
            TriForm term(0);
            term.add_term({0, 0, 0}, v);
            for (int var = 0; var < 3; ++var)
                for (int e = 0; e < m[var]; ++e) term = term * lin[var];
            result = result + term;
        }
        return result;
    }

private:
    int deg_ = 0;
    Coeffs c_;
};

// Determinant of the symmetric matrix of second partials; output degree is
// 3(d - 2) for input degree d (or the zero form).
template <typename R>
TriForm<R> hessian_form(const TriForm<R>& f) {
    if (f.degree() < 2) throw std::invalid_argument("hessian_form requires degree >= 2");
    TriForm<R> h[3][3];
    for (int i = 0; i < 3; ++i) {
        TriForm<R> fi = f.partial(i);
        for (int j = i; j < 3; ++j) h[i][j] = fi.partial(j);
    }
    auto& m = h;
    TriForm<R> det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[1][2]) -
                     m[0][1] * (m[0][1] * m[2][2] - m[1][2] * m[0][2]) +
                     m[0][2] * (m[0][1] * m[1][2] - m[1][1] * m[0][2]);
    return det;
}

// First polar of V(f) with respect to Q: Q0 f_x + Q1 f_y + Q2 f_z.
template <typename R>
TriForm<R> polar(const TriForm<R>& f, const std::array<R, 3>& q) {
    if (q[0] == R() && q[1] == R() && q[2] == R())
        throw std::invalid_argument("polar point must be nonzero");
    TriForm<R> r(f.degree() - 1);
    for (int i = 0; i < 3; ++i)
        if (!(q[i] == R())) r = r + q[i] * f.partial(i);
    return r;
}

// Projective proportionality: equal up to a nonzero scalar. R must be a
// field (uses division by the first nonzero coefficient).
template <typename R>
bool proportional(const TriForm<R>& a, const TriForm<R>& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.degree() != b.degree()) return false;
    const auto& ma = *a.coeffs().begin();
    const auto& mb = *b.coeffs().begin();
    if (ma.first != mb.first) return false;
    R ratio = mb.second / ma.second;
    if (a.coeffs().size() != b.coeffs().size()) return false;
    auto ita = a.coeffs().begin();
    auto itb = b.coeffs().begin();
    for (; ita != a.coeffs().end(); ++ita, ++itb) {
        if (ita->first != itb->first) return false;
        if (!(ratio * ita->second == itb->second)) return false;
    }
    return true;
}

// ---- small exact matrices, for projective transformations ------------------

template <typename R>
using Mat3 = std::array<std::array<R, 3>, 3>;

template <typename R>
R det3(const Mat3<R>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <typename R>
Mat3<R> inverse3(const Mat3<R>& m) {
    R d = det3(m);
    if (d == R()) throw std::domain_error("singular matrix");
    Mat3<R> inv;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
            int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            inv[j][i] = (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]) / d;
        }
    return inv;
}

template <typename R>
std::array<R, 3> apply3(const Mat3<R>& m, const std::array<R, 3>& v) {
    std::array<R, 3> r{};
    for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return r;
}

// ---- text format ------------------------------------------------------------
// Sparse "c * x^i y^j z^k" sums in graded-lex order.

inline std::string triform_to_string(const TriForm<Rational>& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.coeffs()) {
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
        os << a;
        static const char* names[3] = {"x", "y", "z"};
        for (int v = 0; v < 3; ++v) {
            if (m[v] == 0) continue;
            os << " " << names[v];
            if (m[v] > 1) os << "^" << m[v];
        }
    }
    return os.str();
}

}  // namespace hessdyn
