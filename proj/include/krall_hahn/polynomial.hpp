#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "krall_hahn/errors.hpp"
#include "krall_hahn/rational.hpp"

namespace kh {

// Dense univariate polynomial over Q. coeffs_[i] multiplies x^i and the last
// stored coefficient is never zero, so the zero polynomial has no coefficients.
class Polynomial {
public:
    static constexpr int kZeroDegree = -1;

    Polynomial() = default;
    Polynomial(const Rational& c) { if (!c.is_zero()) coeffs_.push_back(c); }  // NOLINT
    Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
    Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
    static Polynomial monomial(int k, const Rational& c = Rational(1)) {
        std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
        v.back() = c;
        return Polynomial(std::move(v));
    }
    // x + c
    static Polynomial linear(const Rational& c) { return Polynomial({c, Rational(1)}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    Rational coeff(int k) const {
        if (k < 0 || k > degree()) return Rational(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    Rational operator()(const Rational& at) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        if (s.is_zero()) { coeffs_.clear(); return *this; }
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    std::string str(char var = 'x') const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const Rational& c = coeffs_[static_cast<std::size_t>(k)];
            if (c.is_zero()) continue;
            if (!first) os << (c.sign() < 0 ? " - " : " + ");
            else if (c.sign() < 0) os << "-";
            Rational mag = abs(c);
            bool unit = mag == Rational(1);
            if (!unit || k == 0) os << (k > 0 && !mag.is_integer() ? "(" + mag.str() + ")" : mag.str());
            if (k > 0) {
                if (!unit) os << "*";
                os << var;
                if (k > 1) os << "^" << k;
            }
            first = false;
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline Polynomial pow(const Polynomial& p, unsigned k) {
    Polynomial out(1);
    Polynomial base = p;
    while (k > 0) {
        if (k & 1U) out = out * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return out;
}

// p(q(x)) by Horner's scheme.
inline Polynomial compose(const Polynomial& p, const Polynomial& q) {
    Polynomial acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Polynomial(*it);
    return acc;
}

// p(x + c); c may be any rational, including half-integers.
inline Polynomial shift_argument(const Polynomial& p, const Rational& c) {
    if (c.is_zero() || p.is_constant()) return p;
    std::vector<Rational> v = p.coefficients();
    const std::size_t n = v.size();
    // Taylor shift: repeated synthetic division.
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) v[j - 1] += c * v[j];
    return Polynomial(std::move(v));
}

// p(s*x + c)
inline Polynomial affine_substitute(const Polynomial& p, const Rational& s, const Rational& c) {
    return compose(p, Polynomial({c, s}));
}

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

inline DivMod divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw ParameterSingularity("polynomial division by zero");
    if (num.degree() < den.degree()) return {Polynomial(), num};
    std::vector<Rational> r = num.coefficients();
    const int dd = den.degree();
    const Rational lead = den.leading();
    std::vector<Rational> q(static_cast<std::size_t>(num.degree() - dd + 1));
    for (int k = num.degree() - dd; k >= 0; --k) {
        Rational t = r[static_cast<std::size_t>(k + dd)] / lead;
        q[static_cast<std::size_t>(k)] = t;
        if (t.is_zero()) continue;
        for (int i = 0; i <= dd; ++i) r[static_cast<std::size_t>(k + i)] -= t * den.coeff(i);
    }
    r.resize(static_cast<std::size_t>(dd));
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

// Quotient of an exact division; a nonzero remainder is an error, never rounded.
inline Polynomial divide_exact(const Polynomial& num, const Polynomial& den) {
    DivMod qr = divmod(num, den);
    if (!qr.remainder.is_zero())
        throw NonExactDivision("inexact division of degree " + std::to_string(num.degree()) +
                                   " by degree " + std::to_string(den.degree()),
                               qr.remainder.str());
    return qr.quotient;
}

inline Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading());
}

// Monic gcd; gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).remainder;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

// The unique q with q(x) - q(x-1) = p(x) and q(-1) = 0. Uses the basis
// B_k(x) = (x+1)(x+2)...(x+k)/k!, for which B_k(x) - B_k(x-1) = B_{k-1}(x).
inline Polynomial antidifference(const Polynomial& p) {
    if (p.is_zero()) return {};
    auto basis = [](int k) {
        Polynomial b(1);
        for (int i = 1; i <= k; ++i) b = b * Polynomial::linear(Rational(i));
        return b * (Rational(1) / factorial(k));
    };
    Polynomial rest = p;
    Polynomial out;
    while (!rest.is_zero()) {
        const int k = rest.degree();
        Polynomial bk = basis(k);
        Rational c = rest.leading() / bk.leading();
        rest -= bk * c;
        out += basis(k + 1) * c;
    }
    return out;
}

// Backward difference p(x) - p(x-1).
inline Polynomial backward_difference(const Polynomial& p) {
    return p - shift_argument(p, Rational(-1));
}

}  // namespace kh
