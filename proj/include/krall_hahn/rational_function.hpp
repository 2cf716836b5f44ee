#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "krall_hahn/polynomial.hpp"

namespace kh {

// Quotient of polynomials, kept coprime with a monic denominator.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}  // NOLINT
    RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
    RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT
    RationalFunction(int c) : num_(c), den_(1) {}  // NOLINT
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw ParameterSingularity("rational function with zero denominator");
        normalize();
    }

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_zero() const { return num_.is_zero(); }

    // Throws ParameterSingularity at a pole of the reduced form.
    Rational operator()(const Rational& at) const {
        Rational d = den_(at);
        if (d.is_zero()) throw ParameterSingularity("rational function evaluated at a pole " + at.str());
        return num_(at) / d;
    }

    // Polynomial view; throws when the reduced form is not a polynomial.
    Polynomial as_polynomial() const {
        if (!is_polynomial())
            throw NonExactDivision("rational function is not a polynomial", den_.str());
        return num_;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction out = a;
        out.num_ = -out.num_;
        return out;
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return {};
        // Cross-cancel first to keep the intermediate degrees small.
        Polynomial g1 = gcd(a.num_, b.den_);
        Polynomial g2 = gcd(b.num_, a.den_);
        Polynomial n = divide_exact(a.num_, g1) * divide_exact(b.num_, g2);
        Polynomial d = divide_exact(a.den_, g2) * divide_exact(b.den_, g1);
        return RationalFunction(std::move(n), std::move(d));
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw ParameterSingularity("division by the zero rational function");
        return a * RationalFunction(b.den_, b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

private:
    void normalize() {
        if (num_.is_zero()) { den_ = Polynomial(1); return; }
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
        Rational lead = den_.leading();
        if (lead != Rational(1)) {
            num_ *= Rational(1) / lead;
            den_ *= Rational(1) / lead;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

// f(x + c)
inline RationalFunction shift_argument(const RationalFunction& f, const Rational& c) {
    return RationalFunction(shift_argument(f.numerator(), c), shift_argument(f.denominator(), c));
}

inline RationalFunction compose(const RationalFunction& f, const Polynomial& q) {
    return RationalFunction(compose(f.numerator(), q), compose(f.denominator(), q));
}

}  // namespace kh
