#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "krall_hahn/errors.hpp"

namespace kh {

// Exact rational number. Thin value wrapper over mpq_class that keeps the
// canonical form (lowest terms, positive denominator) after every operation and
// never exposes gmpxx expression templates to callers.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw ParseError("zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw ParseError("zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Accepts "p", "-p" or "p/q" with q != 0; surrounding blanks are rejected.
    static Rational parse(std::string_view text) {
        if (text.empty()) throw ParseError("empty rational literal");
        auto slash = text.find('/');
        auto parse_int = [&](std::string_view s) {
            if (s.empty()) throw ParseError("malformed rational '" + std::string(text) + "'");
            std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (start == s.size()) throw ParseError("malformed rational '" + std::string(text) + "'");
            for (std::size_t i = start; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9')
                    throw ParseError("malformed rational '" + std::string(text) + "'");
            std::string digits(s[0] == '+' ? s.substr(1) : s);
            return mpz_class(digits, 10);
        };
        if (slash == std::string_view::npos) return Rational(parse_int(text), mpz_class(1));
        mpz_class num = parse_int(text.substr(0, slash));
        mpz_class den = parse_int(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    std::string str() const { return q_.get_str(); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const noexcept { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    // Only meaningful when is_integer() and the value fits.
    long to_long() const { return q_.get_num().get_si(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ParameterSingularity("division by zero rational");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(const Rational& base, unsigned k) {
    Rational out(1);
    for (unsigned i = 0; i < k; ++i) out *= base;
    return out;
}

// Rising factorial z(z+1)...(z+j-1); the empty product is 1. Works for any
// commutative ring element type constructible from an integer.
template <class T>
T pochhammer(const T& z, int j) {
    T out(1);
    for (int i = 0; i < j; ++i) out = out * (z + T(i));
    return out;
}

inline Rational factorial(int n) {
    Rational out(1);
    for (int i = 2; i <= n; ++i) out *= Rational(i);
    return out;
}

inline Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    Rational out(1);
    for (long i = 0; i < k; ++i) out = out * Rational(n - i) / Rational(i + 1);
    return out;
}

// True iff r is an integer in the closed range [lo, hi].
inline bool is_integer_in(const Rational& r, long lo, long hi) {
    if (!r.is_integer()) return false;
    const mpz_class n = r.numerator();
    return n >= lo && n <= hi;
}

}  // namespace kh
