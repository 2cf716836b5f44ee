#pragma once

#include <array>
#include <string>

#include "krall_hahn/difference_operator.hpp"
#include "krall_hahn/measure.hpp"
#include "krall_hahn/rational_function.hpp"

namespace kh {

// Parameters a, b, N of the Hahn family. Construction through make() checks
// that the weight is defined and the first N+1 norms are nonzero.
struct HahnParams {
    Rational a;
    Rational b;
    int N = 1;

    Rational ab() const { return a + b; }

    static HahnParams make(const Rational& a, const Rational& b, int N) {
        HahnParams p{a, b, N};
        p.validate();
        return p;
    }

    void validate() const {
        if (N < 1) throw ParameterSingularity("N must be a positive integer, got " + std::to_string(N));
        if (is_integer_in(a, -N, -1)) throw ParameterSingularity("a = " + a.str() + " lies in {-1,...,-N}");
        if (is_integer_in(b, -N, -1)) throw ParameterSingularity("b = " + b.str() + " lies in {-1,...,-N}");
        if (is_integer_in(a + b, -2L * N - 1, -1))
            throw ParameterSingularity("a+b = " + (a + b).str() + " lies in {-1,...,-2N-1}");
    }

    // The weight is positive exactly when a,b > -1 or a,b < -N.
    bool positive() const {
        return (a > Rational(-1) && b > Rational(-1)) || (a < Rational(-N) && b < Rational(-N));
    }

    friend bool operator==(const HahnParams&, const HahnParams&) = default;
};

// theta_n = n(n + a + b + 1)
inline Rational theta(const Rational& n, const Rational& ab) { return n * (n + ab + Rational(1)); }

// theta_{x+c} as a polynomial in x.
inline Polynomial theta_poly(const Rational& ab, const Rational& c = Rational(0)) {
    Polynomial x = Polynomial::linear(c);
    return x * (x + Polynomial(ab + Rational(1)));
}

// sigma_{x+c} = -(2(x+c) + a + b - 1) as a polynomial in x.
inline Polynomial sigma_poly(const Rational& ab, const Rational& c = Rational(0)) {
    return Polynomial({-(Rational(2) * c + ab - Rational(1)), Rational(-2)});
}

inline Rational sigma(const Rational& n, const Rational& ab) { return -(Rational(2) * n + ab - Rational(1)); }

// h_n^{a,b,N}(x) from its explicit hypergeometric sum.
inline Polynomial hahn_poly(int n, const HahnParams& p) {
    if (n < 0) return {};
    const Rational ab1 = p.ab() + Rational(1);
    const Rational den0 = pochhammer(p.ab() + Rational(2 + p.N), n);
    if (den0.is_zero()) throw ParameterSingularity("(2+a+b+N)_n vanishes for n = " + std::to_string(n));
    const Polynomial minus_x({Rational(0), Rational(-1)});
    Polynomial out;
    Polynomial rising(1);  // (-x)_j
    for (int j = 0; j <= n; ++j) {
        if (j > 0) rising = rising * (minus_x + Polynomial(j - 1));
        const Rational aj = pochhammer(p.a + Rational(1), j);
        if (aj.is_zero()) throw ParameterSingularity("(a+1)_j vanishes for j = " + std::to_string(j));
        Rational c = pochhammer(Rational(p.N - n + 1), n - j) * pochhammer(ab1, j + n) /
                     (den0 * aj * factorial(n - j) * factorial(j));
        out += rising * c;
    }
    return out;
}

// Second-order operator with eigenfunctions h_n and eigenvalues theta_n.
inline DifferenceOperator hahn_operator(const HahnParams& p) {
    const Polynomial x = Polynomial::x();
    const Polynomial down = x * (x - Polynomial(p.b + Rational(p.N + 1)));  // x(x-b-N-1)
    const Polynomial up = (x + Polynomial(p.a + Rational(1))) * (x - Polynomial(p.N));  // (x+a+1)(x-N)
    DifferenceOperator d;
    d.add_term(-1, down);
    d.add_term(0, -(up + down));
    d.add_term(1, up);
    return d;
}

// Coefficients of x h_n = a_{n+1} h_{n+1} + b_n h_n + c_n h_{n-1}, as rational
// functions of the index n.
struct RecurrenceFunctions {
    RationalFunction a;
    RationalFunction b;
    RationalFunction c;
};

inline RecurrenceFunctions recurrence_functions(const HahnParams& p) {
    const Polynomial n = Polynomial::x();
    const Rational ab = p.ab();
    const Rational N(p.N);
    auto lin = [&](long k, const Rational& c) { return Polynomial({c, Rational(k)}); };
    RecurrenceFunctions f;
    f.a = RationalFunction(-(n * lin(1, p.a) * lin(1, ab + N + Rational(1))),
                           lin(2, ab - Rational(1)) * lin(2, ab));
    f.b = RationalFunction(Polynomial(N * (p.a + Rational(1)) * ab) +
                               n * lin(1, ab + Rational(1)) * Polynomial(Rational(2) * N + p.b - p.a),
                           lin(2, ab) * lin(2, ab + Rational(2)));
    f.c = RationalFunction(-(lin(1, ab) * lin(1, p.b) * lin(-1, N + Rational(1))),
                           lin(2, ab) * lin(2, ab + Rational(1)));
    return f;
}

struct RecurrenceCoeffs {
    Rational a;  // a_n
    Rational b;  // b_n
    Rational c;  // c_n
};

inline RecurrenceCoeffs recurrence_coeffs(int n, const HahnParams& p) {
    RecurrenceFunctions f = recurrence_functions(p);
    try {
        return {f.a(Rational(n)), f.b(Rational(n)), f.c(Rational(n))};
    } catch (const ParameterSingularity&) {
        throw ParameterSingularity("recurrence coefficients singular at n = " + std::to_string(n));
    }
}

// Dual Hahn R_n^{a,b,N}(x); the third parameter may be any rational.
inline Polynomial dual_hahn_poly(int n, const Rational& a, const Rational& b, const Rational& Nparam) {
    if (n < 0) return {};
    const Rational ab1 = a + b + Rational(1);
    Polynomial out;
    Polynomial prod(1);  // prod_{i<j} [x - i(i+a+b+1)]
    for (int j = 0; j <= n; ++j) {
        if (j > 0) prod = prod * Polynomial::linear(-Rational(j - 1) * (Rational(j - 1) + ab1));
        const Rational aj = pochhammer(a + Rational(1), j);
        if (aj.is_zero()) throw ParameterSingularity("dual Hahn: (a+1)_j vanishes for a = " + a.str());
        Rational c = pochhammer(Rational(-n), j) * pochhammer(-Nparam + Rational(j), n - j) / (aj * factorial(j));
        if (j % 2 == 1) c = -c;
        out += prod * c;
    }
    return out;
}

// The four dual Hahn families attached to the D-operator kinds 1..4, each
// evaluated at x + a + b.
inline Polynomial z_poly(int kind, int j, const HahnParams& p) {
    const Rational& a = p.a;
    const Rational& b = p.b;
    const Rational N(p.N);
    Polynomial r;
    switch (kind) {
        case 1: r = dual_hahn_poly(j, -b, -a, a + b + N); break;
        case 2: r = dual_hahn_poly(j, -a, -b, a + b + N); break;
        case 3: r = dual_hahn_poly(j, -b, -a, Rational(-2) - N); break;
        case 4: r = dual_hahn_poly(j, -a, -b, Rational(-2) - N); break;
        default: throw Error("z_poly: kind must be 1..4");
    }
    return shift_argument(r, p.ab());
}

// (eta_h, kappa_h) of the eigenvalue relation satisfied by the Z families.
inline std::array<Rational, 2> z_eigen_data(int kind, const HahnParams& p) {
    switch (kind) {
        case 1: return {Rational(1), -p.b - Rational(p.N)};
        case 2: return {Rational(-1), p.a};
        case 3: return {Rational(-1), -Rational(p.N) - Rational(1)};
        case 4: return {Rational(1), Rational(1)};
        default: throw Error("z_eigen_data: kind must be 1..4");
    }
}

// Hahn weight on {0..N} with the factor N! Gamma(a+1) Gamma(b+1) divided out:
// mass(x) = (a+1)_x (b+1)_{N-x} / (x! (N-x)!).
inline DiscreteMeasure hahn_measure(const HahnParams& p) {
    DiscreteMeasure mu;
    for (int x = 0; x <= p.N; ++x) {
        Rational w = pochhammer(p.a + Rational(1), x) * pochhammer(p.b + Rational(1), p.N - x) /
                     (factorial(x) * factorial(p.N - x));
        mu.add_atom(Rational(x), w);
    }
    return mu;
}

}  // namespace kh
