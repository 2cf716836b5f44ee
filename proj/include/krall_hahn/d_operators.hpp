#pragma once

#include "krall_hahn/hahn.hpp"

namespace kh {

// One of the four Hahn D-operators. Kind k also labels the row block U_k of the
// Casorati matrices.
struct DOperatorKind {
    int index = 1;

    static DOperatorKind make(int k) {
        if (k < 1 || k > 4) throw Error("D-operator kind must be 1..4, got " + std::to_string(k));
        return DOperatorKind{k};
    }
    // Whether xi involves the (b+1, a+1) factor family, resp. the (-N, a+b+N+2) one.
    bool uses_first_family() const { return index == 2 || index == 4; }
    bool uses_second_family() const { return index == 1 || index == 2; }

    friend bool operator==(const DOperatorKind&, const DOperatorKind&) = default;
};

// epsilon_n for the given kind, as a rational function of n.
inline RationalFunction epsilon(DOperatorKind kind, const HahnParams& p) {
    const Rational N(p.N);
    const Polynomial n_minus = Polynomial::linear(-N - Rational(1));      // n - N - 1
    const Polynomial n_top = Polynomial::linear(p.ab() + N + Rational(1));  // n + a + b + N + 1
    const Polynomial n_b = Polynomial::linear(p.b);
    const Polynomial n_a = Polynomial::linear(p.a);
    switch (kind.index) {
        case 1: return RationalFunction(-n_minus, n_top);
        case 2: return RationalFunction(n_minus * n_b, n_a * n_top);
        case 3: return RationalFunction(Polynomial(1));
        default: return RationalFunction(-n_b, n_a);
    }
}

// Pochhammer-type factors, all as polynomials in x evaluated at x + c:
//   N^{1;j}_x = (x-j+b+1)_j          N^{2;j}_x = (x-j-N)_j
//   D^{1;j}_x = (-1)^j (x-j+a+1)_j   D^{2;j}_x = (-1)^j (x-j+a+b+N+2)_j
inline Polynomial n_factor(int family, int j, const Rational& c, const HahnParams& p) {
    const Rational base = family == 1 ? p.b + Rational(1) : -Rational(p.N);
    return pochhammer(Polynomial::linear(c - Rational(j) + base), j);
}

inline Polynomial d_factor(int family, int j, const Rational& c, const HahnParams& p) {
    const Rational base = family == 1 ? p.a + Rational(1) : p.ab() + Rational(p.N + 2);
    Polynomial out = pochhammer(Polynomial::linear(c - Rational(j) + base), j);
    return j % 2 == 0 ? out : -out;
}

namespace detail {

// Numerator and denominator of the closed form of xi_{x+c, j}, j >= 0.
inline std::pair<Polynomial, Polynomial> xi_parts(DOperatorKind kind, int j, const Rational& c, const HahnParams& p) {
    Polynomial num(1);
    Polynomial den(1);
    if (kind.uses_first_family()) {
        num = num * n_factor(1, j, c, p);
        den = den * d_factor(1, j, c, p);
    }
    if (kind.uses_second_family()) {
        num = num * n_factor(2, j, c, p);
        den = den * d_factor(2, j, c, p);
    }
    return {num, den};
}

}  // namespace detail

// xi_{x,i} = eps_x eps_{x-1} ... eps_{x-i+1} for i >= 1, xi_{x,0} = 1 and
// xi_{x,i} = 1 / xi_{x-i,-i} for i < 0, as a rational function of x.
inline RationalFunction xi(DOperatorKind kind, int i, const HahnParams& p, const Rational& c = Rational(0)) {
    if (i >= 0) {
        auto [num, den] = detail::xi_parts(kind, i, c, p);
        return RationalFunction(num, den);
    }
    auto [num, den] = detail::xi_parts(kind, -i, c - Rational(i), p);
    return RationalFunction(den, num);
}

// Value of xi_{n,i} at a rational point, as the product of epsilon values (or
// its reciprocal for negative i).
inline Rational xi_value(DOperatorKind kind, const Rational& n, int i, const HahnParams& p) {
    const RationalFunction eps = epsilon(kind, p);
    if (i >= 0) {
        Rational out(1);
        for (int j = 0; j < i; ++j) out *= eps(n - Rational(j));
        return out;
    }
    Rational inner = xi_value(kind, n - Rational(i), -i, p);
    if (inner.is_zero()) throw ParameterSingularity("xi with negative index is infinite at n = " + n.str());
    return Rational(1) / inner;
}

// Operator form of the D-operator of the given kind.
inline DifferenceOperator d_operator(DOperatorKind kind, const HahnParams& p) {
    const Polynomial x = Polynomial::x();
    const DifferenceOperator base = ((p.ab() + Rational(1)) / Rational(2)) * DifferenceOperator::identity();
    switch (kind.index) {
        case 1: return base + x * DifferenceOperator::backward();
        case 2: return base + (x - Polynomial(p.N)) * DifferenceOperator::forward();
        case 3: return base + (x + Polynomial(p.a + Rational(1))) * DifferenceOperator::forward();
        default: return base + (x - Polynomial(p.b + Rational(p.N + 1))) * DifferenceOperator::backward();
    }
}

// -1/2 sigma_{n+1} h_n + sum_{j=1}^n (-1)^{j+1} sigma_{n-j+1} eps_n...eps_{n-j+1} h_{n-j}:
// the action a D-operator of this kind must have on h_n.
inline Polynomial d_operator_series(DOperatorKind kind, int n, const HahnParams& p) {
    const RationalFunction eps = epsilon(kind, p);
    const Rational ab = p.ab();
    Polynomial out = hahn_poly(n, p) * (-sigma(Rational(n + 1), ab) / Rational(2));
    Rational prod(1);
    for (int j = 1; j <= n; ++j) {
        prod *= eps(Rational(n - j + 1));
        if (prod.is_zero()) break;
        Rational c = sigma(Rational(n - j + 1), ab) * prod;
        out += hahn_poly(n - j, p) * (j % 2 == 1 ? c : -c);
    }
    return out;
}

}  // namespace kh
