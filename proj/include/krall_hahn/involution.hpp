#pragma once

#include "krall_hahn/hahn.hpp"

namespace kh {

// I^{s}(p)(x) = p(-(x + s + 1)). With s = a+b this fixes theta_x; the
// shifted versions I^{a+b+i} move the factor families onto each other.
inline Polynomial involution_apply(const Polynomial& p, const Rational& s) {
    return affine_substitute(p, Rational(-1), -(s + Rational(1)));
}

inline bool is_invariant(const Polynomial& p, const Rational& s) { return involution_apply(p, s) == p; }

// The polynomial P(t) with P(theta_x) = p(x), theta_x = x^2 + (a+b+1) x.
// Requires p to be fixed by I^{a+b}; otherwise no such P exists.
inline Polynomial theta_substitute(const Polynomial& p, const Rational& ab) {
    if (!is_invariant(p, ab))
        throw NotThetaRepresentable("polynomial of degree " + std::to_string(p.degree()) +
                                    " is not invariant under x -> -(x+a+b+1)");
    const Polynomial th = theta_poly(ab);
    Polynomial rest = p;
    Polynomial out;
    while (!rest.is_zero()) {
        const int d = rest.degree();
        if (d % 2 != 0) throw NotThetaRepresentable("odd degree remainder in theta substitution");
        const Rational c = rest.leading();
        out += Polynomial::monomial(d / 2, c);
        rest -= pow(th, static_cast<unsigned>(d / 2)) * c;
    }
    return out;
}

}  // namespace kh
