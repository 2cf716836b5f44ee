#pragma once

#include <array>
#include <optional>

#include "krall_hahn/finite_sets.hpp"
#include "krall_hahn/hahn.hpp"

namespace kh {

// rho^F: the Hahn weight times
//   prod_{F1}(b+N+1+f-x) prod_{F2}(x+a+1+f) prod_{F3}(N-f-x) prod_{F4}(x-f).
inline Polynomial christoffel_factor(const HahnParams& p, const FiniteSetQuartet& F) {
    const Polynomial x = Polynomial::x();
    const Rational N(p.N);
    Polynomial r(1);
    for (int f : F[1]) r *= Polynomial(p.b + N + Rational(1 + f)) - x;
    for (int f : F[2]) r *= x + Polynomial(p.a + Rational(1 + f));
    for (int f : F[3]) r *= Polynomial(N - Rational(f)) - x;
    for (int f : F[4]) r *= x - Polynomial(f);
    return r;
}

inline DiscreteMeasure rho_F(const HahnParams& p, const FiniteSetQuartet& F) {
    return christoffel(hahn_measure(p), christoffel_factor(p, F));
}

// Parameters of the Hahn weight underlying rho~.
inline HahnParams rho_tilde_params(const HahnParams& p, const FiniteSetQuartet& F, const std::array<int, 3>& h) {
    HahnParams t{p.a - Rational(F.max(2) + F.max(4) + h[1] + 1), p.b - Rational(F.max(1) + F.max(3) + h[0] + h[2]),
                 p.N + F.max(3) + F.max(4) + h[2] + 1};
    try {
        t.validate();
    } catch (const ParameterSingularity& e) {
        throw ParameterSingularity(std::string("shifted Hahn parameters violate the integer bounds on a, b, a+b: ") + e.what());
    }
    return t;
}

// rho~(x) = prod_{F1}(b+N+1-f-x) prod_{F2}(x+a+1-f) prod_{F3}(N+f-x) prod_{F4}(x+f4M+1-f)
//           * rho_{a~,b~,N~}(x + f4M + 1)
inline DiscreteMeasure rho_tilde(const HahnParams& p, const FiniteSetQuartet& F, const std::array<int, 3>& h) {
    const HahnParams t = rho_tilde_params(p, F, h);
    const int c = F.max(4) + 1;
    const Polynomial x = Polynomial::x();
    const Rational N(p.N);
    Polynomial r(1);
    for (int f : F[1]) r *= Polynomial(p.b + N + Rational(1 - f)) - x;
    for (int f : F[2]) r *= x + Polynomial(p.a + Rational(1 - f));
    for (int f : F[3]) r *= Polynomial(N + Rational(f)) - x;
    for (int f : F[4]) r *= x + Polynomial(c - f);
    return christoffel(translate(hahn_measure(t), Rational(-c)), r);
}

// Equal up to one global sign.
inline bool equal_up_to_sign(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
    if (mu == nu) return true;
    return scale(mu, Rational(-1)) == nu;
}

// Left side of the Geronimus identity for F = ({1},{1},{1},{1}):
// x (N-x) (a+x+1) (N-x+b+1) rho^F(x).
inline DiscreteMeasure geronimus_lhs(const HahnParams& p) {
    const FiniteSetQuartet F = FiniteSetQuartet::make({IntSet{1}, IntSet{1}, IntSet{1}, IntSet{1}});
    const Polynomial x = Polynomial::x();
    const Rational N(p.N);
    const Polynomial g = x * (Polynomial(N) - x) * (x + Polynomial(p.a + Rational(1))) *
                         (Polynomial(N + p.b + Rational(1)) - x);
    return christoffel(rho_F(p, F), g);
}

// rho_{a+4,b+4,N-4}(x-2): the Hahn weight with shifted parameters moved onto {2..N-2}.
inline DiscreteMeasure geronimus_rhs_base(const HahnParams& p) {
    return translate(hahn_measure(HahnParams::make(p.a + Rational(4), p.b + Rational(4), p.N - 4)), Rational(2));
}

// The constant of the identity under the stored normalization:
// C = (a+1)_4 (b+1)_4 (both Gamma factors and the factorials included).
inline Rational geronimus_constant(const HahnParams& p) {
    return pochhammer(p.a + Rational(1), 4) * pochhammer(p.b + Rational(1), 4);
}

}  // namespace kh
