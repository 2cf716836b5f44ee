#pragma once

#include "krall_hahn/verify.hpp"

namespace kh::testing {

inline HahnParams standard_params(int N = 8) { return HahnParams::make(Rational(1, 2), Rational(1, 3), N); }

inline FiniteSetQuartet quartet(IntSet f1, IntSet f2, IntSet f3, IntSet f4) {
    return FiniteSetQuartet::make({std::move(f1), std::move(f2), std::move(f3), std::move(f4)});
}

inline FiniteSetQuartet config_a_sets() { return quartet({}, {}, {}, {1}); }
inline FiniteSetQuartet config_b_sets() { return quartet({1}, {1}, {1}, {1}); }

inline Polynomial poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

}  // namespace kh::testing
