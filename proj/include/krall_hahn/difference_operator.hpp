#pragma once

#include <map>
#include <string>
#include <utility>

#include "krall_hahn/polynomial.hpp"

namespace kh {

// Genre (s, r) of a nonzero operator: the extreme shift offsets.
struct Genre {
    int s = 0;
    int r = 0;
    int order() const { return r - s; }
    friend bool operator==(const Genre&, const Genre&) = default;
};

// Finite sum  sum_l h_l(x) S_l  with S_l f(x) = f(x + l) and polynomial h_l.
// Zero coefficients are never stored.
class DifferenceOperator {
public:
    DifferenceOperator() = default;

    static DifferenceOperator identity() { return shift(0); }
    static DifferenceOperator shift(int l, Polynomial coeff = Polynomial(1)) {
        DifferenceOperator d;
        d.add_term(l, std::move(coeff));
        return d;
    }
    // Delta = S_1 - S_0
    static DifferenceOperator forward() { return shift(1) - shift(0); }
    // Nabla = S_0 - S_{-1}
    static DifferenceOperator backward() { return shift(0) - shift(-1); }

    void add_term(int offset, const Polynomial& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(offset, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const std::map<int, Polynomial>& terms() const noexcept { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Polynomial coefficient(int offset) const {
        auto it = terms_.find(offset);
        return it == terms_.end() ? Polynomial() : it->second;
    }

    Genre genre() const {
        if (terms_.empty()) throw ZeroOperator();
        return {terms_.begin()->first, terms_.rbegin()->first};
    }
    int order() const { return genre().order(); }

    Polynomial apply(const Polynomial& f) const {
        Polynomial out;
        for (const auto& [l, h] : terms_) out += h * shift_argument(f, Rational(l));
        return out;
    }
    Polynomial operator()(const Polynomial& f) const { return apply(f); }

    friend DifferenceOperator operator+(DifferenceOperator a, const DifferenceOperator& b) {
        for (const auto& [l, h] : b.terms_) a.add_term(l, h);
        return a;
    }
    friend DifferenceOperator operator-(DifferenceOperator a, const DifferenceOperator& b) {
        for (const auto& [l, h] : b.terms_) a.add_term(l, -h);
        return a;
    }
    friend DifferenceOperator operator*(const Polynomial& p, const DifferenceOperator& d) {
        DifferenceOperator out;
        for (const auto& [l, h] : d.terms_) out.add_term(l, p * h);
        return out;
    }
    friend DifferenceOperator operator*(const Rational& c, const DifferenceOperator& d) {
        return Polynomial(c) * d;
    }

    friend bool operator==(const DifferenceOperator&, const DifferenceOperator&) = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [l, h] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + h.str() + ")*S[" + std::to_string(l) + "]";
        }
        return out;
    }

private:
    std::map<int, Polynomial> terms_;
};

// A∘B: (h S_l)∘(g S_k) = h(x) g(x+l) S_{l+k}.
inline DifferenceOperator compose(const DifferenceOperator& a, const DifferenceOperator& b) {
    DifferenceOperator out;
    for (const auto& [l, h] : a.terms())
        for (const auto& [k, g] : b.terms()) out.add_term(l + k, h * shift_argument(g, Rational(l)));
    return out;
}

// P(D) = sum_j c_j D^j, evaluated by Horner's scheme.
inline DifferenceOperator operator_poly(const Polynomial& p, const DifferenceOperator& d) {
    DifferenceOperator acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = compose(acc, d) + *it * DifferenceOperator::identity();
    return acc;
}

// The operator D' with D'(f(x - c)) = (D f)(x - c): each h_l(x) becomes h_l(x - c).
inline DifferenceOperator translate(const DifferenceOperator& d, const Rational& c) {
    DifferenceOperator out;
    for (const auto& [l, h] : d.terms()) out.add_term(l, shift_argument(h, -c));
    return out;
}

}  // namespace kh
