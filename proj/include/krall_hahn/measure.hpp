#pragma once

#include <map>
#include <optional>
#include <vector>

#include "krall_hahn/polynomial.hpp"

namespace kh {

// Finite signed discrete measure  sum_x mass(x) delta_x  over rational points.
// Masses are only meaningful up to one global positive constant (see
// hahn_measure); zero masses are never stored.
class DiscreteMeasure {
public:
    DiscreteMeasure() = default;

    void add_atom(const Rational& point, const Rational& mass) {
        if (mass.is_zero()) return;
        auto [it, inserted] = atoms_.try_emplace(point, mass);
        if (!inserted) {
            it->second += mass;
            if (it->second.is_zero()) atoms_.erase(it);
        }
    }

    const std::map<Rational, Rational>& atoms() const noexcept { return atoms_; }
    std::size_t size() const noexcept { return atoms_.size(); }
    bool empty() const noexcept { return atoms_.empty(); }

    Rational mass(const Rational& point) const {
        auto it = atoms_.find(point);
        return it == atoms_.end() ? Rational(0) : it->second;
    }

    std::vector<Rational> support() const {
        std::vector<Rational> out;
        out.reserve(atoms_.size());
        for (const auto& [x, w] : atoms_) out.push_back(x);
        return out;
    }

    Rational total_mass() const {
        Rational s(0);
        for (const auto& [x, w] : atoms_) s += w;
        return s;
    }

    // <mu, p>
    Rational integrate(const Polynomial& p) const {
        Rational s(0);
        for (const auto& [x, w] : atoms_) s += w * p(x);
        return s;
    }

    friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;

private:
    std::map<Rational, Rational> atoms_;
};

// Christoffel transform r*mu: atoms where r vanishes disappear.
inline DiscreteMeasure christoffel(const DiscreteMeasure& mu, const Polynomial& r) {
    DiscreteMeasure out;
    for (const auto& [x, w] : mu.atoms()) out.add_atom(x, w * r(x));
    return out;
}

// The measure nu with nu(x) = mu(x - c), i.e. every atom moved by +c.
inline DiscreteMeasure translate(const DiscreteMeasure& mu, const Rational& c) {
    DiscreteMeasure out;
    for (const auto& [x, w] : mu.atoms()) out.add_atom(x + c, w);
    return out;
}

inline DiscreteMeasure scale(const DiscreteMeasure& mu, const Rational& c) {
    DiscreteMeasure out;
    for (const auto& [x, w] : mu.atoms()) out.add_atom(x, w * c);
    return out;
}

// Moments m_k = sum_x mass(x) x^k for k = 0..k_max.
inline std::vector<Rational> moments(const DiscreteMeasure& mu, int k_max) {
    std::vector<Rational> m(static_cast<std::size_t>(k_max) + 1, Rational(0));
    for (const auto& [x, w] : mu.atoms()) {
        Rational power(1);
        for (int k = 0; k <= k_max; ++k) {
            m[static_cast<std::size_t>(k)] += w * power;
            power *= x;
        }
    }
    return m;
}

// <mu, p q> computed by exact summation over the atoms.
inline Rational inner_product(const DiscreteMeasure& mu, const Polynomial& p, const Polynomial& q) {
    Rational s(0);
    for (const auto& [x, w] : mu.atoms()) s += w * p(x) * q(x);
    return s;
}

// Linear functional from a moment sequence: <L, p> = sum_k p_k m_k.
inline Rational apply_moments(const std::vector<Rational>& m, const Polynomial& p) {
    if (p.degree() >= static_cast<int>(m.size())) throw InsufficientData("not enough moments for degree " + std::to_string(p.degree()));
    Rational s(0);
    for (int k = 0; k <= p.degree(); ++k) s += p.coeff(k) * m[static_cast<std::size_t>(k)];
    return s;
}

// Monic orthogonal polynomials p_0..p_{n_max} built from the moments alone.
// The measure may be signed; the first vanishing norm is reported instead of
// pivoting around it.
inline std::vector<Polynomial> gram_schmidt(const DiscreteMeasure& mu, int n_max) {
    if (n_max < 0) return {};
    if (static_cast<std::size_t>(n_max) + 1 > mu.size())
        throw InsufficientData("gram_schmidt: degree " + std::to_string(n_max) + " exceeds support size " +
                               std::to_string(mu.size()));
    const std::vector<Rational> m = moments(mu, 2 * n_max);
    std::vector<Polynomial> out;
    std::vector<Rational> norms;
    for (int n = 0; n <= n_max; ++n) {
        Polynomial p = Polynomial::monomial(n);
        for (int i = 0; i < n; ++i) {
            const auto ii = static_cast<std::size_t>(i);
            Rational proj = apply_moments(m, Polynomial::monomial(n) * out[ii]) / norms[ii];
            p -= out[ii] * proj;
        }
        Rational norm = apply_moments(m, p * p);
        if (norm.is_zero() && n < n_max) throw DegenerateMoments(n);
        out.push_back(p);
        norms.push_back(norm);
    }
    if (norms.back().is_zero()) throw DegenerateMoments(n_max);
    return out;
}

// If nu = c * mu for a single nonzero constant c, returns c.
inline std::optional<Rational> proportionality(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
    if (mu.size() != nu.size() || mu.empty()) return std::nullopt;
    std::optional<Rational> ratio;
    auto it = nu.atoms().begin();
    for (const auto& [x, w] : mu.atoms()) {
        if (it->first != x) return std::nullopt;
        Rational r = it->second / w;
        if (ratio && *ratio != r) return std::nullopt;
        ratio = r;
        ++it;
    }
    return ratio;
}

}  // namespace kh
