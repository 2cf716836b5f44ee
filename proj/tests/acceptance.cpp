#include <chrono>
#include <functional>
#include <iostream>
#include <random>

#include "krall_hahn/verify.hpp"

using namespace kh;

namespace {

HahnParams standard(int N = 8) { return HahnParams::make(Rational(1, 2), Rational(1, 3), N); }

FiniteSetQuartet sets(IntSet f1, IntSet f2, IntSet f3, IntSet f4) {
    return FiniteSetQuartet::make({std::move(f1), std::move(f2), std::move(f3), std::move(f4)});
}

bool all_passed(const VerificationReport& rep, std::string& why) {
    for (const auto& c : rep.checks)
        if (!c.passed()) {
            why = rep.config.value("name", std::string()) + ": " + c.name + " " + c.witness.dump();
            return false;
        }
    return true;
}

// 1: config A, orthogonality for n <= 9, genre (-2,2), eigen-equations, Gram-Schmidt.
bool criterion_config_a(std::string& why) {
    const VerificationReport thm = run_config(*builtin_config("A-theorem"));
    if (!all_passed(thm, why)) return false;
    if (thm.n_max != 9) {
        why = "theorem path n_max " + std::to_string(thm.n_max);
        return false;
    }
    if (!thm.genre || thm.genre->s != -2 || thm.genre->r != 2) {
        why = "genre mismatch";
        return false;
    }
    // corollary path: same weight after translation
    return all_passed(run_config(*builtin_config("A")), why);
}

// 2: config B full pipeline, genre (-5,5), hypotheses and cross-identity.
bool criterion_config_b(std::string& why) {
    const VerificationReport rep = run_config(*builtin_config("B"));
    if (!all_passed(rep, why)) return false;
    if (!rep.genre || rep.genre->s != -5 || rep.genre->r != 5) {
        why = "genre mismatch";
        return false;
    }
    return true;
}

// 3: atom-by-atom Geronimus identity.
bool criterion_geronimus(std::string& why) {
    const HahnParams p = standard();
    const DiscreteMeasure lhs = geronimus_lhs(p);
    const DiscreteMeasure rhs = scale(geronimus_rhs_base(p), geronimus_constant(p));
    if (lhs != rhs) {
        why = "measures differ";
        return false;
    }
    return true;
}

// 4: the (F3, F4) couples for prod(x - root) at N = 100.
bool criterion_couples(std::string& why) {
    const std::vector<int> roots{1, 5, 68};
    const HahnParams p = standard(100);
    const auto couples = enumerate_couples(100, roots);
    if (couples.size() != 8) {
        why = std::to_string(couples.size()) + " couples";
        return false;
    }
    Polynomial target(1);
    for (int r : roots) target *= Polynomial::x() - Polynomial(r);
    const DiscreteMeasure want = christoffel(hahn_measure(p), target);
    int below = 0;
    const int r_min = couples.front().r;
    for (const auto& c : couples) {
        if (!equal_up_to_sign(rho_F(p, sets({}, {}, c.F3, c.F4)), want)) {
            why = "couple " + set_str(c.F3) + " " + set_str(c.F4) + " gives a different measure";
            return false;
        }
        const bool small = (c.F3.empty() || c.F3.back() < 50) && (c.F4.empty() || c.F4.back() < 50);
        if (small) {
            ++below;
            if (c.F3 != IntSet{32} || c.F4 != IntSet{1, 5} || c.r != r_min) {
                why = "unexpected below-half couple " + set_str(c.F3) + " " + set_str(c.F4);
                return false;
            }
        }
    }
    for (const auto& c : couples)
        if (c.r < r_min) {
            why = "couple list not sorted by r";
            return false;
        }
    if (below != 1) {
        why = std::to_string(below) + " couples below N/2";
        return false;
    }
    return true;
}

// 5: D-operator form against the series on h_n.
bool criterion_d_operators(std::string& why) {
    const HahnParams p = standard();
    for (int k = 1; k <= 4; ++k) {
        const DOperatorKind kind = DOperatorKind::make(k);
        const DifferenceOperator d = d_operator(kind, p);
        for (int n = 0; n <= 12; ++n)
            if (d(hahn_poly(n, p)) != d_operator_series(kind, n, p)) {
                why = "kind " + std::to_string(k) + " n=" + std::to_string(n);
                return false;
            }
    }
    return true;
}

// 6: duality between Hahn and dual Hahn on the grid 0..8.
bool criterion_duality(std::string& why) {
    const HahnParams p = standard(9);
    const Rational ab = p.ab();
    const Rational N(p.N);
    for (int n = 0; n <= 8; ++n)
        for (int x = 0; x <= 8; ++x) {
            Rational c = factorial(n) * pochhammer(N + ab + Rational(2), n) * pochhammer(-N, x) /
                         (pochhammer(ab + Rational(1), n) * pochhammer(-N, n));
            if (n % 2) c = -c;
            if (dual_hahn_poly(x, p.a, p.b, N)(theta(Rational(n), ab)) != c * hahn_poly(n, p)(Rational(x))) {
                why = "n=" + std::to_string(n) + " x=" + std::to_string(x);
                return false;
            }
        }
    return true;
}

// 7: degree and leading coefficient of P for random row data.
bool criterion_lemma51(std::string& why) {
    const HahnParams p = standard();
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> coin(0, 3);
    std::uniform_int_distribution<int> coef(-9, 9);
    int tested = 0;
    for (int attempt = 0; tested < 6 && attempt < 200; ++attempt) {
        TransformedQuartet U;
        int m = 0;
        for (auto& s : U.U) {
            for (int u = 0; u <= 4; ++u)
                if (coin(rng) == 0) s.push_back(u);
            m += static_cast<int>(s.size());
        }
        if (m == 0 || m > 5) continue;
        std::vector<Polynomial> Y;
        for (const auto& s : U.U)
            for (int u : s) {
                std::vector<Rational> c;
                for (int k = 0; k < u; ++k) c.emplace_back(coef(rng), 1 + k % 3);
                int lead = 0;
                while (lead == 0) lead = coef(rng);
                c.emplace_back(lead);
                Y.emplace_back(std::move(c));
            }
        const ConstructionContext ctx = make_rows_context(p, U, std::move(Y));
        try {
            check_no_resonance(ctx);
        } catch (const ResonantParameters&) {
            continue;
        }
        const Polynomial P = build_P(ctx);
        if (P.degree() != p_degree_formula(ctx.U) || P.leading() != p_leading_formula(ctx)) {
            why = "U=(" + set_str(U[1]) + "," + set_str(U[2]) + "," + set_str(U[3]) + "," + set_str(U[4]) + ")";
            return false;
        }
        ++tested;
    }
    if (tested < 5) {
        why = "only " + std::to_string(tested) + " quartets generated";
        return false;
    }
    return true;
}

// 8: first-order equation with fitted constant, vanishing and nonvanishing sums.
bool criterion_foeq(std::string& why) {
    for (const auto& F : {sets({}, {}, {}, {1}), sets({1}, {1}, {1}, {1})}) {
        const CheckResult c = check_foeq(make_theorem_context(standard(), F, {1, 1, 1}));
        if (!c.passed()) {
            why = c.witness.dump();
            return false;
        }
    }
    return true;
}

// 9: operator oracle on config A.
bool criterion_oracle(std::string& why) {
    const ConstructionContext ctx = make_theorem_context(standard(), sets({}, {}, {}, {1}), {1, 1, 1});
    const Construction con = construct(ctx);
    const Rational l0 = con.spectral.lambda(Rational(0));
    std::vector<Polynomial> qs;
    std::vector<Rational> lambdas;
    for (int n = 0; n <= ctx.n_max(); ++n) {
        qs.push_back(build_qn(ctx, n));
        lambdas.push_back(con.spectral.lambda(Rational(n)) - l0);
    }
    const OracleResult r2 = probe_operator(qs, lambdas, 2, 4);
    if (!r2.solvable || r2.nullity != 0 || *r2.op != con.Dq - l0 * DifferenceOperator::identity()) {
        why = "order 2 oracle disagrees";
        return false;
    }
    if (probe_operator(qs, lambdas, 1, 2).solvable) {
        why = "order 1 reported solvable";
        return false;
    }
    return true;
}

// 10: classical Hahn identities over three parameter sets.
bool criterion_classical(std::string& why) {
    const std::vector<HahnParams> grid = {standard(8), HahnParams::make(Rational(3, 5), Rational(-2, 7), 12),
                                          HahnParams::make(Rational(-27, 2), Rational(-31, 2), 10)};
    for (const auto& p : grid) {
        const DiscreteMeasure rho = hahn_measure(p);
        const DifferenceOperator d = hahn_operator(p);
        for (int n = 0; n <= p.N; ++n) {
            const Polynomial h = hahn_poly(n, p);
            if (inner_product(rho, h, h).is_zero()) {
                why = "zero norm at n=" + std::to_string(n);
                return false;
            }
            for (int k = 0; k < n; ++k)
                if (!inner_product(rho, h, hahn_poly(k, p)).is_zero()) {
                    why = "not orthogonal";
                    return false;
                }
            if (d(h) != h * theta(Rational(n), p.ab())) {
                why = "eigen identity n=" + std::to_string(n);
                return false;
            }
            const RecurrenceCoeffs c = recurrence_coeffs(n, p);
            if (Polynomial::x() * h != hahn_poly(n + 1, p) * recurrence_coeffs(n + 1, p).a + h * c.b + hahn_poly(n - 1, p) * c.c) {
                why = "recurrence n=" + std::to_string(n);
                return false;
            }
        }
        for (int n : {p.N + 1, p.N + 2})
            for (int x = 0; x <= p.N; ++x)
                if (!hahn_poly(n, p)(Rational(x)).is_zero()) {
                    why = "h_" + std::to_string(n) + " nonzero on support";
                    return false;
                }
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria = {
        {"config A orthogonality, genre and eigen-equations", criterion_config_a},
        {"config B full pipeline", criterion_config_b},
        {"Geronimus identity", criterion_geronimus},
        {"root-set couples for N=100", criterion_couples},
        {"D-operators against series", criterion_d_operators},
        {"Hahn / dual Hahn duality grid", criterion_duality},
        {"degree and leading coefficient of P", criterion_lemma51},
        {"first-order equation criteria", criterion_foeq},
        {"operator oracle", criterion_oracle},
        {"classical Hahn identities", criterion_classical},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string why;
        bool ok = false;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            ok = criteria[i].second(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << ms << " ms)";
        if (!ok) std::cout << "  " << why;
        std::cout << std::endl;
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
