#include <gtest/gtest.h>

#include "support.hpp"

using namespace kh;
using kh::testing::config_a_sets;
using kh::testing::config_b_sets;
using kh::testing::quartet;
using kh::testing::standard_params;

namespace {

IntSet range(int lo, int hi) {
    IntSet out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

std::vector<IntSet> subsets_up_to(int top) {
    std::vector<IntSet> out;
    for (unsigned mask = 1; mask < (1U << top); ++mask) {
        IntSet f;
        for (int v = 1; v <= top; ++v)
            if (mask >> (v - 1) & 1U) f.push_back(v);
        out.push_back(f);
    }
    return out;
}

ConstructionContext config_a() { return make_theorem_context(standard_params(), config_a_sets(), {1, 1, 1}); }
ConstructionContext config_b() { return make_theorem_context(standard_params(), config_b_sets(), {1, 1, 1}); }
ConstructionContext classical() { return make_theorem_context(standard_params(), quartet({}, {}, {}, {}), {1, 1, 1}); }

}  // namespace

TEST(SetTransforms, InvolutionExamples) {
    for (int k = 1; k <= 6; ++k) EXPECT_EQ(involution_I(range(1, k)), IntSet{k});
    for (int k = 3; k <= 7; ++k) {
        IntSet expected = range(1, k - 2);
        expected.push_back(k);
        EXPECT_EQ(involution_I({1, k}), expected);
    }
    EXPECT_EQ(involution_I(involution_I({2, 5, 6})), (IntSet{2, 5, 6}));
    EXPECT_TRUE(involution_I({}).empty());
}

TEST(SetTransforms, JExamples) {
    EXPECT_EQ(transform_J(1, {1}), IntSet{1});
    EXPECT_EQ(transform_J(2, {1, 2}), (IntSet{2, 3}));
    EXPECT_TRUE(transform_J(3, {}).empty());
    // Reflection f -> max F - f + 1 with h = min F turns J into I.
    const IntSet f{1, 3};
    EXPECT_EQ(transform_J(1, {1, 3}), involution_I(f));
    const IntSet g{2, 3, 7};
    EXPECT_EQ(transform_J(2, {1, 5, 6}), involution_I(g));
}

TEST(SetTransforms, InvolutionAndCardinalitiesOnAllSmallSets) {
    for (const IntSet& f : subsets_up_to(8)) {
        const int fk = set_max(f);
        const int nf = static_cast<int>(f.size());
        const IntSet i = involution_I(f);
        EXPECT_EQ(involution_I(i), f);
        EXPECT_EQ(static_cast<int>(i.size()), fk - nf + 1);
        EXPECT_EQ(set_max(i), fk);
        for (int h = 1; h <= 3; ++h) {
            const IntSet j = transform_J(h, f);
            EXPECT_EQ(static_cast<int>(j.size()), fk + h - nf);
            EXPECT_EQ(set_max(j), h - 1 + fk);
        }
    }
}

TEST(Quartet, RejectsBadSets) {
    EXPECT_THROW(quartet({1, 1}, {}, {}, {}), ContextInvalid);
    EXPECT_THROW(quartet({}, {0}, {}, {}), ContextInvalid);
    const FiniteSetQuartet q = quartet({3, 1}, {}, {}, {});
    EXPECT_EQ(q[1], (IntSet{1, 3}));
    EXPECT_EQ(q.max(2), -1);
}

TEST(Context, ConstraintViolationsAreNamed) {
    auto constraint_of = [](auto&& fn) -> std::string {
        try {
            fn();
        } catch (const ContextInvalid& e) {
            return e.constraint();
        }
        return "";
    };
    EXPECT_EQ(constraint_of([] { make_theorem_context(HahnParams{Rational(2), Rational(1, 3), 8}, quartet({}, {1}, {}, {}), {1, 1, 1}); }),
              "a-not-positive-integer");
    EXPECT_EQ(constraint_of([] { make_theorem_context(HahnParams{Rational(1, 2), Rational(3), 8}, quartet({1}, {}, {}, {}), {1, 1, 1}); }),
              "b-not-positive-integer");
    EXPECT_EQ(constraint_of([] { make_theorem_context(HahnParams{Rational(0), Rational(1, 3), 8}, quartet({}, {1}, {}, {}), {1, 1, 1}); }),
              "a-integer-bound");
    EXPECT_EQ(constraint_of([] { make_theorem_context(standard_params(), quartet({}, {}, {}, {1}), {2, 1, 1}); }),
              "h-on-empty-set");
    EXPECT_EQ(constraint_of([] { make_corollary_context(standard_params(), quartet({}, {}, {3}, {4})); }),
              "shifted-N-positive");
    EXPECT_EQ(constraint_of([] { make_theorem_context(HahnParams{Rational(-3), Rational(1, 3), 8}, quartet({}, {}, {}, {}), {1, 1, 1}); }),
              "hahn-parameters");
}

TEST(Context, CorollaryPathReflectsSets) {
    const ConstructionContext ctx = make_corollary_context(standard_params(), quartet({1, 3}, {}, {2}, {1}));
    EXPECT_EQ(ctx.F[1], (IntSet{1, 3}));
    EXPECT_EQ(ctx.F[3], IntSet{1});
    EXPECT_EQ(ctx.h[0], 1);
    EXPECT_EQ(ctx.h[2], 2);
    for (int j = 1; j <= 4; ++j) EXPECT_EQ(ctx.U[j], involution_I(ctx.input_F[j]));
    EXPECT_EQ(ctx.params.a, Rational(1, 2) + Rational(2));
    EXPECT_EQ(ctx.params.b, Rational(1, 3) + Rational(7));
    EXPECT_EQ(ctx.params.N, 8 - 2 - 1 - 2);
    EXPECT_EQ(ctx.translation, Rational(2));
}

TEST(Context, RowsCarryDualHahnData) {
    const ConstructionContext ctx = config_b();
    ASSERT_EQ(ctx.m(), 4);
    for (int l = 0; l < 4; ++l) {
        EXPECT_EQ(ctx.kinds[static_cast<std::size_t>(l)].index, l + 1);
        EXPECT_EQ(ctx.Y[static_cast<std::size_t>(l)].degree(), 1);
    }
}

TEST(Omega, EmptyRowsGiveOne) {
    const Omega o = build_omega(classical());
    EXPECT_EQ(o.value, RationalFunction(1));
}

TEST(Omega, NonvanishingOnConfigA) {
    const ConstructionContext ctx = config_a();
    const Omega o = build_omega(ctx);
    for (int n = 0; n <= ctx.n_max() + 1; ++n) EXPECT_FALSE(o.at(Rational(n)).is_zero()) << n;
}

TEST(Omega, VanishesPastRangeWhenFirstSetNonempty) {
    const ConstructionContext ctx = config_b();
    const Omega o = build_omega(ctx);
    for (int n = ctx.n_max() + 2; n <= ctx.params.N + ctx.m(); ++n) EXPECT_TRUE(o.at(Rational(n)).is_zero()) << n;
    for (int n = 0; n <= ctx.n_max() + 1; ++n) EXPECT_FALSE(o.at(Rational(n)).is_zero()) << n;
}

TEST(Omega, ClearedMatrixMatchesRationalEntries) {
    const ConstructionContext ctx = config_b();
    const Omega o = build_omega(ctx);
    EXPECT_EQ(rational_det(omega_matrix(ctx)), o.value);
}

TEST(Qn, ClassicalCaseIsHahn) {
    const ConstructionContext ctx = classical();
    for (int n = 0; n <= 5; ++n) EXPECT_EQ(build_qn(ctx, n), hahn_poly(n, ctx.params));
}

TEST(Qn, DegreesAndFirstTerm) {
    const ConstructionContext ctx = config_b();
    const Polynomial q0 = build_qn(ctx, 0);
    EXPECT_EQ(q0.degree(), 0);
    const Omega o = build_omega(ctx);
    for (int n = 0; n <= ctx.n_max(); ++n) {
        const Polynomial q = build_qn(ctx, n);
        EXPECT_EQ(q.degree(), n);
        EXPECT_EQ(q.leading(), o.at(Rational(n)) * hahn_poly(n, ctx.params).leading());
    }
}

TEST(PolynomialP, EmptyRows) {
    const ConstructionContext ctx = classical();
    EXPECT_EQ(build_P(ctx), Polynomial(1));
    EXPECT_EQ(build_S_omega(ctx, Polynomial(1)), sigma_poly(ctx.params.ab(), Rational(1, 2)));
}

TEST(PolynomialP, DegreeAndLeadingCoefficient) {
    for (const auto& ctx : {config_a(), config_b()}) {
        const Polynomial P = build_P(ctx);
        EXPECT_EQ(P.degree(), p_degree_formula(ctx.U));
        EXPECT_EQ(P.leading(), p_leading_formula(ctx));
    }
    EXPECT_EQ(build_P(config_a()).degree(), 2);
}

TEST(PolynomialP, SOmegaIdentity) {
    const ConstructionContext ctx = config_b();
    const Omega o = build_omega(ctx);
    EXPECT_EQ(build_S(ctx) * o.value, RationalFunction(build_S_omega(ctx, build_P(ctx, o))));
}

TEST(PolynomialP, ResonanceIsReported) {
    // w - v + a + N + 1 = 0 for v = 0, w = 1 when a = -N - 2.
    const HahnParams p{Rational(-10), Rational(1, 3), 8};
    TransformedQuartet U;
    U.U = {IntSet{}, IntSet{0}, IntSet{1}, IntSet{}};
    const ConstructionContext ctx = make_rows_context(p, U, {Polynomial(1), Polynomial::monomial(1)});
    EXPECT_THROW(check_no_resonance(ctx), ResonantParameters);
}

TEST(ThetaSubstitute, Examples) {
    const Rational ab(5, 6);
    const Polynomial th = theta_poly(ab);
    EXPECT_EQ(theta_substitute(th, ab), Polynomial::x());
    EXPECT_EQ(theta_substitute(Polynomial(1), ab), Polynomial(1));
    EXPECT_EQ(theta_substitute(th * th + th * Rational(3), ab), kh::testing::poly({0, 3, 1}));
    EXPECT_THROW(theta_substitute(Polynomial::x(), ab), NotThetaRepresentable);
}

TEST(Involution, Identities) {
    const HahnParams p = standard_params();
    const Rational ab = p.ab();
    const Polynomial f = kh::testing::poly({1, -2, 0, 5});
    EXPECT_EQ(involution_apply(theta_poly(ab), ab), theta_poly(ab));
    EXPECT_EQ(involution_apply(involution_apply(f, ab), ab), f);
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
            const Rational s = ab + Rational(i);
            EXPECT_EQ(involution_apply(theta_poly(ab, Rational(-j)), s), theta_poly(ab, Rational(i + j)));
            EXPECT_EQ(involution_apply(sigma_poly(ab, Rational(-j)), s), -sigma_poly(ab, Rational(i + j + 2)));
            for (int m = 0; m <= 4; ++m)
                for (int sh = 0; sh <= std::min(m, 3); ++sh)
                    for (int h = 1; h <= 2; ++h) {
                        EXPECT_EQ(involution_apply(n_factor(h, m - sh, Rational(-j - sh), p), s),
                                  d_factor(h, m - sh, Rational(m + i + j), p));
                        EXPECT_EQ(involution_apply(d_factor(h, m - sh, Rational(-j - sh), p), s),
                                  n_factor(h, m - sh, Rational(m + i + j), p));
                    }
        }
}

TEST(Mh, SkewInvariantAndSigmaDivisible) {
    for (const auto& ctx : {config_a(), config_b()}) {
        const Rational ab = ctx.params.ab();
        const auto rows = build_M(ctx, build_S(ctx));
        ASSERT_EQ(static_cast<int>(rows.size()), ctx.m());
        for (const auto& row : rows) {
            EXPECT_EQ(involution_apply(row.M, ab), -row.M);
            EXPECT_TRUE(divmod(row.M, sigma_poly(ab, Rational(1))).remainder.is_zero());
            EXPECT_EQ(row.M, sigma_poly(ab, Rational(1)) * compose(row.M_tilde, theta_poly(ab)));
        }
    }
}

TEST(Mh, SingleRowIsShiftedS) {
    const ConstructionContext ctx = config_a();
    const RationalFunction S = build_S(ctx);
    const auto rows = build_M(ctx, S);
    EXPECT_EQ(RationalFunction(rows.at(0).M), shift_argument(S, Rational(1)));
}

TEST(Spectral, ClassicalBaseCase) {
    const ConstructionContext ctx = classical();
    const Construction c = construct(ctx);
    EXPECT_EQ(c.S_omega, sigma_poly(ctx.params.ab(), Rational(1, 2)));
    EXPECT_EQ(c.spectral.H, c.spectral.lambda * Rational(2));
    EXPECT_EQ(c.spectral.P_S.degree(), 1);
    EXPECT_EQ(c.Dq, Rational(1, 2) * operator_poly(c.spectral.P_S, hahn_operator(ctx.params)));
    EXPECT_EQ(c.Dq.genre().s, -1);
    EXPECT_EQ(c.Dq.genre().r, 1);
}

TEST(Spectral, DifferenceIdentityAndDegree) {
    for (const auto& ctx : {config_a(), config_b()}) {
        const Construction c = construct(ctx);
        const Rational ab = ctx.params.ab();
        const Polynomial& PS = c.spectral.P_S;
        EXPECT_EQ(compose(PS, theta_poly(ab)) - compose(PS, theta_poly(ab, Rational(-1))),
                  c.S_omega + shift_argument(c.S_omega, Rational(ctx.m())));
        EXPECT_EQ(PS.degree(), p_degree_formula(ctx.U) / 2 + 1);
        EXPECT_EQ(c.spectral.lambda(Rational(-1)), Rational(0));
    }
}

TEST(Operator, ConfigAEigenfunctions) {
    const ConstructionContext ctx = config_a();
    const Construction c = construct(ctx);
    EXPECT_EQ(c.Dq.genre().s, -2);
    EXPECT_EQ(c.Dq.genre().r, 2);
    EXPECT_EQ(c.Dq.coefficient(2).degree(), 4);
    EXPECT_EQ(c.Dq.coefficient(-2).degree(), 4);
    for (int n = 0; n <= ctx.n_max(); ++n) {
        const Polynomial q = build_qn(ctx, n);
        EXPECT_EQ(c.Dq(q), q * c.spectral.lambda(Rational(n))) << n;
    }
}

TEST(Operator, ConfigBGenreAndEigenfunctions) {
    const ConstructionContext ctx = config_b();
    const Construction c = construct(ctx);
    EXPECT_EQ(c.Dq.genre().s, -5);
    EXPECT_EQ(c.Dq.genre().r, 5);
    for (int n = 0; n <= ctx.n_max(); ++n) {
        const Polynomial q = build_qn(ctx, n);
        EXPECT_EQ(c.Dq(q), q * c.spectral.lambda(Rational(n))) << n;
    }
}

TEST(Operator, CustomRowsKeepEigenProperty) {
    // Arbitrary Y of the prescribed degrees: the operator still has the q_n as eigenfunctions.
    const HahnParams p = standard_params();
    TransformedQuartet U;
    U.U = {IntSet{}, IntSet{1}, IntSet{}, IntSet{2}};
    const ConstructionContext ctx = make_rows_context(p, U, {kh::testing::poly({3, 2}), kh::testing::poly({-1, 1, 4})});
    const Construction c = construct(ctx);
    EXPECT_EQ(c.Dq.genre().r, order_from_U(ctx.U));
    for (int n = 0; n <= 8; ++n) {
        const Polynomial q = build_qn(ctx, n);
        EXPECT_EQ(c.Dq(q), q * c.spectral.lambda(Rational(n))) << n;
    }
}

TEST(Operator, InvariantXiIsAccepted) {
    const ConstructionContext base = config_a();
    const Rational s = base.params.ab() - Rational(base.m() + 1);
    const Polynomial xi_poly = theta_poly(s) + Polynomial(Rational(2));  // invariant under x -> -(x+s+1)
    const ConstructionContext ctx = with_rows(base, base.Y, xi_poly);
    const Construction c = construct(ctx);
    for (int n = 0; n <= 6; ++n) {
        const Polynomial q = build_qn(ctx, n);
        EXPECT_EQ(c.Dq(q), q * c.spectral.lambda(Rational(n))) << n;
    }
    EXPECT_THROW(with_rows(base, base.Y, Polynomial::x()), ContextInvalid);
}

TEST(OrderFormulas, AgreeAcrossPaths) {
    const std::vector<FiniteSetQuartet> quartets = {config_a_sets(), config_b_sets(), quartet({1, 2}, {}, {3}, {1, 4}),
                                                    quartet({}, {2}, {1}, {}), quartet({1, 3}, {1}, {}, {2})};
    for (const auto& F : quartets) {
        const ConstructionContext ctx = make_corollary_context(HahnParams{Rational(1, 2), Rational(1, 3), 20}, F);
        EXPECT_EQ(order_corollary(F), order_theorem(ctx.F, ctx.h));
        EXPECT_EQ(order_corollary(F), order_from_U(ctx.U));
    }
    EXPECT_EQ(order_corollary(config_a_sets()), 2);
    EXPECT_EQ(order_corollary(config_b_sets()), 5);
}
