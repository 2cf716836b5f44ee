#include <gtest/gtest.h>

#include "support.hpp"

using namespace kh;
using kh::testing::poly;

TEST(DifferenceOperator, ApplyForwardDifference) {
    EXPECT_EQ(DifferenceOperator::forward()(poly({0, 0, 1})), poly({1, 2}));
}

TEST(DifferenceOperator, HahnOperatorKillsConstants) {
    const HahnParams p = kh::testing::standard_params();
    EXPECT_TRUE(hahn_operator(p)(Polynomial(1)).is_zero());
    EXPECT_EQ(hahn_operator(p)(hahn_poly(1, p)), hahn_poly(1, p) * (p.ab() + Rational(2)));
}

TEST(DifferenceOperator, Compose) {
    const Polynomial x = Polynomial::x();
    EXPECT_EQ(compose(DifferenceOperator::shift(1), DifferenceOperator::shift(1)), DifferenceOperator::shift(2));
    EXPECT_EQ(compose(DifferenceOperator::shift(1, x), DifferenceOperator::shift(-1, x)),
              DifferenceOperator::shift(0, x * (x + Polynomial(1))));
    const DifferenceOperator d = hahn_operator(kh::testing::standard_params());
    EXPECT_EQ(compose(d, DifferenceOperator::identity()), d);
    EXPECT_EQ(compose(DifferenceOperator::identity(), d), d);
}

TEST(DifferenceOperator, ComposeActsAsComposition) {
    const HahnParams p = kh::testing::standard_params();
    const DifferenceOperator a = hahn_operator(p);
    const DifferenceOperator b = d_operator(DOperatorKind::make(2), p);
    const Polynomial f = poly({2, -1, 0, 3, 1});
    EXPECT_EQ(compose(a, b)(f), a(b(f)));
}

TEST(DifferenceOperator, OperatorPolynomial) {
    const DifferenceOperator d = hahn_operator(kh::testing::standard_params());
    EXPECT_EQ(operator_poly(Polynomial(1), d), DifferenceOperator::identity());
    EXPECT_EQ(operator_poly(Polynomial::x(), d), d);
    EXPECT_EQ(operator_poly(poly({0, 0, 1}), DifferenceOperator::shift(1)), DifferenceOperator::shift(2));
}

TEST(DifferenceOperator, Genre) {
    EXPECT_EQ(DifferenceOperator::forward().genre().s, 0);
    EXPECT_EQ(DifferenceOperator::forward().genre().r, 1);
    const Genre g = hahn_operator(kh::testing::standard_params()).genre();
    EXPECT_EQ(g.s, -1);
    EXPECT_EQ(g.r, 1);
    DifferenceOperator d = DifferenceOperator::identity();
    d.add_term(5, Polynomial());
    EXPECT_EQ(d.genre().s, 0);
    EXPECT_EQ(d.genre().r, 0);
    EXPECT_THROW(DifferenceOperator().genre(), ZeroOperator);
}

TEST(DifferenceOperator, TranslateConjugatesShift) {
    const HahnParams p = kh::testing::standard_params();
    const DifferenceOperator d = hahn_operator(p);
    const Polynomial f = poly({1, 4, -2, 1});
    const Rational c(3, 2);
    EXPECT_EQ(translate(d, c)(shift_argument(f, -c)), shift_argument(d(f), -c));
}
