#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace kh;
using kh::testing::poly;

TEST(Rational, LowestTermsAndSign) {
    Rational r(6, -4);
    EXPECT_EQ(r.str(), "-3/2");
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
    EXPECT_EQ(Rational::parse("-7"), Rational(-7));
}

TEST(Rational, ParseRejectsMalformed) {
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
    EXPECT_THROW(Rational::parse("abc"), ParseError);
    EXPECT_THROW(Rational::parse(""), ParseError);
    EXPECT_THROW(Rational::parse("1/"), ParseError);
    EXPECT_THROW(Rational::parse(" 3"), ParseError);
}

TEST(Rational, DivisionByZero) { EXPECT_THROW(Rational(1) / Rational(0), ParameterSingularity); }

TEST(Rational, Pochhammer) {
    EXPECT_EQ(pochhammer(Rational(3), 2), Rational(12));
    EXPECT_EQ(pochhammer(Rational(7, 3), 0), Rational(1));
    EXPECT_EQ(pochhammer(Rational(1, 2), 3), Rational(15, 8));
    EXPECT_EQ(pochhammer(Rational(-2), 3), Rational(0));
}

TEST(Rational, PochhammerOfPolynomial) {
    // (x)_3 = x(x+1)(x+2)
    EXPECT_EQ(pochhammer(Polynomial::x(), 3), poly({0, 2, 3, 1}));
}

TEST(Polynomial, DegreeAndTrim) {
    EXPECT_EQ(Polynomial().degree(), Polynomial::kZeroDegree);
    EXPECT_EQ(poly({1, 2, 0, 0}).degree(), 1);
    EXPECT_TRUE((poly({1, 1}) - poly({1, 1})).is_zero());
}

TEST(Polynomial, Evaluation) {
    const Polynomial p = poly({1, -3, 2});
    EXPECT_EQ(p(Rational(1, 2)), Rational(0));
    EXPECT_EQ(p(Rational(3)), Rational(10));
}

TEST(Polynomial, ShiftArgument) {
    EXPECT_EQ(shift_argument(poly({0, 0, 1}), Rational(1)), poly({1, 2, 1}));
    const Polynomial p = poly({3, -1, 4, 1, -5});
    EXPECT_EQ(shift_argument(shift_argument(p, Rational(2, 3)), Rational(-2, 3)), p);
}

TEST(Polynomial, DivideExact) {
    EXPECT_EQ(divide_exact(poly({-1, 0, 1}), poly({-1, 1})), poly({1, 1}));
    try {
        divide_exact(poly({1, 0, 1}), poly({-1, 1}));
        FAIL() << "expected NonExactDivision";
    } catch (const NonExactDivision& e) {
        EXPECT_EQ(e.remainder(), "2");
    }
}

TEST(Polynomial, ComposeAndGcd) {
    const Polynomial x = Polynomial::x();
    EXPECT_EQ(compose(poly({0, 0, 1}), x + Polynomial(1)), poly({1, 2, 1}));
    EXPECT_EQ(gcd(poly({-1, 0, 1}) * Rational(3), poly({1, 2, 1})), poly({1, 1}));
}

TEST(Polynomial, AntidifferenceExamples) {
    EXPECT_EQ(antidifference(Polynomial(1)), poly({1, 1}));
    EXPECT_EQ(antidifference(Polynomial::x()), poly({0, 1, 1}) * Rational(1, 2));
    const Polynomial q = antidifference(poly({1, 2}));
    EXPECT_EQ(backward_difference(q), poly({1, 2}));
    EXPECT_EQ(q(Rational(-1)), Rational(0));
}

TEST(Polynomial, AntidifferenceRandom) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Rational> c;
        for (int k = 0; k <= trial % 8; ++k) c.emplace_back(coef(rng), 1 + trial % 5);
        const Polynomial p(c);
        const Polynomial q = antidifference(p);
        EXPECT_EQ(q - shift_argument(q, Rational(-1)), p);
        EXPECT_EQ(q(Rational(-1)), Rational(0));
    }
}

TEST(RationalFunction, NormalForm) {
    const Polynomial x = Polynomial::x();
    RationalFunction f(poly({-1, 0, 1}) * Rational(2), poly({-1, 1}) * Rational(4));
    EXPECT_TRUE(f.is_polynomial());
    EXPECT_EQ(f.as_polynomial(), poly({1, 1}) * Rational(1, 2));
    RationalFunction g(Polynomial(1), x);
    EXPECT_FALSE(g.is_polynomial());
    EXPECT_THROW(g(Rational(0)), ParameterSingularity);
    EXPECT_THROW(g.as_polynomial(), NonExactDivision);
    EXPECT_EQ(g * RationalFunction(x), RationalFunction(1));
}

TEST(Matrix, PolynomialDeterminants) {
    Matrix<Polynomial> id(3, 3);
    for (std::size_t i = 0; i < 3; ++i) id(i, i) = Polynomial(1);
    EXPECT_EQ(poly_det(id), Polynomial(1));

    Matrix<Polynomial> m(2, 2);
    m(0, 0) = Polynomial::x();
    m(0, 1) = Polynomial(1);
    m(1, 0) = Polynomial(1);
    m(1, 1) = Polynomial::x();
    EXPECT_EQ(poly_det(m), poly({-1, 0, 1}));

    Matrix<Polynomial> v(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) v(i, j) = Polynomial(pow(Rational(static_cast<long>(i) + 1), static_cast<unsigned>(j)));
    EXPECT_EQ(poly_det(v), Polynomial(2));
    EXPECT_EQ(poly_det(Matrix<Polynomial>(0, 0)), Polynomial(1));
}

TEST(Matrix, BareissMatchesCofactorExpansion) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (std::size_t n : {6U, 7U}) {
        Matrix<Polynomial> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = poly({coef(rng), coef(rng)});
        EXPECT_EQ(detail::bareiss_det(m), detail::cofactor_det(m));
    }
}

TEST(Matrix, RationalDeterminantOfFractions) {
    PolyMatrix m(2, 2);
    m(0, 0) = RationalFunction(Polynomial(1), Polynomial::x());
    m(0, 1) = RationalFunction(1);
    m(1, 0) = RationalFunction(1);
    m(1, 1) = RationalFunction(Polynomial::x());
    EXPECT_EQ(rational_det(m), RationalFunction(0));
    EXPECT_THROW(poly_det(m), NonExactDivision);
}

TEST(Matrix, SolveLinear) {
    Matrix<Rational> a(3, 2);
    a(0, 0) = 1; a(0, 1) = 1;
    a(1, 0) = 1; a(1, 1) = -1;
    a(2, 0) = 2; a(2, 1) = 0;
    auto ok = solve_linear(a, {Rational(3), Rational(1), Rational(4)});
    ASSERT_TRUE(ok.consistent);
    EXPECT_EQ(ok.solution[0], Rational(2));
    EXPECT_EQ(ok.solution[1], Rational(1));
    EXPECT_EQ(ok.nullity, 0U);
    EXPECT_FALSE(solve_linear(a, {Rational(3), Rational(1), Rational(5)}).consistent);
}
