#include "flagkernel/classify.hpp"
#include "flagkernel/errors.hpp"
#include "flagkernel/poincare.hpp"

#include <gtest/gtest.h>

using namespace flagkernel;

namespace {

IntPolynomial poly(std::initializer_list<long> c)
{
    std::vector<BigInt> v;
    for (long x : c)
        v.emplace_back(x);
    return IntPolynomial(std::move(v));
}

// Oracle: evaluate prod (1 - t^{h+1}) / (1 - t^h) as an exact rational at an integer t >= 2.
Rational product_at(const std::vector<int>& heights, long t)
{
    Rational value = 1;
    for (int h : heights) {
        BigInt num = 1, den = 1;
        for (int i = 0; i < h; ++i)
            den *= t;
        num = den * t;
        const BigInt top = 1 - num;
        const BigInt bottom = 1 - den;
        value *= make_rational(top, bottom);
    }
    return value;
}

} // namespace

TEST(Poincare, HandExpandedExamples)
{
    EXPECT_EQ(poincare_polynomial(parse_diagram("A2:1")), poly({1, 1, 1}));
    EXPECT_EQ(poincare_polynomial(parse_diagram("A3:2")), poly({1, 1, 2, 1, 1}));
    EXPECT_EQ(poincare_polynomial(parse_diagram("D4:1")), poly({1, 1, 1, 2, 1, 1, 1}));
    EXPECT_EQ(to_text(poincare_polynomial(parse_diagram("A3:2"))), "1 + t + 2t^2 + t^3 + t^4");
}

TEST(Poincare, BettiNumbers)
{
    auto ints = [](std::initializer_list<long> c) {
        std::vector<BigInt> v;
        for (long x : c)
            v.emplace_back(x);
        return v;
    };
    EXPECT_EQ(betti_numbers(parse_diagram("B2:1")), ints({1, 1, 1, 1}));
    EXPECT_EQ(betti_numbers(parse_diagram("A3:2")), ints({1, 1, 2, 1, 1}));
    EXPECT_EQ(betti_numbers(parse_diagram("A1:1")), ints({1, 1}));
}

TEST(Poincare, ConstantBetti)
{
    EXPECT_TRUE(is_constant_betti(parse_diagram("B2:1")));
    EXPECT_FALSE(is_constant_betti(parse_diagram("A3:2")));
    EXPECT_TRUE(is_constant_betti(parse_diagram("G2:1")));
}

TEST(Poincare, FromHeightsRejectsNonPositive)
{
    EXPECT_THROW(poincare_from_heights({1, 0}), InputError);
    EXPECT_EQ(poincare_from_heights({}), poly({1}));
}

TEST(Poincare, ShapePredicates)
{
    EXPECT_TRUE(is_palindromic(poly({1, 2, 1})));
    EXPECT_FALSE(is_palindromic(poly({1, 2, 2})));
    EXPECT_TRUE(is_unimodal(poly({1, 2, 2, 1})));
    EXPECT_FALSE(is_unimodal(poly({1, 2, 1, 2, 1})));
    EXPECT_TRUE(is_constant_betti(poly({1, 1, 1})));
    EXPECT_FALSE(is_constant_betti(poly({1, 2, 1})));
}

TEST(Poincare, MatchesProductOracleUpToRank6)
{
    for (int black = 1; black <= 2; ++black) {
        for (const auto& d : enumerate_painted_diagrams(6, black)) {
            const auto p = poincare_polynomial(d);
            const auto h = heights_multiset(d);
            for (long t : {2L, 3L, 7L})
                EXPECT_EQ(Rational(p.evaluate(BigInt(t))), product_at(h, t)) << d.name() << " t=" << t;
        }
    }
}

TEST(Poincare, InvariantsUpToRank6)
{
    for (int black = 1; black <= 2; ++black) {
        for (const auto& d : enumerate_painted_diagrams(6, black)) {
            IntPolynomial p;
            ASSERT_NO_THROW(p = poincare_polynomial(d)) << d.name();
            EXPECT_EQ(p.degree(), complex_dimension(d)) << d.name();
            EXPECT_EQ(p.coeff(0), 1) << d.name();
            EXPECT_EQ(p.coeff(1), black) << d.name();
            EXPECT_TRUE(is_palindromic(p)) << d.name();
            EXPECT_TRUE(is_unimodal(p)) << d.name();
        }
    }
}

TEST(Poincare, ExactDivisionUpToRank8)
{
    for (const auto& d : enumerate_painted_diagrams(8, 1))
        EXPECT_NO_THROW(poincare_polynomial(d)) << d.name();
}

TEST(Poincare, EulerCharacteristicIsWeylQuotient)
{
    // P(1) = |W| / |W_K|; for a single black node of A_n this is n+1 choose the node
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto p = poincare_polynomial(PaintedDiagram(LieType(Family::A, n), {k}));
            EXPECT_EQ(p.evaluate(BigInt(1)), binomial(static_cast<unsigned>(n + 1), static_cast<unsigned>(k)));
        }
}
