#include "fixtures.hpp"

#include "symcoh/cealgebra.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace symcoh;
using namespace symcoh::testing;

namespace {

Form e(const std::string& text) { return parse_form(text, 6); }

Form random_homogeneous(std::mt19937& rng, int degree)
{
    Form f(6);
    const auto blades = blades_of_degree(6, degree);
    std::uniform_int_distribution<std::size_t> pick(0, blades.size() - 1);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int t = 0; t < 3; ++t) f += Form::monomial(6, blades[pick(rng)], Rational(c(rng)));
    return f;
}

} // namespace

TEST(Salamon, ParsesFixture)
{
    const LieAlgebra g = parse_salamon(kNilAlgebra);
    EXPECT_EQ(g.dim(), 6);
    EXPECT_TRUE(g.differential_of_generator(1).is_zero());
    EXPECT_EQ(g.differential_of_generator(4), e("e12"));
    EXPECT_EQ(g.differential_of_generator(5), e("e14"));
    EXPECT_EQ(g.differential_of_generator(6), e("e15 + e23 + e24"));
    EXPECT_EQ(g.salamon(), "(0,0,0,12,14,15+23+24)");
    EXPECT_FALSE(g.is_abelian());
}

TEST(Salamon, Torus)
{
    const LieAlgebra g = parse_salamon(kTorusAlgebra);
    EXPECT_TRUE(g.is_abelian());
    for (Blade b : blades_of_degree(6, 3)) EXPECT_TRUE(g.d_of_blade(b).is_zero());
}

TEST(Salamon, CoefficientsAndSigns)
{
    const LieAlgebra g = parse_salamon("0,0,2*12,-13+1/2*12");
    EXPECT_EQ(g.differential_of_generator(3), parse_form("2*e12", 4));
    EXPECT_EQ(g.differential_of_generator(4), parse_form("1/2*e12 - e13", 4));
    // Reversed index pairs pick up a sign.
    EXPECT_EQ(parse_salamon("(0,0,0,21)").differential_of_generator(4), parse_form("-e12", 4));
}

TEST(Salamon, Errors)
{
    EXPECT_THROW(parse_salamon("(0,0,12)"), ParseError);
    EXPECT_THROW(parse_salamon("(0,0,0,17)"), ParseError);
    EXPECT_THROW(parse_salamon("(0,0,0,1x)"), ParseError);
    EXPECT_THROW(parse_salamon("(0,0,0,12"), ParseError);
    try {
        parse_salamon("(0,0,0,12,14,15+2?)");
        FAIL();
    } catch (const ParseError& err) {
        EXPECT_GE(err.position(), 15u);
        EXPECT_LE(err.position(), 17u);
    }
    // d^2 e4 = d(e34) = e124: the Jacobi identity fails.
    EXPECT_THROW(parse_salamon("(0,0,12,34)"), InputError);
    // Not unimodular: d(e234) = e1234.
    EXPECT_THROW(parse_salamon("(0,12,0,0)"), InputError);
}

TEST(StructureJson, MatchesSalamon)
{
    const LieAlgebra g =
        parse_structure_json(R"({"dim": 6, "d": {"4": [[1,2,1]], "5": [[1,4,1]], "6": [[1,5,1],[2,3,1],[2,4,"1"]]}})");
    const LieAlgebra h = parse_salamon(kNilAlgebra);
    for (int i = 1; i <= 6; ++i) EXPECT_EQ(g.differential_of_generator(i), h.differential_of_generator(i));
    EXPECT_THROW(parse_structure_json(R"({"dim": 5, "d": {}})"), InputError);
    EXPECT_THROW(parse_structure_json(R"({"dim": 6, "d": )"), ParseError);
}

TEST(Differential, Examples)
{
    const LieAlgebra g = parse_salamon(kNilAlgebra);
    EXPECT_EQ(g.d(e("e4")), e("e12"));
    EXPECT_EQ(g.d(e("e35 - e45")), e("e134 - e125"));
    EXPECT_TRUE(g.d(e("7")).is_zero());
}

TEST(Differential, SquaresToZeroOnEveryBlade)
{
    const LieAlgebra g = parse_salamon(kNilAlgebra);
    for (std::uint32_t m = 0; m < 64; ++m) EXPECT_TRUE(g.d(g.d_of_blade(Blade(m))).is_zero());
}

TEST(Differential, Antiderivation)
{
    const LieAlgebra g = parse_salamon(kNilAlgebra);
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int p = trial % 4, q = (trial / 4) % 3;
        const Form a = random_homogeneous(rng, p), b = random_homogeneous(rng, q);
        const Rational sign = p % 2 ? -1 : 1;
        EXPECT_EQ(g.d(wedge(a, b)), wedge(g.d(a), b) + wedge(a, g.d(b)) * sign);
    }
}

TEST(Integration, NormalisationAndUnimodularity)
{
    const LieAlgebra g = parse_salamon(kNilAlgebra);
    EXPECT_EQ(g.integrate(e("e123456")), Rational(1));
    EXPECT_EQ(g.integrate(e("e12")), Rational(0));
    for (Blade b : blades_of_degree(6, 5)) EXPECT_EQ(g.integrate(g.d_of_blade(b)), Rational(0)) << format_blade(b);
}
