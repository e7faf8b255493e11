#include "tgwa/equivalence.hpp"
#include "tgwa/multiquiver.hpp"
#include "tgwa/parse.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tgwa;

namespace {

using linalg::RationalMatrix;

SolutionTuple exampleTuple() {
    auto sys = ShiftSystem::fromRows({{2, -3, 0, 0}, {4, -5, 1, -3}, {-2, 2, -1, 3}});
    Poly f = parsePoly("(u2+u3)^2 - (u1^3 - u1 + 1)", 3);
    auto s = [&](Rational a, Rational b, Rational c) { return shift(f, std::vector<Rational>{a, b, c}); };
    return {sys,
            {s(1, 2, -1) * s(0, 1, -1),
             s(Rational(1, 2), Rational(3, 2), -1) * s(Rational(-1, 2), Rational(1, 2), -1) *
                 s(Rational(3, 2), Rational(9, 2), -3),
             Poly::one(3), Poly::one(3)}};
}

RationalMatrix randomInvertible(std::mt19937_64& rng, std::size_t m) {
    std::uniform_int_distribution<long> d(-3, 3);
    for (;;) {
        RationalMatrix g(m, std::vector<Rational>(m));
        for (auto& row : g)
            for (auto& x : row) x = d(rng);
        if (linalg::inverse(g)) return g;
    }
}

TEST(Automorphism, IdentityAndScaling) {
    auto id = AutomorphismSpec::identity(2);
    Poly p = parsePoly("u1^2 - u2 + 1/3", 2);
    EXPECT_EQ(applySubstitution(id, p), p);

    auto scale = AutomorphismSpec::make({parsePoly("2*u1", 1)}, {parsePoly("1/2*u1", 1)});
    EXPECT_EQ(applySubstitution(scale, parsePoly("u1^2 - 1", 1)), parsePoly("4*u1^2 - 1", 1));
}

TEST(Automorphism, TriangularComposesWithItsInverse) {
    auto psi = AutomorphismSpec::make({parsePoly("u1 + u2^2*u3", 3), parsePoly("u2 + u3^3", 3), parsePoly("u3", 3)},
                                      {parsePoly("u1 - (u2 - u3^3)^2*u3", 3), parsePoly("u2 - u3^3", 3),
                                       parsePoly("u3", 3)});
    Poly p = parsePoly("u1*u2 - u3 + 7", 3);
    EXPECT_EQ(applySubstitution(psi.inverted(), applySubstitution(psi, p)), p);
}

TEST(Automorphism, RejectsWrongInverse) {
    EXPECT_THROW(AutomorphismSpec::make({parsePoly("u1 + u2", 2), parsePoly("u2", 2)},
                                        {parsePoly("u1 + u2", 2), parsePoly("u2", 2)}),
                 UnverifiedAutomorphismError);
}

TEST(Equivalence, IdentityOnIdenticalPairs) {
    SolutionTuple gl = symmetrizedSolution({{-1, 1, 0}, {0, -1, 1}});
    EXPECT_TRUE(checkEquivalence(AutomorphismSpec::identity(2), gl, gl).passed());
    RationalMatrix id = linalg::identity(2);
    EXPECT_EQ(applyLinear(id, gl).polys, gl.polys);
    EXPECT_TRUE(applyLinear(id, gl).sys == gl.sys);
}

TEST(Equivalence, ScalarMultiplesAreAccepted) {
    SolutionTuple a = symmetrizedSolution({{2, -2}});
    SolutionTuple b = a;
    b.polys[0] *= Rational(5);
    EXPECT_TRUE(checkEquivalence(AutomorphismSpec::identity(1), a, b).passed());
    b.polys[1] += Poly::one(1);
    EXPECT_FALSE(checkEquivalence(AutomorphismSpec::identity(1), a, b).passed());
}

TEST(Equivalence, OneVariableScaling) {
    SolutionTuple a = symmetrizedSolution({{2, -2}});
    RationalMatrix g{{2}};
    SolutionTuple b = applyLinear(g, a);
    EXPECT_EQ(b.sys.column(0), (RationalVector{4}));
    EXPECT_TRUE(checkEquivalence(psiFromLinear(g), a, b).passed());
    EXPECT_FALSE(checkEquivalence(AutomorphismSpec::identity(1), a, b).passed());
}

TEST(Equivalence, NegationOnSymmetrizedPair) {
    SolutionTuple a = symmetrizedSolution({{2, -2}});
    SolutionTuple b = applyLinear({{-1}}, a);
    EXPECT_EQ(b.sys.column(0), (RationalVector{-2}));
    EXPECT_EQ(b.polys[0], parsePoly("(-u1 - 1/2)*(-u1 + 1/2)", 1));
    EXPECT_TRUE(checkEquivalence(psiFromLinear({{-1}}), a, b).passed());
    EXPECT_TRUE(checkBinary(b).passed());
}

TEST(Equivalence, SwappingTwoVariablesOfExample) {
    SolutionTuple a = exampleTuple();
    RationalMatrix swap{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
    SolutionTuple b = applyLinear(swap, a);
    EXPECT_EQ(b.sys.entry(1, 0), a.sys.entry(2, 0));
    EXPECT_TRUE(checkBinary(b).passed());
    EXPECT_TRUE(checkEquivalence(psiFromLinear(swap), a, b).passed());
    auto found = searchSignedPermutation(a, b);
    ASSERT_TRUE(found.has_value());
}

TEST(Equivalence, GroupLawAndPreservationOnRandomMatrices) {
    std::mt19937_64 rng(8);
    SolutionTuple gl = symmetrizedSolution({{-1, 1, 0}, {0, -1, 1}});
    SolutionTuple bad({gl.sys, {parsePoly("u1 - 1/2", 2), parsePoly("(u1 + 1/2)*(u2 - 1/2)", 2), parsePoly("u2 + 1/2", 2)}});
    for (int trial = 0; trial < 10; ++trial) {
        RationalMatrix g = randomInvertible(rng, 2), h = randomInvertible(rng, 2);
        SolutionTuple viaTwo = applyLinear(g, applyLinear(h, gl));
        SolutionTuple viaProduct = applyLinear(linalg::multiply(g, h), gl);
        EXPECT_TRUE(viaTwo.sys == viaProduct.sys);
        EXPECT_EQ(viaTwo.polys, viaProduct.polys);
        EXPECT_TRUE(checkBinary(applyLinear(g, gl)).passed());
        EXPECT_FALSE(checkBinary(applyLinear(g, bad)).passed());
        SolutionTuple moved = applyLinear(g, gl);
        EXPECT_TRUE(checkEquivalence(psiFromLinear(g), gl, moved).passed());
        EXPECT_TRUE(checkEquivalence(psiFromLinear(g).inverted(), moved, gl).passed());
    }
}

TEST(Equivalence, FactorwiseActionMatchesExpanded) {
    std::mt19937_64 rng(81);
    FactoredSolution gl = symmetrizedFactors({{3, -1, 0}, {0, 2, -2}});
    for (int trial = 0; trial < 5; ++trial) {
        RationalMatrix g = randomInvertible(rng, 2);
        FactoredSolution moved = applyLinear(g, gl);
        EXPECT_EQ(moved.expand().polys, applyLinear(g, gl.expand()).polys);
        EXPECT_TRUE(moved.sys == applyLinear(g, gl.expand()).sys);
        EXPECT_TRUE(checkSymmetric(moved).passed());
    }
}

TEST(Equivalence, SingularMatrixRejected) {
    SolutionTuple gl = symmetrizedSolution({{-1, 1, 0}, {0, -1, 1}});
    EXPECT_THROW(applyLinear({{1, 2}, {2, 4}}, gl), SingularMatrixError);
}

TEST(Equivalence, DifferentRanksReported) {
    SolutionTuple a = symmetrizedSolution({{2, -2}});
    SolutionTuple b = symmetrizedSolution({{2, -2, 0}});
    EXPECT_FALSE(checkEquivalence(AutomorphismSpec::identity(1), a, b).passed());
}

}  // namespace
