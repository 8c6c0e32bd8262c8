#include <gtest/gtest.h>

#include <hermsig/constructions/examples.hpp>
#include <hermsig/expression.hpp>
#include <hermsig/quotient.hpp>

using namespace hermsig;

namespace {

HermPoly H(const char* text, std::optional<unsigned> vars = std::nullopt) { return parse_hermitian(text, vars); }

std::string holo_string(const ComplexPoly& h)
{
    return poly_string(h, [](unsigned v) { return "z" + std::to_string(v + 1); });
}

} // namespace

TEST(DivideByR, MultiplesAreMembers)
{
    const HermPoly r = hyperquadric(2);
    const HermPoly q = H("|z1|^2 + 3 z1 ~z2 + 3 z2 ~z1 - |z3|^2");
    const HermDivision d = divide_by_r(r * q);
    EXPECT_TRUE(d.member());
    ASSERT_TRUE(d.quotient);
    EXPECT_EQ(*d.quotient, q);
    EXPECT_TRUE(d.witness.identity_holds());
}

TEST(DivideByR, NonMembersKeepARemainder)
{
    const HermDivision d = divide_by_r(H("|z1|^2", 3));
    EXPECT_FALSE(d.member());
    EXPECT_FALSE(d.witness.remainder.is_zero());
    EXPECT_TRUE(d.witness.identity_holds());
    EXPECT_FALSE(d.quotient);
}

TEST(DivideByR, EveryPivotGivesTheSameVerdict)
{
    const HermPoly p = two_two_poly();
    for (unsigned pivot = 0; pivot < 2; ++pivot) {
        const HermDivision d = divide_by_r(p, pivot);
        EXPECT_TRUE(d.member());
        EXPECT_EQ(*d.quotient, H("|z1|^2 - |z2|^2", 3));
    }
    EXPECT_THROW((void)divide_by_r(p, 2), std::out_of_range);
    EXPECT_THROW((void)divide_by_r(H("|z1|^2")), arity_mismatch);
}

TEST(DivideByR, LinearFamilyMembers)
{
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c) EXPECT_TRUE(divide_by_r(linear_family_poly(a, b, c)).member()) << a << b << c;
}

TEST(DivideReal, SphereLinearFactor)
{
    const RealPoly x = RealPoly::variable(2, 0), y = RealPoly::variable(2, 1);
    const RealPoly w = x * x * x + x * x * y + x * y + y - RealPoly::constant(2, 1);
    auto d = divide_real(w);
    EXPECT_TRUE(d.member);
    EXPECT_TRUE(d.identity_holds());
    EXPECT_EQ(d.divisor, sphere_linear(2, false));
    EXPECT_FALSE(divide_real(x * y).member);
    // homogeneous input picks x1 + x2 − x3
    const RealPoly z = RealPoly::variable(3, 2);
    const RealPoly h = (RealPoly::variable(3, 0) + RealPoly::variable(3, 1) - z) * z;
    EXPECT_TRUE(divide_real(h).member);
    EXPECT_EQ(divide_real(h).divisor, sphere_linear(2, true));
}

TEST(HolomorphicContent, MonomialFactor)
{
    const HermPoly p = H("|z1|^6", 3) * hyperquadric(2);
    const ContentResult c = holomorphic_content(p);
    EXPECT_EQ(holo_string(c.h), "z1^3");
    EXPECT_EQ(c.reduced, hyperquadric(2));
}

TEST(HolomorphicContent, LinearFactorWithGaussianCoefficient)
{
    const HermPoly p = H("|z1 + 2i z2|^2", 3) * hyperquadric(2);
    const ContentResult c = holomorphic_content(p);
    EXPECT_EQ(holo_string(c.h), "z1 + 2*i*z2");
    EXPECT_EQ(c.reduced, hyperquadric(2));
}

TEST(HolomorphicContent, TrivialContent)
{
    const ContentResult c = holomorphic_content(hyperquadric(2));
    EXPECT_TRUE(c.h.is_constant());
    EXPECT_THROW((void)holomorphic_content(HermPoly(2)), std::invalid_argument);
}

TEST(ProjectiveDegree, FactorsAreRemovedRepeatedly)
{
    const ReductionResult r = projective_degree(H("|z1 z2|^2", 3) * hyperquadric(2));
    EXPECT_EQ(r.bidegree, 1u);
    EXPECT_EQ(r.total_degree, 2u);
    EXPECT_EQ(holo_string(r.h), "z1*z2");
    EXPECT_TRUE(r.identity_holds());
}

TEST(ProjectiveDegree, ThreeFormsEqualOnTheSphere)
{
    for (unsigned m = 1; m <= 5; ++m) {
        const DegreeForms f = degree_forms(m);
        EXPECT_EQ(projective_degree(f.p).total_degree, 2u) << m;
        EXPECT_EQ(projective_degree(f.q).total_degree, 2 * m + 2) << m;
        EXPECT_EQ(projective_degree(f.r).total_degree, 2u) << m;
    }
}

TEST(ProjectiveDegree, RequiresBihomogeneousInput)
{
    EXPECT_THROW((void)projective_degree(H("|z1|^2 + 1")), std::invalid_argument);
    EXPECT_THROW((void)projective_degree(HermPoly(2)), std::invalid_argument);
}

TEST(Stabilization, SquareOfIndefiniteFormIsAlreadyANorm)
{
    const HermPoly r = lift(squaring_polynomial(Scalar::rational(1, 2)));
    const StabilizationResult s = stabilization_search(r * r, 3);
    ASSERT_TRUE(s.d);
    EXPECT_EQ(*s.d, 0u);
    EXPECT_EQ(s.inertia->A, 9u);
    EXPECT_EQ(s.inertia->B, 0u);
    EXPECT_EQ(s.inertia->k, 0u);
}

TEST(Stabilization, NormPowerNeedsNoStep)
{
    const StabilizationResult s = stabilization_search(norm_power(2, 2), 2);
    ASSERT_TRUE(s.d);
    EXPECT_EQ(*s.d, 0u);
}

TEST(Stabilization, ThreeStepsForOneMinusTPlusTSquared)
{
    // (1 + t)^d (1 − t + t²) has all d + 3 coefficients positive first at d = 3
    const HermPoly p = lift(univariate({1, -1, 1}));
    const StabilizationResult s = stabilization_search(p, 6);
    ASSERT_TRUE(s.d);
    EXPECT_EQ(*s.d, 3u);
    EXPECT_EQ(s.inertia->A, 6u);
    EXPECT_FALSE(stabilization_search(p, 2).d);
}

TEST(Stabilization, ReturnedExponentIsMinimal)
{
    // (x1 − x2)² + (x1 + x2)²/10, composed with the moment map
    const RealPoly x1 = RealPoly::variable(2, 0), x2 = RealPoly::variable(2, 1);
    const RealPoly P = (x1 - x2).pow(2) + Scalar::rational(1, 10) * (x1 + x2).pow(2);
    const HermPoly p = moment_lift(P);
    const StabilizationResult s = stabilization_search(p, 40);
    ASSERT_TRUE(s.d);
    const InertiaResult at = inertia(norm_power(2, *s.d) * p);
    EXPECT_EQ(at.B, 0u);
    EXPECT_EQ(at.k, 0u);
    ASSERT_GT(*s.d, 0u);
    const InertiaResult before = inertia(norm_power(2, *s.d - 1) * p);
    EXPECT_TRUE(before.B > 0 || before.k > 0);
}

TEST(Stabilization, RejectsNonPositiveInput)
{
    EXPECT_THROW((void)stabilization_search(hyperquadric(2), 3), std::invalid_argument);
}
