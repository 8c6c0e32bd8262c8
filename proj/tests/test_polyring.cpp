#include <gtest/gtest.h>

#include <hermsig/expression.hpp>
#include <hermsig/gcd.hpp>
#include <hermsig/herm_poly.hpp>

using namespace hermsig;

namespace {

Scalar q(long n, long d = 1) { return Scalar::rational(n, d); }

RealPoly t_poly(std::vector<Scalar> c) { return univariate(std::move(c)); }

HermPoly H(const char* text, std::optional<unsigned> vars = std::nullopt) { return parse_hermitian(text, vars); }

} // namespace

TEST(MultiIndex, GradedLexOrder)
{
    const MultiIndex a{2, 0}, b{1, 1}, c{0, 3};
    EXPECT_LT(grlex_compare(b, a), 0);   // same degree, lex decides
    EXPECT_LT(grlex_compare(a, c), 0);   // lower degree first
    EXPECT_EQ(grlex_compare(a, a), 0);
    EXPECT_EQ(c.degree(), 3u);
    EXPECT_TRUE((MultiIndex{1, 0}).divides(a));
    EXPECT_FALSE(b.divides(a));
    EXPECT_EQ(a + b, (MultiIndex{3, 1}));
    EXPECT_EQ(concat(a, c), (MultiIndex{2, 0, 0, 3}));
    EXPECT_EQ(concat(a, c).slice(2, 2), c);
}

TEST(MultiIndex, ArityIsChecked)
{
    EXPECT_THROW(MultiIndex(MultiIndex::kMaxArity + 1), arity_mismatch);
    EXPECT_THROW((void)(MultiIndex{1, 0} + MultiIndex{1}), arity_mismatch);
}

TEST(Poly, UnivariateFactorIdentity)
{
    // (1 − t + t²)(1 + t − t³ − t⁴) = 1 − t⁶
    const RealPoly a = t_poly({1, -1, 1}), b = t_poly({1, 1, 0, -1, -1});
    EXPECT_EQ(a * b, t_poly({1, 0, 0, 0, 0, 0, -1}));
    EXPECT_EQ(sign_counts(a), std::make_pair(2u, 1u));
    EXPECT_EQ(sign_counts(b), std::make_pair(2u, 2u));
}

TEST(Poly, BinomialPower)
{
    const RealPoly p = t_poly({1, 1}).pow(4);
    EXPECT_EQ(p, t_poly({1, 4, 6, 4, 1}));
    // (1+t)^4 − (13/2) t²: four positive, one negative coefficient
    EXPECT_EQ(sign_counts(p - RealPoly::monomial(MultiIndex{2}, q(13, 2))), std::make_pair(4u, 1u));
}

TEST(Poly, CancellationDropsTerms)
{
    const RealPoly x = RealPoly::variable(2, 0), y = RealPoly::variable(2, 1);
    const RealPoly p = (x + y) * (x - y) - x * x;
    EXPECT_EQ(p, -(y * y));
    EXPECT_EQ(p.size(), 1u);
    EXPECT_TRUE((x - x).is_zero());
}

TEST(Poly, ArityMismatchThrows)
{
    EXPECT_THROW((void)(RealPoly::variable(2, 0) + RealPoly::variable(3, 0)), arity_mismatch);
}

TEST(Poly, SubstituteAndEvaluate)
{
    // W₂(x, 1 − x) = 1 for x² + xy + y
    const RealPoly x = RealPoly::variable(2, 0), y = RealPoly::variable(2, 1);
    const RealPoly w = x * x + x * y + y;
    const RealPoly s = RealPoly::variable(1, 0);
    EXPECT_EQ(substitute(w, {s, RealPoly::constant(1, 1) - s}), RealPoly::constant(1, 1));
    EXPECT_EQ(evaluate(w, {q(1, 2), q(1, 3)}), q(1, 4) + q(1, 6) + q(1, 3));
}

TEST(Poly, DivisionWitnessReassembles)
{
    const RealPoly x = RealPoly::variable(2, 0), y = RealPoly::variable(2, 1);
    const RealPoly g = x + y - RealPoly::constant(2, 1);
    const RealPoly f = (x * x - y) * g + x;
    auto w = divide_single(f, g, grlex_less());
    EXPECT_TRUE(w.identity_holds());
    EXPECT_FALSE(w.member);
    auto exact = divide_single(f - x, g, grlex_less());
    EXPECT_TRUE(exact.member);
    EXPECT_EQ(exact.quotient, x * x - y);
}

TEST(HermPoly, SymmetryIsEnforced)
{
    ComplexPoly p(4);
    p.add_term(MultiIndex{1, 0, 0, 1}, ComplexScalar(1)); // z1 w̄2 without its partner
    EXPECT_THROW((void)HermPoly::from_poly(p, 2), not_hermitian);
    p.add_term(MultiIndex{0, 1, 1, 0}, ComplexScalar(1));
    EXPECT_NO_THROW((void)HermPoly::from_poly(p, 2));
    HermPoly h(1);
    EXPECT_THROW(h.add_pair(MultiIndex{1}, MultiIndex{1}, ComplexScalar::i()), not_hermitian);
}

TEST(HermPoly, ImaginaryOffDiagonalPair)
{
    HermPoly h(2);
    h.add_pair(MultiIndex{1, 0}, MultiIndex{0, 1}, ComplexScalar::i());
    EXPECT_EQ(h.coefficient(MultiIndex{0, 1}, MultiIndex{1, 0}), -ComplexScalar::i());
    // i z1 w̄2 − i z2 w̄1 is real on the diagonal: at z = (1, i) it is i·(−i) − i·i = 2
    EXPECT_EQ(h.evaluate({ComplexScalar(1), ComplexScalar::i()}), q(2));
}

TEST(HermPoly, MomentLiftIsDiagonal)
{
    const RealPoly P = t_poly({1, -2, 0, 3});
    const HermPoly h = moment_lift(P);
    EXPECT_TRUE(h.is_diagonal());
    EXPECT_EQ(moment_project(h), P);
    EXPECT_EQ(h.coefficient(MultiIndex{3}, MultiIndex{3}), ComplexScalar(3));
}

TEST(HermPoly, BihomogenizePadsWithNewVariable)
{
    const HermPoly h = bihomogenize(moment_lift(t_poly({1, 0, -1, 0, 0, 0, -2, 1})));
    EXPECT_EQ(h.vars(), 2u);
    EXPECT_EQ(h.bidegree(), 7u);
    EXPECT_TRUE(h.is_bihomogeneous());
    EXPECT_EQ(h.coefficient(MultiIndex{0, 7}, MultiIndex{0, 7}), ComplexScalar(1));
    EXPECT_EQ(h.coefficient(MultiIndex{6, 1}, MultiIndex{6, 1}), ComplexScalar(-2));
    EXPECT_EQ(dehomogenize_last(h), moment_lift(t_poly({1, 0, -1, 0, 0, 0, -2, 1})).with_vars(2));
}

TEST(HermPoly, HyperquadricAndNormPower)
{
    const HermPoly r = hyperquadric(2);
    EXPECT_EQ(r, H("|z1|^2 + |z2|^2 - |z3|^2"));
    EXPECT_EQ(norm_power(2, 2), H("|z1|^4 + 2|z1 z2|^2 + |z2|^4"));
    EXPECT_EQ(r.evaluate({ComplexScalar(1), ComplexScalar(0), ComplexScalar(1)}), q(0));
}

TEST(HermPoly, RealifyPolarization)
{
    // 2xy with z = x + iy: (z² − z̄²)/(2i)
    RealPoly rho(2);
    rho.add_term(MultiIndex{1, 1}, q(2));
    const HermPoly h = realify(rho);
    EXPECT_EQ(h.coefficient(MultiIndex{2}, MultiIndex{0}), ComplexScalar(q(0), q(-1, 2)));
    EXPECT_EQ(h.coefficient(MultiIndex{0}, MultiIndex{2}), ComplexScalar(q(0), q(1, 2)));
    EXPECT_EQ(h.evaluate({ComplexScalar(q(3), q(5))}), q(30));
}

TEST(HermPoly, AbsSquaredOfHolomorphic)
{
    ComplexPoly f(2);
    f.add_term(MultiIndex{1, 0}, ComplexScalar(1));
    f.add_term(MultiIndex{0, 1}, ComplexScalar(q(0), q(2)));
    EXPECT_EQ(abs_squared(f), H("|z1 + 2i z2|^2"));
}

TEST(Gcd, SharedLinearFactor)
{
    auto holo = [](std::vector<std::pair<MultiIndex, ComplexScalar>> terms) {
        ComplexPoly p(3);
        for (auto& [m, c] : terms) p.add_term(m, c);
        return p;
    };
    const ComplexPoly h = holo({{MultiIndex{1, 0, 0}, 1}, {MultiIndex{0, 1, 0}, ComplexScalar(q(0), q(2))}});
    const ComplexPoly u = holo({{MultiIndex{1, 0, 0}, 1}, {MultiIndex{0, 1, 0}, -1}});
    const ComplexPoly v = holo({{MultiIndex{0, 0, 1}, 3}});
    EXPECT_EQ(poly_gcd(h * u, h * v), h);
    EXPECT_EQ(poly_gcd(u, v), ComplexPoly::constant(3, 1));
    EXPECT_EQ(poly_gcd(std::vector<ComplexPoly>{h * u * u, h * h * u, h * u * v}), h * u);
}

TEST(Gcd, MonomialFastPath)
{
    ComplexPoly a(2), b(2);
    a.add_term(MultiIndex{3, 1}, ComplexScalar(2));
    b.add_term(MultiIndex{1, 2}, ComplexScalar(5));
    ComplexPoly expected(2);
    expected.add_term(MultiIndex{1, 1}, ComplexScalar(1));
    EXPECT_EQ(poly_gcd(a, b), expected);
}

TEST(Expression, ParsesSphereForm)
{
    const HermPoly r = H("|z1|^2 + |z2|^2 - |z3|^2");
    EXPECT_EQ(r.vars(), 3u);
    EXPECT_EQ(r, hyperquadric(2));
}

TEST(Expression, ParsesOffDiagonalForm)
{
    const HermPoly p = H("z1*~z3 + z2*~z2 + z3*~z1");
    EXPECT_EQ(p.coefficient(MultiIndex{1, 0, 0}, MultiIndex{0, 0, 1}), ComplexScalar(1));
    EXPECT_EQ(p.size(), 3u);
}

TEST(Expression, ImplicitMultiplicationAndConstants)
{
    EXPECT_EQ(H("2 z1 ~z1"), H("2*z1*~z1"));
    EXPECT_EQ(H("|z1|^2 |z2|^2"), H("z1*z2*~z1*~z2"));
    EXPECT_EQ(H("(1/2)|z1|^2 + z1~z1/2"), H("|z1|^2"));
    EXPECT_EQ(H("-z1~z1^2 - z1^2 ~z1"), H("-(z1 ~z1)*(z1 + ~z1)"));
    EXPECT_EQ(H("sqrt(8) |z1|^2"), (Scalar(2) * sqrt_of(Scalar(2))) * H("|z1|^2"));
    EXPECT_EQ(H("|z1|^(4)"), H("z1^2 ~z1^2"));
}

TEST(Expression, RealPolynomials)
{
    const RealPoly p = parse_real("x1^2 + x1 x2 + x2");
    EXPECT_EQ(p.arity(), 2u);
    EXPECT_EQ(p.coefficient(MultiIndex{1, 1}), q(1));
    EXPECT_EQ(parse_real("1 - x1 + x1^2"), t_poly({1, -1, 1}));
    EXPECT_EQ(parse_real("1 - x1^2", 3).arity(), 3u);
}

TEST(Expression, SymmetryViolationNamesThePair)
{
    try {
        (void)parse_expression("z1*~z2");
        FAIL() << "expected a symmetry violation";
    } catch (const not_hermitian& e) {
        EXPECT_NE(std::string(e.what()).find("(1,0),(0,1)"), std::string::npos) << e.what();
    }
    EXPECT_THROW((void)parse_expression("i |z1|^2"), not_hermitian);
}

TEST(Expression, SyntaxErrorsCarryPositions)
{
    auto position = [](const char* text) -> long {
        try {
            (void)parse_expression(text);
        } catch (const parse_error& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    EXPECT_EQ(position("z1 +"), 4);
    EXPECT_EQ(position("z1 + )"), 5);
    EXPECT_EQ(position("z0"), 1);
    EXPECT_EQ(position("z12"), 2);
    EXPECT_EQ(position("(z1 ~z1"), 7);
    EXPECT_EQ(position("z1 ~z1 / z2"), 7);
    EXPECT_EQ(position("|z1|^3"), 0);
    EXPECT_EQ(position("1/0"), 1);
    EXPECT_EQ(position("x1 + |z1|^2"), 0);
    EXPECT_EQ(position("sqrt(-2)"), 0);
    EXPECT_EQ(position("z1 # z1"), 3);
}

TEST(Expression, PrintParseRoundTrip)
{
    const Scalar r2 = sqrt_of(Scalar(2));
    const Scalar s = sqrt_of(Scalar(4) + Scalar(2) * r2);
    HermPoly h(3);
    h.add_pair(MultiIndex{1, 0, 0}, MultiIndex{0, 0, 1}, ComplexScalar(q(1, 3), q(-2)));
    h.add_pair(MultiIndex{0, 2, 0}, MultiIndex{0, 2, 0}, s);
    h.add_pair(MultiIndex{1, 1, 0}, MultiIndex{0, 1, 1}, ComplexScalar(r2, s * r2));
    h.add_pair(MultiIndex{0, 0, 0}, MultiIndex{0, 0, 0}, q(-7, 5));
    EXPECT_EQ(parse_hermitian(h.to_string(), 3), h) << h.to_string();
    const RealPoly P = t_poly({1, -r2, s * s * q(1, 2), s, -1});
    EXPECT_EQ(parse_real(to_string(P), 1), P) << to_string(P);
}
