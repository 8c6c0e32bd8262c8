#include <gtest/gtest.h>

#include <hermsig/scalar.hpp>

using namespace hermsig;

namespace {

Scalar q(long n, long d = 1) { return Scalar::rational(n, d); }
Scalar root(long k) { return sqrt_of(q(k)); }

Scalar cos_pi(long num, unsigned long den)
{
    return Scalar::from_generator([=](unsigned bits) { return cos_pi_fraction(num, den, bits); });
}

} // namespace

TEST(Rational, FieldOperations)
{
    EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
    EXPECT_EQ(q(1, 2) * q(2, 3), q(1, 3));
    EXPECT_EQ(q(3, 4).inverse(), q(4, 3));
    EXPECT_EQ(q(-6, 4), q(-3, 2));
    EXPECT_EQ((q(1, 2) - q(1, 2)).sign(), 0);
    EXPECT_TRUE((q(7) - q(7)).is_zero());
    EXPECT_EQ(q(5, 6).to_string(), "5/6");
}

TEST(Rational, DivisionByZeroThrows)
{
    EXPECT_THROW((void)q(0).inverse(), division_by_zero);
    EXPECT_THROW((void)(q(1) / q(0)), division_by_zero);
}

TEST(Quadratic, SquareRootSquares)
{
    const Scalar r2 = root(2);
    EXPECT_EQ(r2 * r2, q(2));
    EXPECT_TRUE((r2 * r2).is_rational());
    EXPECT_EQ(r2.to_string(), "(sqrt(2))");
}

TEST(Quadratic, PerfectSquaresStayRational)
{
    EXPECT_EQ(root(4), q(2));
    EXPECT_TRUE(root(4).is_rational());
    EXPECT_EQ(sqrt_of(q(9, 4)), q(3, 2));
    EXPECT_EQ(root(8), q(2) * root(2));
}

TEST(Quadratic, SignsAreExact)
{
    const Scalar r2 = root(2);
    EXPECT_EQ((q(3) - q(2) * r2).sign(), 1);   // 3 > 2√2
    EXPECT_EQ((q(1) - r2).sign(), -1);
    EXPECT_EQ((q(99, 70) - r2).sign(), 1);     // 99/70 = 1.41428...
    EXPECT_EQ((q(140, 99) - r2).sign(), -1);   // 140/99 = 1.41414...
    EXPECT_EQ((r2 - r2).sign(), 0);
}

TEST(Quadratic, InverseRationalizes)
{
    const Scalar r2 = root(2);
    EXPECT_EQ((q(1) + r2).inverse(), r2 - q(1));
    EXPECT_EQ((q(1) + r2) * (q(1) + r2).inverse(), q(1));
}

TEST(Tower, NestedRadicalSquaresBack)
{
    const Scalar r2 = root(2);
    const Scalar s = sqrt_of(q(4) + q(2) * r2);
    EXPECT_EQ(s.field().depth(), 2);
    EXPECT_EQ(s * s, q(4) + q(2) * r2);
    // s = 2.6131259...
    EXPECT_EQ((s - q(13, 5)).sign(), 1);
    EXPECT_EQ((s - q(131, 50)).sign(), -1);
    EXPECT_EQ(s.to_string(), "(sqrt((4 + 2*sqrt(2))))");
}

TEST(Tower, MixedDepthArithmetic)
{
    const Scalar r2 = root(2);
    const Scalar s = sqrt_of(q(4) + q(2) * r2);
    const Scalar half = s * s * q(1, 2);
    EXPECT_EQ(half, q(2) + r2);
    EXPECT_EQ((s * r2) * (s * r2), q(8) + q(4) * r2);
    EXPECT_EQ(s.inverse() * s, q(1));
}

TEST(Tower, IncompatibleRadicalsRejected)
{
    EXPECT_THROW((void)(root(2) * root(3)), incompatible_towers);
}

TEST(Tower, NegativeRadicandRejected)
{
    EXPECT_THROW((void)root(-2), std::domain_error);
}

TEST(Interval, PiEnclosureIsTight)
{
    const Enclosure pi = pi_enclosure(200);
    EXPECT_TRUE(pi.hi < mpq_class(355, 113));
    EXPECT_TRUE(pi.lo > mpq_class(333, 106));
    EXPECT_TRUE(pi.width() < mpq_class(1, mpz_class(1) << 190));
}

TEST(Interval, CosineOfRationalMultiplesOfPi)
{
    EXPECT_TRUE(cos_pi_fraction(1, 3, 128).contains(mpq_class(1, 2)));
    EXPECT_TRUE(cos_pi_fraction(1, 2, 128).contains_zero());
    EXPECT_TRUE(cos_pi_fraction(0, 1, 128).contains(1));
    EXPECT_TRUE(cos_pi_fraction(1, 1, 128).contains(-1));
    const Enclosure c = cos_pi_fraction(3, 8, 128); // 0.3826834...
    EXPECT_TRUE(c.lo > mpq_class(38268, 100000));
    EXPECT_TRUE(c.hi < mpq_class(38269, 100000));
}

TEST(Interval, CertifiedSignsAwayFromZero)
{
    const Scalar c = cos_pi(3, 8);
    EXPECT_TRUE(c.is_interval());
    EXPECT_EQ(c.sign(), 1);
    EXPECT_EQ((c - q(2, 5)).sign(), -1);
    EXPECT_EQ(cos_pi(5, 8).sign(), -1);
    EXPECT_NEAR(c.to_double(), 0.38268343236508984, 1e-15);
}

TEST(Interval, SnapToExactValue)
{
    // cos²(3π/8) = (2 − √2)/4
    const Scalar c = cos_pi(3, 8);
    const Scalar exact = (q(2) - root(2)) * q(1, 4);
    const mpq_class width(1, mpz_class("1000000000000000000000000000000"));
    const Scalar snapped = snap_to_exact(c * c, exact, width);
    EXPECT_TRUE(snapped.is_exact());
    EXPECT_EQ(snapped, exact);
    EXPECT_THROW((void)snap_to_exact(c * c, exact + q(1, 1000), width), invariant_violation);
}

TEST(Interval, ZeroDifferenceIsIndeterminate)
{
    // cos(π/3) − 1/2 is exactly zero; no finite refinement certifies its sign
    const Scalar d = cos_pi(1, 3) - q(1, 2);
    try {
        (void)d.sign();
        FAIL() << "sign of an exact zero was certified";
    } catch (const indeterminate_sign& e) {
        EXPECT_GE(e.precision_reached, precision_cap());
    }
}

TEST(Interval, ExactZeroAbsorbs)
{
    const Scalar c = cos_pi(1, 8);
    EXPECT_TRUE((q(0) * c).is_zero());
    EXPECT_TRUE((q(0) + q(0)).is_zero());
    EXPECT_TRUE((c + q(0)).is_interval());
}

TEST(Complex, GaussianArithmetic)
{
    const ComplexScalar i = ComplexScalar::i();
    EXPECT_EQ(i * i, ComplexScalar(-1));
    const ComplexScalar z(q(1), q(2));
    EXPECT_EQ(z.inverse(), ComplexScalar(q(1, 5), q(-2, 5)));
    EXPECT_EQ(z * z.conj(), ComplexScalar(5));
    EXPECT_EQ(z.norm_squared(), q(5));
    EXPECT_TRUE(z.is_gaussian_rational());
    EXPECT_FALSE(z.is_real());
    EXPECT_EQ(z.to_string(), "(1 + 2*i)");
    EXPECT_EQ((q(3) * i).to_string(), "3*i");
}

TEST(Complex, ZeroInverseThrows)
{
    EXPECT_THROW((void)ComplexScalar(0).inverse(), division_by_zero);
}
