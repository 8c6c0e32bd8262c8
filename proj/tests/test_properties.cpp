// Randomized invariants. Every property runs at least 1000 cases from a fixed seed.

#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <hermsig/expression.hpp>
#include <hermsig/hermitian_form.hpp>
#include <hermsig/quotient.hpp>

#include "random_forms.hpp"

using namespace hermsig;

using hermsig::testing::Gen;

namespace {

constexpr int kCases = 1000;

std::array<unsigned, 3> counts(const CongruenceResult& r) { return {r.positive, r.negative, r.zero}; }

} // namespace

TEST(Property, SylvesterInvarianceUnderCongruence)
{
    Gen g(0x5eed0001);
    for (int c = 0; c < kCases; ++c) {
        const std::size_t dim = g.uniform(1, 6);
        const ComplexMatrix m = g.coin(0.3) ? g.low_rank(dim, g.uniform(0, dim)) : g.hermitian_matrix(dim);
        const ComplexMatrix t = g.invertible(dim);
        const ComplexMatrix moved = form_detail::adjoint_times(t, m, t);
        ASSERT_EQ(counts(congruence_diagonalize(m)), counts(congruence_diagonalize(moved))) << "case " << c;
    }
}

TEST(Property, ProductSignatureInequalities)
{
    Gen g(0x5eed0002);
    int rank_one_products = 0;
    for (int c = 0; c < kCases; ++c) {
        const unsigned n = g.uniform(1, 3);
        auto factor = [&] {
            if (g.coin(0.25)) {
                HermPoly h = abs_squared(g.holomorphic(n, 2, g.uniform(1, 3)));
                return g.coin() ? h : -h;
            }
            return g.herm(n, 2, g.uniform(1, 4));
        };
        const HermPoly p = factor(), q = factor();
        const auto [A1, B1] = signature_pair(p);
        const auto [A2, B2] = signature_pair(q);
        const auto [A, B] = signature_pair(p * q);
        ASSERT_LE(A, A1 * A2 + B1 * B2) << p.to_string() << " | " << q.to_string();
        ASSERT_LE(B, A1 * B2 + A2 * B1) << p.to_string() << " | " << q.to_string();
        ASSERT_LE(A + B, (A1 + B1) * (A2 + B2));
        if (A + B == 1) {
            ++rank_one_products;
            ASSERT_EQ(A1 + B1, 1u);
            ASSERT_EQ(A2 + B2, 1u);
        }
    }
    EXPECT_GT(rank_one_products, 0);
}

TEST(Property, DiagonalCorrespondence)
{
    Gen g(0x5eed0003);
    for (int c = 0; c < kCases; ++c) {
        const RealPoly P = g.real(g.uniform(1, 3), 4, g.uniform(0, 6));
        ASSERT_EQ(sign_counts(P), signature_pair(moment_lift(P))) << to_string(P);
    }
}

TEST(Property, DivisionWitnessesRemultiply)
{
    Gen g(0x5eed0004);
    for (int c = 0; c < kCases; ++c) {
        const unsigned n = g.uniform(2, 3);
        const HermPoly r = hyperquadric(n - 1);
        const HermPoly p = g.herm(n, 2, g.uniform(1, 4));
        const HermDivision d = divide_by_r(p);
        ASSERT_EQ(r.poly() * d.witness.quotient + d.witness.remainder, p.poly());
        if (p.is_zero()) continue;
        const HermDivision m = divide_by_r(r * p, g.uniform(0, n - 2));
        ASSERT_TRUE(m.member());
        ASSERT_EQ(*m.quotient, p);
    }
}

TEST(Property, ParsePrintRoundTrip)
{
    Gen g(0x5eed0005);
    for (int c = 0; c < kCases; ++c) {
        const unsigned n = g.uniform(1, 4);
        const HermPoly p = g.herm(n, 3, g.uniform(0, 5));
        ASSERT_EQ(parse_hermitian(p.to_string(), n), p) << p.to_string();
        const RealPoly P = g.real(n, 3, g.uniform(0, 5));
        ASSERT_EQ(parse_real(to_string(P), n), P) << to_string(P);
    }
}

TEST(Property, NegationSwapsSignature)
{
    Gen g(0x5eed0006);
    for (int c = 0; c < kCases; ++c) {
        const HermPoly p = g.herm(g.uniform(1, 3), 2, g.uniform(1, 5));
        const auto [A, B] = signature_pair(p);
        ASSERT_EQ(signature_pair(-p), std::make_pair(B, A));
    }
}

TEST(Property, ExactInertiaMatchesEigenOracle)
{
    Gen g(0x5eed0007);
    for (int c = 0; c < kCases; ++c) {
        const std::size_t dim = g.coin(0.9) ? g.uniform(1, 20) : g.uniform(21, 60);
        const ComplexMatrix m = g.coin(0.2) ? g.low_rank(dim, g.uniform(0, dim - 1)) : g.hermitian_matrix(dim);
        Eigen::MatrixXcd e(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) e(i, j) = {m[i][j].re().to_double(), m[i][j].im().to_double()};
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e, Eigen::EigenvaluesOnly);
        const double tol = 1e-9 * std::max(1.0, e.norm());
        unsigned pos = 0, neg = 0;
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
            const double v = es.eigenvalues()(i);
            if (v > tol) ++pos;
            else if (v < -tol) ++neg;
        }
        const CongruenceResult r = congruence_diagonalize(m);
        ASSERT_EQ(r.positive, pos) << "case " << c << " dim " << dim;
        ASSERT_EQ(r.negative, neg) << "case " << c << " dim " << dim;
        ASSERT_EQ(r.zero, dim - pos - neg);
    }
}
