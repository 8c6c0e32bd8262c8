#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <hermsig/constructions/examples.hpp>
#include <hermsig/expression.hpp>
#include <hermsig/hermitian_form.hpp>

using namespace hermsig;

namespace {

using Triple = std::array<unsigned, 3>;

Triple triple(const InertiaResult& r) { return {r.A, r.B, r.k}; }

HermPoly H(const char* text) { return parse_hermitian(text); }

HermPoly lifted(std::vector<Scalar> c) { return lift(univariate(std::move(c))); }

} // namespace

TEST(MonomialBasis, CountsAndOrder)
{
    EXPECT_EQ(monomial_basis(2, 3).size(), 6u);
    EXPECT_EQ(monomial_basis(12, 2).size(), 13u);
    EXPECT_EQ((Ambient{7, 3}).dimension(), 36u);
    const auto b = monomial_basis(1, 3);
    EXPECT_EQ(b.front(), (MultiIndex{1, 0, 0}));
    EXPECT_EQ(b.back(), (MultiIndex{0, 0, 1}));
}

TEST(Signature, Hyperquadrics)
{
    for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(signature_pair(hyperquadric(n)), std::make_pair(n, 1u)) << n;
}

TEST(Signature, SquaredNormOfHolomorphicMap)
{
    // |z1 + z2|² + |z1 − z2|² has two independent components; |z1 + z2|² alone has one
    EXPECT_EQ(signature_pair(H("|z1 + z2|^2 + |z1 - z2|^2")), std::make_pair(2u, 0u));
    EXPECT_EQ(signature_pair(H("|z1 + z2|^2")), std::make_pair(1u, 0u));
    EXPECT_EQ(signature_pair(H("|z1 + z2|^2 - |z1 - z2|^2")), std::make_pair(1u, 1u));
}

TEST(Signature, OffDiagonalNeedsHyperbolicPivot)
{
    // z1 w̄2 + z2 w̄1 has no diagonal entry: one positive and one negative direction
    EXPECT_EQ(signature_pair(H("z1 ~z2 + z2 ~z1")), std::make_pair(1u, 1u));
    EXPECT_EQ(signature_pair(H("i z1 ~z2 - i z2 ~z1")), std::make_pair(1u, 1u));
}

TEST(Inertia, NonDiagonalTriplesInMinimalAmbient)
{
    const HermPoly p = nondiagonal_p(), q = nondiagonal_q();
    EXPECT_EQ(triple(inertia(p, {1, 3})), (Triple{2, 1, 0}));
    EXPECT_EQ(triple(inertia(q, {2, 3})), (Triple{3, 3, 0}));
    EXPECT_EQ(triple(inertia(p * q, {3, 3})), (Triple{2, 2, 6}));
}

TEST(Inertia, DenseAndSparsePathsAgree)
{
    for (const HermPoly& h : {nondiagonal_p(), nondiagonal_q(), nondiagonal_p() * nondiagonal_q(), H("|z1 + 2i z2|^2 - |z3|^2")}) {
        const Ambient amb = minimal_ambient(h);
        const InertiaResult dense = inertia(form_matrix(h, amb));
        const InertiaResult sparse = inertia(h, amb);
        EXPECT_EQ(triple(dense), triple(sparse)) << h.to_string();
        EXPECT_TRUE(verify_witness(dense));
        EXPECT_TRUE(verify_witness(sparse));
    }
}

TEST(Inertia, AmbientChangesZeroCount)
{
    // 1 − t² − 2t⁶ + t⁷ = (1 − t + t²)(1 + t − t² − 2t³ − t⁴ + t⁵)
    const HermPoly p = lifted({1, -1, 1}), q = lifted({1, 1, -1, -2, -1, 1}), pq = p * q;
    EXPECT_EQ(triple(inertia(pq, {7, 2})), (Triple{2, 2, 4}));
    EXPECT_EQ(triple(inertia(p, {2, 3})), (Triple{2, 1, 3}));
    EXPECT_EQ(triple(inertia(q, {5, 3})), (Triple{3, 3, 15}));
    EXPECT_EQ(triple(inertia(pq, {7, 3})), (Triple{2, 2, 32}));
}

TEST(Inertia, SumOfTwelfthPowers)
{
    const HermPoly h = lifted({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
    EXPECT_EQ(triple(inertia(h, {12, 2})), (Triple{2, 0, 11}));
}

TEST(Inertia, ZeroPolynomial)
{
    EXPECT_EQ(triple(inertia(HermPoly(2), {2, 2})), (Triple{0, 0, 3}));
}

TEST(Inertia, WrongAmbientRejected)
{
    EXPECT_THROW((void)inertia(hyperquadric(2), {2, 3}), std::invalid_argument);
    EXPECT_THROW((void)inertia(hyperquadric(2), {1, 2}), arity_mismatch);
    EXPECT_THROW((void)form_matrix(HermPoly::abs_power(9, 0, 8), {8, 9}), std::length_error);
}

TEST(Inertia, NonBihomogeneousInputIsBihomogenized)
{
    const InertiaResult r = inertia(H("|z1|^4 - |z1|^2 + 1"));
    EXPECT_EQ(r.ambient.vars, 2u);
    EXPECT_EQ(r.ambient.degree, 2u);
    EXPECT_EQ(triple(r), (Triple{2, 1, 0}));
}

TEST(Congruence, WitnessDiagonalizes)
{
    ComplexMatrix m = {{ComplexScalar(0), ComplexScalar(1), ComplexScalar(2)},
                       {ComplexScalar(1), ComplexScalar(0), ComplexScalar(Scalar(0), Scalar(1))},
                       {ComplexScalar(2), ComplexScalar(Scalar(0), Scalar(-1)), ComplexScalar(1)}};
    const CongruenceResult r = congruence_diagonalize(m);
    const ComplexMatrix d = form_detail::adjoint_times(r.transform, m, r.transform);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(d[i][j], i == j ? ComplexScalar(r.diagonal[i]) : ComplexScalar(0));
    EXPECT_EQ(r.positive + r.negative + r.zero, 3u);
    // det = −1 and trace = 1 force eigenvalue signs (+, +, −)
    EXPECT_EQ(r.positive, 2u);
    EXPECT_EQ(r.negative, 1u);
    EXPECT_EQ(r.zero, 0u);
}

TEST(Congruence, MatchesEigenvaluesOnFixedMatrix)
{
    const int a[4][4] = {{2, -1, 0, 3}, {-1, 0, 4, 1}, {0, 4, -3, 2}, {3, 1, 2, 1}};
    ComplexMatrix m(4, std::vector<ComplexScalar>(4));
    Eigen::Matrix4d e;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            m[i][j] = ComplexScalar(a[i][j]);
            e(i, j) = a[i][j];
        }
    const CongruenceResult r = congruence_diagonalize(m);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(e);
    unsigned pos = 0, neg = 0;
    for (int i = 0; i < 4; ++i) {
        if (es.eigenvalues()(i) > 1e-9) ++pos;
        if (es.eigenvalues()(i) < -1e-9) ++neg;
    }
    EXPECT_EQ(r.positive, pos);
    EXPECT_EQ(r.negative, neg);
}

TEST(Inertia, WitnessHashIsStable)
{
    const InertiaResult a = inertia(nondiagonal_q()), b = inertia(nondiagonal_q());
    EXPECT_EQ(a.witness_hash(), b.witness_hash());
    EXPECT_NE(a.witness_hash(), inertia(nondiagonal_p()).witness_hash());
}

TEST(SupportBlocks, DiagonalFormsSplitIntoSingletons)
{
    const HermPoly h = lifted({1, -2, 3, -4});
    const auto blocks = form_detail::support_blocks(h);
    EXPECT_EQ(blocks.size(), 4u);
    for (const auto& b : blocks) EXPECT_EQ(b.size(), 1u);
    EXPECT_EQ(form_detail::support_blocks(nondiagonal_p()).size(), 2u);
}

TEST(Rank, IndefiniteAndRank)
{
    EXPECT_EQ(rank(nondiagonal_q()), 6u);
    EXPECT_TRUE(is_indefinite(hyperquadric(1)));
    EXPECT_FALSE(is_indefinite(norm_power(3, 2)));
}
