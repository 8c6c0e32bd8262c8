#ifndef HERMSIG_QUOTIENT_HPP
#define HERMSIG_QUOTIENT_HPP

// Division by the hyperquadric form r, by x₁+...+x_n − x_{n+1}, holomorphic
// content, projective degree, and the bounded stabilization search.

#include <optional>
#include <random>

#include "gcd.hpp"
#include "hermitian_form.hpp"

namespace hermsig {

/// Weight order: exponent at `first`, then at `second`, then grlex.
inline MonomialLess weighted_less(unsigned first, std::optional<unsigned> second = std::nullopt)
{
    return [first, second](const MultiIndex& a, const MultiIndex& b) {
        if (a[first] != b[first]) return a[first] < b[first];
        if (second && a[*second] != b[*second]) return a[*second] < b[*second];
        return grlex_compare(a, b) < 0;
    };
}

struct HermDivision {
    DivisionWitness<ComplexScalar> witness;
    std::optional<HermPoly> quotient; // set when r divides p

    [[nodiscard]] bool member() const { return witness.member; }
};

/// Divides p (in n+1 variables) by r = ||z||² − |z_{n+1}|². The order puts
/// z_j w̄_j first, so r is its own Gröbner basis and the remainder is zero
/// exactly when r divides p.
inline HermDivision divide_by_r(const HermPoly& p, unsigned pivot = 0)
{
    const unsigned N = p.vars();
    if (N < 2) throw arity_mismatch("divide_by_r needs at least two variables");
    if (pivot >= N - 1) throw std::out_of_range("pivot must index one of z_1..z_n");
    const HermPoly r = hyperquadric(N - 1);
    HermDivision out{divide_single(p.poly(), r.poly(), weighted_less(N + pivot, pivot)), std::nullopt};
    if (out.witness.member) out.quotient = HermPoly::from_poly(out.witness.quotient, N);
    return out;
}

/// x₁ + ... + x_n − x_{n+1} (homogeneous) or x₁ + ... + x_n − 1 in n variables.
inline RealPoly sphere_linear(unsigned n, bool homogeneous)
{
    RealPoly L(homogeneous ? n + 1 : n);
    for (unsigned j = 0; j < n; ++j) L.add_term(MultiIndex::unit(L.arity(), j), Scalar(1));
    if (homogeneous) L.add_term(MultiIndex::unit(n + 1, n), Scalar(-1));
    else L.add_term(MultiIndex(n), Scalar(-1));
    return L;
}

/// Divides P by L, leading on x₁ (L must contain x₁ with a nonzero coefficient).
inline DivisionWitness<Scalar> divide_real(const RealPoly& P, const RealPoly& L)
{
    if (P.arity() != L.arity()) throw arity_mismatch("divide_real arity mismatch");
    if (L.coefficient(MultiIndex::unit(L.arity(), 0)).is_zero() || L.degree_in(0) != 1)
        throw std::invalid_argument("divisor must be linear in x1");
    return divide_single(P, L, weighted_less(0));
}

inline DivisionWitness<Scalar> divide_real(const RealPoly& P)
{
    // the inhomogeneous divisor when P is inhomogeneous, otherwise the homogeneous one
    bool homogeneous = true;
    const unsigned d = P.total_degree();
    for (const auto& [m, c] : P.terms()) homogeneous &= m.degree() == d;
    if (homogeneous && P.arity() >= 2) return divide_real(P, sphere_linear(P.arity() - 1, true));
    return divide_real(P, sphere_linear(P.arity(), false));
}

struct ContentResult {
    Poly<ComplexScalar> h;   // holomorphic factor, monic in grlex
    HermPoly reduced;        // p / (h(z) conj(h(w)))
};

/// Largest h(z) with |h|² dividing p: the gcd of the w̄-coefficients c_β(z).
inline ContentResult holomorphic_content(const HermPoly& p)
{
    if (p.is_zero()) throw std::invalid_argument("holomorphic content of the zero polynomial");
    const unsigned n = p.vars();
    std::map<MultiIndex, Poly<ComplexScalar>, GrlexDescending> by_beta;
    for (const auto& [k, c] : p.poly().terms()) {
        auto [it, ins] = by_beta.try_emplace(p.beta(k), Poly<ComplexScalar>(n));
        it->second.add_term(p.alpha(k), c);
    }
    std::vector<Poly<ComplexScalar>> cs;
    for (auto& [b, c] : by_beta) cs.push_back(std::move(c));
    Poly<ComplexScalar> h = poly_gcd(cs);
    if (h.is_constant()) return {Poly<ComplexScalar>::constant(n, ComplexScalar(1)), p};
    HermPoly hh = abs_squared(h);
    auto w = divide_single(p.poly(), hh.poly(), grlex_less());
    if (!w.member) throw invariant_violation("|h|^2 does not divide p");
    return {h, HermPoly::from_poly(w.quotient, n)};
}

struct ReductionResult {
    HermPoly input;
    HermPoly reduced;
    Poly<ComplexScalar> h;
    unsigned bidegree = 0;      // m in "bihomogeneous of degree (m, m)"
    unsigned total_degree = 0;  // 2m, the degree in (z, z̄) jointly

    /// |h|²·reduced == input, checked by re-multiplication.
    [[nodiscard]] bool identity_holds() const { return abs_squared(h) * reduced == input; }
};

/// Divides out |h|² factors until none remain.
inline ReductionResult projective_degree(const HermPoly& p)
{
    if (p.is_zero()) throw std::invalid_argument("projective degree of the zero polynomial");
    if (!p.is_bihomogeneous()) throw std::invalid_argument("projective degree needs a bihomogeneous polynomial");
    ReductionResult out{p, p, Poly<ComplexScalar>::constant(p.vars(), ComplexScalar(1)), 0, 0};
    for (;;) {
        ContentResult c = holomorphic_content(out.reduced);
        if (c.h.is_constant()) break;
        out.h = out.h * c.h;
        out.reduced = std::move(c.reduced);
    }
    out.bidegree = out.reduced.bidegree();
    out.total_degree = 2 * out.bidegree;
    return out;
}

/// Checks p > 0 at `samples` random nonzero Gaussian-rational points. This is
/// evidence, not proof.
inline bool positive_on_samples(const HermPoly& p, unsigned samples = 64, std::uint64_t seed = 7)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-9, 9);
    for (unsigned s = 0; s < samples; ++s) {
        std::vector<ComplexScalar> z;
        bool nonzero = false;
        for (unsigned j = 0; j < p.vars(); ++j) {
            z.emplace_back(Scalar::rational(coord(rng), 4), Scalar::rational(coord(rng), 4));
            nonzero |= !z.back().is_zero();
        }
        if (!nonzero) continue;
        if (p.evaluate(z).sign() <= 0) return false;
    }
    return true;
}

struct StabilizationResult {
    std::optional<unsigned> d;
    std::optional<InertiaResult> inertia; // of ||z||^{2d} p for the returned d
};

/// Smallest d <= d_max with ||z||^{2d} p of inertia (N, 0, 0).
inline StabilizationResult stabilization_search(const HermPoly& p, unsigned d_max)
{
    if (!p.is_bihomogeneous()) throw std::invalid_argument("stabilization search needs a bihomogeneous polynomial");
    if (!positive_on_samples(p)) throw std::invalid_argument("polynomial is not positive on the sphere (sampled)");
    HermPoly q = p;
    const HermPoly s = norm_power(p.vars(), 1);
    for (unsigned d = 0; d <= d_max; ++d) {
        if (d > 0) q = s * q;
        InertiaResult in = inertia(q);
        if (in.B == 0 && in.k == 0) return {d, std::move(in)};
    }
    return {};
}

} // namespace hermsig

#endif
