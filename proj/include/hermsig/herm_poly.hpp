#ifndef HERMSIG_HERM_POLY_HPP
#define HERMSIG_HERM_POLY_HPP

// Hermitian symmetric bipolynomials r(z, w̄) = Σ c_{αβ} z^α w̄^β, stored as a
// polynomial in 2n variables: positions [0, n) hold α, positions [n, 2n) hold β.

#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace hermsig {

using ComplexPoly = Poly<ComplexScalar>;

class HermPoly {
public:
    explicit HermPoly(unsigned n = 0) : n_(n), p_(2 * n) {}

    /// Adopts a polynomial in (z, w̄); rejects anything that is not Hermitian symmetric.
    static HermPoly from_poly(ComplexPoly p, unsigned n)
    {
        if (p.arity() != 2 * n) throw arity_mismatch("expected a polynomial in " + std::to_string(2 * n) + " variables");
        HermPoly h(n);
        h.p_ = std::move(p);
        h.check_symmetry();
        return h;
    }

    static HermPoly constant(unsigned n, const Scalar& c)
    {
        HermPoly h(n);
        h.add_pair(MultiIndex(n), MultiIndex(n), c);
        return h;
    }

    /// |z_j|^{2e} (0-based j).
    static HermPoly abs_power(unsigned n, unsigned j, unsigned e = 1)
    {
        HermPoly h(n);
        MultiIndex m = MultiIndex::unit(n, j, e);
        h.add_pair(m, m, Scalar(1));
        return h;
    }

    /// Adds c z^α w̄^β together with its partner conj(c) z^β w̄^α.
    /// For α = β the coefficient must be real.
    void add_pair(const MultiIndex& alpha, const MultiIndex& beta, const ComplexScalar& c)
    {
        if (alpha == beta) {
            if (!c.is_real()) throw not_hermitian("diagonal coefficient " + c.to_string() + " is not real");
            p_.add_term(concat(alpha, beta), c);
            return;
        }
        p_.add_term(concat(alpha, beta), c);
        p_.add_term(concat(beta, alpha), c.conj());
    }

    [[nodiscard]] unsigned vars() const { return n_; }
    [[nodiscard]] const ComplexPoly& poly() const { return p_; }
    [[nodiscard]] bool is_zero() const { return p_.is_zero(); }
    [[nodiscard]] std::size_t size() const { return p_.size(); }

    [[nodiscard]] MultiIndex alpha(const MultiIndex& key) const { return key.slice(0, n_); }
    [[nodiscard]] MultiIndex beta(const MultiIndex& key) const { return key.slice(n_, n_); }

    [[nodiscard]] ComplexScalar coefficient(const MultiIndex& a, const MultiIndex& b) const
    {
        return p_.coefficient(concat(a, b));
    }

    /// (d, d) with d = max over terms of max(|α|, |β|).
    [[nodiscard]] unsigned bidegree() const
    {
        unsigned d = 0;
        for (const auto& [m, c] : p_.terms()) d = std::max({d, m.degree(0, n_), m.degree(n_, 2 * n_)});
        return d;
    }

    [[nodiscard]] bool is_bihomogeneous() const
    {
        if (p_.is_zero()) return true;
        const unsigned d = bidegree();
        for (const auto& [m, c] : p_.terms())
            if (m.degree(0, n_) != d || m.degree(n_, 2 * n_) != d) return false;
        return true;
    }

    [[nodiscard]] bool is_diagonal() const
    {
        for (const auto& [m, c] : p_.terms())
            if (alpha(m) != beta(m)) return false;
        return true;
    }

    /// Same polynomial viewed in m >= vars() variables.
    [[nodiscard]] HermPoly with_vars(unsigned m) const
    {
        if (m < n_) throw arity_mismatch("cannot drop variables from a Hermitian polynomial");
        if (m == n_) return *this;
        HermPoly h(m);
        for (const auto& [k, c] : p_.terms()) h.p_.add_term(concat(alpha(k).padded(m), beta(k).padded(m)), c);
        return h;
    }

    friend HermPoly operator+(const HermPoly& a, const HermPoly& b) { return combine(a, b, a.p_ + b.p_); }
    friend HermPoly operator-(const HermPoly& a, const HermPoly& b) { return combine(a, b, a.p_ - b.p_); }
    friend HermPoly operator*(const HermPoly& a, const HermPoly& b) { return combine(a, b, a.p_ * b.p_); }
    friend HermPoly operator-(const HermPoly& a)
    {
        HermPoly h(a.n_);
        h.p_ = -a.p_;
        return h;
    }
    friend HermPoly operator*(const Scalar& s, const HermPoly& a)
    {
        HermPoly h(a.n_);
        h.p_ = ComplexScalar(s) * a.p_;
        return h;
    }
    HermPoly& operator+=(const HermPoly& o) { return *this = *this + o; }
    HermPoly& operator-=(const HermPoly& o) { return *this = *this - o; }
    HermPoly& operator*=(const HermPoly& o) { return *this = *this * o; }

    [[nodiscard]] HermPoly pow(unsigned k) const
    {
        HermPoly h(n_);
        h.p_ = p_.pow(k);
        return h;
    }

    friend bool operator==(const HermPoly& a, const HermPoly& b) { return a.n_ == b.n_ && a.p_ == b.p_; }
    friend bool operator!=(const HermPoly& a, const HermPoly& b) { return !(a == b); }

    /// p(z, z̄). A non-real value means the symmetry invariant was broken.
    [[nodiscard]] Scalar evaluate(const std::vector<ComplexScalar>& z) const
    {
        if (z.size() != n_) throw arity_mismatch("evaluation point has the wrong number of coordinates");
        std::vector<ComplexScalar> point(z);
        for (const auto& c : z) point.push_back(c.conj());
        ComplexScalar v = hermsig::evaluate(p_, point);
        if (v.im().is_exact() && !v.im().is_zero())
            throw invariant_violation("Hermitian polynomial evaluated to a non-real value " + v.to_string());
        return v.re();
    }

    /// Text form accepted by the expression parser: c*z1*~z2 + ...
    [[nodiscard]] std::string to_string() const
    {
        const unsigned n = n_;
        return poly_string(p_, [n](unsigned v) {
            return v < n ? "z" + std::to_string(v + 1) : "~z" + std::to_string(v - n + 1);
        });
    }

private:
    static HermPoly combine(const HermPoly& a, const HermPoly& b, ComplexPoly p)
    {
        if (a.n_ != b.n_) throw arity_mismatch("Hermitian polynomials in different numbers of variables");
        HermPoly h(a.n_);
        h.p_ = std::move(p);
        return h;
    }

    void check_symmetry() const
    {
        for (const auto& [k, c] : p_.terms()) {
            MultiIndex partner = concat(beta(k), alpha(k));
            ComplexScalar other = p_.coefficient(partner);
            if (other != c.conj())
                throw not_hermitian("coefficient " + c.to_string() + " at (alpha,beta) = " + alpha(k).to_string() + ","
                                    + beta(k).to_string() + " has partner " + other.to_string() + " at "
                                    + beta(k).to_string() + "," + alpha(k).to_string());
        }
    }

    unsigned n_;
    ComplexPoly p_;
};

/// Substitutes x = (z + w̄)/2, y = (z − w̄)/(2i) into ρ(x₁..x_n, y₁..y_n).
inline HermPoly realify(const RealPoly& rho)
{
    if (rho.arity() % 2) throw arity_mismatch("realify expects an even number of real variables (x, y)");
    const unsigned n = rho.arity() / 2;
    const ComplexScalar half(Scalar::rational(1, 2));
    const ComplexScalar minus_half_i(Scalar(0), Scalar::rational(-1, 2)); // 1/(2i)
    std::vector<ComplexPoly> images;
    for (unsigned j = 0; j < n; ++j) {
        ComplexPoly z = ComplexPoly::variable(2 * n, j), w = ComplexPoly::variable(2 * n, n + j);
        images.push_back(half * (z + w));
    }
    for (unsigned j = 0; j < n; ++j) {
        ComplexPoly z = ComplexPoly::variable(2 * n, j), w = ComplexPoly::variable(2 * n, n + j);
        images.push_back(minus_half_i * (z - w));
    }
    ComplexPoly lifted = substitute(rho.map_coefficients([](const Scalar& c) { return ComplexScalar(c); }), images);
    return HermPoly::from_poly(std::move(lifted), n);
}

/// P(x) ↦ P(|z₁|², ..., |z_n|²): every c x^γ becomes c z^γ w̄^γ.
inline HermPoly moment_lift(const RealPoly& P)
{
    const unsigned n = P.arity();
    HermPoly h(n);
    for (const auto& [g, c] : P.terms()) h.add_pair(g, g, c);
    return h;
}

/// Inverse of moment_lift for diagonal polynomials with real coefficients.
inline RealPoly moment_project(const HermPoly& p)
{
    if (!p.is_diagonal()) throw std::invalid_argument("moment_project needs a diagonal Hermitian polynomial");
    RealPoly P(p.vars());
    for (const auto& [k, c] : p.poly().terms()) P.add_term(p.alpha(k), c.re());
    return P;
}

/// Pads each term with powers of a new z_{n+1} and its conjugate up to bidegree (d, d).
inline HermPoly bihomogenize(const HermPoly& p)
{
    const unsigned n = p.vars(), d = p.bidegree();
    ComplexPoly out(2 * (n + 1));
    for (const auto& [k, c] : p.poly().terms()) {
        MultiIndex a = p.alpha(k).padded(n + 1), b = p.beta(k).padded(n + 1);
        a.set(n, d - a.degree());
        b.set(n, d - b.degree());
        out.add_term(concat(a, b), c);
    }
    return HermPoly::from_poly(std::move(out), n + 1);
}

/// Sets z_last = w̄_last = 1, keeping the variable count.
inline HermPoly dehomogenize_last(const HermPoly& p)
{
    const unsigned n = p.vars();
    ComplexPoly out(2 * n);
    for (const auto& [k, c] : p.poly().terms()) {
        MultiIndex m = k;
        m.set(n - 1, 0);
        m.set(2 * n - 1, 0);
        out.add_term(m, c);
    }
    return HermPoly::from_poly(std::move(out), n);
}

/// r = |z₁|² + ... + |z_n|² − |z_{n+1}|² in n + 1 variables.
inline HermPoly hyperquadric(unsigned n)
{
    HermPoly r(n + 1);
    for (unsigned j = 0; j < n; ++j) r += HermPoly::abs_power(n + 1, j);
    return r - HermPoly::abs_power(n + 1, n);
}

/// ||z||^{2k} in n variables.
inline HermPoly norm_power(unsigned n, unsigned k)
{
    HermPoly s(n);
    for (unsigned j = 0; j < n; ++j) s += HermPoly::abs_power(n, j);
    return s.pow(k);
}

/// Real part of a holomorphic polynomial pairing: h(z)·conj(h(w)).
inline HermPoly abs_squared(const ComplexPoly& h)
{
    const unsigned n = h.arity();
    ComplexPoly out(2 * n);
    for (const auto& [a, ca] : h.terms())
        for (const auto& [b, cb] : h.terms()) out.add_term(concat(a, b), ca * cb.conj());
    return HermPoly::from_poly(std::move(out), n);
}

} // namespace hermsig

#endif
