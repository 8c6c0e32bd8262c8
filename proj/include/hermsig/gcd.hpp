#ifndef HERMSIG_GCD_HPP
#define HERMSIG_GCD_HPP

// Multivariate gcd over the Gaussian rationals: recursive content / primitive
// part with a primitive pseudo-remainder sequence in one variable at a time.

#include <optional>
#include <vector>

#include "poly.hpp"

namespace hermsig {

namespace gcd_detail {

using CP = Poly<ComplexScalar>;

inline std::optional<unsigned> top_variable(const CP& p)
{
    for (unsigned v = p.arity(); v-- > 0;)
        if (p.degree_in(v) > 0) return v;
    return std::nullopt;
}

/// Coefficients of p as a polynomial in variable v (index = power of v).
inline std::vector<CP> coefficients_in(const CP& p, unsigned v)
{
    std::vector<CP> out(p.degree_in(v) + 1, CP(p.arity()));
    for (const auto& [m, c] : p.terms()) {
        MultiIndex k = m;
        k.set(v, 0);
        out[m[v]].add_term(k, c);
    }
    return out;
}

inline CP times_var_power(const CP& p, unsigned v, unsigned e)
{
    if (e == 0) return p;
    return p * CP::monomial(MultiIndex::unit(p.arity(), v, e));
}

/// Makes the grlex-leading coefficient 1.
inline CP monic(const CP& p)
{
    if (p.is_zero()) return p;
    return p.leading().second.inverse() * p;
}

CP gcd(const CP& a, const CP& b);

inline CP content_in(const CP& p, unsigned v)
{
    CP g(p.arity());
    for (const auto& c : coefficients_in(p, v)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? monic(c) : gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

/// lc(b)^(deg a - deg b + 1) a mod b, in variable v.
inline CP pseudo_remainder(CP a, const CP& b, unsigned v)
{
    const unsigned db = b.degree_in(v);
    const CP lb = coefficients_in(b, v)[db];
    while (!a.is_zero() && a.degree_in(v) >= db) {
        const unsigned da = a.degree_in(v);
        const CP la = coefficients_in(a, v)[da];
        a = lb * a - times_var_power(la * b, v, da - db);
    }
    return a;
}

inline CP gcd(const CP& a, const CP& b)
{
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    for (const CP* x : {&a, &b})
        for (const auto& [m, c] : x->terms())
            if (!c.is_gaussian_rational())
                throw std::invalid_argument("polynomial gcd is only supported over the Gaussian rationals");
    auto va = top_variable(a), vb = top_variable(b);
    if (!va && !vb) return CP::constant(a.arity(), ComplexScalar(1));
    const unsigned v = std::max(va.value_or(0), vb.value_or(0));
    if (a.degree_in(v) == 0 || b.degree_in(v) == 0) {
        // one side is free of v: the gcd divides every v-coefficient of the other
        const CP& free = a.degree_in(v) == 0 ? a : b;
        const CP& other = a.degree_in(v) == 0 ? b : a;
        return gcd(free, content_in(other, v));
    }
    const CP ca = content_in(a, v), cb = content_in(b, v);
    CP x = exact_divide(a, ca), y = exact_divide(b, cb);
    if (x.degree_in(v) < y.degree_in(v)) std::swap(x, y);
    while (!y.is_zero() && y.degree_in(v) > 0) {
        CP r = pseudo_remainder(x, y, v);
        x = y;
        y = r.is_zero() ? r : exact_divide(r, content_in(r, v));
    }
    // y nonzero and free of v means the v-primitive parts are coprime
    CP prim = y.is_zero() ? exact_divide(x, content_in(x, v)) : CP::constant(a.arity(), ComplexScalar(1));
    return monic(prim * gcd(ca, cb));
}

} // namespace gcd_detail

/// Monic (grlex-leading coefficient 1) gcd of Gaussian-rational polynomials.
inline Poly<ComplexScalar> poly_gcd(const Poly<ComplexScalar>& a, const Poly<ComplexScalar>& b) { return gcd_detail::gcd(a, b); }

/// Gcd of a list. Short-cuts to a monomial when any member is a single term.
inline Poly<ComplexScalar> poly_gcd(const std::vector<Poly<ComplexScalar>>& ps)
{
    using CP = Poly<ComplexScalar>;
    std::vector<const CP*> nonzero;
    for (const auto& p : ps)
        if (!p.is_zero()) nonzero.push_back(&p);
    if (nonzero.empty()) throw std::invalid_argument("gcd of zero polynomials");
    const unsigned n = nonzero.front()->arity();
    bool has_monomial = false;
    for (const CP* p : nonzero) has_monomial |= p->size() == 1;
    if (has_monomial) {
        std::optional<MultiIndex> low;
        for (const CP* p : nonzero)
            for (const auto& [m, c] : p->terms()) low = low ? min(*low, m) : m;
        return CP::monomial(*low);
    }
    CP g(n);
    for (const CP* p : nonzero) {
        g = g.is_zero() ? gcd_detail::monic(*p) : poly_gcd(g, *p);
        if (g.is_constant()) break;
    }
    return g;
}

} // namespace hermsig

#endif
