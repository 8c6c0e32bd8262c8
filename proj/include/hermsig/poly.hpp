#ifndef HERMSIG_POLY_HPP
#define HERMSIG_POLY_HPP

// Sparse multivariate polynomials over an exact coefficient type, with
// single-divisor division under an arbitrary monomial order.

#include <functional>
#include <type_traits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "multi_index.hpp"
#include "scalar.hpp"

namespace hermsig {

template <typename C>
class Poly {
public:
    using Terms = std::map<MultiIndex, C, GrlexDescending>;

    explicit Poly(unsigned arity = 0) : arity_(arity) {}

    static Poly constant(unsigned arity, const C& c)
    {
        Poly p(arity);
        p.add_term(MultiIndex(arity), c);
        return p;
    }
    static Poly variable(unsigned arity, unsigned var)
    {
        Poly p(arity);
        p.add_term(MultiIndex::unit(arity, var), C(1));
        return p;
    }
    static Poly monomial(const MultiIndex& m, const C& c = C(1))
    {
        Poly p(m.arity());
        p.add_term(m, c);
        return p;
    }

    [[nodiscard]] unsigned arity() const { return arity_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    /// Adds c * x^m, merging with an existing term and dropping exact zeros.
    void add_term(const MultiIndex& m, const C& c)
    {
        if (m.arity() != arity_) throw arity_mismatch("term arity " + std::to_string(m.arity()) + " in a polynomial of arity " + std::to_string(arity_));
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    [[nodiscard]] C coefficient(const MultiIndex& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    [[nodiscard]] unsigned total_degree() const
    {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    [[nodiscard]] unsigned degree_in(unsigned var) const
    {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
        return d;
    }

    [[nodiscard]] bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero()); }

    /// Leading term under grlex.
    [[nodiscard]] const std::pair<const MultiIndex, C>& leading() const
    {
        if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
        return *terms_.begin();
    }

    [[nodiscard]] Poly with_arity(unsigned m) const
    {
        Poly r(m);
        for (const auto& [mono, c] : terms_) r.terms_.emplace(mono.padded(m), c);
        return r;
    }

    template <typename F>
    [[nodiscard]] auto map_coefficients(F f) const
    {
        Poly<std::decay_t<decltype(f(std::declval<const C&>()))>> r(arity_);
        for (const auto& [m, c] : terms_) r.add_term(m, f(c));
        return r;
    }

    /// Rewrites every exponent vector with `f` (which must be injective on the support).
    template <typename F>
    [[nodiscard]] Poly map_monomials(unsigned new_arity, F f) const
    {
        Poly r(new_arity);
        for (const auto& [m, c] : terms_) r.add_term(f(m), c);
        return r;
    }

    friend Poly operator+(Poly a, const Poly& b)
    {
        check(a, b);
        for (const auto& [m, c] : b.terms_) a.add_term(m, c);
        return a;
    }
    friend Poly operator-(Poly a, const Poly& b)
    {
        check(a, b);
        for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
        return a;
    }
    friend Poly operator-(const Poly& a)
    {
        Poly r(a.arity_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        check(a, b);
        Poly r(a.arity_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
        return r;
    }
    friend Poly operator*(const C& s, const Poly& a)
    {
        Poly r(a.arity_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    [[nodiscard]] Poly pow(unsigned k) const
    {
        Poly result = constant(arity_, C(1));
        Poly base = *this;
        while (k) {
            if (k & 1u) result = result * base;
            k >>= 1u;
            if (k) base = base * base;
        }
        return result;
    }

    friend bool operator==(const Poly& a, const Poly& b)
    {
        if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
        auto ib = b.terms_.begin();
        for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
            if (ia->first != ib->first || ia->second != ib->second) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    static void check(const Poly& a, const Poly& b)
    {
        if (a.arity_ != b.arity_)
            throw arity_mismatch("polynomial arity mismatch: " + std::to_string(a.arity_) + " vs " + std::to_string(b.arity_));
    }

    unsigned arity_ = 0;
    Terms terms_;
};

using RealPoly = Poly<Scalar>;

/// p = divisor * quotient + remainder, produced by single-divisor division.
template <typename C>
struct DivisionWitness {
    Poly<C> dividend;
    Poly<C> divisor;
    Poly<C> quotient;
    Poly<C> remainder;
    bool member = false;

    /// Re-multiplies and compares exactly.
    [[nodiscard]] bool identity_holds() const { return divisor * quotient + remainder == dividend; }
};

/// Monomial order given as a strict "less" predicate.
using MonomialLess = std::function<bool(const MultiIndex&, const MultiIndex&)>;

/// Divides `p` by the single polynomial `g` with respect to `less`. No term of
/// the remainder is divisible by the leading monomial of `g`, so the remainder
/// vanishes exactly when `g` divides `p`.
template <typename C>
DivisionWitness<C> divide_single(const Poly<C>& p, const Poly<C>& g, const MonomialLess& less)
{
    if (g.is_zero()) throw division_by_zero();
    if (p.arity() != g.arity()) throw arity_mismatch("division arity mismatch");
    auto desc = [&less](const MultiIndex& a, const MultiIndex& b) { return less(b, a); };
    using Work = std::map<MultiIndex, C, decltype(desc)>;

    const MultiIndex* lead = nullptr;
    for (const auto& [m, c] : g.terms())
        if (!lead || less(*lead, m)) lead = &m;
    const MultiIndex lead_mono = *lead;
    const C lead_inv = g.coefficient(lead_mono).inverse();

    Work work(desc);
    for (const auto& [m, c] : p.terms()) work.emplace(m, c);

    DivisionWitness<C> out{p, g, Poly<C>(p.arity()), Poly<C>(p.arity()), false};
    while (!work.empty()) {
        auto top = work.begin();
        const MultiIndex mono = top->first;
        const C coeff = top->second;
        if (!lead_mono.divides(mono)) {
            out.remainder.add_term(mono, coeff);
            work.erase(top);
            continue;
        }
        const MultiIndex shift = mono - lead_mono;
        const C factor = coeff * lead_inv;
        out.quotient.add_term(shift, factor);
        for (const auto& [gm, gc] : g.terms()) {
            MultiIndex target = gm + shift;
            C delta = factor * gc;
            auto [it, inserted] = work.try_emplace(target, -delta);
            if (!inserted) {
                it->second -= delta;
                if (it->second.is_zero()) work.erase(it);
            }
        }
    }
    out.member = out.remainder.is_zero();
    return out;
}

inline MonomialLess grlex_less()
{
    return [](const MultiIndex& a, const MultiIndex& b) { return grlex_compare(a, b) < 0; };
}

/// Exact quotient p / g; throws if g does not divide p.
template <typename C>
Poly<C> exact_divide(const Poly<C>& p, const Poly<C>& g)
{
    auto w = divide_single(p, g, grlex_less());
    if (!w.member) throw std::domain_error("polynomial division is not exact");
    return w.quotient;
}

/// Substitutes images[i] for variable i. All images share one arity.
template <typename C>
Poly<C> substitute(const Poly<C>& p, const std::vector<Poly<C>>& images)
{
    if (images.size() != p.arity()) throw arity_mismatch("substitution needs one image per variable");
    const unsigned out_arity = images.empty() ? 0 : images.front().arity();
    std::vector<std::map<unsigned, Poly<C>>> powers(images.size());
    auto power = [&](unsigned var, unsigned e) -> const Poly<C>& {
        auto& cache = powers[var];
        if (auto it = cache.find(e); it != cache.end()) return it->second;
        return cache.emplace(e, images[var].pow(e)).first->second;
    };
    Poly<C> out(out_arity);
    for (const auto& [m, c] : p.terms()) {
        Poly<C> term = Poly<C>::constant(out_arity, c);
        for (unsigned v = 0; v < p.arity(); ++v)
            if (m[v]) term = term * power(v, m[v]);
        out += term;
    }
    return out;
}

template <typename C>
C evaluate(const Poly<C>& p, const std::vector<C>& point)
{
    if (point.size() != p.arity()) throw arity_mismatch("evaluation point arity mismatch");
    C acc(0);
    for (const auto& [m, c] : p.terms()) {
        C t = c;
        for (unsigned v = 0; v < p.arity(); ++v)
            for (unsigned e = 0; e < m[v]; ++e) t *= point[v];
        acc += t;
    }
    return acc;
}

/// Homogenises with a new trailing variable up to the total degree.
template <typename C>
Poly<C> homogenize(const Poly<C>& p)
{
    const unsigned n = p.arity(), d = p.total_degree();
    return p.map_monomials(n + 1, [&](const MultiIndex& m) {
        MultiIndex r = m.padded(n + 1);
        r.set(n, d - m.degree());
        return r;
    });
}

/// Dehomogenises by setting the last variable to 1 (the arity stays).
template <typename C>
Poly<C> set_last_to_one(const Poly<C>& p)
{
    const unsigned n = p.arity();
    Poly<C> r(n);
    for (const auto& [m, c] : p.terms()) {
        MultiIndex k = m;
        k.set(n - 1, 0);
        r.add_term(k, c);
    }
    return r;
}

/// Numbers of positive and negative coefficients.
inline std::pair<unsigned, unsigned> sign_counts(const RealPoly& p)
{
    unsigned pos = 0, neg = 0;
    for (const auto& [m, c] : p.terms()) {
        int s = c.sign();
        if (s > 0) ++pos;
        else if (s < 0) ++neg;
    }
    return {pos, neg};
}

/// Univariate helper: sum of coeffs[k] t^k.
inline RealPoly univariate(const std::vector<Scalar>& coeffs)
{
    RealPoly p(1);
    for (unsigned k = 0; k < coeffs.size(); ++k) p.add_term(MultiIndex::unit(1, 0, k), coeffs[k]);
    return p;
}

/// Variable names used by the text form: x1.. for real polynomials.
inline std::string monomial_string(const MultiIndex& m, const std::function<std::string(unsigned)>& name)
{
    std::string s;
    for (unsigned v = 0; v < m.arity(); ++v) {
        if (!m[v]) continue;
        if (!s.empty()) s += "*";
        s += name(v);
        if (m[v] > 1) s += "^" + std::to_string(m[v]);
    }
    return s;
}

template <typename C>
std::string poly_string(const Poly<C>& p, const std::function<std::string(unsigned)>& name)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        std::string mono = monomial_string(m, name);
        std::string coef = c.to_string();
        bool negative = !coef.empty() && coef[0] == '-';
        if (negative) coef.erase(0, 1);
        std::string term;
        if (mono.empty()) term = coef;
        else if (coef == "1") term = mono;
        else term = coef + "*" + mono;
        if (out.empty()) out = negative ? "-" + term : term;
        else out += (negative ? " - " : " + ") + term;
    }
    return out;
}

inline std::string to_string(const RealPoly& p)
{
    return poly_string(p, [](unsigned v) { return "x" + std::to_string(v + 1); });
}

} // namespace hermsig

#endif
