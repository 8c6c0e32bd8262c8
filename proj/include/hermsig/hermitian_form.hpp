#ifndef HERMSIG_HERMITIAN_FORM_HPP
#define HERMSIG_HERMITIAN_FORM_HPP

// Coefficient matrices of Hermitian polynomials and their exact inertia via
// congruence (Lagrange) diagonalization.

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "herm_poly.hpp"

namespace hermsig {

/// V(d, vars): homogeneous degree-d polynomials in `vars` variables.
struct Ambient {
    unsigned degree = 0;
    unsigned vars = 0;

    /// C(d + vars - 1, vars - 1).
    [[nodiscard]] std::uint64_t dimension() const
    {
        if (vars == 0) return degree == 0 ? 1 : 0;
        unsigned __int128 r = 1;
        for (unsigned i = 1; i < vars; ++i) {
            r = r * (degree + i) / i;
            if (r > UINT64_MAX) throw std::overflow_error("ambient dimension overflows 64 bits");
        }
        return static_cast<std::uint64_t>(r);
    }
    friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// Degree-d monomials in `vars` variables, graded-lex descending (z1^d first).
inline std::vector<MultiIndex> monomial_basis(unsigned degree, unsigned vars)
{
    std::vector<MultiIndex> out;
    MultiIndex m(vars);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned left) {
        if (pos + 1 == vars) {
            m.set(pos, left);
            out.push_back(m);
            return;
        }
        for (unsigned e = left + 1; e-- > 0;) {
            m.set(pos, e);
            rec(pos + 1, left - e);
        }
        m.set(pos, 0);
    };
    if (vars == 0) {
        if (degree == 0) out.emplace_back(0);
        return out;
    }
    rec(0, degree);
    return out;
}

using ComplexMatrix = std::vector<std::vector<ComplexScalar>>;

/// Dense Hermitian coefficient matrix on the monomial basis of an ambient space.
struct FormMatrix {
    Ambient ambient;
    std::vector<MultiIndex> basis;
    ComplexMatrix entries;

    [[nodiscard]] std::size_t size() const { return basis.size(); }
};

inline constexpr std::uint64_t kDenseDimensionCap = 2048;

inline HermPoly place_in(const HermPoly& p, const Ambient& amb)
{
    if (p.vars() > amb.vars)
        throw arity_mismatch("declared ambient has " + std::to_string(amb.vars) + " variables but the polynomial uses "
                             + std::to_string(p.vars()));
    HermPoly q = p.with_vars(amb.vars);
    if (!q.is_zero() && (!q.is_bihomogeneous() || q.bidegree() != amb.degree))
        throw std::invalid_argument("polynomial is not bihomogeneous of degree (" + std::to_string(amb.degree) + ","
                                    + std::to_string(amb.degree) + ")");
    return q;
}

/// Smallest ambient holding p: (bidegree, vars) when bihomogeneous; otherwise
/// that of its bihomogenization.
inline Ambient minimal_ambient(const HermPoly& p)
{
    if (p.is_bihomogeneous()) return {p.bidegree(), p.vars()};
    return {p.bidegree(), p.vars() + 1};
}

inline FormMatrix form_matrix(const HermPoly& p, const Ambient& amb)
{
    HermPoly q = place_in(p, amb);
    if (amb.dimension() > kDenseDimensionCap)
        throw std::length_error("dense form matrix of dimension " + std::to_string(amb.dimension()) + " exceeds the cap");
    FormMatrix fm{amb, monomial_basis(amb.degree, amb.vars), {}};
    std::map<MultiIndex, std::size_t, GrlexDescending> index;
    for (std::size_t i = 0; i < fm.basis.size(); ++i) index.emplace(fm.basis[i], i);
    fm.entries.assign(fm.size(), std::vector<ComplexScalar>(fm.size(), ComplexScalar(0)));
    for (const auto& [k, c] : q.poly().terms()) fm.entries[index.at(q.alpha(k))][index.at(q.beta(k))] = c;
    return fm;
}

// ---------------------------------------------------------------------------

/// One congruence-diagonalized block: T* M T = diag(signs) up to positive scaling.
struct DiagonalBlock {
    std::vector<MultiIndex> basis;
    ComplexMatrix matrix;     // original block
    ComplexMatrix transform;  // columns = new basis vectors
    std::vector<Scalar> diagonal;
    std::vector<int> signs;
};

struct CongruenceResult {
    unsigned positive = 0;
    unsigned negative = 0;
    unsigned zero = 0;
    ComplexMatrix transform;
    std::vector<Scalar> diagonal;
};

namespace form_detail {

inline ComplexMatrix identity(std::size_t n)
{
    ComplexMatrix t(n, std::vector<ComplexScalar>(n, ComplexScalar(0)));
    for (std::size_t i = 0; i < n; ++i) t[i][i] = ComplexScalar(1);
    return t;
}

inline ComplexMatrix adjoint_times(const ComplexMatrix& t, const ComplexMatrix& m, const ComplexMatrix& s)
{
    const std::size_t n = m.size();
    ComplexMatrix ms(n, std::vector<ComplexScalar>(n, ComplexScalar(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (m[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!s[k][j].is_zero()) ms[i][j] += m[i][k] * s[k][j];
        }
    ComplexMatrix out(n, std::vector<ComplexScalar>(n, ComplexScalar(0)));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (t[k][i].is_zero()) continue;
            ComplexScalar tc = t[k][i].conj();
            for (std::size_t j = 0; j < n; ++j)
                if (!ms[k][j].is_zero()) out[i][j] += tc * ms[k][j];
        }
    return out;
}

} // namespace form_detail

/// Exact congruence diagonalization of a Hermitian matrix.
inline CongruenceResult congruence_diagonalize(ComplexMatrix m)
{
    const std::size_t n = m.size();
    CongruenceResult out;
    out.transform = form_detail::identity(n);
    out.diagonal.assign(n, Scalar(0));
    ComplexMatrix& t = out.transform;
    std::vector<bool> done(n, false);

    // M <- E* M E with E = I + c e_j e_i^T, i.e. col_i += c col_j then row_i += conj(c) row_j.
    auto add_column = [&](std::size_t i, std::size_t j, const ComplexScalar& c) {
        for (std::size_t r = 0; r < n; ++r)
            if (!done[r] && !m[r][j].is_zero()) m[r][i] += c * m[r][j];
        ComplexScalar cc = c.conj();
        for (std::size_t col = 0; col < n; ++col)
            if (!done[col] && !m[j][col].is_zero()) m[i][col] += cc * m[j][col];
        for (std::size_t r = 0; r < n; ++r)
            if (!t[r][j].is_zero()) t[r][i] += c * t[r][j];
    };

    for (std::size_t step = 0; step < n; ++step) {
        std::size_t k = n;
        for (std::size_t i = 0; i < n && k == n; ++i)
            if (!done[i] && !m[i][i].is_zero()) k = i;
        if (k == n) {
            // zero diagonal: manufacture one from an off-diagonal entry
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!done[j] && !m[i][j].is_zero()) {
                        pi = i;
                        pj = j;
                        break;
                    }
            }
            if (pi == n) break; // remaining block is zero
            ComplexScalar c = m[pi][pj].re().is_zero() ? ComplexScalar::i() : ComplexScalar(1);
            add_column(pi, pj, c);
            k = pi;
        }
        const Scalar pivot = m[k][k].re();
        const Scalar pivot_inv = pivot.inverse();
        std::vector<std::size_t> active;
        std::vector<ComplexScalar> f(n);
        for (std::size_t j = 0; j < n; ++j)
            if (j != k && !done[j] && !m[k][j].is_zero()) {
                active.push_back(j);
                f[j] = m[k][j] * ComplexScalar(pivot_inv);
            }
        // Schur complement on the active rows/columns; Hermitian, so fill the upper half and mirror.
        for (std::size_t a = 0; a < active.size(); ++a) {
            const std::size_t i = active[a];
            const ComplexScalar mik = m[i][k];
            for (std::size_t b = a; b < active.size(); ++b) {
                const std::size_t j = active[b];
                m[i][j] -= mik * f[j];
                if (i == j) m[i][i] = ComplexScalar(m[i][i].re());
                else m[j][i] = m[i][j].conj();
            }
        }
        for (std::size_t j : active) {
            for (std::size_t r = 0; r < n; ++r)
                if (!t[r][k].is_zero()) t[r][j] -= f[j] * t[r][k];
            m[k][j] = ComplexScalar(0);
            m[j][k] = ComplexScalar(0);
        }
        done[k] = true;
        out.diagonal[k] = pivot;
        int s = pivot.sign();
        if (s > 0) ++out.positive;
        else if (s < 0) ++out.negative;
        else throw invariant_violation("pivot with zero sign");
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!done[i]) ++out.zero;
    return out;
}

/// Exact (A, B, k) with the block witnesses that produced it.
struct InertiaResult {
    Ambient ambient;
    unsigned A = 0;
    unsigned B = 0;
    std::uint64_t k = 0;
    std::vector<DiagonalBlock> blocks;

    [[nodiscard]] unsigned rank() const { return A + B; }
    [[nodiscard]] std::pair<unsigned, unsigned> signature() const { return {A, B}; }

    /// FNV-1a over the serialized transform witnesses.
    [[nodiscard]] std::uint64_t witness_hash() const
    {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](const std::string& s) {
            for (unsigned char ch : s) {
                h ^= ch;
                h *= 1099511628211ull;
            }
            h ^= 0xff;
            h *= 1099511628211ull;
        };
        for (const auto& b : blocks) {
            for (const auto& m : b.basis) mix(m.to_string());
            for (const auto& row : b.transform)
                for (const auto& c : row) mix(c.to_string());
        }
        return h;
    }
};

namespace form_detail {

// Union-find over the monomials of the support; connected components are the
// diagonal blocks of the coefficient matrix.
inline std::vector<std::vector<MultiIndex>> support_blocks(const HermPoly& p)
{
    std::map<MultiIndex, std::size_t, GrlexDescending> id;
    std::vector<MultiIndex> monos;
    auto get = [&](const MultiIndex& m) {
        auto [it, ins] = id.try_emplace(m, monos.size());
        if (ins) monos.push_back(m);
        return it->second;
    };
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& [key, c] : p.poly().terms()) edges.emplace_back(get(p.alpha(key)), get(p.beta(key)));
    std::vector<std::size_t> parent(monos.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : edges) parent[find(a)] = find(b);
    std::map<std::size_t, std::vector<MultiIndex>> groups;
    for (const auto& [m, i] : id) groups[find(i)].push_back(m); // grlex-descending within a block
    std::vector<std::vector<MultiIndex>> out;
    for (auto& [root, g] : groups) out.push_back(std::move(g));
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return grlex_compare(x.front(), y.front()) > 0; });
    return out;
}

} // namespace form_detail

/// Counts (A, B) over the support of p, block by block. Valid for any Hermitian
/// polynomial; k is left 0 and filled in by `inertia`.
inline InertiaResult support_inertia(const HermPoly& p)
{
    InertiaResult res;
    for (auto& basis : form_detail::support_blocks(p)) {
        DiagonalBlock blk;
        blk.basis = std::move(basis);
        const std::size_t n = blk.basis.size();
        blk.matrix.assign(n, std::vector<ComplexScalar>(n, ComplexScalar(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) blk.matrix[i][j] = p.coefficient(blk.basis[i], blk.basis[j]);
        CongruenceResult cr = congruence_diagonalize(blk.matrix);
        res.A += cr.positive;
        res.B += cr.negative;
        blk.transform = std::move(cr.transform);
        blk.diagonal = std::move(cr.diagonal);
        for (const auto& d : blk.diagonal) blk.signs.push_back(d.is_zero() ? 0 : d.sign());
        res.blocks.push_back(std::move(blk));
    }
    return res;
}

/// Exact inertia triple of p in the given ambient.
inline InertiaResult inertia(const HermPoly& p, const Ambient& amb)
{
    HermPoly q = place_in(p, amb);
    InertiaResult res = support_inertia(q);
    res.ambient = amb;
    res.k = amb.dimension() - res.A - res.B;
    return res;
}

/// Inertia in the minimal ambient (bihomogenizing first when needed).
inline InertiaResult inertia(const HermPoly& p)
{
    if (p.is_bihomogeneous()) return inertia(p, minimal_ambient(p));
    return inertia(bihomogenize(p));
}

inline InertiaResult inertia(const FormMatrix& fm)
{
    CongruenceResult cr = congruence_diagonalize(fm.entries);
    InertiaResult res;
    res.ambient = fm.ambient;
    res.A = cr.positive;
    res.B = cr.negative;
    res.k = cr.zero;
    DiagonalBlock blk{fm.basis, fm.entries, std::move(cr.transform), std::move(cr.diagonal), {}};
    for (const auto& d : blk.diagonal) blk.signs.push_back(d.is_zero() ? 0 : d.sign());
    res.blocks.push_back(std::move(blk));
    return res;
}

inline std::pair<unsigned, unsigned> signature_pair(const HermPoly& p) { return support_inertia(p).signature(); }
inline unsigned rank(const HermPoly& p) { return support_inertia(p).rank(); }

inline bool is_indefinite(const HermPoly& p)
{
    auto [a, b] = signature_pair(p);
    return a > 0 && b > 0;
}

/// Re-multiplies every block witness: T* M T must be exactly diagonal with the recorded signs.
inline bool verify_witness(const InertiaResult& res)
{
    unsigned pos = 0, neg = 0;
    for (const auto& blk : res.blocks) {
        ComplexMatrix d = form_detail::adjoint_times(blk.transform, blk.matrix, blk.transform);
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = 0; j < d.size(); ++j) {
                if (i != j && !d[i][j].is_zero()) return false;
                if (i == j) {
                    if (!d[i][i].is_real()) return false;
                    int s = d[i][i].re().is_zero() ? 0 : d[i][i].re().sign();
                    if (s != blk.signs[i]) return false;
                    if (d[i][i].re() != blk.diagonal[i]) return false;
                    pos += s > 0;
                    neg += s < 0;
                }
            }
    }
    return pos == res.A && neg == res.B;
}

} // namespace hermsig

#endif
