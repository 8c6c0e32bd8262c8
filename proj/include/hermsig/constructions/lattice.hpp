#ifndef HERMSIG_CONSTRUCTIONS_LATTICE_HPP
#define HERMSIG_CONSTRUCTIONS_LATTICE_HPP

// Elements of I(r) with prescribed signature pairs: change-vector shifts,
// tensor moves, degree-separated juxtaposition, the (N,1) target family and
// the stable-range decomposition (A,B) = (N,1) + a(n,1) + b(1,n).

#include <optional>
#include <string>

#include "../certificate.hpp"
#include "../quotient.hpp"

namespace hermsig {

/// n² − 2n + 2.
inline unsigned embedding_threshold(unsigned n) { return n * n - 2 * n + 2; }

/// 2(2n² − n).
inline unsigned stability_threshold(unsigned n) { return 2 * (2 * n * n - n); }

/// p · |z_last|^{2(degree − bidegree)}.
inline HermPoly pad_to(const HermPoly& p, unsigned degree)
{
    const unsigned m = p.bidegree();
    if (degree < m) throw std::invalid_argument("cannot pad to a smaller degree");
    if (degree == m) return p;
    return p * HermPoly::abs_power(p.vars(), p.vars() - 1, degree - m);
}

inline HermPoly quotient_by_r(const HermPoly& p)
{
    auto div = divide_by_r(p);
    if (!div.member()) throw std::invalid_argument("polynomial is not divisible by r");
    return *div.quotient;
}

inline std::pair<unsigned, unsigned> operator+(std::pair<unsigned, unsigned> a, std::pair<unsigned, unsigned> b)
{
    return {a.first + b.first, a.second + b.second};
}

// ------------------------------------------------------------------ shift

struct ShiftResult {
    HermPoly q;
    Certificate cert;
};

/// q = r·(Hv ± |z₁|^{2k}) for p = r·v, where Hv is v padded to degree k.
inline ShiftResult shift_construct(const HermPoly& p, int sign, unsigned k)
{
    const unsigned N = p.vars(), n = N - 1;
    const unsigned m = p.bidegree();
    if (k < m + 1)
        throw std::invalid_argument("shift degree k = " + std::to_string(k) + " is too small; need k >= deg v + 2 = "
                                    + std::to_string(m + 1));
    const HermPoly v = quotient_by_r(p);
    const HermPoly Hv = pad_to(v, k);
    const HermPoly w = HermPoly::abs_power(N, 0, k);
    ShiftResult out{hyperquadric(n) * (sign > 0 ? Hv + w : Hv - w), {}};
    Certificate& c = out.cert;
    c.construction = "shift";
    c.params["sign"] = sign > 0 ? "+" : "-";
    c.params["k"] = k;
    const auto before = signature_pair(p);
    const std::pair<unsigned, unsigned> change = sign > 0 ? std::pair{n, 1u} : std::pair{1u, n};
    auto div = divide_by_r(out.q);
    c.claim("membership", "q in I(r)", true, div.member() && div.witness.identity_holds());
    c.data["s(p)"] = Certificate::pair_json(before);
    c.claim_signature("q", out.q, before + change);
    return out;
}

// ------------------------------------------------------------ tensor move

struct MoveResult {
    HermPoly p;
    Certificate cert;
};

namespace lattice_detail {

inline bool single_negative_power(const HermPoly& p)
{
    const unsigned N = p.vars();
    unsigned negatives = 0;
    for (const auto& [k, c] : p.poly().terms()) {
        if (c.re().sign() >= 0) continue;
        ++negatives;
        const MultiIndex a = p.alpha(k);
        if (a.degree(0, N - 1) != 0) return false;
    }
    return negatives == 1;
}

/// Positive term free of z_{n+1} with the largest z₁ exponent (ties: grlex first).
inline std::optional<MultiIndex> move_candidate(const HermPoly& p)
{
    const unsigned N = p.vars();
    std::optional<MultiIndex> best;
    for (const auto& [k, c] : p.poly().terms()) {
        const MultiIndex a = p.alpha(k);
        if (c.re().sign() <= 0 || a[N - 1] != 0) continue;
        if (!best || a[0] > (*best)[0]) best = a;
    }
    return best;
}

} // namespace lattice_detail

/// p′ = |z_{n+1}|² p + c|f|² r for a positive diagonal term c|f|² of p. The term
/// c|f|²|z_{n+1}|² cancels and n new positive terms appear, so s moves by (n − 1, 0).
inline MoveResult tensor_move(const HermPoly& p, std::optional<MultiIndex> term = std::nullopt)
{
    const unsigned N = p.vars(), n = N - 1;
    if (!p.is_diagonal()) throw std::invalid_argument("tensor move needs a diagonal polynomial");
    if (!term) term = lattice_detail::move_candidate(p);
    if (!term) throw std::invalid_argument("tensor move found no positive term free of the last variable");
    const ComplexScalar c = p.coefficient(*term, *term);
    if (c.re().sign() <= 0) throw std::invalid_argument("tensor move needs a positive term");
    HermPoly f(N);
    f.add_pair(*term, *term, c.re());
    MoveResult out{HermPoly::abs_power(N, n) * p + f * hyperquadric(n), {}};
    Certificate& cert = out.cert;
    cert.construction = "tensor_move";
    cert.params["term"] = term->to_string();
    const auto before = signature_pair(p);
    auto div = divide_by_r(out.p);
    cert.claim("membership", "p' in I(r)", true, div.member() && div.witness.identity_holds());
    cert.claim_signature("p'", out.p, {before.first + n - 1, before.second});
    return out;
}

// ------------------------------------------------------------- juxtapose

/// t·pad(p₁) + (1 − t)·pad(p₂). The single negative terms merge; positive
/// terms with equal monomials merge as well unless `require_disjoint`.
inline MoveResult juxtapose(const HermPoly& p1, const HermPoly& p2, const Scalar& t, bool require_disjoint = false)
{
    if (p1.vars() != p2.vars()) throw arity_mismatch("juxtapose needs a common variable count");
    if (t.sign() <= 0 || (Scalar(1) - t).sign() <= 0) throw std::invalid_argument("juxtapose weight must lie in (0,1)");
    for (const HermPoly* p : {&p1, &p2})
        if (!p->is_diagonal() || !lattice_detail::single_negative_power(*p))
            throw std::invalid_argument("juxtapose needs diagonal inputs whose only negative term is a power of |z_{n+1}|^2");
    const unsigned deg = std::max(p1.bidegree(), p2.bidegree());
    const HermPoly a = pad_to(p1, deg), b = pad_to(p2, deg);
    std::size_t collisions = 0;
    for (const auto& [k, c] : a.poly().terms())
        if (c.re().sign() > 0 && b.poly().coefficient(k).re().sign() > 0) ++collisions;
    if (require_disjoint && collisions)
        throw std::invalid_argument("juxtapose: " + std::to_string(collisions)
                                    + " positive terms collide; raise the degree of one input");
    MoveResult out{t * a + (Scalar(1) - t) * b, {}};
    Certificate& cert = out.cert;
    cert.construction = "juxtapose";
    cert.params["t"] = t.to_string();
    cert.data["collisions"] = collisions;
    unsigned positives = 0;
    for (const auto& [k, c] : out.p.poly().terms()) positives += c.re().sign() > 0;
    auto div = divide_by_r(out.p);
    cert.claim("membership", "p in I(r)", true, div.member() && div.witness.identity_holds());
    cert.claim_signature("p", out.p, {positives, 1u});
    const auto s1 = signature_pair(p1), s2 = signature_pair(p2);
    cert.claim("additivity", "s(p) = s(p1) + s(p2) - collisions", s1.first + s2.first - static_cast<unsigned>(collisions),
               signature_pair(out.p).first);
    return out;
}

// ----------------------------------------------------------- target family

/// N = j·n + k·(n − 1) with j ≥ 1, k ≥ 0, taking j as large as possible.
inline std::optional<std::pair<unsigned, unsigned>> target_decomposition(unsigned n, unsigned N)
{
    if (n < 2 || N < n) return std::nullopt;
    for (unsigned j = N / n; j >= 1; --j) {
        const unsigned rest = N - j * n;
        if (rest % (n - 1) == 0) return std::pair{j, rest / (n - 1)};
    }
    return std::nullopt;
}

struct TargetResult {
    std::optional<HermPoly> p;
    Certificate cert;
};

/// Element of H(n; N, 1) ∩ I(r) built from the identity r by juxtapositions
/// (each adds n) and tensor moves (each adds n − 1).
inline TargetResult target_family(unsigned n, unsigned N)
{
    TargetResult out;
    Certificate& cert = out.cert;
    cert.construction = "target_family";
    cert.params["n"] = n;
    cert.params["N"] = N;
    if (n < 2) {
        cert.refusal = "target family needs n >= 2";
        return out;
    }
    if (N < n) {
        cert.refusal = "N < n: a proper map cannot lower the dimension";
        return out;
    }
    auto dec = target_decomposition(n, N);
    if (!dec) {
        cert.refusal = "no j >= 1, k >= 0 with N = j*n + k*(n-1)";
        return out;
    }
    auto [j, k] = *dec;
    cert.chosen["j"] = j;
    cert.chosen["k"] = k;
    HermPoly p = hyperquadric(n);
    const Scalar half = Scalar::rational(1, 2);
    for (unsigned i = 1; i < j; ++i) p = juxtapose(p, tensor_move(p).p, half).p;
    for (unsigned i = 0; i < k; ++i) p = tensor_move(p).p;
    auto div = divide_by_r(p);
    cert.claim("membership", "p in I(r)", true, div.member() && div.witness.identity_holds());
    cert.claim_signature("p", p, {N, 1u});
    cert.data["bidegree"] = p.bidegree();
    out.p = std::move(p);
    return out;
}

// ---------------------------------------------------------- decomposition

struct StabilityDecomposition {
    bool swapped = false; // built for (B, A) and negated
    unsigned N = 0, a = 0, b = 0;
    bool by_formula = false;
};

/// (A, B) = (N,1) + a(n,1) + b(1,n), or the same for (B, A) followed by negation.
inline std::optional<StabilityDecomposition> stability_decompose(unsigned n, unsigned A, unsigned B)
{
    if (n < 2 || A < 2 || B < 2) return std::nullopt;
    auto attempt = [n](unsigned X, unsigned Y, bool swapped) -> std::optional<StabilityDecomposition> {
        // closed form from the proof
        const unsigned b = Y / n;
        if (Y >= b * n + 1) {
            const unsigned a = Y - b * n - 1;
            if (X >= a * n + b) {
                const unsigned N = X - a * n - b;
                if (N >= embedding_threshold(n) && target_decomposition(n, N)) return StabilityDecomposition{swapped, N, a, b, true};
            }
        }
        // exhaustive: Y = 1 + a + b n
        for (unsigned bb = 0; bb * n + 1 <= Y; ++bb) {
            const unsigned aa = Y - 1 - bb * n;
            if (X < aa * n + bb) continue;
            const unsigned N = X - aa * n - bb;
            if (target_decomposition(n, N)) return StabilityDecomposition{swapped, N, aa, bb, false};
        }
        return std::nullopt;
    };
    const bool swap = A < B;
    if (auto d = attempt(swap ? B : A, swap ? A : B, swap)) return d;
    return attempt(swap ? A : B, swap ? B : A, !swap);
}

// -------------------------------------------------------------- (A, B)

struct StabilityResult {
    std::optional<HermPoly> p;
    Certificate cert;
    std::optional<ReductionResult> reduction;
};

namespace lattice_detail {

/// λ = (0, 2, 1) in (Ax + By + Cζ)(x + y − ζ): signature (3, 2), n = 2.
inline HermPoly three_two_base()
{
    RealPoly L(3), S(3);
    L.add_term(MultiIndex{0, 1, 0}, Scalar(2));
    L.add_term(MultiIndex{0, 0, 1}, Scalar(1));
    S.add_term(MultiIndex{1, 0, 0}, Scalar(1));
    S.add_term(MultiIndex{0, 1, 0}, Scalar(1));
    S.add_term(MultiIndex{0, 0, 1}, Scalar(-1));
    return moment_lift(L * S);
}

} // namespace lattice_detail

/// Builds an element of H(n; A, B) ∩ I(r). `boost` raises every shift degree,
/// which raises the projective degree without changing the signature.
inline StabilityResult stable_construct(unsigned n, unsigned A, unsigned B, unsigned boost = 0, bool with_degree = true)
{
    StabilityResult out;
    Certificate& cert = out.cert;
    cert.construction = "stable_construct";
    cert.params["n"] = n;
    cert.params["A"] = A;
    cert.params["B"] = B;
    if (boost) cert.params["boost"] = boost;

    HermPoly p(n + 1);
    unsigned a = 0, b = 0;
    bool swapped = false;
    if (auto dec = stability_decompose(n, A, B)) {
        auto base = target_family(n, dec->N);
        if (!base.p) {
            cert.refusal = "target family refused N = " + std::to_string(dec->N);
            return out;
        }
        p = *base.p;
        a = dec->a;
        b = dec->b;
        swapped = dec->swapped;
        cert.chosen["base"] = "target_family";
        cert.chosen["N"] = dec->N;
        cert.chosen["by_formula"] = dec->by_formula;
    } else if (n == 2 && A >= 2 && B >= 2) {
        // (A,B) = (3,2) + a(2,1) + b(1,2), or its mirror
        std::optional<std::tuple<bool, unsigned, unsigned>> found;
        for (bool sw : {false, true}) {
            const unsigned X = sw ? B : A, Y = sw ? A : B;
            for (unsigned bb = 0; !found && 3 + bb <= X; ++bb)
                if ((X - 3 - bb) % 2 == 0) {
                    const unsigned aa = (X - 3 - bb) / 2;
                    if (2 + aa + 2 * bb == Y) found = std::tuple{sw, aa, bb};
                }
            if (found) break;
        }
        if (!found) {
            cert.refusal = "no decomposition of (" + std::to_string(A) + "," + std::to_string(B) + ") is available";
            return out;
        }
        std::tie(swapped, a, b) = *found;
        p = lattice_detail::three_two_base();
        cert.chosen["base"] = "linear_family_example lambda=(0,2,1)";
    } else {
        cert.refusal = "no decomposition of (" + std::to_string(A) + "," + std::to_string(B) + ") is available";
        return out;
    }
    cert.chosen["a"] = a;
    cert.chosen["b"] = b;
    cert.chosen["swapped"] = swapped;
    json shifts = json::array();
    for (unsigned i = 0; i < a + b; ++i) {
        const int sign = i < a ? 1 : -1;
        const unsigned k = p.bidegree() + 1 + boost;
        shifts.push_back(json::array({sign > 0 ? "+" : "-", k}));
        p = shift_construct(p, sign, k).q;
    }
    cert.chosen["shifts"] = shifts;
    if (swapped) p = -p;
    auto div = divide_by_r(p);
    cert.claim("membership", "p in I(r)", true, div.member() && div.witness.identity_holds());
    cert.claim_signature("p", p, {A, B});
    cert.data["bidegree"] = p.bidegree();
    if (with_degree) {
        out.reduction = projective_degree(p);
        cert.data["projective_degree"] = out.reduction->bidegree;
    }
    out.p = std::move(p);
    return out;
}

// --------------------------------------------------------- degree bound

/// N(N − 1) / (2(2n − 3)); no such bound exists for n = 1.
inline mpq_class degree_bound(unsigned n, unsigned N)
{
    if (n < 2) throw std::invalid_argument("no degree estimate holds for n = 1");
    mpq_class q(static_cast<long>(N) * (static_cast<long>(N) - 1), 2 * (2 * static_cast<long>(n) - 3));
    q.canonicalize();
    return q;
}

struct TableCell {
    unsigned A = 0, B = 0;
    std::string value;  // 0, -, 1, 3, f, e, inf
    std::string source; // "theorem (imported, not recomputed)" or "constructed"
    std::optional<Certificate> cert;
};

/// Status of D*(H(2; A, B) ∩ I(r)) per the two-dimensional classification.
inline std::string table_value(unsigned A, unsigned B)
{
    if (A == 0 && B == 0) return "0";
    if (A == 0 || B == 0 || (A == 1 && B == 1)) return "-";
    if ((A == 2 && B == 1) || (A == 1 && B == 2)) return "1";
    if ((A == 2 && B == 2) || (A == 3 && B == 1) || (A == 1 && B == 3)) return "3";
    if ((A == 3 && B == 2) || (A == 2 && B == 3)) return "e";
    if (A >= 2 && B >= 2) return "inf";
    return "f";
}

/// n = 2 table over A = 0..max_a, B = 0..max_b. Infinite cells carry two
/// verified certificates: a base element and one of strictly larger
/// projective degree with the same signature.
inline std::vector<TableCell> table_metadata(unsigned max_a = 6, unsigned max_b = 5, bool construct = true)
{
    std::vector<TableCell> out;
    for (unsigned B = 0; B <= max_b; ++B)
        for (unsigned A = 0; A <= max_a; ++A) {
            TableCell cell{A, B, table_value(A, B), "classification (imported, not recomputed)", std::nullopt};
            if (cell.value == "inf" && construct) {
                auto lo = stable_construct(2, A, B, 0);
                auto hi = stable_construct(2, A, B, 5);
                Certificate c = lo.cert;
                c.construction = "table_cell";
                if (hi.reduction && lo.reduction) {
                    c.claim("signature", "boosted element", c.claims.back().computed, Certificate::pair_json(signature_pair(*hi.p)));
                    c.claim("degree_growth", "boosted projective degree > base", true,
                            hi.reduction->bidegree > lo.reduction->bidegree);
                    c.data["projective_degrees"] = json::array({lo.reduction->bidegree, hi.reduction->bidegree});
                }
                cell.source = "constructed";
                cell.cert = std::move(c);
            } else if (cell.value == "e" && construct) {
                Certificate c;
                c.construction = "table_cell";
                HermPoly p = lattice_detail::three_two_base();
                if (A < B) p = -p;
                auto div = divide_by_r(p);
                c.claim("membership", "p in I(r)", true, div.member());
                c.claim_signature("p", p, {A, B});
                cell.source = "non-emptiness constructed; finiteness open";
                cell.cert = std::move(c);
            }
            out.push_back(std::move(cell));
        }
    return out;
}

} // namespace hermsig

#endif
