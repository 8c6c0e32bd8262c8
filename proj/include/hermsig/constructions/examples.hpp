#ifndef HERMSIG_CONSTRUCTIONS_EXAMPLES_HPP
#define HERMSIG_CONSTRUCTIONS_EXAMPLES_HPP

// Worked examples: squaring to a squared norm, non-diagonal inertia triples,
// projective degree of equivalent forms, the h_λ family and (2,2) in I(r).

#include <array>

#include "factorizations.hpp"
#include "lattice.hpp"

namespace hermsig {

/// H(P_ε ∘ m) with P_ε = (1 + t)⁴ − (6 + ε)t².
inline RealPoly squaring_polynomial(const Scalar& eps)
{
    return univariate({1, 1}).pow(4) - RealPoly::monomial(MultiIndex{2}, Scalar(6) + eps);
}

inline Certificate squaring_example(const Scalar& eps = Scalar::rational(1, 2))
{
    Certificate cert;
    cert.construction = "squaring_example";
    cert.params["epsilon"] = eps.to_string();
    RealPoly P = squaring_polynomial(eps);
    cert.add_polynomial("P", P);
    const bool in_range = eps.sign() > 0 && (Scalar(1) - eps).sign() > 0;
    HermPoly r = lift(P), r2 = r * r;
    // (|z1|^2 + |z2|^2)^4 - (6+ε)|z1 z2|^4
    HermPoly direct = norm_power(2, 4) - (Scalar(6) + eps) * (HermPoly::abs_power(2, 0, 2) * HermPoly::abs_power(2, 1, 2));
    cert.claim("identity", "r = (|z1|^2+|z2|^2)^4 - (6+eps)|z1 z2|^4", true, r == direct);
    if (in_range) {
        cert.claim("sign_counts", "P", Certificate::pair_json({4, 1}), Certificate::pair_json(sign_counts(P)));
        cert.claim("sign_counts", "P^2", Certificate::pair_json({9, 0}), Certificate::pair_json(sign_counts(P * P)));
        cert.claim_signature("r", r, {4, 1});
        cert.claim_signature("r^2", r2, {9, 0});
        auto st = stabilization_search(r2, 0);
        cert.claim("stabilization", "smallest d for r^2", 0, st.d ? json(*st.d) : json(nullptr));
        if (st.inertia) cert.data["inertia(r^2)"] = inertia_json(*st.inertia);
    } else {
        cert.data["s(r)"] = Certificate::pair_json(signature_pair(r));
        cert.data["s(r^2)"] = Certificate::pair_json(signature_pair(r2));
    }
    return cert;
}

namespace example_detail {

inline MultiIndex m3(unsigned a, unsigned b, unsigned c) { return MultiIndex{a, b, c}; }

} // namespace example_detail

/// p = z₁w̄₃ + |z₂|² + z₃w̄₁.
inline HermPoly nondiagonal_p()
{
    using example_detail::m3;
    HermPoly p(3);
    p.add_pair(m3(1, 0, 0), m3(0, 0, 1), 1);
    p.add_pair(m3(0, 1, 0), m3(0, 1, 0), 1);
    return p;
}

/// q = z₁²w̄₃² + |z₂|⁴ + z₃²w̄₁² − |z₁z₃|² − z₁z₂w̄₂w̄₃ − z₂z₃w̄₁w̄₂.
inline HermPoly nondiagonal_q()
{
    using example_detail::m3;
    HermPoly q(3);
    q.add_pair(m3(2, 0, 0), m3(0, 0, 2), 1);
    q.add_pair(m3(0, 2, 0), m3(0, 2, 0), 1);
    q.add_pair(m3(1, 0, 1), m3(1, 0, 1), -1);
    q.add_pair(m3(1, 1, 0), m3(0, 1, 1), -1);
    return q;
}

inline Certificate nondiagonal_example()
{
    using example_detail::m3;
    Certificate cert;
    cert.construction = "nondiagonal_example";
    HermPoly p = nondiagonal_p(), q = nondiagonal_q(), pq = p * q;
    HermPoly expected(3);
    expected.add_pair(m3(3, 0, 0), m3(0, 0, 3), 1);
    expected.add_pair(m3(0, 3, 0), m3(0, 3, 0), 1);
    expected.add_pair(m3(1, 1, 1), m3(1, 1, 1), -3);
    cert.claim("identity", "pq = z1^3 ~z3^3 + |z2|^6 + z3^3 ~z1^3 - 3|z1 z2 z3|^2", true, pq == expected);
    cert.claim("coefficient", "pq at z1z2z3 ~z1~z2~z3", "-3", pq.coefficient(m3(1, 1, 1), m3(1, 1, 1)).to_string());
    struct Row {
        const char* name;
        const HermPoly* poly;
        Ambient amb;
        std::array<unsigned, 3> tri;
    };
    for (const Row& row : {Row{"p", &p, {1, 3}, {2, 1, 0}}, Row{"q", &q, {2, 3}, {3, 3, 0}}, Row{"pq", &pq, {3, 3}, {2, 2, 6}}}) {
        InertiaResult in = inertia(*row.poly, row.amb);
        cert.add_polynomial(row.name, *row.poly, in.signature());
        cert.claim("inertia", row.name, json::array({row.tri[0], row.tri[1], row.tri[2]}), Certificate::triple_json(in));
        cert.claim("witness", row.name, true, verify_witness(in));
        cert.data["inertia(" + std::string(row.name) + ")"] = inertia_json(in);
    }
    return cert;
}

/// 1 − t² − 2t⁶ + t⁷ = (1 − t + t²)(1 + t − t² − 2t³ − t⁴ + t⁵) in ℙ¹ and ℙ²; 1 + t¹² in V(12, 2).
inline Certificate ambient_example()
{
    Certificate cert;
    cert.construction = "ambient_example";
    auto ids = factor_identities();
    const FactorIdentity& id = ids[4];
    HermPoly p = lift(id.p1), q = lift(id.p2), pq = p * q;
    cert.claim("identity", "pq = H((1-t^2-2t^6+t^7) o m)", true, pq == lift(id.p));
    struct Row {
        const char* name;
        const HermPoly* poly;
        std::array<unsigned, 3> p1, p2;
    };
    for (const Row& row : {Row{"p", &p, {2, 1, 0}, {2, 1, 3}}, Row{"q", &q, {3, 3, 0}, {3, 3, 15}}, Row{"pq", &pq, {2, 2, 4}, {2, 2, 32}}}) {
        const unsigned d = row.poly->bidegree();
        InertiaResult a = inertia(*row.poly, {d, 2}), b = inertia(*row.poly, {d, 3});
        cert.claim("inertia", std::string(row.name) + " in P^1", json::array({row.p1[0], row.p1[1], row.p1[2]}), Certificate::triple_json(a));
        cert.claim("inertia", std::string(row.name) + " in P^2", json::array({row.p2[0], row.p2[1], row.p2[2]}), Certificate::triple_json(b));
    }
    HermPoly t12 = lift(ids[3].p);
    cert.claim("inertia", "|z1|^24 + |z2|^24 in V(12,2)", json::array({2, 0, 11}), Certificate::triple_json(inertia(t12, {12, 2})));
    return cert;
}

/// Three forms agreeing up to scale on the sphere, with projective degrees 2, 2m+2, 2.
struct DegreeForms {
    HermPoly p, q, r;
};

inline DegreeForms degree_forms(unsigned m)
{
    auto z = [](unsigned j, unsigned e) { return HermPoly::abs_power(3, j, e); };
    const HermPoly sphere = hyperquadric(2);
    DegreeForms e{z(0, m) * sphere, z(0, m + 1) + z(0, m) * z(1, 1) + z(2, m + 1) - z(0, m) * z(2, 1),
                Scalar::rational(-1, 2) * z(2, 1) + Scalar::rational(3, 2) * (z(0, 1) + z(1, 1))};
    return e;
}

inline Certificate projective_degree_example(unsigned m)
{
    Certificate cert;
    cert.construction = "projective_degree_example";
    cert.params["m"] = m;
    DegreeForms e = degree_forms(m);
    cert.data["degree_convention"] = "total degree in (z, zbar) = 2 * bidegree after reduction";
    struct Row {
        const char* name;
        const HermPoly* poly;
        unsigned degree;
        std::pair<unsigned, unsigned> sig;
    };
    for (const Row& row : {Row{"p", &e.p, 2, {2, 1}}, Row{"q", &e.q, 2 * m + 2, {3, 1}}, Row{"r", &e.r, 2, {2, 1}}}) {
        ReductionResult red = projective_degree(*row.poly);
        cert.claim("projective_degree", row.name, row.degree, red.total_degree);
        cert.claim("reduction_identity", row.name, true, red.identity_holds());
        cert.claim_signature(row.name, *row.poly, row.sig);
    }
    return cert;
}

/// p_λ = ((A x + B y + C ζ)(x + y − ζ)) ∘ m.
inline HermPoly linear_family_poly(const Scalar& A, const Scalar& B, const Scalar& C)
{
    RealPoly L(3), S(3);
    L.add_term(MultiIndex{1, 0, 0}, A);
    L.add_term(MultiIndex{0, 1, 0}, B);
    L.add_term(MultiIndex{0, 0, 1}, C);
    S.add_term(MultiIndex{1, 0, 0}, Scalar(1));
    S.add_term(MultiIndex{0, 1, 0}, Scalar(1));
    S.add_term(MultiIndex{0, 0, 1}, Scalar(-1));
    return moment_lift(L * S);
}

/// Signature predicted for λ when λ (or −λ) lies in one of the listed cases.
inline std::optional<std::pair<unsigned, unsigned>> linear_family_expected(const Scalar& A, const Scalar& B, const Scalar& C)
{
    auto gt = [](const Scalar& x, const Scalar& y) { return (x - y).sign() > 0; };
    auto eq = [](const Scalar& x, const Scalar& y) { return (x - y).sign() == 0; };
    auto table = [&](const Scalar& a, const Scalar& b, const Scalar& c) -> std::optional<std::pair<unsigned, unsigned>> {
        const Scalar zero(0);
        if (eq(a, zero) && gt(c, zero) && gt(b, c)) return std::pair{3u, 2u};
        if (eq(a, zero) && gt(c, zero) && eq(c, b)) return std::pair{3u, 1u};
        if (gt(c, a) && !gt(b, a) && gt(b, zero)) return std::pair{5u, 1u};
        if (eq(a, c) && gt(c, b) && gt(b, zero)) return std::pair{4u, 1u};
        if (gt(b, c) && gt(c, a) && gt(a, zero)) return std::pair{4u, 2u};
        return std::nullopt;
    };
    if (auto s = table(A, B, C)) return s;
    if (auto s = table(-A, -B, -C)) return std::pair{s->second, s->first};
    return std::nullopt;
}

inline Certificate linear_family_example(const Scalar& A, const Scalar& B, const Scalar& C)
{
    Certificate cert;
    cert.construction = "linear_family_example";
    cert.params["lambda"] = json::array({A.to_string(), B.to_string(), C.to_string()});
    HermPoly p = linear_family_poly(A, B, C);
    auto div = divide_by_r(p);
    cert.claim("membership", "p in I(r)", true, div.member() && div.witness.identity_holds());
    if (auto expected = linear_family_expected(A, B, C)) {
        cert.claim_signature("p", p, *expected);
    } else {
        auto s = signature_pair(p);
        cert.add_polynomial("p", p, s);
        cert.data["signature"] = Certificate::pair_json(s);
        cert.data["note"] = "lambda outside the listed cases; no stated value to compare";
    }
    return cert;
}

/// (|z₁|² − |z₂|²)(|z₁|² + |z₂|² − |z₃|²).
inline HermPoly two_two_poly()
{
    return (HermPoly::abs_power(3, 0) - HermPoly::abs_power(3, 1)) * hyperquadric(2);
}

inline Certificate two_two_example()
{
    Certificate cert;
    cert.construction = "two_two_example";
    HermPoly f1 = HermPoly::abs_power(3, 0) - HermPoly::abs_power(3, 1), f2 = hyperquadric(2), p = two_two_poly();
    RealPoly h(2);
    h.add_term(MultiIndex{2, 0}, Scalar(1));
    h.add_term(MultiIndex{0, 2}, Scalar(-1));
    h.add_term(MultiIndex{1, 0}, Scalar(-1));
    h.add_term(MultiIndex{0, 1}, Scalar(1));
    cert.claim("identity", "H(h o m) = (|z1|^2-|z2|^2) r", true, lift(h) == p);
    cert.claim_signature("|z1|^2-|z2|^2", f1, {1, 1});
    cert.claim_signature("r", f2, {2, 1});
    cert.claim_signature("p", p, {2, 2});
    auto div = divide_by_r(p);
    cert.claim("membership", "p in I(r)", true, div.member() && div.witness.identity_holds());
    return cert;
}

} // namespace hermsig

#endif
