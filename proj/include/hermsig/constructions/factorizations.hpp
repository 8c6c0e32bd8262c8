#ifndef HERMSIG_CONSTRUCTIONS_FACTORIZATIONS_HPP
#define HERMSIG_CONSTRUCTIONS_FACTORIZATIONS_HPP

// One-variable factorization families and what they become after the moment
// map: collapsing products, the gap family, Whitney elements, and products of
// indefinite factors with any prescribed signature pair.

#include <cmath>
#include <optional>
#include <random>

#include "../certificate.hpp"
#include "../quotient.hpp"

namespace hermsig {

/// H(P ∘ m): moment lift followed by bihomogenization (adds one variable).
inline HermPoly lift(const RealPoly& P) { return bihomogenize(moment_lift(P)); }

inline std::string ratio_string(const Scalar& s) { return s.to_string(); }

// ---------------------------------------------------------------- identities

struct FactorIdentity {
    std::string name;
    RealPoly p, p1, p2;
    std::pair<unsigned, unsigned> sp, sp1, sp2; // sign counts as stated for the identity
};

/// The five one-variable identities: 1+t⁴, 1−t⁶, 1+t⁸, 1+t¹², 1−t²−2t⁶+t⁷.
inline std::vector<FactorIdentity> factor_identities()
{
    const Scalar r2 = sqrt_of(Scalar(2));
    const Scalar a = sqrt_of(Scalar(4) + Scalar(2) * r2); // depth-2 tower element
    const Scalar a2h = a * a * Scalar::rational(1, 2);
    std::vector<FactorIdentity> out;
    out.push_back({"t^4+1", univariate({1, 0, 0, 0, 1}), univariate({1, r2, 1}), univariate({1, -r2, 1}), {2, 0}, {3, 0}, {2, 1}});
    out.push_back({"1-t^6", univariate({1, 0, 0, 0, 0, 0, -1}), univariate({1, 1, 0, -1, -1}), univariate({1, -1, 1}), {1, 1}, {2, 2}, {2, 1}});
    out.push_back({"t^8+1", univariate({1, 0, 0, 0, 0, 0, 0, 0, 1}), univariate({1, a, a2h, a, 1}), univariate({1, -a, a2h, -a, 1}),
                   {2, 0}, {5, 0}, {3, 2}});
    out.push_back({"t^12+1", univariate({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}), univariate({1, -r2, 1}),
                   univariate({1, r2, 1, 0, -1, -r2, -1, 0, 1, r2, 1}), {2, 0}, {2, 1}, {6, 3}});
    out.push_back({"1-t^2-2t^6+t^7", univariate({1, 0, -1, 0, 0, 0, -2, 1}), univariate({1, -1, 1}), univariate({1, 1, -1, -2, -1, 1}),
                   {2, 2}, {2, 1}, {3, 3}});
    return out;
}

inline Certificate factor_identity_suite()
{
    Certificate cert;
    cert.construction = "factor_identities";
    for (const auto& id : factor_identities()) {
        cert.claim("identity", "(" + id.name + ") p = p1*p2", true, id.p1 * id.p2 == id.p);
        auto c = [](const RealPoly& p) { auto s = sign_counts(p); return Certificate::pair_json(s); };
        cert.claim("sign_counts", "(" + id.name + ") p", Certificate::pair_json(id.sp), c(id.p));
        cert.claim("sign_counts", "(" + id.name + ") p1", Certificate::pair_json(id.sp1), c(id.p1));
        cert.claim("sign_counts", "(" + id.name + ") p2", Certificate::pair_json(id.sp2), c(id.p2));
        cert.add_polynomial(id.name + ".p1", id.p1);
        cert.add_polynomial(id.name + ".p2", id.p2);
    }
    return cert;
}

// ------------------------------------------------------------- cyclotomic Q

struct CyclotomicFactor {
    unsigned m = 0;
    RealPoly Q;              // Q(t), all coefficients positive
    RealPoly Q_minus;        // Q(−t)
    RealPoly P;              // t^{2^m} + 1
    RealPoly product;        // Q(t)·Q(−t), exact (snapped when Q is interval-valued)
    bool exact = true;
    bool positive = false;   // every coefficient certified > 0
    bool encloses = false;   // interval product contains P coefficientwise
    mpq_class max_width = 0; // widest certified enclosure used for the product
};

inline RealPoly reflect(const RealPoly& q)
{
    RealPoly out(q.arity());
    for (const auto& [m, c] : q.terms()) out.add_term(m, m[0] % 2 ? Scalar(-c) : c);
    return out;
}

/// Q with Q(t)Q(−t) = t^{2^m} + 1. Exact for m = 2, 3; interval cosines beyond.
inline CyclotomicFactor cyclotomic_factor(unsigned m, const mpq_class& width = mpq_class(1, mpz_class("1000000000000000000000000000000")))
{
    if (m < 2) throw std::invalid_argument("cyclotomic factor needs m >= 2");
    if (m > 12) throw std::invalid_argument("cyclotomic factor supports m <= 12");
    CyclotomicFactor out;
    out.m = m;
    const unsigned deg = 1u << m;
    std::vector<Scalar> pc(deg + 1, Scalar(0));
    pc[0] = 1;
    pc[deg] = 1;
    out.P = univariate(pc);
    if (m == 2) out.Q = factor_identities()[0].p1;
    else if (m == 3) out.Q = factor_identities()[2].p1;
    else {
        out.exact = false;
        // roots ω^k with k odd and Re < 0 pair up as t² + 2cos(jπ/2^m)t + 1 with j odd, j < 2^{m-1}
        out.Q = univariate({1});
        for (unsigned j = 1; j < deg / 2; j += 2) {
            Scalar c = Scalar::from_generator([j, deg](unsigned bits) { return cos_pi_fraction(j, deg, bits); });
            out.Q = out.Q * univariate({1, Scalar(2) * c, 1});
        }
    }
    out.Q_minus = reflect(out.Q);
    out.positive = out.Q.size() == deg / 2 + 1;
    for (const auto& [mono, c] : out.Q.terms()) out.positive = out.positive && c.sign() > 0;
    RealPoly raw = out.Q * out.Q_minus;
    if (out.exact) {
        out.product = raw;
        out.encloses = raw == out.P;
        return out;
    }
    out.encloses = true;
    out.product = RealPoly(1);
    for (unsigned k = 0; k <= 2 * (deg / 2); ++k) {
        MultiIndex mono = MultiIndex::unit(1, 0, k);
        Scalar approx = raw.coefficient(mono), exact = out.P.coefficient(mono);
        try {
            Scalar snapped = snap_to_exact(approx, exact, width);
            out.product.add_term(mono, snapped);
            if (approx.is_interval()) {
                Enclosure e = approx.enclose(kDefaultPrecision);
                for (unsigned b = kDefaultPrecision; e.width() > width; b *= 2) e = approx.enclose(b * 2);
                if (e.width() > out.max_width) out.max_width = e.width();
            }
        } catch (const std::exception&) {
            out.encloses = false;
        }
    }
    out.encloses = out.encloses && out.product == out.P;
    return out;
}

inline Certificate cyclotomic_certificate(unsigned m)
{
    Certificate cert;
    cert.construction = "cyclotomic";
    cert.params["m"] = m;
    CyclotomicFactor f = cyclotomic_factor(m);
    const unsigned n_coeffs = (1u << (m - 1)) + 1;
    cert.claim("coefficient_count", "Q", n_coeffs, static_cast<unsigned>(f.Q.size()));
    cert.claim("positivity", "Q", true, f.positive);
    cert.claim("sign_counts", "Q", Certificate::pair_json({n_coeffs, 0}), Certificate::pair_json(sign_counts(f.Q)));
    cert.claim("identity", "Q(t)Q(-t) = t^" + std::to_string(1u << m) + " + 1", true, f.encloses);
    cert.data["exact"] = f.exact;
    if (!f.exact) {
        cert.data["max_enclosure_width"] = to_decimal(f.max_width, 6);
        cert.claim("enclosure_width", "Q(t)Q(-t) <= 1e-30", true, f.max_width <= mpq_class(1, mpz_class("1000000000000000000000000000000")));
        json coeffs = json::array();
        for (const auto& [mono, c] : f.Q.terms()) coeffs.push_back(c.to_string());
        cert.data["Q_enclosures"] = coeffs;
    } else {
        cert.add_polynomial("Q", f.Q);
    }
    return cert;
}

// ------------------------------------------------------- collapse examples

/// q = H(Q∘m), r = H(Q(−t)∘m), whose product collapses to |z₁|^{2^m} + |z₂|^{2^m}.
inline Certificate collapse_to_norm(unsigned m)
{
    Certificate cert;
    cert.construction = "collapse_to_norm";
    cert.params["m"] = m;
    CyclotomicFactor f = cyclotomic_factor(m);
    HermPoly q = lift(f.Q), r = lift(f.Q_minus);
    const unsigned h = 1u << (m - 1);
    cert.claim("bidegree", "q", h, q.bidegree());
    cert.claim("bidegree", "r", h, r.bidegree());
    cert.claim_signature("q", q, {h + 1, 0});
    cert.claim_signature("r", r, {h / 2 + 1, h / 2});
    // interval product snapped onto the exact lift of t^{2^m} + 1
    HermPoly exact_qr = lift(f.P);
    HermPoly raw = q * r;
    bool encloses = raw.size() >= exact_qr.size();
    HermPoly qr(2);
    for (const auto& [k, c] : raw.poly().terms()) {
        const ComplexScalar target = exact_qr.poly().coefficient(k);
        try {
            Scalar re = snap_to_exact(c.re(), target.re(), mpq_class(1, mpz_class("1000000000000000000000000000000")));
            if (!c.im().is_zero()) encloses = false;
            if (!re.is_zero()) qr.add_pair(raw.alpha(k), raw.beta(k), re);
        } catch (const std::exception&) {
            encloses = false;
        }
    }
    cert.claim("identity", "q*r = |z1|^" + std::to_string(2 * (1u << m)) + " + |z2|^" + std::to_string(2 * (1u << m)), true,
               encloses && qr == exact_qr);
    cert.claim_signature("qr", qr, {2, 0});
    return cert;
}

/// Four collapse examples built from the 1-t^6, t^8+1, t^12+1 and 1-t^2-2t^6+t^7 identities.
inline Certificate collapse_identity(unsigned bullet)
{
    if (bullet < 1 || bullet > 4) throw std::invalid_argument("collapse selector must be 1..4");
    static const char* names[] = {"1-t^6", "t^8+1", "t^12+1", "1-t^2-2t^6+t^7"};
    struct Expect {
        bool swap; // q is the second factor of the identity
        std::pair<unsigned, unsigned> q, r, qr;
    };
    static const Expect ex[] = {
        {false, {2, 2}, {2, 1}, {1, 1}},
        {false, {5, 0}, {3, 2}, {2, 0}},
        {true, {6, 3}, {2, 1}, {2, 0}},
        {true, {3, 3}, {2, 1}, {2, 2}},
    };
    const FactorIdentity* id = nullptr;
    auto ids = factor_identities();
    for (const auto& x : ids)
        if (x.name == names[bullet - 1]) id = &x;
    const Expect& e = ex[bullet - 1];
    Certificate cert;
    cert.construction = "collapse_identity";
    cert.params["bullet"] = bullet;
    cert.params["identity"] = id->name;
    HermPoly q = lift(e.swap ? id->p2 : id->p1), r = lift(e.swap ? id->p1 : id->p2);
    cert.claim_signature("q", q, e.q);
    cert.claim_signature("r", r, e.r);
    HermPoly qr = q * r;
    cert.claim("identity", "q*r = H(p o m)", true, qr == lift(id->p));
    cert.claim_signature("qr", qr, e.qr);
    return cert;
}

// ----------------------------------------------------------------- gap family

/// f_d by the power-sum recurrence s_d = x s_{d−1} + y s_{d−2}.
inline RealPoly gap_polynomial(unsigned d)
{
    if (d < 1) throw std::invalid_argument("gap family needs d >= 1");
    const RealPoly x = RealPoly::variable(2, 0), y = RealPoly::variable(2, 1);
    RealPoly s_prev = x, s = x * x + Scalar(2) * y; // s_1, s_2
    if (d == 1) s = x;
    for (unsigned k = 3; k <= d; ++k) {
        RealPoly next = x * s + y * s_prev;
        s_prev = s;
        s = next;
    }
    RealPoly yd = y.pow(d);
    return d % 2 ? s + yd : s - yd;
}

/// The closed form with the square root, evaluated in floating point.
inline double gap_closed_form(unsigned d, double x, double y)
{
    const double root = std::sqrt(x * x + 4 * y);
    return std::pow((x + root) / 2, d) + std::pow((x - root) / 2, d) + (d % 2 ? 1.0 : -1.0) * std::pow(y, d);
}

struct GapMember {
    RealPoly f;
    HermPoly p, q;
};

inline GapMember gap_member(unsigned d)
{
    GapMember g{gap_polynomial(d), HermPoly(3), HermPoly(3)};
    g.p = lift(g.f - RealPoly::constant(2, Scalar(1)));
    auto div = divide_by_r(g.p);
    if (div.quotient) g.q = *div.quotient;
    return g;
}

inline Certificate gap_family(unsigned d)
{
    Certificate cert;
    cert.construction = "gap";
    cert.params["d"] = d;
    RealPoly f = gap_polynomial(d);
    cert.add_polynomial("f", f);
    auto real_div = divide_real(f - RealPoly::constant(2, Scalar(1)), sphere_linear(2, false));
    cert.claim("membership", "f - 1 in (x + y - 1)", true, real_div.member && real_div.identity_holds());
    // cross-check the radical closed form at a few points
    std::mt19937_64 rng(1000 + d);
    std::uniform_real_distribution<double> u(0.05, 1.5);
    bool closed_form_ok = true;
    for (int i = 0; i < 8; ++i) {
        double x = u(rng), y = u(rng);
        double exact = evaluate(f, {Scalar(mpq_class(x)), Scalar(mpq_class(y))}).to_double();
        double closed = gap_closed_form(d, x, y);
        closed_form_ok &= std::abs(exact - closed) <= 1e-9 * std::max(1.0, std::abs(exact));
    }
    cert.claim("closed_form", "recurrence matches radical formula (float)", true, closed_form_ok);
    HermPoly p = lift(f - RealPoly::constant(2, Scalar(1)));
    auto div = divide_by_r(p);
    cert.claim("membership", "p in I(r)", true, div.member() && div.witness.identity_holds());
    const unsigned m = d / 2;
    std::pair<unsigned, unsigned> expected = d % 2 ? std::pair{m + 2, 1u} : std::pair{m + 1, 2u};
    cert.claim_signature("p", p, expected);
    if (div.quotient) {
        cert.add_polynomial("q", *div.quotient);
        cert.claim("rank", "q", d * (d + 1) / 2, rank(*div.quotient));
    }
    return cert;
}

// --------------------------------------------------------------- Whitney

/// W_d = x^d + Σ_{k<d} x^k y.
inline RealPoly whitney_polynomial(unsigned d)
{
    if (d < 1) throw std::invalid_argument("Whitney polynomial needs d >= 1");
    RealPoly w = RealPoly::monomial(MultiIndex{d, 0});
    for (unsigned k = 0; k < d; ++k) w.add_term(MultiIndex{k, 1}, Scalar(1));
    return w;
}

/// H((W_d − 1)∘m) in three variables.
inline HermPoly whitney_element(unsigned d) { return lift(whitney_polynomial(d) - RealPoly::constant(2, Scalar(1))); }

inline Certificate whitney(unsigned d)
{
    Certificate cert;
    cert.construction = "whitney";
    cert.params["d"] = d;
    RealPoly w = whitney_polynomial(d);
    cert.add_polynomial("W", w);
    const RealPoly x = RealPoly::variable(1, 0);
    RealPoly on_line = substitute(w, {x, RealPoly::constant(1, Scalar(1)) - x});
    cert.claim("identity", "W(x, 1 - x) = 1", true, on_line == RealPoly::constant(1, Scalar(1)));
    HermPoly p = whitney_element(d);
    auto div = divide_by_r(p);
    cert.claim("membership", "p in I(r)", true, div.member() && div.witness.identity_holds());
    cert.claim_signature("p", p, {d + 1, 1});
    return cert;
}

// ------------------------------------------------ products with given signature

struct ProductFactors {
    RealPoly r1, r2;
    std::string rule;
    std::optional<Scalar> epsilon;
};

/// Why (A, B) admits no product of indefinite factors, if it does not.
inline std::optional<std::string> product_pair_refusal(unsigned A, unsigned B)
{
    if (A == 0 && B == 0) return "a product of nonzero polynomials is nonzero, so (0,0) is impossible";
    if (A + B == 1)
        return "a product of rank 1 forces both factors to have rank 1, and indefinite factors have rank at least 2";
    return std::nullopt;
}

/// Candidate one-variable factors for (A, B) at a given ε (ignored by the ε-free rules).
inline ProductFactors product_pair_factors(unsigned A, unsigned B, const Scalar& eps)
{
    auto negate = [](ProductFactors f) {
        f.r1 = -f.r1;
        return f;
    };
    if (B == 0 || A == 0) {
        const unsigned N = A + B;
        auto ids = factor_identities();
        const FactorIdentity& id = ids[3]; // 1 + t¹² = (1 − √2 t + t²)(...)
        RealPoly base = univariate({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}).pow(N - 2);
        ProductFactors f{base * id.p1, id.p2, "(1+t^12)^(N-2) * r1, r2", std::nullopt};
        return A == 0 ? negate(f) : f;
    }
    if (A == 1 && B == 1) {
        auto ids = factor_identities();
        return {ids[1].p1, ids[1].p2, "1 - t^6 factorization", std::nullopt};
    }
    if (A == 1 || B == 1) {
        const unsigned k = std::max(A, B);
        RealPoly one_minus_t = univariate({1, -1});
        RealPoly r2 = one_minus_t * univariate({1, eps}).pow(k - 2);
        ProductFactors f{one_minus_t, r2, "(1-t) * (1-t)(1+eps t)^(k-2)", eps};
        return B == 1 ? f : negate(f);
    }
    // A, B >= 2: r1 = Σ ± t^i over i = 0..d with + exactly at 0..A−2 and d
    const unsigned d = A + B - 2;
    std::vector<Scalar> c(d + 1);
    for (unsigned i = 0; i <= d; ++i) c[i] = (i <= A - 2 || i == d) ? Scalar(1) : Scalar(-1);
    return {univariate(c), univariate({1, -eps}), "sign pattern r1 * (1 - eps t)", eps};
}

struct ProductPairResult {
    Certificate cert;
    std::optional<ProductFactors> factors;
};

inline ProductPairResult product_pair_construct(unsigned A, unsigned B, unsigned max_halvings = 40)
{
    ProductPairResult out;
    Certificate& cert = out.cert;
    cert.construction = "product_pair";
    cert.params["A"] = A;
    cert.params["B"] = B;
    if (auto why = product_pair_refusal(A, B)) {
        cert.refusal = *why;
        return out;
    }
    Scalar eps = Scalar::rational(1, 2);
    for (unsigned it = 0; it <= max_halvings; ++it, eps = eps * Scalar::rational(1, 2)) {
        ProductFactors f = product_pair_factors(A, B, eps);
        HermPoly q1 = lift(f.r1), q2 = lift(f.r2);
        HermPoly prod = q1 * q2;
        if (!is_indefinite(q1) || !is_indefinite(q2) || signature_pair(prod) != std::pair{A, B}) {
            if (!f.epsilon) break; // nothing to tune
            continue;
        }
        cert.chosen["rule"] = f.rule;
        if (f.epsilon) cert.chosen["epsilon"] = f.epsilon->to_string();
        auto s1 = signature_pair(q1), s2 = signature_pair(q2);
        cert.add_polynomial("r1", f.r1);
        cert.add_polynomial("r2", f.r2);
        cert.claim("indefinite", "r1", true, s1.first > 0 && s1.second > 0);
        cert.claim("indefinite", "r2", true, s2.first > 0 && s2.second > 0);
        cert.data["s(r1)"] = Certificate::pair_json(s1);
        cert.data["s(r2)"] = Certificate::pair_json(s2);
        cert.claim("identity", "lift(r1)*lift(r2) = lift(r1*r2)", true, prod == lift(f.r1 * f.r2));
        cert.claim_signature("r1*r2", prod, {A, B});
        out.factors = std::move(f);
        return out;
    }
    cert.claim("construction", "epsilon search", "converged", "exhausted");
    return out;
}

} // namespace hermsig

#endif
