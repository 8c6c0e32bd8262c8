#ifndef HERMSIG_SUITES_HPP
#define HERMSIG_SUITES_HPP

// Batch verification: every stated value recomputed and compared, grouped by
// topic. s3 one-variable identities, s4 collapse and inertia, s6 projective
// degree, s7 two-dimensional cells, s8 stability.

#include <set>
#include <string>
#include <vector>

#include "constructions/examples.hpp"
#include "constructions/factorizations.hpp"
#include "constructions/lattice.hpp"

namespace hermsig {

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"s3", "s4", "s6", "s7", "s8"};
    return names;
}

inline std::vector<Certificate> suite_s3()
{
    std::vector<Certificate> out;
    out.push_back(factor_identity_suite());
    for (unsigned m = 2; m <= 6; ++m) out.push_back(cyclotomic_certificate(m));
    for (unsigned d = 1; d <= 9; ++d) out.push_back(gap_family(d));
    return out;
}

/// Every pair with A + B <= max_sum: refused exactly at (0,0), (1,0), (0,1), verified elsewhere.
inline Certificate product_pair_sweep(unsigned max_sum = 12)
{
    Certificate cert;
    cert.construction = "product_pair_sweep";
    cert.params["max_sum"] = max_sum;
    std::set<std::pair<unsigned, unsigned>> refused;
    for (unsigned A = 0; A <= max_sum; ++A)
        for (unsigned B = 0; A + B <= max_sum; ++B) {
            auto r = product_pair_construct(A, B);
            if (r.cert.refused()) {
                refused.insert({A, B});
                continue;
            }
            cert.claim("product_pair", "(" + std::to_string(A) + "," + std::to_string(B) + ")", "verified", r.cert.status());
        }
    json got = json::array();
    for (auto p : refused) got.push_back(Certificate::pair_json(p));
    cert.claim("refusals", "refused pairs", json::array({json::array({0, 0}), json::array({0, 1}), json::array({1, 0})}), got);
    return cert;
}

inline std::vector<Certificate> suite_s4()
{
    std::vector<Certificate> out;
    out.push_back(squaring_example(Scalar::rational(1, 2)));
    for (unsigned m = 2; m <= 5; ++m) out.push_back(collapse_to_norm(m));
    for (unsigned b = 1; b <= 4; ++b) out.push_back(collapse_identity(b));
    out.push_back(nondiagonal_example());
    out.push_back(ambient_example());
    out.push_back(product_pair_sweep(12));
    return out;
}

inline std::vector<Certificate> suite_s6()
{
    std::vector<Certificate> out;
    for (unsigned m = 1; m <= 5; ++m) out.push_back(projective_degree_example(m));
    return out;
}

/// Two elements with equal signature whose projective degrees differ by at least `gap`.
inline Certificate degree_growth(unsigned n, unsigned A, unsigned B, unsigned boost = 5, unsigned gap = 5)
{
    Certificate cert;
    cert.construction = "degree_growth";
    cert.params["n"] = n;
    cert.params["A"] = A;
    cert.params["B"] = B;
    auto lo = stable_construct(n, A, B, 0, true), hi = stable_construct(n, A, B, boost, true);
    cert.claim("certificate", "base element", "verified", lo.cert.status());
    cert.claim("certificate", "boosted element", "verified", hi.cert.status());
    if (!lo.p || !hi.p || !lo.reduction || !hi.reduction) return cert;
    cert.claim("signature", "boosted element", Certificate::pair_json({A, B}), Certificate::pair_json(signature_pair(*hi.p)));
    const unsigned d0 = lo.reduction->bidegree, d1 = hi.reduction->bidegree;
    cert.data["projective_degrees"] = json::array({d0, d1});
    cert.claim("degree_growth", "difference >= " + std::to_string(gap), true, d1 >= d0 + gap);
    return cert;
}

inline std::vector<Certificate> suite_s7()
{
    std::vector<Certificate> out;
    for (unsigned d = 1; d <= 10; ++d) out.push_back(whitney(d));
    const int cases[][3] = {{0, 2, 1}, {0, 1, 1}, {2, 1, 3}, {2, 1, 2}, {1, 3, 2}, {0, -2, -1}, {-1, -3, -2}};
    for (const auto& c : cases) out.push_back(linear_family_example(c[0], c[1], c[2]));
    out.push_back(two_two_example());
    out.push_back(degree_growth(2, 4, 4));
    for (const auto& cell : table_metadata(6, 5, true))
        if (cell.cert) out.push_back(*cell.cert);
    return out;
}

/// Every (A, B) with A, B >= 2 and M <= A + B <= M + extra builds and verifies.
inline Certificate stability_sweep(unsigned n, unsigned extra = 10)
{
    Certificate cert;
    cert.construction = "stability_sweep";
    const unsigned M = stability_threshold(n);
    cert.params["n"] = n;
    cert.params["range"] = json::array({M, M + extra});
    for (unsigned s = M; s <= M + extra; ++s)
        for (unsigned A = 2; A + 2 <= s; ++A) {
            auto r = stable_construct(n, A, s - A, 0, false);
            cert.claim("stable_construct", "(" + std::to_string(A) + "," + std::to_string(s - A) + ")", "verified", r.cert.status());
        }
    return cert;
}

inline Certificate target_sweep(unsigned n, unsigned extra = 10)
{
    Certificate cert;
    cert.construction = "target_sweep";
    const unsigned T = embedding_threshold(n);
    cert.params["n"] = n;
    cert.params["range"] = json::array({T, T + extra});
    for (unsigned N = T; N <= T + extra; ++N)
        cert.claim("target_family", "N=" + std::to_string(N), "verified", target_family(n, N).cert.status());
    return cert;
}

inline std::vector<Certificate> suite_s8()
{
    std::vector<Certificate> out;
    for (unsigned n = 2; n <= 4; ++n) out.push_back(stability_sweep(n));
    for (unsigned n = 2; n <= 5; ++n) out.push_back(target_sweep(n));
    Certificate gap;
    gap.construction = "target_refusal";
    gap.claim("target_family", "n=3, N=4", "refused", target_family(3, 4).cert.status());
    gap.claim("degree_bound", "n=2, N=4", "6", degree_bound(2, 4).get_str());
    out.push_back(gap);
    for (auto [A, B] : {std::pair{7u, 5u}, std::pair{6u, 6u}, std::pair{9u, 3u}}) out.push_back(degree_growth(2, A, B));
    out.push_back(stable_construct(3, 20, 10).cert);
    return out;
}

/// Runs one suite by name ("all" runs every suite in order).
inline std::vector<Certificate> run_suite(const std::string& name)
{
    if (name == "s3") return suite_s3();
    if (name == "s4") return suite_s4();
    if (name == "s6") return suite_s6();
    if (name == "s7") return suite_s7();
    if (name == "s8") return suite_s8();
    if (name != "all") throw std::invalid_argument("unknown suite '" + name + "' (all, s3, s4, s6, s7, s8)");
    std::vector<Certificate> out;
    for (const auto& s : suite_names()) {
        auto part = run_suite(s);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

} // namespace hermsig

#endif
