#ifndef HERMSIG_CERTIFICATE_HPP
#define HERMSIG_CERTIFICATE_HPP

// Verified-claim records for constructions, serialised as JSON with a stable
// field order and exact coefficient strings.

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hermitian_form.hpp"

namespace hermsig {

using json = nlohmann::ordered_json;

struct Claim {
    std::string kind;     // signature, inertia, membership, projective_degree, identity, ...
    std::string subject;  // which polynomial or quantity
    json expected;
    json computed;
    bool ok = false;
};

struct Certificate {
    std::string construction;
    json params = json::object();
    json chosen = json::object();   // free parameters picked by the generator (ε, degrees, patterns)
    json polynomials = json::array();
    json data = json::object();
    std::vector<Claim> claims;
    std::optional<std::string> refusal;

    /// Records a claim; `ok` is decided here by comparing the two values.
    template <typename E, typename C>
    bool claim(std::string kind, std::string subject, const E& expected, const C& computed)
    {
        Claim c{std::move(kind), std::move(subject), json(expected), json(computed), false};
        c.ok = c.expected == c.computed;
        claims.push_back(std::move(c));
        return claims.back().ok;
    }

    /// Claims a signature pair for p and records p among the polynomials.
    bool claim_signature(const std::string& name, const HermPoly& p, std::pair<unsigned, unsigned> expected)
    {
        auto s = signature_pair(p);
        add_polynomial(name, p, s);
        return claim("signature", name, pair_json(expected), pair_json(s));
    }

    void add_polynomial(const std::string& name, const HermPoly& p, std::optional<std::pair<unsigned, unsigned>> sig = {})
    {
        json e = json::object();
        e["name"] = name;
        e["vars"] = p.vars();
        e["bidegree"] = p.bidegree();
        if (sig) e["signature"] = pair_json(*sig);
        e["expr"] = p.to_string();
        polynomials.push_back(std::move(e));
    }

    void add_polynomial(const std::string& name, const RealPoly& p)
    {
        json e = json::object();
        e["name"] = name;
        auto [a, b] = sign_counts(p);
        e["sign_counts"] = pair_json({a, b});
        e["expr"] = to_string(p);
        polynomials.push_back(std::move(e));
    }

    [[nodiscard]] bool refused() const { return refusal.has_value(); }
    [[nodiscard]] bool verified() const
    {
        if (refusal || claims.empty()) return false;
        for (const auto& c : claims)
            if (!c.ok) return false;
        return true;
    }
    [[nodiscard]] std::string status() const { return refusal ? "refused" : (verified() ? "verified" : "failed"); }

    [[nodiscard]] std::vector<const Claim*> failures() const
    {
        std::vector<const Claim*> out;
        for (const auto& c : claims)
            if (!c.ok) out.push_back(&c);
        return out;
    }

    static json pair_json(std::pair<unsigned, unsigned> p) { return json::array({p.first, p.second}); }
    static json triple_json(const InertiaResult& r) { return json::array({r.A, r.B, r.k}); }

    [[nodiscard]] json to_json(bool with_polynomials = true) const
    {
        json j = json::object();
        j["construction"] = construction;
        j["params"] = params;
        j["status"] = status();
        if (refusal) j["refusal"] = *refusal;
        if (!chosen.empty()) j["chosen_parameters"] = chosen;
        if (!data.empty()) j["data"] = data;
        json cs = json::array();
        for (const auto& c : claims) {
            json e = json::object();
            e["kind"] = c.kind;
            e["subject"] = c.subject;
            e["expected"] = c.expected;
            e["computed"] = c.computed;
            e["status"] = c.ok ? "verified" : "failed";
            cs.push_back(std::move(e));
        }
        j["claims"] = std::move(cs);
        if (with_polynomials) j["polynomials"] = polynomials;
        return j;
    }

    /// One line per claim, for terminal output.
    [[nodiscard]] std::string summary() const
    {
        std::ostringstream out;
        out << construction;
        if (!params.empty()) out << " " << params.dump();
        out << ": " << status() << "\n";
        if (refusal) out << "  refused: " << *refusal << "\n";
        for (const auto& c : claims)
            out << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.kind << " " << c.subject << " expected " << c.expected.dump()
                << " computed " << c.computed.dump() << "\n";
        return out.str();
    }
};

/// Signed-count string used in JSON for an InertiaResult.
inline json inertia_json(const InertiaResult& r)
{
    json j = json::object();
    j["ambient"] = json::array({r.ambient.degree, r.ambient.vars});
    j["inertia"] = json::array({r.A, r.B, r.k});
    std::ostringstream h;
    h << std::hex << r.witness_hash();
    j["witness_hash"] = h.str();
    return j;
}

} // namespace hermsig

#endif
