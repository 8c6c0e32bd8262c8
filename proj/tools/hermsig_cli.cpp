// hermsig command-line front end.
//
// Exit codes: 0 success, 1 a verification failed, 2 the construction was
// refused, 3 bad input (syntax, symmetry, arity, arithmetic).

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <hermsig/hermsig.hpp>

using namespace hermsig;

namespace {

constexpr int kOk = 0, kFailed = 1, kRefused = 2, kBadInput = 3;

struct Output {
    bool json_mode = false;

    void emit(const json& j, const std::string& text) const
    {
        if (json_mode) std::cout << j.dump(2) << "\n";
        else std::cout << text;
    }
};

std::string pair_string(std::pair<unsigned, unsigned> p)
{
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::string triple_string(const InertiaResult& r)
{
    return "(" + std::to_string(r.A) + "," + std::to_string(r.B) + "," + std::to_string(r.k) + ")";
}

json matrix_json(const ComplexMatrix& m)
{
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& c : row) r.push_back(c.to_string());
        out.push_back(std::move(r));
    }
    return out;
}

json witness_json(const InertiaResult& r, const std::function<std::string(const MultiIndex&)>& name)
{
    json blocks = json::array();
    for (const auto& b : r.blocks) {
        json e = json::object();
        json basis = json::array();
        for (const auto& m : b.basis) basis.push_back(name(m));
        e["basis"] = std::move(basis);
        e["matrix"] = matrix_json(b.matrix);
        e["transform"] = matrix_json(b.transform);
        json d = json::array();
        for (const auto& x : b.diagonal) d.push_back(x.to_string());
        e["diagonal"] = std::move(d);
        blocks.push_back(std::move(e));
    }
    return blocks;
}

std::string holo_name(const MultiIndex& m)
{
    std::string s = monomial_string(m, [](unsigned v) { return "z" + std::to_string(v + 1); });
    return s.empty() ? "1" : s;
}

/// Inertia of p in the requested ambient; non-bihomogeneous input is bihomogenized first.
InertiaResult ambient_inertia(const HermPoly& p, std::optional<unsigned> degree, std::optional<unsigned> vars)
{
    HermPoly q = p.is_bihomogeneous() ? p : bihomogenize(p);
    Ambient amb = minimal_ambient(q);
    if (degree) amb.degree = *degree;
    if (vars) amb.vars = *vars;
    return inertia(q, amb);
}

int report_inertia(const Output& out, const std::string& text, const HermPoly& p, std::optional<unsigned> degree,
                   std::optional<unsigned> vars, bool witness)
{
    InertiaResult r = ambient_inertia(p, degree, vars);
    const bool ok = verify_witness(r);
    json j = json::object();
    j["expression"] = text;
    j["polynomial"] = p.to_string();
    j["vars"] = p.vars();
    j["bidegree"] = p.bidegree();
    j["signature"] = Certificate::pair_json(r.signature());
    j["rank"] = r.rank();
    j["ambient"] = json::array({r.ambient.degree, r.ambient.vars});
    j["inertia"] = Certificate::triple_json(r);
    j["witness_verified"] = ok;
    std::ostringstream h;
    h << std::hex << r.witness_hash();
    j["witness_hash"] = h.str();
    if (witness) j["witness"] = witness_json(r, holo_name);
    std::ostringstream s;
    s << "signature " << pair_string(r.signature()) << "\n";
    s << "inertia " << triple_string(r) << " in V(" << r.ambient.degree << "," << r.ambient.vars << ")\n";
    s << "witness " << (ok ? "verified" : "FAILED") << " hash " << h.str() << "\n";
    if (witness) s << witness_json(r, holo_name).dump(2) << "\n";
    out.emit(j, s.str());
    return ok ? kOk : kFailed;
}

int cmd_signature(const Output& out, const std::string& text, std::optional<unsigned> degree, std::optional<unsigned> vars,
                  bool witness)
{
    ParsedExpression e = parse_expression(text, vars);
    if (!e.is_hermitian()) {
        // real polynomial: signed coefficient counts, which equal s of its moment lift
        auto sc = sign_counts(*e.real);
        json j = json::object();
        j["expression"] = text;
        j["polynomial"] = to_string(*e.real);
        j["sign_counts"] = Certificate::pair_json(sc);
        j["moment_lift_signature"] = Certificate::pair_json(signature_pair(moment_lift(*e.real)));
        out.emit(j, "sign counts " + pair_string(sc) + "\n");
        return kOk;
    }
    return report_inertia(out, text, *e.herm, degree, vars, witness);
}

int cmd_product(const Output& out, const std::string& a, const std::string& b)
{
    HermPoly p = parse_hermitian(a), q = parse_hermitian(b);
    const unsigned n = std::max(p.vars(), q.vars());
    p = p.with_vars(n);
    q = q.with_vars(n);
    HermPoly pq = p * q;
    auto sp = signature_pair(p), sq = signature_pair(q), spq = signature_pair(pq);
    json j = json::object();
    j["p"] = p.to_string();
    j["q"] = q.to_string();
    j["product"] = pq.to_string();
    j["signatures"] = {{"p", Certificate::pair_json(sp)}, {"q", Certificate::pair_json(sq)}, {"pq", Certificate::pair_json(spq)}};
    std::ostringstream s;
    s << "pq = " << pq.to_string() << "\n";
    s << "s(p) = " << pair_string(sp) << "  s(q) = " << pair_string(sq) << "  s(pq) = " << pair_string(spq) << "\n";
    out.emit(j, s.str());
    return kOk;
}

int cmd_divide(const Output& out, const std::string& text)
{
    HermPoly p = parse_hermitian(text);
    if (p.vars() < 2) p = p.with_vars(2);
    HermDivision d = divide_by_r(p);
    const bool ok = d.witness.identity_holds();
    auto zname = [n = p.vars()](unsigned v) { return v < n ? "z" + std::to_string(v + 1) : "~z" + std::to_string(v - n + 1); };
    json j = json::object();
    j["polynomial"] = p.to_string();
    j["divisor"] = hyperquadric(p.vars() - 1).to_string();
    j["member"] = d.member();
    j["quotient"] = poly_string(d.witness.quotient, zname);
    j["remainder"] = poly_string(d.witness.remainder, zname);
    j["identity_verified"] = ok;
    std::ostringstream s;
    s << "member " << (d.member() ? "yes" : "no") << "\n";
    s << "quotient " << poly_string(d.witness.quotient, zname) << "\n";
    s << "remainder " << poly_string(d.witness.remainder, zname) << "\n";
    s << "p = q*r + rem " << (ok ? "verified" : "FAILED") << "\n";
    out.emit(j, s.str());
    return ok ? kOk : kFailed;
}

int cmd_projdeg(const Output& out, const std::string& text)
{
    HermPoly p = parse_hermitian(text);
    ReductionResult r = projective_degree(p);
    const bool ok = r.identity_holds();
    const std::string h = poly_string(r.h, [](unsigned v) { return "z" + std::to_string(v + 1); });
    json j = json::object();
    j["polynomial"] = p.to_string();
    j["h"] = h;
    j["reduced"] = r.reduced.to_string();
    j["bidegree"] = r.bidegree;
    j["projective_degree"] = r.total_degree;
    j["identity_verified"] = ok;
    std::ostringstream s;
    s << "projective degree " << r.total_degree << " (bidegree " << r.bidegree << ")\n";
    s << "h = " << h << "\n";
    s << "reduced " << r.reduced.to_string() << "\n";
    out.emit(j, s.str());
    return ok ? kOk : kFailed;
}

int certificate_exit(const Certificate& c) { return c.refused() ? kRefused : (c.verified() ? kOk : kFailed); }

int emit_certificate(const Output& out, const Certificate& c)
{
    out.emit(c.to_json(), c.summary());
    return certificate_exit(c);
}

unsigned to_unsigned(const std::string& s)
{
    std::size_t used = 0;
    const unsigned long v = std::stoul(s, &used);
    if (used != s.size() || v > 100000) throw std::invalid_argument("expected a non-negative integer, got '" + s + "'");
    return static_cast<unsigned>(v);
}

Scalar to_scalar(const std::string& s)
{
    HermPoly c = parse_hermitian(s);
    if (c.poly().total_degree() != 0) throw std::invalid_argument("expected a constant, got '" + s + "'");
    if (c.is_zero()) return Scalar(0);
    const ComplexScalar v = c.poly().terms().begin()->second;
    return v.re();
}

struct ShiftOptions {
    std::string base;
    std::string sign = "+";
    std::optional<unsigned> k;
};

Certificate run_construct(const std::vector<std::string>& args, const ShiftOptions& shift, unsigned boost)
{
    if (args.empty()) throw std::invalid_argument("construct needs a name");
    const std::string& name = args[0];
    auto arg = [&](std::size_t i, unsigned dflt) { return args.size() > i ? to_unsigned(args[i]) : dflt; };
    auto need = [&](std::size_t n) {
        if (args.size() < n + 1) throw std::invalid_argument("construct " + name + " needs " + std::to_string(n) + " parameters");
    };
    if (name == "lemma31" || name == "identities") return factor_identity_suite();
    if (name == "cyclotomic") return cyclotomic_certificate(arg(1, 3));
    if (name == "whitney") return whitney(arg(1, 2));
    if (name == "gap") return gap_family(arg(1, 3));
    if (name == "prop41") return collapse_to_norm(arg(1, 3));
    if (name == "prop42") return collapse_identity(arg(1, 1));
    if (name == "thm41") {
        need(2);
        return product_pair_construct(to_unsigned(args[1]), to_unsigned(args[2])).cert;
    }
    if (name == "thm82") {
        need(3);
        return stable_construct(to_unsigned(args[1]), to_unsigned(args[2]), to_unsigned(args[3]), boost, true).cert;
    }
    if (name == "target") {
        need(2);
        return target_family(to_unsigned(args[1]), to_unsigned(args[2])).cert;
    }
    if (name == "shift") {
        HermPoly p = shift.base.empty() ? whitney_element(2) : parse_hermitian(shift.base);
        if (shift.sign != "+" && shift.sign != "-") throw std::invalid_argument("shift sign must be + or -");
        const unsigned k = shift.k ? *shift.k : p.bidegree() + 1;
        return shift_construct(p, shift.sign == "+" ? 1 : -1, k).cert;
    }
    if (name == "example") {
        need(1);
        const std::string& which = args[1];
        if (which == "4.1") return squaring_example(args.size() > 2 ? to_scalar(args[2]) : Scalar::rational(1, 2));
        if (which == "14") return nondiagonal_example();
        if (which == "ambient") return ambient_example();
        if (which == "6.1") return projective_degree_example(arg(2, 1));
        if (which == "7.1") {
            if (args.size() == 2) return linear_family_example(0, 2, 1);
            if (args.size() != 5) throw std::invalid_argument("example 7.1 takes A B C");
            return linear_family_example(to_scalar(args[2]), to_scalar(args[3]), to_scalar(args[4]));
        }
        if (which == "7.2") return two_two_example();
        throw std::invalid_argument("unknown example '" + which + "' (4.1, 14, ambient, 6.1, 7.1, 7.2)");
    }
    throw std::invalid_argument("unknown construction '" + name
                                + "' (lemma31, cyclotomic, whitney, gap, prop41, prop42, thm41, example, shift, thm82, target)");
}

int cmd_verify(const Output& out, const std::string& suite)
{
    std::vector<Certificate> certs = run_suite(suite);
    unsigned verified = 0, claims = 0, failed_claims = 0;
    json list = json::array();
    std::ostringstream s;
    for (const auto& c : certs) {
        if (c.verified()) ++verified;
        claims += static_cast<unsigned>(c.claims.size());
        failed_claims += static_cast<unsigned>(c.failures().size());
        list.push_back(c.to_json(false));
        s << (c.verified() ? "PASS " : "FAIL ") << c.construction;
        if (!c.params.empty()) s << " " << c.params.dump();
        s << " (" << c.claims.size() << " claims)\n";
        if (!c.verified()) s << c.summary();
    }
    const bool ok = verified == certs.size();
    s << "suite " << suite << ": " << verified << "/" << certs.size() << " certificates verified, " << claims - failed_claims << "/"
      << claims << " claims\n";
    json j = json::object();
    j["suite"] = suite;
    j["status"] = ok ? "verified" : "failed";
    j["certificates"] = certs.size();
    j["verified"] = verified;
    j["claims"] = claims;
    j["failed_claims"] = failed_claims;
    j["results"] = std::move(list);
    out.emit(j, s.str());
    return ok ? kOk : kFailed;
}

int cmd_table(const Output& out, unsigned n)
{
    if (n != 2) throw std::invalid_argument("the table is available for n = 2 only");
    auto cells = table_metadata(6, 5, true);
    bool ok = true;
    json grid = json::array();
    std::ostringstream s;
    s << "B\\A ";
    for (unsigned A = 0; A <= 6; ++A) s << " " << std::setw(3) << A;
    s << "\n";
    for (unsigned B = 0; B <= 5; ++B) {
        s << std::setw(3) << B << " ";
        json row = json::array();
        for (unsigned A = 0; A <= 6; ++A) {
            const TableCell& c = cells[B * 7 + A];
            s << " " << std::setw(3) << (c.value == "inf" ? "oo" : c.value);
            json e = json::object();
            e["A"] = c.A;
            e["B"] = c.B;
            e["value"] = c.value;
            e["source"] = c.source;
            if (c.cert) {
                e["certificate"] = c.cert->to_json(false);
                ok = ok && c.cert->verified();
            }
            row.push_back(std::move(e));
        }
        grid.push_back(std::move(row));
        s << "\n";
    }
    s << "0 only zero, - empty, 1/3 sup of projective degree, f finite, e nonempty (finiteness open), oo unbounded\n";
    s << "oo and e cells constructed and " << (ok ? "verified" : "NOT verified") << "; other cells imported\n";
    json j = json::object();
    j["n"] = n;
    j["rows"] = "B = 0..5";
    j["columns"] = "A = 0..6";
    j["grid"] = std::move(grid);
    j["status"] = ok ? "verified" : "failed";
    out.emit(j, s.str());
    return ok ? kOk : kFailed;
}

int cmd_bound(const Output& out, unsigned n, unsigned target)
{
    if (n < 2) {
        json j = {{"n", n}, {"target", target}, {"status", "refused"}, {"refusal", "no degree estimate holds for n = 1"}};
        out.emit(j, "refused: no degree estimate holds for n = 1\n");
        return kRefused;
    }
    mpq_class b = degree_bound(n, target);
    json j = {{"n", n}, {"target", target}, {"bound", b.get_str()}, {"bound_decimal", b.get_d()}};
    out.emit(j, "degree bound " + b.get_str() + "\n");
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Signature pairs, inertia and constructions for Hermitian symmetric polynomials"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--json", out.json_mode, "JSON output");

    std::string expr, expr2, suite = "all", ambient_text;
    std::optional<unsigned> degree, vars;
    bool witness = false;
    unsigned n = 2, target = 0, boost = 0;
    std::vector<std::string> construct_args;
    ShiftOptions shift;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", out.json_mode, "JSON output"); };
    auto add_ambient = [&](CLI::App* sub) {
        sub->add_option("--degree", degree, "ambient degree d of V(d, k)");
        sub->add_option("--vars", vars, "ambient number of variables k");
        sub->add_flag("--witness", witness, "dump the congruence witness");
    };

    auto* sig = app.add_subcommand("signature", "signature pair and inertia triple of an expression");
    sig->add_option("expr", expr)->required();
    add_ambient(sig);
    add_json(sig);
    auto* inr = app.add_subcommand("inertia", "inertia triple in V(d, k)");
    inr->add_option("expr", expr)->required();
    add_ambient(inr);
    add_json(inr);
    auto* prod = app.add_subcommand("product", "product of two forms with the three signature pairs");
    prod->add_option("p", expr)->required();
    prod->add_option("q", expr2)->required();
    add_json(prod);
    auto* div = app.add_subcommand("divide-r", "divide by ||z||^2 - |z_{n+1}|^2");
    div->add_option("expr", expr)->required();
    add_json(div);
    auto* pd = app.add_subcommand("projdeg", "projective degree after removing |h|^2 factors");
    pd->add_option("expr", expr)->required();
    add_json(pd);
    auto* con = app.add_subcommand("construct", "build and verify a named construction");
    con->add_option("args", construct_args, "name followed by its parameters")->required();
    con->add_option("--base", shift.base, "shift: base element (default the Whitney d = 2 element)");
    con->add_option("--sign", shift.sign, "shift: + or -");
    con->add_option("--k", shift.k, "shift: padding degree k (default bidegree + 1)");
    con->add_option("--boost", boost, "thm82: raise every shift degree by this much");
    add_json(con);
    auto* ver = app.add_subcommand("verify-paper", "run a verification suite");
    ver->add_option("--suite", suite, "all, s3, s4, s6, s7 or s8");
    add_json(ver);
    auto* tab = app.add_subcommand("table", "non-emptiness and degree table");
    tab->add_option("--n", n, "domain dimension (2 only)");
    add_json(tab);
    auto* bnd = app.add_subcommand("bound", "degree estimate N(N-1)/(2(2n-3))");
    bnd->add_option("--n", n, "domain dimension")->required();
    bnd->add_option("--target", target, "target dimension N")->required();
    add_json(bnd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*sig) return cmd_signature(out, expr, degree, vars, witness);
        if (*inr) return cmd_signature(out, expr, degree, vars, witness);
        if (*prod) return cmd_product(out, expr, expr2);
        if (*div) return cmd_divide(out, expr);
        if (*pd) return cmd_projdeg(out, expr);
        if (*con) return emit_certificate(out, run_construct(construct_args, shift, boost));
        if (*ver) return cmd_verify(out, suite);
        if (*tab) return cmd_table(out, n);
        if (*bnd) return cmd_bound(out, n, target);
    } catch (const std::exception& e) {
        if (out.json_mode) std::cout << json{{"status", "error"}, {"error", e.what()}}.dump(2) << "\n";
        else std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
