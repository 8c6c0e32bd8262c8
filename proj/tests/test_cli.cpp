#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

std::string quote(const std::string& s)
{
    std::string q = "'";
    for (char c : s) {
        if (c == '\'') q += "'\\''";
        else q += c;
    }
    return q + "'";
}

CliRun cli(const std::string& args)
{
    const std::string cmd = quote(HERMSIG_CLI_PATH) + " " + args + " 2>&1";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::ordered_json parse(const CliRun& r) { return nlohmann::ordered_json::parse(r.out); }

} // namespace

TEST(Cli, SignatureOfProductWithSphereForm)
{
    const CliRun r = cli("signature " + quote("(|z1|^2-|z2|^2)*(|z1|^2+|z2|^2-|z3|^2)"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("signature (2,2)"), std::string::npos) << r.out;
}

TEST(Cli, SymmetryViolationIsBadInput)
{
    const CliRun r = cli("signature " + quote("z1*~z2"));
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("not Hermitian symmetric"), std::string::npos) << r.out;
    const CliRun j = cli("--json signature " + quote("z1*~z2"));
    EXPECT_EQ(j.code, 3);
    EXPECT_EQ(parse(j)["status"], "error");
}

TEST(Cli, SyntaxErrorReportsPosition)
{
    const CliRun r = cli("signature " + quote("1 +"));
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("position 3"), std::string::npos) << r.out;
}

TEST(Cli, UnknownVerbRejected)
{
    EXPECT_EQ(cli("frobnicate").code, 3);
    EXPECT_EQ(cli("construct no_such_thing").code, 3);
}

TEST(Cli, ProductPairFactors)
{
    const CliRun r = cli("construct thm41 2 0 --json");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = parse(r);
    EXPECT_EQ(j["status"], "verified");
    EXPECT_EQ(j["data"]["s(r1)"], nlohmann::json::array({2, 1}));
    EXPECT_EQ(j["data"]["s(r2)"], nlohmann::json::array({6, 3}));
}

TEST(Cli, RefusedPairExitsTwo)
{
    const CliRun r = cli("construct thm41 1 0");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("refused"), std::string::npos);
}

TEST(Cli, WhitneyCertificateJson)
{
    const auto j = parse(cli("construct whitney 2 --json"));
    EXPECT_EQ(j["status"], "verified");
    bool found = false;
    for (const auto& p : j["polynomials"])
        if (p["name"] == "p") {
            EXPECT_EQ(p["signature"], nlohmann::json::array({3, 1}));
            found = true;
        }
    EXPECT_TRUE(found);
}

TEST(Cli, JsonIsByteStable)
{
    for (const char* args : {"construct thm41 4 3 --json", "construct example 7.1 --json", "table --n 2 --json"}) {
        const CliRun a = cli(args), b = cli(args);
        EXPECT_EQ(a.code, b.code);
        EXPECT_EQ(a.out, b.out) << args;
    }
}

TEST(Cli, TableGrid)
{
    const CliRun r = cli("table --n 2 --json");
    ASSERT_EQ(r.code, 0);
    const auto j = parse(r);
    ASSERT_EQ(j["grid"].size(), 6u);
    for (const auto& row : j["grid"]) EXPECT_EQ(row.size(), 7u);
    EXPECT_EQ(j["grid"][0][0]["value"], "0");
}

TEST(Cli, DivideAndDegree)
{
    const CliRun d = cli("divide-r " + quote("(|z1|^2+|z2|^2-|z3|^2)*|z1|^2"));
    EXPECT_EQ(d.code, 0);
    EXPECT_NE(d.out.find("member yes"), std::string::npos) << d.out;
    EXPECT_NE(d.out.find("quotient z1*~z1"), std::string::npos) << d.out;
    const CliRun p = cli("projdeg " + quote("|z1 z2|^2*(|z1|^2+|z2|^2-|z3|^2)"));
    EXPECT_EQ(p.code, 0);
    EXPECT_NE(p.out.find("projective degree 2 (bidegree 1)"), std::string::npos) << p.out;
}

TEST(Cli, RealExpressionsGiveSignCounts)
{
    const CliRun r = cli("signature " + quote("x1^2 - x1 x2 + 3"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("sign counts (2,1)"), std::string::npos) << r.out;
}

TEST(Cli, Bound)
{
    const CliRun r = cli("bound --n 2 --target 4");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("6"), std::string::npos);
    EXPECT_EQ(cli("bound --n 1 --target 4").code, 2);
}

TEST(Cli, VerifySuite)
{
    const CliRun r = cli("verify-paper --suite s6");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("5/5 certificates verified"), std::string::npos) << r.out;
    EXPECT_EQ(cli("verify-paper --suite s99").code, 3);
}
