/**
 * @file test_cli.cpp
 * @brief Command dispatch: outputs, structured documents and exit codes.
 */
#include <doctest.h>

#include "qdual/cli.hpp"

#include <json.hpp>

#include <sstream>

using namespace qdual;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("normalize") {
        Run r = run({"normalize", "--algebra", "Fq_SL2_hat", "--expr", "a*d - d*a"});
        CHECK(r.code == 0);
        CHECK(r.out == "(-q^-1 + q)*c*b\n");
        CHECK(run({"normalize", "--algebra", "Uq_sl2_hat", "--expr", "E*F - F*E"}).out == "Gamma\n");
    }

    TEST_CASE("exit codes") {
        CHECK(run({"member", "--algebra", "Uq_sl2_hat", "--expr", "E", "--max-n", "4"}).code == 1);
        CHECK(run({"member", "--algebra", "Uq_sl2_hat", "--expr", "(q-1)*E", "--max-n", "4"}).code == 0);
        CHECK(run({"normalize", "--algebra", "Uq_sl2_hat", "--expr", "E +"}).code == 2);
        CHECK(run({"normalize", "--algebra", "NoSuchAlgebra", "--expr", "E"}).code == 2);
        CHECK(run({"normalize", "--algebra", "Uq_hn_s_hat(9)", "--expr", "E1"}).code == 2);
        CHECK(run({"bogus"}).code == 2);
        CHECK(run({"limit", "--algebra", "Fq_SL2_hat", "--cobracket-table"}).code == 3);
        CHECK(run({"verify", "--algebra", "Fq_Hn_hat(1)", "--suite", "all"}).code == 0);
    }

    TEST_CASE("structured output is a stable single document") {
        const std::vector<std::string> args = {"--format", "structured", "member", "--algebra", "Uq_sl2_hat",
                                               "--expr", "E", "--max-n", "3"};
        Run a = run(args), b = run(args);
        CHECK(a.out == b.out);
        auto doc = nlohmann::json::parse(a.out);
        for (const char* key : {"command", "algebra", "inputs", "result", "diagnostics"}) CHECK(doc.contains(key));
        CHECK(doc["result"]["verdict"] == "NOT-MEMBER");
        CHECK(doc["result"]["profile"].size() == 3);
        Run bad = run({"normalize", "--algebra", "Uq_sl2_hat", "--expr", "E +", "--format", "structured"});
        CHECK(bad.code == 2);
        auto bdoc = nlohmann::json::parse(bad.out);
        CHECK(bdoc["diagnostics"].size() == 1);
        CHECK(bdoc["result"].is_null());
    }

    TEST_CASE("tilde names, tables and maps") {
        Run t = run({"tilde", "--algebra", "Uq_sl2_hat"});
        CHECK(t.code == 0);
        CHECK(t.out.find("algebra Uq_sl2_tilde") != std::string::npos);
        CHECK(run({"tilde", "--algebra", "Fq_SL2_hat"}).code == 1);
        CHECK(run({"tilde-f", "--algebra", "Fq_SL3_hat"}).code == 0);
        Run l = run({"limit", "--algebra", "Uq_sl2_tilde", "--poisson-table"});
        CHECK(l.code == 0);
        CHECK(l.out.find("{Fd, Ed}") != std::string::npos);
        CHECK(run({"checkmap", "--algebra", "Uq_e2_s_hat"}).code == 0);
        CHECK(run({"checkmap", "--algebra", "Fq_SL3_hat"}).code == 2);
        CHECK(run({"double-tilde", "--algebra", "Fq_E2_hat", "--max-n", "3"}).code == 0);
        CHECK(run({"delta", "--algebra", "Uq_sl2_hat", "--expr", "H", "--n", "2"}).out == "-1 @ H + K @ H\n");
        CHECK(run({"catalog", "list"}).out.find("Fq_SL3_hat") != std::string::npos);
    }
}
