// Drives the installed CLI binary through its exit-code and JSON contracts.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(D21A_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

} // namespace

TEST_CASE("jacobi at symbolic alpha passes with exit 0") {
    RunResult r = run_cli("verify-jacobi --alpha symbolic --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["schema_version"] == 1);
    CHECK(j["pass"] == true);
    CHECK(j["checks"][0]["info"]["triples"] == "4913");
}

TEST_CASE("bad sigma triple fails with exit 4 and a violation list") {
    RunResult r = run_cli("verify-jacobi --sigma 1,1,1 --format json");
    CHECK(r.exit_code == 4);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["pass"] == false);
    CHECK(!j["checks"][0]["failures"].empty());
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("verify-rep --lambda bogus").exit_code == 2);
    CHECK(run_cli("nonexistent-command").exit_code == 2);
    CHECK(run_cli("gram --lambda zero-mode --degree 2").exit_code == 2);
    CHECK(run_cli("gram --alpha 1 --lambda one --degree 2").exit_code == 2);
    CHECK(run_cli("verify-jacobi --sigma 1,1").exit_code == 2);
    CHECK(run_cli("verify-rep --alpha 3/0").exit_code == 2);
}

TEST_CASE("excluded parameters exit with 3") {
    CHECK(run_cli("kernel-check --alpha 2 --lambda alpha --max-degree 4").exit_code == 3);
}

TEST_CASE("degenerate gram is reported but not an error") {
    RunResult r = run_cli("gram --alpha 2 --lambda alpha --degree 3 --det --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["gram"]["degenerate"] == true);
    CHECK(j["gram"]["det"] == "0");
    CHECK(j["checks"][0]["info"]["degenerate"] == "true");
}

TEST_CASE("gram matrix values in json") {
    RunResult r = run_cli("gram --alpha symbolic --lambda alpha --degree 1 --det --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["gram"]["matrix"][0][0] == "-a");
    CHECK(j["gram"]["matrix"][1][1] == "-1");
}

TEST_CASE("gk growth output") {
    RunResult r = run_cli("gk-growth --alpha 1/2 --lambda alpha --max-k 5 --format json");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j["dimensions"].size() == 6);
    CHECK(j["dimensions"][5] == 21);
}

TEST_CASE("segal-bargmann round trip through the cli") {
    // inverse: z1 -> (1/2^{1+a}) Omega_1(x1) exp(-2(x1+x2))
    RunResult inv = run_cli(
        R"(sb --alpha symbolic --lambda alpha --direction inverse --input '[{"d1":1,"d2":0,"e3":0,"e4":0,"coeff":"1"}]' --format json)");
    CHECK(inv.exit_code == 0);
    auto j = nlohmann::json::parse(inv.output);
    CHECK(j["result"]["pow2_const"] == "-1");
    CHECK(j["result"]["pow2_alpha"] == "-1");
    // poly part is 4 x1 + a
    auto poly = j["result"]["poly"];
    REQUIRE(poly.size() == 2);
    // forward maps it back
    std::string forward_input = j["result"].dump();
    RunResult fwd = run_cli("sb --alpha symbolic --lambda alpha --direction forward --input '" + forward_input +
                            "' --format json");
    CHECK(fwd.exit_code == 0);
    auto jf = nlohmann::json::parse(fwd.output);
    REQUIRE(jf["result"].size() == 1);
    CHECK(jf["result"][0]["d1"] == 1);
    CHECK(jf["result"][0]["coeff"] == "1");
}

TEST_CASE("recurrences subcommand") {
    CHECK(run_cli("recurrences --max-k 8").exit_code == 0);
}

TEST_CASE("text format prints one line per check") {
    RunResult r = run_cli("verify-jordan");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[PASS] jordan-identity") != std::string::npos);
    CHECK(r.output.find("seed:") != std::string::npos);
}
