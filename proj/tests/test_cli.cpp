#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    CliResult res;
    std::string cmd = std::string(TPC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WEXITSTATUS(status);
    return res;
}

}  // namespace

TEST_CASE("gen piped into the oracle reports the star value") {
    auto res = run_cli("gen --kind star --leaves 3 | " + std::string(TPC_CLI_PATH) + " tpc");
    CHECK(res.exit_code == 0);
    CHECK(json::parse(res.out).at("value") == 4);
}

TEST_CASE("full product-color-check pipeline") {
    std::string cli = TPC_CLI_PATH;
    auto res = run_cli("gen --kind path --n 4 | " + cli + " product --op cartesian --with star:3 | " +
                       cli + " color --theorem cart-star | " + cli + " check");
    CHECK(res.exit_code == 0);
    CHECK(json::parse(res.out).at("connected") == true);
}

TEST_CASE("check exits 1 on a corrupted coloring and lists the failing pairs") {
    std::string cli = TPC_CLI_PATH;
    // color a path, then overwrite one edge color so the ends disconnect
    auto colored = run_cli("gen --kind path --n 3 | " + cli + " color --theorem traceable");
    REQUIRE(colored.exit_code == 0);
    auto j = json::parse(colored.out);
    j["coloring"]["edge_colors"]["0-1"] = j["coloring"]["edge_colors"]["1-2"];
    j["coloring"]["vertex_colors"][1] = j["coloring"]["edge_colors"]["1-2"];
    std::string path = "/tmp/tpc_cli_bad.json";
    {
        FILE* f = fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        auto text = j.dump();
        fwrite(text.data(), 1, text.size(), f);
        fclose(f);
    }
    auto res = run_cli("check --in " + path);
    CHECK(res.exit_code == 1);
    auto report = json::parse(res.out);
    CHECK(report.at("connected") == false);
    CHECK(report.at("failures").size() == 1);
}

TEST_CASE("perm product pipeline and permutation colorer") {
    std::string cli = TPC_CLI_PATH;
    auto res = run_cli("gen --kind path --n 4 | " + cli +
                       " product --op perm --alpha [1,2,0,3] | " + cli +
                       " color --theorem perm-trace | " + cli + " check");
    CHECK(res.exit_code == 0);
}

TEST_CASE("standalone perm-star form and dot export") {
    std::string cli = TPC_CLI_PATH;
    auto res = run_cli("color --theorem perm-star --leaves 3 --variant transposition01 | " + cli +
                       " export-dot");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("graph g {") != std::string::npos);
    CHECK(res.out.find("--") != std::string::npos);
    CHECK(res.out.find("color=") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("gen --kind pentagon --n 5").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("gen --kind cycle --n 2").exit_code == 2);
}

TEST_CASE("identical invocations produce byte-identical output") {
    std::string cli = TPC_CLI_PATH;
    std::string args = "gen --kind cycle --n 5 | " + cli + " color --theorem traceable";
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("hunt-perm at order 3 finds nothing") {
    auto res = run_cli("hunt-perm --n-max 3");
    CHECK(res.exit_code == 0);
    auto j = json::parse(res.out);
    CHECK(j.at("completed") == true);
    CHECK(j.at("candidates").empty());
    CHECK(j.at("instances_examined") == 2 + 6 + 6);  // K_2 plus both order-3 classes
}
