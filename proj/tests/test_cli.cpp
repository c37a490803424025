#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef BCGRASS_CLI_BIN
#error "BCGRASS_CLI_BIN must point at the built command line binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(BCGRASS_CLI_BIN) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("bc subcommand") {
    auto r = run_cli("bc --mode flat --phi s[2,1] --n 4 --r 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-3/2 * p2(Q)\n");

    r = run_cli("bc --mode projflat --phi p[2] --n 4 --r 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2 * p1(Q) - 2 * w p0(Q)\n");

    r = run_cli("bc --mode flat --phi c3 --n 4 --r 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3/2 * p2(Q)\n");

    r = run_cli("bc --mode flat --phi ch3 --n 4 --r 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3/4 * p2(Q)\n");
}

TEST_CASE("bc json payload validates") {
    const auto r = run_cli("bc --mode flat --phi s[2,1] --n 4 --r 2 --json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "bcform");
    CHECK(j["n"] == 4);
    CHECK(j["r"] == 2);
    REQUIRE(j["terms"].size() == 1);
    CHECK(j["terms"][0]["omega"] == 0);
    CHECK(j["terms"][0]["p"] == 2);
    CHECK(j["terms"][0]["coeff"] == "-3/2");
}

TEST_CASE("symf subcommand") {
    auto r = run_cli("symf --to p s[2,1]");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-1/3 * p[3] + 1/3 * p[1,1,1]\n");

    r = run_cli("symf --mul s[1] s[1]");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "s[2] + s[1,1]\n");

    r = run_cli("symf --to e p[2] --json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "symf");
    CHECK(j["basis"] == "e");
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["partition"] == nlohmann::json::array({2}));
    CHECK(j["terms"][0]["coeff"] == "-2");
}

TEST_CASE("chow subcommand") {
    auto r = run_cli("chow --g 2,2 --mul s[1] s[1]");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "s[2] + s[1,1]\n");

    r = run_cli("chow --g 1,1 --mul s[1] s[1]");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n");
}

TEST_CASE("arakelov subcommand") {
    auto r = run_cli("arakelov --g 1,1 --star sigma[1] sigma[1]");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "a[1]\n");

    r = run_cli("arakelov --g 2,2 --star sigma[1] sigma[1]");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "sigma[2] + sigma[1,1]\n");

    r = run_cli("arakelov --g 1,1 --star a[1] a[1]");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n");

    r = run_cli("arakelov --g 1,1 --star sigma[1] sigma[1] --json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "arakelov");
    CHECK(j["r"] == 1);
    CHECK(j["s"] == 1);
    CHECK(j["geom"].empty());
    REQUIRE(j["arch"].size() == 1);
    CHECK(j["arch"][0]["partition"] == nlohmann::json::array({1}));
    CHECK(j["arch"][0]["coeff"] == "1");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("bc --mode flat --phi s[1,2] --n 4 --r 2").exit_code == 2);
    CHECK(run_cli("bc --mode flat --phi s[2,1] --n 2 --r 2").exit_code == 2);
    CHECK(run_cli("bc --mode warped --phi s[1] --n 4 --r 2").exit_code == 2);
    CHECK(run_cli("verify nosuch").exit_code == 2);
    CHECK(run_cli("chow --g 2 --mul s[1] s[1]").exit_code == 2);
    CHECK(run_cli("arakelov --g 1,1 --star sigma[2] sigma[1]").exit_code == 2);
    CHECK(run_cli("nosuchcommand").exit_code == 2);
}

TEST_CASE("verify subcommands hold and exit 0") {
    auto r = run_cli("verify identities --max-n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find("all checks hold\n") != std::string::npos);

    r = run_cli("verify oracle --max-weight 4 --max-rank 2");
    CHECK(r.exit_code == 0);

    r = run_cli("verify heights --max-n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("c_2 = 5/2") != std::string::npos);
    CHECK(r.out.find("c_3 = 13/3") != std::string::npos);
}

TEST_CASE("verify json lines parse and hold") {
    const auto r = run_cli("verify heights --max-n 2 --json");
    CHECK(r.exit_code == 0);
    size_t pos = 0, lines = 0;
    while (pos < r.out.size()) {
        size_t end = r.out.find('\n', pos);
        if (end == std::string::npos) end = r.out.size();
        const auto j = nlohmann::json::parse(r.out.substr(pos, end - pos));
        CHECK(j["holds"] == true);
        CHECK(j.contains("identity"));
        CHECK(j.contains("params"));
        CHECK(j.contains("lhs"));
        CHECK(j.contains("rhs"));
        ++lines;
        pos = end + 1;
    }
    CHECK(lines == 2);
}

TEST_CASE("output is deterministic") {
    const char* cmds[] = {
        "bc --mode projflat --phi c3 --n 5 --r 2 --json",
        "symf --to s h[2,2]",
        "arakelov --g 2,2 --star sigma[2,1] sigma[1]",
        "verify ring --max-rank 2",
    };
    for (const char* cmd : cmds) {
        const auto a = run_cli(cmd);
        const auto b = run_cli(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
    }
}
