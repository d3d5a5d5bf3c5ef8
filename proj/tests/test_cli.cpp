// End-to-end checks of the command-line tool: deterministic output, JSON
// round-trips, exit codes, and --out file writing. The binary path comes
// from the MINMOD_CLI_PATH environment variable set by CMake.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_path() { return MINMOD_CLI_PATH; }

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// Timing lives in "meta" objects, which are excluded from the determinism
// comparison.
void strip_meta(nlohmann::ordered_json& j) {
    if (j.is_object()) {
        j.erase("meta");
        for (auto& [k, v] : j.items()) strip_meta(v);
    } else if (j.is_array()) {
        for (auto& v : j) strip_meta(v);
    }
}

}  // namespace

TEST_CASE("deterministic byte-identical output") {
    for (const std::string& args :
         {std::string("kac-table 2 4 --json"), std::string("classify 3 5 --json"),
          std::string("zhu-image 4 2 --sector r --json"),
          std::string("jack 2,1 1 3"), std::string("spectrum 5 3 2 1"),
          std::string("correlator 1 0 --json")}) {
        RunResult a = run(args);
        RunResult b = run(args);
        CHECK(a.exit_code == 0);
        CHECK(a.output == b.output);
    }
    // Verification reports carry timing in "meta" only; the data payload is
    // byte-identical once meta is stripped.
    RunResult a = run("verify --suite svimage 2 4 --json");
    RunResult b = run("verify --suite svimage 2 4 --json");
    REQUIRE(a.exit_code == 0);
    auto ja = nlohmann::ordered_json::parse(a.output);
    auto jb = nlohmann::ordered_json::parse(b.output);
    strip_meta(ja);
    strip_meta(jb);
    CHECK(ja.dump(2) == jb.dump(2));
}

TEST_CASE("json output round-trips byte-identically") {
    for (const std::string& args :
         {std::string("kac-table 3 5 --json"), std::string("classify 2 4 --json"),
          std::string("spectrum 2 4 1 2 --json"),
          std::string("zhu-image 2 4 --sector ns --json")}) {
        RunResult r = run(args);
        REQUIRE(r.exit_code == 0);
        auto parsed = nlohmann::ordered_json::parse(r.output);
        CHECK(parsed.dump(2) + "\n" == r.output);
    }
}

TEST_CASE("invalid input exits 2 with a named condition") {
    RunResult r = run("kac-table 2 6");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("NotAdmissible:") != std::string::npos);
    CHECK(r.exit_code == 2);
    RunResult odd = run("kac-table 3 2");
    CHECK(odd.exit_code == 2);
    CHECK(odd.output.find("u - v must be even") != std::string::npos);
    RunResult bad = run("no-such-command");
    CHECK(bad.exit_code != 0);
}

TEST_CASE("verify suites succeed") {
    CHECK(run("verify --suite ospalg").exit_code == 0);
    CHECK(run("verify --suite svimage --json").exit_code == 0);
}

TEST_CASE("--out writes the same bytes as stdout") {
    RunResult direct = run("classify 4 2 --json");
    REQUIRE(direct.exit_code == 0);
    std::string path = "cli_out_test.json";
    RunResult filed = run("classify 4 2 --json --out " + path);
    CHECK(filed.exit_code == 0);
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == direct.output);
    std::remove(path.c_str());
}

TEST_CASE("rationals are printed exactly, no floats") {
    RunResult r = run("spectrum 2 4 1 1 --json");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("\"1/4\"") != std::string::npos);
    CHECK(r.output.find("0.25") == std::string::npos);
}
