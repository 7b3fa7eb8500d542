#include "doctest.h"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

// QUIVERDT_CLI_PATH and QUIVERDT_DATA_DIR come from the build system.

namespace {

struct RunResult {
    std::string output;
    int exit_code = -1;
};

// Runs the CLI binary with stderr merged into stdout.
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(QUIVERDT_CLI_PATH) + " " + args + " 2>&1";
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

std::string data(const std::string& name) {
    return std::string(QUIVERDT_DATA_DIR) + "/" + name;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("kac subcommand prints the Jordan table") {
    RunResult r = run_cli("kac --quiver " + data("jordan.json") + " --dim 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "A (1) = t\n"));
    CHECK(contains(r.output, "A (2) = t\n"));
}

TEST_CASE("dt subcommand prints seeds and squares") {
    RunResult point = run_cli("dt --quiver " + data("point.json") + " --dim 1");
    CHECK(point.exit_code == 0);
    CHECK(contains(point.output, "DT (1) = 1\n"));

    RunResult jordan = run_cli("dt --quiver " + data("jordan.json") + " --dim 2");
    CHECK(jordan.exit_code == 0);
    CHECK(contains(jordan.output, "DT (1) = t\n"));
    CHECK(contains(jordan.output, "DT (2) = t^2\n"));
}

TEST_CASE("output is byte identical across runs") {
    std::string args = "verify --quiver " + data("a2.json") + " --dim 1,1 --format json";
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(!first.output.empty());
}

TEST_CASE("malformed quiver file exits 2 with a parse diagnostic") {
    std::string path = "/tmp/quiverdt_cli_bad.json";
    {
        std::ofstream out(path);
        out << "{ \"vertices\": 1, \"arrows\": [[1,";
    }
    RunResult r = run_cli("kac --quiver " + path + " --dim 1");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "not valid JSON"));
    std::remove(path.c_str());
}

TEST_CASE("verify passes on the Jordan quiver at q = 3") {
    RunResult r = run_cli("verify --quiver " + data("jordan.json") + " --dim 2 --q 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "om q=3"));
    CHECK(contains(r.output, "mult kac q=3 v=(2)  lhs=3 rhs=3  pass"));
    CHECK(contains(r.output, "mult steinberg q=3 v=(2)  lhs=9 rhs=9  pass"));
    CHECK(contains(r.output, "count q=3 v=(2)  lhs=12 rhs=12  pass"));
    CHECK(!contains(r.output, "FAIL"));
}

TEST_CASE("verify rejects an inadmissible q with a divisibility message") {
    RunResult r = run_cli("verify --quiver " + data("jordan.json") + " --dim 2 --q 2");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "must divide q - 1"));
}

TEST_CASE("verify picks the smallest admissible prime automatically") {
    RunResult r = run_cli("verify --quiver " + data("a2.json") + " --dim 1,1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "q=3"));
    CHECK(!contains(r.output, "FAIL"));
}

TEST_CASE("kac json output carries the schema and the table") {
    RunResult r = run_cli("kac --quiver " + data("jordan.json") + " --dim 2 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "kac");
    REQUIRE(j["table"].size() == 2);
    CHECK(j["table"][1]["w"] == nlohmann::json::array({2}));
    CHECK(j["table"][1]["coeffs"] == nlohmann::json::array({"0", "1"}));
    CHECK(j["table"][1]["text"] == "t");
}

TEST_CASE("series of the empty box is the constant one") {
    RunResult r = run_cli("series --quiver " + data("point.json") + " --dim 0");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["schema"] == 1);
    REQUIRE(j["box"].size() == 1);
    CHECK(j["box"][0]["w"] == nlohmann::json::array({0}));
    CHECK(j["box"][0]["hua"]["text"] == "1");
    CHECK(j["box"][0]["dt"]["text"] == "1");
}

TEST_CASE("series coefficients expose numerator and denominator") {
    RunResult r = run_cli("series --quiver " + data("jordan.json") + " --dim 1");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    REQUIRE(j["box"].size() == 2);
    // V_1 for one loop is q/(q-1)
    CHECK(j["box"][1]["hua"]["num"] == nlohmann::json::array({"0", "1"}));
    CHECK(j["box"][1]["hua"]["den"] == nlohmann::json::array({"-1", "1"}));
}

TEST_CASE("missing required flags exit 2") {
    RunResult r = run_cli("kac --dim 1");
    CHECK(r.exit_code == 2);
}

TEST_CASE("dimension vector length must match the quiver") {
    RunResult r = run_cli("kac --quiver " + data("a2.json") + " --dim 2");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "vertices"));
}
