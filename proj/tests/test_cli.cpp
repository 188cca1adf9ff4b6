#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#ifndef CRANKMEX_CLI_PATH
#error "CRANKMEX_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string command = (env.empty() ? "" : env + " ") + std::string(CRANKMEX_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("stats output") {
    RunResult r = run("stats 5 1 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("crank: -1") != std::string::npos);
    CHECK(r.out.find("beta: 1") != std::string::npos);
    CHECK(r.out.find("mex: 2") != std::string::npos);

    CHECK(run("stats 8").out.find("crank: 8") != std::string::npos);
    CHECK(run("stats 8").out.find("mex: 1") != std::string::npos);
    CHECK(run("stats 3 3 2 1").out.find("mex: 4") != std::string::npos);

    nlohmann::json j = nlohmann::json::parse(run("stats 5 1^2 --format json").out);
    CHECK(j["crank"] == -1);
    CHECK(j["fixed_point"].is_null());
    CHECK(j["partition"] == "5 1^2");
}

TEST_CASE("exit codes") {
    CHECK(run("stats 0").exit_code != 0);          // invalid part
    CHECK(run("stats").exit_code != 0);            // missing argument
    CHECK(run("map fp-to-neg 8").exit_code == 1);  // domain violation
    CHECK(run("map nonsense 1 2").exit_code == 2); // unknown map name
    CHECK(run("table xy --n 8").exit_code != 0);   // unknown table id
    CHECK(run("verify nosuch").exit_code == 2);    // unknown suite
    CHECK(run("verify theorem1 --nmax 10").exit_code == 0);
}

TEST_CASE("map output and traces") {
    CHECK(run("map neg-to-pos 6 1 1").out == "5 2 1\n");
    CHECK(run("map pos-to-neg 8").out == "1^8\n");
    CHECK(run("map even-mex-to-fp 3 2 2 1").out == "2^4\n");
    RunResult traced = run("map even-mex-to-fp 3 3 2 1 --trace");
    CHECK(traced.out.find("rule-ii") != std::string::npos);
    CHECK(traced.out.find("rule-i") != std::string::npos);
    CHECK(traced.out.find("insert") != std::string::npos);
    CHECK(traced.out.find("3 2^3\n") != std::string::npos);

    nlohmann::json j = nlohmann::json::parse(run("map chain 4 4 1 --trace --format json").out);
    CHECK(j["image"] == "3^3");
    CHECK(j["trace"].size() >= 3);
}

TEST_CASE("verify json and env budget") {
    nlohmann::json j = nlohmann::json::parse(run("verify identities --format json").out);
    REQUIRE(j.is_array());
    CHECK(j[0]["suite"] == "identities");
    CHECK(j[0]["pass"] == true);
    CHECK(j[0]["counterexamples"].empty());

    nlohmann::json t = nlohmann::json::parse(run("verify theorem1 --format json", "CRANKMEX_BUDGET=6").out);
    CHECK(t[0]["parameters"]["nmax"] == 6);
    // explicit flag wins over the environment
    nlohmann::json t2 = nlohmann::json::parse(run("verify theorem1 --nmax 9 --format json", "CRANKMEX_BUDGET=6").out);
    CHECK(t2[0]["parameters"]["nmax"] == 9);
}

TEST_CASE("byte-identical reruns") {
    std::string a = run("verify section4 --nmax 12").out;
    std::string b = run("verify section4 --nmax 12").out;
    CHECK(a == b);
    CHECK(a.find("PASS section4") != std::string::npos);
    CHECK(run("table all --n 9 --format csv").out == run("table all --n 9 --format csv").out);
}

TEST_CASE("--out writes the same bytes") {
    std::string path = "cli_out_test.txt";
    std::string direct = run("table bc --n 8").out;
    RunResult r = run("table bc --n 8 --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string from_file((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(from_file == direct);
    std::remove(path.c_str());
}
