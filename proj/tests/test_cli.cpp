// Drives the installed CLI binary and checks exit codes, diagnostics and
// the documented output surfaces.

#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
    int exit_code;
    std::string output;  // stdout and stderr interleaved
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(LATROOT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream(path) << content;
}

}  // namespace

TEST_CASE("roots on a catalog name") {
    CliResult r = run_cli("roots --catalog cp2");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("6 roots") != std::string::npos);
    REQUIRE(r.output.find("A2") != std::string::npos);
}

TEST_CASE("catalog names work as bare positionals") {
    CliResult r = run_cli("fan-validate pentagon");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("valid") != std::string::npos);
    CliResult roots = run_cli("fan-roots pentagon");
    REQUIRE(roots.exit_code == 0);
    REQUIRE(roots.output.find("empty") != std::string::npos);
}

TEST_CASE("configuration files are accepted") {
    write_file("cli_config.json", R"({"rank": 2, "vectors": [[1,0],[0,1],[-1,-1]]})");
    CliResult r = run_cli("oracle cli_config.json");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output == "oracle agrees: 6 roots\n");
}

TEST_CASE("domain errors exit 1 and name the violated invariant") {
    write_file("cli_zero.json", R"({"rank": 2, "vectors": [[1,0],[0,0]]})");
    CliResult zero = run_cli("roots cli_zero.json");
    REQUIRE(zero.exit_code == 1);
    REQUIRE(zero.output.find("zero") != std::string::npos);

    write_file("cli_deficient.json", R"({"rank": 2, "vectors": [[1,0],[2,0]]})");
    CliResult deficient = run_cli("roots cli_deficient.json");
    REQUIRE(deficient.exit_code == 1);
    REQUIRE(deficient.output.find("rank") != std::string::npos);

    write_file("cli_singular.json",
               R"({"rank": 2, "rays": [[1,0],[1,2],[-1,-1]], "max_cones": [[1,2],[2,3],[1,3]]})");
    CliResult singular = run_cli("fan-validate cli_singular.json");
    REQUIRE(singular.exit_code == 1);
    REQUIRE(singular.output.find("determinant") != std::string::npos);

    // sign assignment of the wrong length is a domain error
    CliResult signs = run_cli("roots --catalog cp2 --signed +,-");
    REQUIRE(signs.exit_code == 1);
}

TEST_CASE("usage errors exit 2") {
    CliResult missing = run_cli("roots no_such_file.json");
    REQUIRE(missing.exit_code == 2);

    write_file("cli_broken.json", R"({"rank": 2, "vectors": [[1,0],)");
    CliResult malformed = run_cli("roots cli_broken.json");
    REQUIRE(malformed.exit_code == 2);
    REQUIRE(malformed.output.find("byte") != std::string::npos);

    CliResult badverb = run_cli("frobnicate");
    REQUIRE(badverb.exit_code == 2);

    CliResult badsign = run_cli("roots --catalog cp2 --signed bogus");
    REQUIRE(badsign.exit_code == 2);

    CliResult noinput = run_cli("roots");
    REQUIRE(noinput.exit_code == 2);
}

TEST_CASE("subset classification through the CLI") {
    write_file("cli_subset.json", R"([[1,1],[-1,-1],[1,-1],[-1,1]])");
    write_file("cli_b2.json", R"({"rank": 2, "vectors": [[1,0],[0,1]]})");
    CliResult r = run_cli("classify cli_b2.json --subset cli_subset.json");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("A1") != std::string::npos);

    write_file("cli_badsubset.json", R"([[1,0]])");
    CliResult bad = run_cli("classify cli_b2.json --subset cli_badsubset.json");
    REQUIRE(bad.exit_code == 1);
    REQUIRE(bad.output.find("negation") != std::string::npos);
}

TEST_CASE("json output parses and round-trips") {
    CliResult r = run_cli("roots --catalog cp3 --json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j.at("roots").size() == 12);
    REQUIRE(j.at("configuration").at("rank") == 3);
    REQUIRE(j.at("classification").at("components").size() == 1);
}

TEST_CASE("signed block spec through the CLI") {
    CliResult r = run_cli("fan-roots --catalog cp1xcp1 --signed q=1 --json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j.at("roots").size() == 2);
}
