#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef BERGE_CLI_PATH
#define BERGE_CLI_PATH "berge"
#endif

namespace {

int run_cli(const std::string& args, const std::string& out_file = "") {
    std::string cmd = std::string(BERGE_CLI_PATH) + " " + args;
    if (!out_file.empty()) cmd += " > " + out_file + " 2>/dev/null";
    else cmd += " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("check subcommand exit codes") {
    CHECK(run_cli("check --mode pack --lambda 1 --n 5 --lengths 3,3,3") == 1);
    CHECK(run_cli("check --mode admissible --lambda 2 --n 3 --lengths 2,2,2") == 0);
    CHECK(run_cli("check --mode path --lambda 1 --n 4 --lengths 4") == 1);
}

TEST_CASE("oracle subcommand") {
    CHECK(run_cli("oracle --lambda 1 --n 5 --lengths 3,3 --kind cycle") == 0);
    CHECK(run_cli("oracle --lambda 1 --n 5 --lengths 3,3,3 --kind cycle") == 1);
    CHECK(run_cli("oracle --lambda 1 --n 3 --lengths 3 --kind cycle") == 0);
}

TEST_CASE("decompose then verify as separate processes") {
    CHECK(run_cli("decompose --n 5 --k 4 --mu 1 --cycles 2 --paths 3 --seed 7 --out /tmp/berge_c1.json") == 0);
    CHECK(run_cli("verify --input /tmp/berge_c1.json --cycles 2 --paths 3") == 0);
    CHECK(run_cli("verify --input /tmp/berge_c1.json --cycles 5 --paths 3") == 1);

    // run-length shorthand and a larger case-2 instance
    CHECK(run_cli("decompose --n 12 --k 10 --mu 1 --cycles 12x4 --paths 9,9 --seed 3 --out /tmp/berge_c2.json") == 0);
    CHECK(run_cli("verify --input /tmp/berge_c2.json --cycles 12x4 --paths 9,9") == 0);
}

TEST_CASE("decompose rejects bad input") {
    CHECK(run_cli("decompose --n 6 --k 3 --mu 1 --cycles 21") == 2);
    CHECK(run_cli("decompose --n 6 --k 3 --mu 1 --cycles 20") == 2); // sum mismatch
}

TEST_CASE("identical seeds give byte-identical certificates") {
    // mu*C(14,12) = 182 = (14*5 + 6) + (13*7 + 12 + 3)
    REQUIRE(run_cli("decompose --n 14 --k 12 --mu 2 --cycles 14x5,6 --paths 13x7,12,3 --seed 11 "
                    "--out /tmp/berge_d1.json") == 0);
    REQUIRE(run_cli("decompose --n 14 --k 12 --mu 2 --cycles 14x5,6 --paths 13x7,12,3 --seed 11 "
                    "--out /tmp/berge_d2.json") == 0);
    CHECK(slurp("/tmp/berge_d1.json") == slurp("/tmp/berge_d2.json"));
    CHECK(!slurp("/tmp/berge_d1.json").empty());
}

TEST_CASE("graph-decompose emits walks and leave") {
    CHECK(run_cli("graph-decompose --lambda 1 --n 7 --lengths 3,3,3,3,3,3,3 --kind cycle --mode decompose "
                  "--seed 5", "/tmp/berge_g1.json") == 0);
    std::string body = slurp("/tmp/berge_g1.json");
    CHECK(body.find("\"walks\"") != std::string::npos);
    CHECK(body.find("\"leave\"") != std::string::npos);
    CHECK(run_cli("graph-decompose --lambda 1 --n 5 --lengths 3,3,3 --kind cycle --mode pack") == 2);
}
