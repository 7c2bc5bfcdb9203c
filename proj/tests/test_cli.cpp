#include <doctest.h>

#include "embfilt/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = embfilt::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(EMBFILT_DATA_DIR) + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("newton subcommand") {
    CliResult r = run({"newton", "--poly", data("ex1.txt")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "vertices: (0,8) (6,2)"));
    CHECK(contains(r.out, "(1,1) >= 8 [compact]"));
    CHECK(contains(r.out, "bi-stellar: yes"));

    CliResult zero = run({"newton", "--poly", data("zero.txt")});
    CHECK(zero.code == 1);
    CHECK(contains(zero.err, "zero polynomial"));

    CliResult missing = run({"newton", "--poly", data("nope.txt")});
    CHECK(missing.code == 1);
}

TEST_CASE("poincare subcommand reproduces the worked example") {
    CliResult r = run({"poincare", "--poly", data("ex1.txt"), "--weights", "2,3;4,3", "--box",
                       "20,28", "--mode", "both"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "q: (18,24)"));
    CHECK(contains(r.out, "closed form: (1-t1^18*t2^24)^1 * (1-t1^2*t2^4)^-1 * (1-t1^3*t2^3)^-1"));
    CHECK(contains(r.out, "identical"));
    CHECK(contains(r.out, "coefficient at (20,28): 0"));

    CliResult json = run({"poincare", "--poly", data("ex1.txt"), "--weights", "2,3;4,3", "--box",
                          "6,6", "--mode", "closed", "--json"});
    CHECK(json.code == 0);
    CHECK(contains(json.out, "\"q\""));
}

TEST_CASE("verify-condition subcommand") {
    CliResult ok = run({"verify-condition", "--poly", data("cusp.txt"), "--weights", "3,2", "--v1",
                        "4", "--v2", "7"});
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "condition: consistent-at-truncation"));
    CHECK(contains(ok.out, "agree=yes"));
}

TEST_CASE("curve subcommand") {
    CliResult r = run({"curve", "--graph", data("cusp_graph.json")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "P_V: (1-t^6)^1 * (1-t^2)^-1 * (1-t^3)^-1"));
    CHECK(contains(r.out, "acampo zeta: (1-t^6)^1 * (1-t^2)^-1 * (1-t^3)^-1"));
    CHECK(contains(r.out, "zeta agreement: yes"));
    CHECK(contains(r.out, "recovered q: (6), n: (1)"));
}

TEST_CASE("toric subcommand") {
    CliResult validate = run({"toric", "--presentation", data("toric_2_3.json")});
    CHECK(validate.code == 0);
    CHECK(contains(validate.out, "valid: yes"));

    CliResult th = run({"toric", "--presentation", data("toric_2_3.json"), "--mode", "theta",
                        "--nu", "1"});
    CHECK(th.code == 0);
    CHECK(contains(th.out, "mu: (2,3)"));
    CHECK(contains(th.out, "on dual locus: yes"));

    CliResult cmp = run({"toric", "--presentation", data("toric_2_3.json"), "--mode", "compare",
                         "--nus", "1", "--box", "10"});
    CHECK(cmp.code == 0);
    CHECK(contains(cmp.out, "identical"));
}

TEST_CASE("zeta subcommand") {
    CliResult r = run({"zeta", "--poly", data("cusp.txt"), "--graph", data("cusp_graph.json")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "varchenko zeta: (1-t^6)^1 * (1-t^2)^-1 * (1-t^3)^-1"));
    CHECK(contains(r.out, "agreement: yes"));
}

TEST_CASE("recover-newton subcommand") {
    CliResult r = run({"recover-newton", "--weights", "3,2;1,0;0,1", "--offsets", "6,0,0",
                       "--poly", data("cusp.txt")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "round trip matches newton polyhedron: yes"));

    CliResult bad = run({"recover-newton", "--weights", "3,2"});
    CHECK(bad.code == 1);
}

TEST_CASE("identical inputs produce byte-identical outputs") {
    for (int round = 0; round < 2; ++round) {
        CliResult a = run({"newton", "--poly", data("ex1.txt"), "--json"});
        CliResult b = run({"newton", "--poly", data("ex1.txt"), "--json"});
        CHECK(a.out == b.out);
        CliResult c = run({"curve", "--graph", data("cusp_graph.json"), "--json"});
        CliResult d = run({"curve", "--graph", data("cusp_graph.json"), "--json"});
        CHECK(c.out == d.out);
    }
}

TEST_CASE("help and bad usage") {
    CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CliResult nothing = run({});
    CHECK(nothing.code == 1);
    CliResult unknown = run({"frobnicate"});
    CHECK(unknown.code == 1);
}

TEST_CASE("installed binary runs end to end") {
    std::string cmd = std::string(EMBFILT_CLI_PATH) + " curve --graph " + data("cusp_graph.json") +
                      " > /tmp/embfilt_cli_test.out 2>&1";
    int status = std::system(cmd.c_str());
    CHECK(status == 0);
    std::ifstream in("/tmp/embfilt_cli_test.out");
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(contains(buffer.str(), "zeta agreement: yes"));
}
