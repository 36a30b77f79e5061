#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "randfib/cli.hpp"

using randfib::run_cli;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("enumerate dumps sorted words with a JSON header") {
    const CliRun r = run({"enumerate", "--m", "1", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"count\":3,\"l_n\":3,\"m\":1,\"n\":4}\n011\n101\n110\n");
}

TEST_CASE("enumerate n = 1 prints the single word 0") {
    const CliRun r = run({"enumerate", "--m", "1", "--n", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\n0\n") != std::string::npos);
}

TEST_CASE("enumerate over budget exits 2 with the predicted count") {
    const CliRun r = run({"enumerate", "--m", "1", "--n", "30"});
    CHECK(r.code == 2);
    CHECK(r.err.find("predicted") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("count emits the exact table") {
    const CliRun r = run({"count", "--m", "1", "--n", "9", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("n,l_n,d_n,A_n,log10_A_n") == 0);
    CHECK(r.out.find("9,34,13,3317760,") != std::string::npos);
    CHECK(r.out.find("6,8,3,30,") != std::string::npos);
}

TEST_CASE("sample reproduces the deterministic chain") {
    const CliRun r = run({"sample", "--m", "1", "--p", "1,0", "--n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "01101\n");
    const CliRun json =
        run({"sample", "--m", "1", "--p", "1,0", "--n", "5", "--format", "json"});
    CHECK(json.out.find("\"word\": \"01101\"") != std::string::npos);
}

TEST_CASE("identical config and seed give byte-identical output") {
    const CliRun a = run({"sample", "--m", "2", "--n", "6", "--seed", "5", "--trials",
                          "4", "--format", "json"});
    const CliRun b = run({"sample", "--m", "2", "--n", "6", "--seed", "5", "--trials",
                          "4", "--format", "json"});
    CHECK(a.out == b.out);
}

TEST_CASE("entropy reports the sandwich columns and ignores p") {
    const CliRun a = run({"entropy", "--m", "1", "--tol", "1e-9", "--format", "csv"});
    CHECK(a.code == 0);
    CHECK(a.out.find("n,l_n,log_A,h_A,h_A_log2,h_F,gap_bound") == 0);
    CHECK(a.out.find("9,34,") != std::string::npos);
    const CliRun b = run({"entropy", "--m", "1", "--tol", "1e-9", "--format", "csv",
                          "--p", "1,0"});
    const CliRun c = run({"entropy", "--m", "1", "--tol", "1e-9", "--format", "csv",
                          "--p", "0.5,0.5"});
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
}

TEST_CASE("factors report") {
    const CliRun r = run({"factors", "--m", "1", "--n", "3", "--k", "1", "--format",
                          "json", "--dump"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"count_F\": 4") != std::string::npos);
    CHECK(r.out.find("left_proper_subset") != std::string::npos);
    const CliRun any = run({"factors", "--m", "1", "--t", "2"});
    CHECK(any.code == 0);
    CHECK(any.out.find("= 4") != std::string::npos);
}

TEST_CASE("usage errors exit 64") {
    CHECK(run({"enumerate", "--m", "1"}).code == 64);          // missing --n
    CHECK(run({"bogus"}).code == 64);                          // unknown subcommand
    CHECK(run({}).code == 64);                                 // no subcommand
    CHECK(run({"enumerate", "--n", "4", "--format", "xml"}).code == 64);
    CHECK(run({"sample", "--m", "1", "--p", "0.4,0.5", "--n", "3"}).code == 64);
}

TEST_CASE("config file provides defaults and flags override") {
    const std::string path = "/tmp/randfib_test_config.json";
    {
        std::ofstream f(path);
        f << "{\"m\": 1, \"n\": 4, \"format\": \"csv\"}";
    }
    const CliRun fromfile = run({"enumerate", "--config", path});
    CHECK(fromfile.code == 0);
    CHECK(fromfile.out == "word\n011\n101\n110\n");
    const CliRun overridden = run({"enumerate", "--config", path, "--n", "3"});
    CHECK(overridden.out == "word\n01\n10\n");
    std::remove(path.c_str());
}

TEST_CASE("--out writes the report to a file") {
    const std::string path = "/tmp/randfib_test_out.txt";
    const CliRun r = run({"enumerate", "--m", "1", "--n", "3", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream content;
    content << f.rdbuf();
    CHECK(content.str().find("01\n10\n") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("help exits cleanly") {
    CHECK(run({"--help"}).code == 0);
}
