#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "egr/cli.hpp"
#include "egr/graph.hpp"

using namespace egr;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("graph edgelist output") {
    CliRun r = run({"graph", "Z/8", "--format", "edgelist"});
    CHECK(r.code == 0);
    CHECK(r.out == "2 1\n0 1\n");

    r = run({"graph", "GF(7)", "--format", "edgelist"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 0\n");
}

TEST_CASE("exit codes") {
    CHECK(run({"graph", "Z/1"}).code == 2);
    CHECK(run({"graph", "Z/70000"}).code == 3);
    CHECK(run({"verify", "--corpus", "missing.txt"}).code == 2);
    CHECK(run({"threshold", "--t", "3"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("invariants json") {
    CliRun r = run({"invariants", "Z/36", "--json"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["invariants"]["omega"] == 5);
    CHECK(doc["invariants"]["chi"] == 5);

    r = run({"invariants", "Z/9 x Z/25", "--json"});
    auto doc2 = nlohmann::json::parse(r.out);
    CHECK(doc2["invariants"]["edge_class"] == "Class2");
    CHECK(doc2["invariants"]["chi_prime"] == 7);
    CHECK(doc2["invariants"]["overfull"] == true);
    CHECK(doc2["graph_summary"]["edges"] == 19);
}

TEST_CASE("invariants human output on a field") {
    CliRun r = run({"invariants", "GF(7)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("empty graph") != std::string::npos);
    CHECK(r.out.find("omega           0") != std::string::npos);
}

TEST_CASE("verify single ring and tags") {
    CHECK(run({"verify", "Z/36", "--tags", "thm2.3"}).code == 0);
    CliRun r = run({"verify", "--corpus", "default", "--tags", "thm2.13", "--json"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["fail_count"] == 0);
}

TEST_CASE("threshold output") {
    CliRun r = run({"threshold", "--t", "2,4,6,8"});
    CHECK(r.code == 0);
    CHECK(r.out == "2 3\n4 4\n6 6\n8 7\n");
    CHECK(run({"threshold", "--t", "44"}).out == "44 32\n");
}

TEST_CASE("lattice dump") {
    CliRun r = run({"lattice", "Z/12", "--json"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["ideals"].size() == 6);

    r = run({"lattice", "Z/8"});
    CHECK(r.out.find("(2)") != std::string::npos);
    CHECK(r.out.find("nilpotent") != std::string::npos);
}

TEST_CASE("byte-identical repeated invocations") {
    CliRun a = run({"invariants", "Z/9 x Z/25", "--json"});
    CliRun b = run({"invariants", "Z/9 x Z/25", "--json"});
    CHECK(a.out == b.out);
    CliRun c = run({"graph", "Z/12", "--format", "dot"});
    CliRun d = run({"graph", "Z/12", "--format", "dot"});
    CHECK(c.out == d.out);
}

TEST_CASE("emitted edge lists re-ingest identically") {
    CliRun r = run({"graph", "Z/12", "--format", "edgelist"});
    std::istringstream is(r.out);
    SimpleGraph g = read_edge_list(is);
    CHECK(g.n == 4);
    CHECK(g.edge_count() == 5);
}

TEST_CASE("corpus file and EGR_CORPUS") {
    const char* path = "test_corpus_tmp.txt";
    {
        std::ofstream f(path);
        f << "# tiny corpus\nZ/8\n";
    }
    CliRun r = run({"verify", "--corpus", path, "--tags", "thm2.3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Z/8") != std::string::npos);

    setenv("EGR_CORPUS", path, 1);
    CliRun e = run({"verify", "--corpus", "default", "--tags", "thm2.3"});
    unsetenv("EGR_CORPUS");
    CHECK(e.code == 0);
    CHECK(e.out.find("Z/8") != std::string::npos);
    CHECK(e.out.find("Z/12") == std::string::npos);
    std::remove(path);
}
