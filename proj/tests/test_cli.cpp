#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "json.hpp"
#include "odgraph/formulas.hpp"

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "odgraph");
    std::ostringstream out, err;
    const int code = od::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("degrees table for Z6") {
    const auto r = run({"degrees", "Z6"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "order  multiplicity  formula  profile  oracle\n"
          "    1             1        5        5       5\n"
          "    2             1        3        3       3\n"
          "    3             2        3        3       3\n"
          "    6             2        4        4       4\n");
}

TEST_CASE("degrees for D5 and Z1") {
    const auto d5 = run({"degrees", "D5"});
    CHECK(d5.out.find("    5             4        1        1       1\n") != std::string::npos);
    CHECK(d5.out.find("    2             5        1        1       1\n") != std::string::npos);
    const auto z1 = run({"degrees", "Z1"});
    CHECK(z1.code == 0);
    CHECK(count(z1.out, "\n") == 2);
    CHECK(z1.out.find("    1             1        0        0       0") != std::string::npos);
}

TEST_CASE("degrees json without an oracle past the bound") {
    const auto r = run({"degrees", "Z1000", "--enum-bound", "100", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"][0]["oracle"].is_null());
    CHECK(j["rows"][0]["formula"] == 999);
    CHECK(run({"degrees", "Z1000", "--enum-bound", "100", "--oracle"}).code == 1);
}

TEST_CASE("size, girth and classify") {
    CHECK(run({"size", "Z6"}).out == "11\n");
    CHECK(run({"size", "D4"}).out == "17\n");
    CHECK(run({"girth", "D9"}).out == "3\n");
    CHECK(run({"girth", "Z7"}).out == "0\n");
    const auto u24 = run({"classify", "U24"});
    CHECK(u24.out.find("star=true") != std::string::npos);
    CHECK(u24.out.find("bipartite=true") != std::string::npos);
    CHECK(run({"classify", "Z3"}).out.find("path=true") != std::string::npos);
    CHECK(run({"classify", "Z6"}).out.find("star=false") != std::string::npos);
}

TEST_CASE("cli numbers match library calls") {
    for (od::Natural n : {1, 12, 97, 360}) {
        const auto text = run({"size", "Z" + std::to_string(n)}).out;
        CHECK(text == std::to_string(od::formulas::size_zn(n)) + "\n");
    }
    for (od::Natural n : {3, 10, 64}) {
        const auto text = run({"size", "D" + std::to_string(n)}).out;
        CHECK(text == std::to_string(od::formulas::size_dn(n)) + "\n");
    }
    const auto spec = od::GroupSpec::product({od::GroupSpec::cyclic(4), od::GroupSpec::cyclic(6)});
    CHECK(run({"girth", "Z4xZ6"}).out == std::to_string(od::formulas::girth_of_group(spec)) + "\n");
}

TEST_CASE("dot export counts") {
    const auto z6 = run({"export", "Z6"}).out;
    CHECK(z6.rfind("graph \"OD(Z6)\" {\n", 0) == 0);
    CHECK(count(z6, "[label=") == 6);
    CHECK(count(z6, " -- ") == 11);
    const auto z8 = run({"export", "Z8", "--format", "dot"}).out;
    CHECK(count(z8, "[label=") == 8);
    CHECK(count(z8, " -- ") == 21);
    CHECK(run({"export", "Z1"}).out == "graph \"OD(Z1)\" {\n  0 [label=\"0:1\"];\n}\n");
    CHECK(run({"export", "Z6"}).out == z6);
}

TEST_CASE("json and csv export") {
    const auto j = nlohmann::json::parse(run({"export", "D4", "--format", "json"}).out);
    CHECK(j["group"] == "D4");
    CHECK(j["vertices"].size() == 8);
    CHECK(j["edges"].size() == 17);
    CHECK(j["vertices"][4]["label"] == "b");
    CHECK(j["invariants"]["size"] == 17);
    const auto csv = run({"export", "Z6", "--format", "csv"}).out;
    CHECK(csv.rfind("source,target,source_label,target_label\r\n", 0) == 0);
    CHECK(count(csv, "\r\n") == 12);
}

TEST_CASE("verify exit codes") {
    const auto ok = run({"verify", "cyclic", "1..200"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("cyclic 1..200: 200/200 pass\n") != std::string::npos);
    CHECK(ok.out.find("chromatic Z6 = 3 (n + 1 = 7)") != std::string::npos);
    CHECK(run({"verify", "cyclic", "5..3"}).code == 2);
    CHECK(run({"verify", "dihedral", "1..5"}).code == 2);
    CHECK(run({"verify", "symmetric", "1..3"}).code == 2);
    CHECK(run({"verify", "cyclic", "1-3"}).code == 2);
    const auto units = run({"verify", "units", "2..60"});
    CHECK(units.code == 0);
    CHECK(units.out.find("star instances: 2 3 4 6 8 12 24\n") != std::string::npos);
    const auto j = nlohmann::json::parse(run({"verify", "product", "1..3", "--format", "json"}).out);
    CHECK(j["total"] == 9);
}

TEST_CASE("usage errors") {
    const auto bad = run({"size", "D2"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("n >= 3") != std::string::npos);
    CHECK(run({"size", "Z6x"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"size", "Z6", "--format", "xml"}).code == 2);
}

TEST_CASE("--out writes a file") {
    const std::string path = "odgraph_cli_test_out.dot";
    const auto r = run({"export", "Z6", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == run({"export", "Z6"}).out);
    std::remove(path.c_str());
    CHECK(run({"size", "Z6", "--out", "/nonexistent-dir/x"}).code == 1);
}
