#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include "cli.hpp"

using hyperab::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = hyperab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("hodge subcommand") {
    const auto csv = run({"hodge", "--n", "3", "--d", "1", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "n,d,q,multiplicity\n3,1,0,1\n3,1,1,4\n3,1,2,1\n");

    const auto json = run({"hodge", "--n", "4", "--d", "2", "--format", "json"});
    REQUIRE(json.code == 0);
    const Json j = Json::parse(json.out);
    CHECK(j["tannakian_dimension"] == 48);
    CHECK(j["multiplicities"] == Json::array({2, 22, 22, 2}));
    CHECK(j["chi_omega"] == Json::array({-2, 22, -22, 2}));
    CHECK(json.out.find("\"tannakian_dimension\": 48") != std::string::npos);

    CHECK(run({"hodge", "--n", "1", "--d", "1"}).code == 2);
    CHECK(run({"hodge", "--n", "3", "--d", "0"}).code == 2);
    CHECK(run({"hodge", "--n", "3", "--d", "x"}).code == 2);
    CHECK(run({"hodge", "--n", "3", "--format", "yaml"}).code == 2);

    const auto text = run({"hodge", "--n", "3"});
    CHECK(text.code == 0);
    CHECK(text.out.find("tannakian dimension: 6") != std::string::npos);
}

TEST_CASE("big integers are rendered as strings in JSON") {
    const auto r = run({"hodge", "--n", "25", "--d", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["tannakian_dimension"] == "15511210043330985984000000");
    CHECK(j["n"] == 25);
}

TEST_CASE("conditions subcommand") {
    const auto r = run({"conditions", "--n", "3", "--d", "1", "--group", "go", "--c", "1000000", "--dim-x", "5",
                        "--format", "json"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["conditions"]["first"] == true);
    CHECK(j[0]["conditions"]["second"] == true);
    CHECK(j[0]["h0"] == 8);
    CHECK(j[0]["key_inequality"] == true);

    const auto fail = run({"conditions", "--n", "2", "--d", "1", "--group", "gl", "--c", "1", "--dim-x", "1000000000"});
    CHECK(fail.code == 1);
    CHECK(fail.out.find("first condition false") != std::string::npos);

    const auto minc = run({"conditions", "--n", "3", "--d", "1", "--group", "go", "--dim-x", "5", "--find-min-c"});
    CHECK(minc.code == 0);
    CHECK(minc.out.find("minimal c = 22") != std::string::npos);

    const auto n2 = run({"conditions", "--n", "2", "--d", "1", "--format", "json"});
    CHECK(n2.code == 0);
    const Json k = Json::parse(n2.out);
    REQUIRE(k.size() == 3);
    CHECK(k[2]["group"] == "GO");
    CHECK(k[2]["key_inequality"] == false);
    CHECK(k[2]["structure_occurs"] == false);
    CHECK(k[1]["structure_occurs"] == true);

    CHECK(run({"conditions", "--n", "3", "--group", "sl"}).code == 2);
    CHECK(run({"conditions", "--scan", "--second-moment", "--n", "3"}).code == 2);
}

TEST_CASE("conditions scan and second moment") {
    const auto scan = run({"conditions", "--scan", "--n-hi", "50", "--d-hi", "100"});
    CHECK(scan.code == 0);
    CHECK(scan.out.find("GL: 4900 checked, 0 failed\n") != std::string::npos);
    CHECK(scan.out.find("GSp: 4900 checked, 0 failed\n") != std::string::npos);
    CHECK(scan.out.find("GO: 4900 checked, 100 failed (0 where the structure occurs)") != std::string::npos);
    CHECK(scan.out.find("PASS") != std::string::npos);

    const auto sm = run({"conditions", "--n", "2", "--second-moment", "--format", "json"});
    REQUIRE(sm.code == 0);
    const Json j = Json::parse(sm.out);
    CHECK(j["second_moment"] == "1/2");
    CHECK(j["expected"] == "1/2");
    CHECK(j["equal"] == true);
    CHECK(j["a0_le_half"] == true);
}

TEST_CASE("classify subcommand") {
    const auto n4 = run({"classify", "--n", "4", "--m-max", "14", "--span-max", "6"});
    CHECK(n4.code == 0);
    CHECK(n4.out == "0 solutions\n");

    const auto n3 = run({"classify", "--n", "3", "--m-max", "10", "--span-max", "4", "--format", "json"});
    CHECK(n3.code == 0);
    std::istringstream lines(n3.out);
    std::string line;
    std::vector<Json> sols;
    while (std::getline(lines, line)) sols.push_back(Json::parse(line));
    REQUIRE(sols.size() == 1);
    CHECK(sols[0]["case"] == "CASE_M4K2");
    CHECK(sols[0]["m_H"] == Json::array({Json::array({0, 2}), Json::array({1, 2})}));
    CHECK(sols[0]["k"] == 2);
    CHECK(sols[0]["d"] == 1);

    const auto n2 = run({"classify", "--n", "2", "--m-max", "12"});
    CHECK(n2.code == 0);
    CHECK(n2.out.rfind("5 solutions\n", 0) == 0);
    CHECK(n2.out.find("d = 462, k = 6") != std::string::npos);

    CHECK(run({"classify", "--n", "1"}).code == 2);
    CHECK(run({"classify"}).code == 2);
}

TEST_CASE("sequences subcommand") {
    const auto t = run({"sequences", "--i-max", "6", "--format", "csv"});
    CHECK(t.code == 0);
    CHECK(t.out.find("6,1065,") != std::string::npos);
    CHECK(t.out.find("3,20,216182590635135019896") != std::string::npos);

    const auto a = run({"sequences", "--admissible", "53130", "--format", "json"});
    CHECK(a.code == 1);
    const Json j = Json::parse(a.out);
    CHECK(j["admissible"] == false);
    CHECK(j["witness"] == 2);

    CHECK(run({"sequences", "--admissible", "53131"}).code == 0);
    CHECK(run({"sequences", "--admissible", "6"}).code == 0);

    const auto dio = run({"sequences", "--diophantine", "100", "--format", "json"});
    CHECK(dio.code == 0);
    CHECK(Json::parse(dio.out) == Json::parse("[[1,5],[5,20],[20,76]]"));

    const auto desc = run({"sequences", "--descent", "285", "1065"});
    CHECK(desc.code == 0);
    CHECK(desc.out.find("4 step(s)") != std::string::npos);
    CHECK(run({"sequences", "--descent", "5", "21"}).code == 1);

    CHECK(run({"sequences"}).code == 2);
    CHECK(run({"sequences", "--i-max", "3", "--admissible", "6"}).code == 2);
    CHECK(run({"sequences", "--i-max", "11"}).code == 2);
}

TEST_CASE("output file option") {
    const std::string path = "hyperab_cli_test_output.csv";
    const auto r = run({"hodge", "--n", "2", "--d", "5", "--format", "csv", "--output", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == "n,d,q,multiplicity\n2,5,0,5\n2,5,1,5\n");
    std::remove(path.c_str());

    CHECK(run({"hodge", "--n", "2", "--output", "/nonexistent-dir/x.txt"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"hodge", "--n"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("worker count comes from the environment") {
    ::setenv("HYPERAB_WORKERS", "3", 1);
    CHECK(hyperab::cli::workers_from_env() == 3);
    ::setenv("HYPERAB_WORKERS", "zero", 1);
    CHECK(run({"classify", "--n", "2"}).code == 2);
    ::unsetenv("HYPERAB_WORKERS");
    CHECK(hyperab::cli::workers_from_env() >= 1);
}
