#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "jackweight_cli/cli.hpp"

using namespace jw;
using namespace jw::cli;

TEST_CASE("config validation") {
    RunConfig c;
    CHECK(validate(c).empty());
    c.kappa = 0.6;
    CHECK_THROWS_AS(validate(c), ConfigError);
    c.kappa = 0.4;
    auto w = validate(c);
    REQUIRE(w.size() == 1);
    CHECK(w[0].find("1/h_tau") != std::string::npos);
    c.points = 2;
    CHECK_THROWS_AS(validate(c), ConfigError);
    c = RunConfig{};
    c.tau = "3";
    CHECK_THROWS_AS(validate(c), InvalidPartition);
}

TEST_CASE("config JSON overlays and rejects unknown keys") {
    RunConfig c;
    apply_config_json(c, Json{{"tau", "3,1"}, {"kappa", 0.2}, {"extrapolate", false}});
    CHECK(c.tau == "3,1");
    CHECK(c.kappa == 0.2);
    CHECK_FALSE(c.extrapolate);
    CHECK(c.points == RunConfig{}.points);
    CHECK_THROWS_AS(apply_config_json(c, Json{{"kapa", 0.2}}), ConfigError);
    CHECK_THROWS_AS(apply_config_json(c, Json{{"kappa", "x"}}), ConfigError);
    CHECK_THROWS_AS(apply_config_json(c, Json::array()), ConfigError);
    CHECK_THROWS_AS(apply_config_file(c, "/nonexistent/config.json"), ConfigError);
}

TEST_CASE("config file") {
    const char* path = "test_cli_config.json";
    {
        std::ofstream out(path);
        out << R"({"tau": "2,2", "points": 16})";
    }
    RunConfig c;
    apply_config_file(c, path);
    CHECK(c.tau == "2,2");
    CHECK(c.points == 16);
    std::remove(path);
}

TEST_CASE("report skeleton") {
    RunConfig c;
    Json j = report_skeleton("repr", c, {"w"});
    CHECK(j["schemaVersion"] == kSchemaVersion);
    CHECK(j["command"] == "repr");
    CHECK(j["config"]["tau"] == "2,1");
    CHECK(j["warnings"][0] == "w");
    auto keys = j.items().begin();
    CHECK(keys.key() == "schemaVersion");
}

TEST_CASE("CSV layout") {
    CMat m(2, 2);
    m << cplx(1, 0), cplx(0.5, -2), cplx(0.5, 2), cplx(3, 0);
    std::string csv = csv_matrix({"(0,0,0)T0", "(0,0,0)T1"}, m);
    std::string header = csv.substr(0, csv.find('\n'));
    CHECK(header == "label,\"(0,0,0)T0\",\"(0,0,0)T1\"");
    CHECK(csv.find("\"(0,0,0)T0\",1,0.5-2i") != std::string::npos);
}

TEST_CASE("list parsing") {
    CHECK(parse_int_list("1,-2, 3") == std::vector<int>{1, -2, 3});
    CHECK(parse_double_list("0.5,1e-3") == std::vector<double>{0.5, 1e-3});
    CHECK_THROWS_AS(parse_int_list("1,,2"), ConfigError);
    CHECK_THROWS_AS(parse_double_list("a"), ConfigError);
}

TEST_CASE("repr report for (4,2)") {
    RunConfig c;
    c.tau = "4,2";
    Json j = cmd_repr(c);
    CHECK(j["nTau"] == 9);
    CHECK(j["mTau"] == 3);
    CHECK(j["fCoefficients"] == Json::array({2, 1, 2, 1, 2, 1}));
    CHECK(j["commutantDim"] == 15);
    CHECK(j["unknowns"] == 45);
    CHECK(j["equations"] == 66);
}

TEST_CASE("nsjp and fourier argument checks") {
    RunConfig c;
    c.kappa = 0.25;
    Json j = cmd_nsjp(c, "1,0,0", 0);
    CHECK(j["terms"].size() > 0);
    CHECK_THROWS_AS(cmd_nsjp(c, "1,0", 0), Error);
    CHECK_THROWS_AS(cmd_fourier(c, "1,0,0"), ConfigError);
}

TEST_CASE("check suites report") {
    RunConfig c;
    c.tau = "2,2";
    SuiteOutcome out = run_check_suite(c, "symgroup");
    CHECK(out.allPassed());
    Json j = suite_json(c, "symgroup", out, {});
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["summary"]["total"] == out.results.size());
    CHECK_THROWS_AS(run_check_suite(c, "bogus"), ConfigError);
}
