// Copyright 2026 The cantor-normal Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cantor_cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cantor::cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("cantor_cli_test_" + name)).string();
}

} // namespace

TEST(Cli, DigitsCsvExample) {
    const auto r = run({"digits", "--seq", "constant:2", "--count", "6", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1,0\n2,1\n3,0\n4,1\n5,0\n6,1\n");
}

TEST(Cli, DigitsRawAndJson) {
    auto r = run({"digits", "--seq", "periodic:2,3", "--count", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), ' '), 3);
    r = run({"construct", "--seq", "preset:linear", "--target", "rnq-dnq-not-nq", "--count", "50", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["digits"].size(), 50u);
    EXPECT_EQ(j["clamp_events"], 0);
    EXPECT_FALSE(j["schedule"].empty());
}

TEST(Cli, StatsExample) {
    const auto r = run({"stats", "--seq", "constant:2", "--source", "construct", "--blocks", "all:1",
                        "--checkpoints", "24"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out,
              "block,n,observed,expected_num,expected_den,ratio\n"
              "[0],24,12,12,1,1\n"
              "[1],24,12,12,1,1\n");
}

TEST(Cli, StatsJsonHasExactAndFloatFields) {
    const auto r = run({"stats", "--seq", "constant:2", "--blocks", "0,1;1,0", "--checkpoints", "124", "--format",
                        "json", "--starred"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["rows"][0]["expected"], "31");
    EXPECT_EQ(j["rows"][0]["starred"]["expected"], "25/2");
    EXPECT_EQ(j["pairs"].size(), 2u);
}

TEST(Cli, ValueExample) {
    const auto r = run({"value", "--seq", "constant:2", "--target", "xq", "--base", "10", "--digits", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0.333\n");
    const auto e = run({"value", "--seq", "constant:2", "--exact", "2"});
    EXPECT_EQ(e.out, "[1/4, 1/2]\n");
}

TEST(Cli, DiscrepancyCsv) {
    const auto r = run({"discrepancy", "--seq", "constant:2", "--checkpoints", "100,1000"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,d_star,d_extreme,max_eps");
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
}

TEST(Cli, DiagnoseReportsHeuristic) {
    const auto r = run({"diagnose", "--seq", "preset:log", "--block", "0", "--checkpoints", "10,100"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("heuristic"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"digits", "--seq", "constant:1", "--count", "3"}).code, 2);
    EXPECT_EQ(run({"digits", "--seq", "constant:2", "--count", "3", "--bogus"}).code, 2);
    EXPECT_EQ(run({"nonsense"}).code, 2);
    EXPECT_EQ(run({"construct", "--target", "nq-not-dnq", "--seq", "constant:10", "--count", "3"}).code, 2);
    const auto scan = run({"digits", "--seq", "preset:linear", "--count", "3"});
    EXPECT_EQ(scan.code, 3);
    EXPECT_NE(scan.err.find("E_SCAN_BOUND"), std::string::npos);
    const auto refine = run({"value", "--seq", "constant:2", "--digits", "2", "--refinement-cap", "0"});
    EXPECT_EQ(refine.code, 3);
    EXPECT_NE(refine.err.find("E_REFINEMENT"), std::string::npos);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OracleCheck) {
    const auto r = run({"digits", "--seq", "periodic:2,3", "--count", "5", "--oracle-check", "500"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("agree"), std::string::npos);
}

TEST(Cli, FileSource) {
    const auto path = temp_path("digits.txt");
    {
        std::ofstream f(path);
        f << "0 1 1,0\n1 1\n";
    }
    auto r = run({"stats", "--seq", "constant:2", "--source", "file:" + path, "--blocks", "1", "--checkpoints", "6"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("[1],6,4,3,1,"), std::string::npos) << r.out;
    r = run({"stats", "--seq", "constant:2", "--source", "file:" + path, "--blocks", "1", "--checkpoints", "7"});
    EXPECT_EQ(r.code, 2);
    std::remove(path.c_str());
}

TEST(Cli, ManifestReplayAndDeterminism) {
    const auto manifest = temp_path("manifest.json");
    const auto graph = temp_path("graph.json");
    const std::vector<std::string> args = {"construct", "--seq", "preset:log", "--target", "nq-not-dnq", "--count",
                                           "200", "--graph", graph, "--manifest", manifest};
    const auto first = run(args);
    ASSERT_EQ(first.code, 0) << first.err;
    EXPECT_EQ(run(args).out, first.out);
    std::ifstream g(graph);
    const auto gj = nlohmann::json::parse(g);
    EXPECT_EQ(gj["nodes"].size(), 3u);
    EXPECT_EQ(run({"replay", manifest}).code, 0);

    std::ifstream in(manifest);
    auto m = nlohmann::json::parse(in);
    in.close();
    EXPECT_EQ(m["outputs"]["stdout"]["fnv1a64"], cantor::cli::hex64(cantor::cli::fnv1a64(first.out)));
    m["outputs"]["stdout"]["fnv1a64"] = "0000000000000000";
    std::ofstream(manifest) << m.dump();
    EXPECT_EQ(run({"replay", manifest}).code, 1);
    std::remove(manifest.c_str());
    std::remove(graph.c_str());
}
