#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>

#include "cgeo/dsl.hpp"
#include "cgeo/fixtures.hpp"
#include "cgeo/report_json.hpp"

using namespace cgeo;

namespace {

struct CliRun {
    std::string out;
    int status;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(CGEO_CLI) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    CliRun r{"", -1};
    if (!f) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), n);
    const int st = pclose(f);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}  // namespace

TEST(ReportJson, EnvelopeCarriesSchemaAndCommand) {
    const json j = envelope_json("x", {{"a", 1}});
    EXPECT_EQ(j["schema"], kSchemaVersion);
    EXPECT_EQ(j["command"], "x");
    EXPECT_EQ(j["a"], 1);
    const json e = error_json("y", "boom");
    EXPECT_EQ(e["error"]["message"], "boom");
}

TEST(ReportJson, RegionJsonIsCanonicalScript) {
    const json j = region_json(parse_region("inter(w1,{x0>0})"));
    EXPECT_EQ(j["script"], print_region(parse_region("inter(w1,{x0>0})")));
    EXPECT_EQ(j["n"], 3);
}

TEST(ReportJson, PredicateReportDeterministic) {
    const GridWindow g(2, 2, 0.25, 2);
    const RegionPtr r = fixture("shell");
    const std::string a = to_json(is_jld_region(r, g)).dump();
    const std::string b = to_json(is_jld_region(r, g)).dump();
    EXPECT_EQ(a, b);
    EXPECT_NE(a.find("\"verdict\":false"), std::string::npos);
}

TEST(ReportJson, SampledSummaryHashStable) {
    const SampledRegion s = sample(parse_region("dcone((-1,0,0),(1,0,0))"), GridWindow(1, 1, 0.25, 2));
    const json a = sampled_summary(s), b = sampled_summary(s);
    EXPECT_EQ(a["hash"], b["hash"]);
    EXPECT_EQ(a["hash"].get<std::string>().size(), 16u);
    EXPECT_GT(a["points"].get<long>(), 0);
}

TEST(Cli, ClassifyTimelike) {
    const CliRun r = run_cli("--json classify 0,0,0 1,0.5,0");
    ASSERT_EQ(r.status, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["class"], "TimelikeFuture");
}

TEST(Cli, ShellIsNotJldWithCurveWitness) {
    const CliRun r = run_cli("--json pred --region 'shell(1,2)' --jld");
    ASSERT_EQ(r.status, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["report"]["verdict"], false);
    EXPECT_EQ(j["report"]["witness"]["kind"], "curve");
}

TEST(Cli, ParseErrorIsJsonWithPosition) {
    const CliRun r = run_cli("--json pred --region 'dcone((0,0,0)' --jld");
    EXPECT_EQ(r.status, 1);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["error"]["line"], 1);
    EXPECT_EQ(j["error"]["column"], 14);
    EXPECT_NE(j["error"]["message"].get<std::string>().find("','"), std::string::npos);
}

TEST(Cli, UsageErrorExitsTwo) {
    const CliRun r = run_cli("--json classify 1 2 3");
    EXPECT_EQ(r.status, 2);
    EXPECT_TRUE(json::parse(r.out).contains("error"));
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
    const std::string args = "--json --seed 7 localize --random";
    const CliRun a = run_cli(args), b = run_cli(args);
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
}
