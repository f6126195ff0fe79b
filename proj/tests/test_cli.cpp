#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"

using nucideal::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "nucideal");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = nucideal::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CliGens, Minor) {
  auto r = run({"gens", "--shape", "2x2", "--p", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x[1,2]*x[2,1] - x[1,1]*x[2,2]\n");
}

TEST(CliGens, EmptyList) {
  auto r = run({"gens", "--shape", "2", "--p", "0", "--json"});
  EXPECT_EQ(r.code, 0);
  auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["schema"], "v1");
  EXPECT_EQ(doc["count"], 0);
  EXPECT_TRUE(doc["generators"].empty());
  EXPECT_EQ(run({"gens", "--shape", "2", "--p", "0"}).out, "");
}

TEST(CliGens, InvalidShape) {
  auto r = run({"gens", "--shape", "0x2", "--p", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("invalid shape"), std::string::npos);
}

TEST(CliUsage, Errors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"gens"}).code, 2);
  EXPECT_EQ(run({"gens", "--shape", "2x2", "--p", "3"}).code, 2);
  EXPECT_EQ(run({"prime", "--shape", "2x2", "--p", "1"}).code, 2);
  EXPECT_EQ(run({"gens", "--help"}).code, 0);
}

TEST(CliGbVerify, Json) {
  auto r = run({"gb-verify", "--shape", "3x3", "--p", "2", "--json"});
  EXPECT_EQ(r.code, 0);
  auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["is_gb"], true);
  EXPECT_GT(doc["spairs_checked"].get<int>(), 0);
  EXPECT_TRUE(doc["witness"].is_null());
  EXPECT_FALSE(r.err.empty());
}

TEST(CliReport, ThreeByThree) {
  auto r = run({"report", "--shape", "3x3", "--p", "2", "--json"});
  EXPECT_EQ(r.code, 0);
  auto v = Json::parse(r.out)["verdicts"];
  EXPECT_EQ(v["gb"], true);
  EXPECT_EQ(v["prime"], true);
  EXPECT_EQ(v["smooth"], true);
  EXPECT_EQ(v["dim"], 4);
}

TEST(CliReport, P1) {
  auto r = run({"report", "--shape", "2x2", "--p", "1", "--json"});
  EXPECT_EQ(r.code, 0);
  auto v = Json::parse(r.out)["verdicts"];
  EXPECT_EQ(v["gb"], true);
  EXPECT_EQ(v["radical"], true);
  EXPECT_EQ(v["radical_method"], "seidenberg");
  EXPECT_EQ(v["zero_dim"], true);
}

TEST(CliReport, HypothesisGate) {
  auto r = run({"report", "--shape", "2x2", "--p", "4", "--json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.out)["verdicts"]["prime_verdict"], "not_established");
  EXPECT_EQ(run({"report", "--shape", "2x2", "--p", "4", "--assume-primary"}).code, 0);
}

TEST(CliReport, ResourceCap) {
  EXPECT_EQ(run({"prime", "--shape", "2x2x2", "--p", "2", "--max-terms", "5"}).code, 3);
}

TEST(CliCommands, TextOutput) {
  auto r = run({"prime", "--shape", "2x2", "--p", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict: prime"), std::string::npos);
  EXPECT_EQ(run({"radical", "--shape", "2x2", "--p", "inf"}).code, 0);
  EXPECT_EQ(run({"radical", "--shape", "3x3", "--p", "0"}).code, 0);
  EXPECT_EQ(run({"radical", "--shape", "2x2", "--p", "2"}).code, 1);
  EXPECT_EQ(run({"smooth", "--shape", "2x2x2", "--p", "2"}).code, 0);
}

TEST(CliNumeric, SummaryAndDeterminism) {
  std::vector<std::string> args{"numeric", "--shape", "2x2", "--p", "2", "--samples", "500", "--seed", "42", "--json"};
  auto a = run(args);
  auto b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto doc = Json::parse(a.out);
  EXPECT_LE(doc["max_residual"].get<double>(), 1e-9);
  EXPECT_EQ(doc["rank_histogram"]["2"], 500);
  EXPECT_LE(doc["nuclear_norm_max"].get<double>(), 1.0 + 1e-9);
}

TEST(CliJson, ByteDeterministic) {
  for (auto cmd : {"prime", "smooth", "radical", "report"}) {
    std::string p = std::string(cmd) == "radical" ? "1" : "2";
    std::vector<std::string> args{cmd, "--shape", "2x2", "--p", p, "--json"};
    EXPECT_EQ(run(args).out, run(args).out) << cmd;
    EXPECT_EQ(Json::parse(run(args).out)["schema"], "v1");
  }
}
