#include "degen/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "degen/serialize.hpp"

using namespace degen;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ComputeTriangleCsv) {
  Result r = run({"compute", "--family", "deg-stirling2", "--max-n", "3", "--format", "csv"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,k,value");
  EXPECT_NE(r.out.find("\n2,1,1 - l\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n3,3,1\n"), std::string::npos);
}

TEST(Cli, ComputeSequenceJson) {
  Result r = run({"compute", "--family", "deg-exp", "--max-n", "2"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["family"], "deg-exp");
  EXPECT_EQ(j["trunc"], 16);
  EXPECT_EQ(bipoly_from_json(j["values"][2]["value"]), BiPoly::x().pow(2) - BiPoly::lambda() * BiPoly::x());

  Result numeric = run({"compute", "--family", "deg-bernoulli2", "--x", "0", "--lambda", "1/2", "--max-n", "1",
                        "--format", "csv"});
  EXPECT_EQ(numeric.out, "n,value\n0,1\n1,1/4\n");
}

TEST(Cli, VerifySingleIdentity) {
  Result r = run({"verify", "--identity", "thm3", "--max-n", "10", "--order", "3"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["identity"], "thm3");
  EXPECT_EQ(j["profile"], "custom");
  EXPECT_EQ(j["cases"].size(), 33u);
  for (const auto& c : j["cases"]) EXPECT_EQ(c["status"], "pass");

  Result alias = run({"verify", "--identity", "thm1", "--max-n", "0"});
  ASSERT_EQ(alias.code, cli::kOk);
  EXPECT_EQ(Json::parse(alias.out)["cases"].size(), 1u);
}

TEST(Cli, VerifyReportsFailuresWithExitCode) {
  Result r = run({"verify", "--identity", "eq21", "--max-n", "3", "--order", "2", "--format", "csv"});
  EXPECT_EQ(r.code, cli::kVerificationFailed);
  EXPECT_NE(r.out.find("eq21,n=0;r=2,fail,-1"), std::string::npos);
  EXPECT_NE(r.err.find("eq21"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsageError);
  EXPECT_EQ(run({"compute"}).code, cli::kUsageError);
  EXPECT_EQ(run({"compute", "--family", "nope"}).code, cli::kUsageError);
  EXPECT_EQ(run({"compute", "--family", "deg-exp", "--max-n", "10", "--trunc", "5"}).code, cli::kUsageError);
  EXPECT_EQ(run({"compute", "--family", "deg-exp", "--lambda", "1.5"}).code, cli::kUsageError);
  EXPECT_EQ(run({"compute", "--family", "deg-log", "--order", "2"}).code, cli::kUsageError);
  EXPECT_EQ(run({"verify", "--identity", "thm9"}).code, cli::kUsageError);
  EXPECT_EQ(run({"verify", "--profile", "slow"}).code, cli::kUsageError);
  EXPECT_EQ(run({"verify", "--max-n", "-1"}).code, cli::kUsageError);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, ArgumentParsing) {
  EXPECT_EQ(cli::parse_argument("x-1"), Argument::shifted(-1));
  EXPECT_EQ(cli::parse_argument("x+1/2"), Argument::shifted(Rational(1, 2)));
  EXPECT_EQ(cli::parse_argument("-3"), Argument::numeric(-3));
  EXPECT_EQ(cli::parse_argument("symbolic"), Argument::symbolic());
  EXPECT_EQ(cli::parse_lambda("1/2*l"), LambdaMode::scaled(Rational(1, 2)));
  EXPECT_EQ(cli::parse_lambda("0"), LambdaMode::numeric(0));
  EXPECT_EQ(cli::parse_lambda("l"), LambdaMode::symbolic());
}

TEST(Cli, OutputIsDeterministic) {
  std::vector<std::string> compute = {"compute", "--family", "type2-deg-bernoulli2", "--order", "2", "--max-n", "6"};
  EXPECT_EQ(run(compute).out, run(compute).out);
  std::vector<std::string> verify = {"verify", "--identity", "eq18-equiv", "--no-timing"};
  Result a = run(verify);
  EXPECT_EQ(a.out, run(verify).out);
  EXPECT_TRUE(Json::parse(a.out)["wall_time_ms"].is_null());
  EXPECT_EQ(Json::parse(a.out)["profile"], "quick");
}

TEST(Cli, ListFamiliesAndOutputFile) {
  Result text = run({"list-families"});
  ASSERT_EQ(text.code, cli::kOk);
  EXPECT_NE(text.out.find("deg-central-factorial"), std::string::npos);
  Json j = Json::parse(run({"list-families", "--format", "json"}).out);
  EXPECT_EQ(j.size(), 26u);

  auto path = std::filesystem::temp_directory_path() / "degen_cli_test_families.csv";
  Result file = run({"list-families", "--format", "csv", "--output", path.string()});
  ASSERT_EQ(file.code, cli::kOk);
  EXPECT_TRUE(file.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "name,symbol,kind,takes_order,lambda0_counterpart,generating_function");
  std::filesystem::remove(path);
}
