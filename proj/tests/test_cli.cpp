// Copyright 2026 The dioph Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sstream>

#include "dioph/cli.hpp"

namespace dioph {
namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

json::Json parsed(const Run& r) { return json::Json::parse(r.out); }

TEST(AlphaSpec, ParsesEveryForm) {
  EXPECT_EQ(parse_alpha("phi").describe(), RealSource::golden_ratio().describe());
  EXPECT_EQ(parse_alpha("e").describe(), "e");
  EXPECT_TRUE(parse_alpha("rat:3/4").is_rational());
  EXPECT_TRUE(parse_alpha("0.25").is_rational());
  EXPECT_NE(parse_alpha("pi*1/4").as<PiMultiple>(), nullptr);
  EXPECT_NE(parse_alpha("pi").as<PiMultiple>(), nullptr);
  EXPECT_NO_THROW(parse_alpha("sqrt:3"));
  EXPECT_NO_THROW(parse_alpha("surd:(1,2,3,4)"));
  EXPECT_TRUE(parse_alpha("cf:[1;2,3]").is_rational());
  EXPECT_NO_THROW(parse_alpha("cf-rule:periodic(1|2)"));
  EXPECT_NO_THROW(parse_alpha("cf-rule:affine(1,1,0,1)"));
  EXPECT_NO_THROW(parse_alpha("cf-rule:e"));
  EXPECT_NO_THROW(parse_alpha("decseq:[1,3,7]"));
  EXPECT_NO_THROW(parse_alpha("decseq-rule:factorial"));
  EXPECT_NO_THROW(parse_alpha("decseq-rule:doubling(2)"));
  EXPECT_NO_THROW(parse_alpha("decseq-rule:doubling-after(2,5,10)"));
}

TEST(AlphaSpec, MalformedInputIsParseError) {
  for (const char* bad : {"", "sqrt:", "sqrtx", "surd:(1,2,3)", "cf:[1;0]", "cf-rule:affine(1)", "decseq:[3,1]",
                          "pi*1/0", "rat:1/0", "cf-rule:periodic(1|)"}) {
    try {
      parse_alpha(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(AlphaSpec, GAndFSpecs) {
  EXPECT_EQ(parse_gpoly("poly:[0,1]").degree(), 1);
  EXPECT_EQ(parse_fspec("pow:0.9").to_string(), "pow:9/10");
  EXPECT_EQ(parse_fspec("loginv").kind, FSpec::Kind::LogInverse);
  EXPECT_EQ(parse_fspec("expinv:2").kind, FSpec::Kind::ExpInverse);
  try {
    parse_gpoly("poly:[0,2]");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidG);
  }
}

TEST(Cli, BoundReport) {
  const auto r = cli({"bound", "--r", "0.5", "--N", "10000"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = parsed(r);
  EXPECT_NEAR(j["bound"].get<double>(), 3.5471, 1e-4);
  EXPECT_EQ(j["config"]["command"], "bound");
  EXPECT_EQ(j["config"]["N"], "10000");
}

TEST(Cli, ExpandAndClassify) {
  auto r = cli({"expand", "--alpha", "sqrt:2", "--terms", "6"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(parsed(r)["cf"]["a"], json::Json::parse("[1,2,2,2,2,2]"));
  r = cli({"classify", "--alpha", "cf-rule:affine(1,1,0,1)"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(parsed(r)["verdict"], "UnboundedEven");
}

TEST(Cli, WitnessCommands) {
  auto r = cli({"witness-cos", "--alpha", "1", "--y", "0.8", "--tol", "0.05"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(parsed(r)["n"], 6);
  r = cli({"witness-cos", "--alpha", "1", "--y", "0.5", "--sin"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(parsed(r)["n"].get<long>() % 4, 1);
  r = cli({"witness-frac", "--alpha", "cf-rule:affine(1,1,0,1)", "--y", "0.5"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(parsed(r)["n"], 38);
}

TEST(Cli, VerdictStatuses) {
  auto r = cli({"verify-t5", "--alpha", "sqrt:2", "--r", "0.5", "--v", "408"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(parsed(r)["N"], 1632);
  EXPECT_EQ(parsed(r)["pass"], true);
  r = cli({"verify-t4", "--r", "0.5", "--r-prime", "0.75", "--k", "3"});
  EXPECT_EQ(r.status, 0) << r.err;
  r = cli({"verify-t4", "--r", "0.5", "--r-prime", "0.75", "--k", "3", "--literal-least"});
  EXPECT_EQ(r.status, cli::kVerdictFailed);
}

TEST(Cli, ErrorsCarryTheirName) {
  auto r = cli({"witness-frac", "--alpha", "phi", "--y", "0.5"});
  EXPECT_EQ(r.status, cli::kError);
  EXPECT_EQ(parsed(r)["error"], "NotDenseCandidate");
  r = cli({"witness-cos", "--alpha", "1", "--y", "0.3", "--tol", "0.000001", "--max-evaluations", "3"});
  EXPECT_EQ(r.status, cli::kError);
  const auto j = parsed(r);
  EXPECT_EQ(j["error"], "BudgetExhausted");
  EXPECT_TRUE(j.contains("best"));
  r = cli({"count", "--alpha", "nonsense", "--r", "0.5", "--N", "10"});
  EXPECT_EQ(r.status, cli::kUsage);
}

TEST(Cli, UsageErrorsAndHelp) {
  EXPECT_EQ(cli({}).status, cli::kUsage);
  EXPECT_EQ(cli({"bound", "--r", "0.5"}).status, cli::kUsage);
  EXPECT_EQ(cli({"bound", "--r", "0.5", "--N", "10", "--format", "xml"}).status, cli::kUsage);
  const auto h = cli({"--help", "formats"});
  EXPECT_EQ(h.status, 0);
  EXPECT_NE(h.out.find("decseq"), std::string::npos);
  EXPECT_EQ(cli({"--help"}).status, 0);
}

TEST(Cli, CsvRows) {
  const auto r = cli({"--format", "csv", "zpairs", "--zeta", "sqrt:2", "--n-max", "3"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("m,n\n1,1\n6,2\n13,3\n"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.rfind("# config:", 0), 0u);
}

TEST(Cli, TimingIsOptIn) {
  auto r = cli({"count", "--alpha", "phi", "--r", "0.5", "--N", "1000"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_FALSE(parsed(r).contains("elapsed_hint"));
  r = cli({"--timing", "count", "--alpha", "phi", "--r", "0.5", "--N", "1000"});
  EXPECT_TRUE(parsed(r).contains("elapsed_hint"));
}

TEST(Cli, PrecisionCapOption) {
  const auto r = cli({"--precision-cap", "8", "count", "--alpha", "phi", "--r", "0.5", "--N", "10"});
  EXPECT_EQ(r.status, cli::kUsage);
}

}  // namespace
}  // namespace dioph
