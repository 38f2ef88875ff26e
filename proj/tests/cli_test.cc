// Copyright 2026 The sirtp Authors
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


#include "sirtp/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace sirtp {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sirtp_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string Slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }

  static void Dump(const std::string& path, const std::string& text) {
    std::ofstream(path, std::ios::binary) << text;
  }

  fs::path dir_;
};

TEST_F(CliTest, SolveBaseCase) {
  const CliRun r = Cli({"solve", "3", "12"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "4\n");
}

TEST_F(CliTest, SolveTrace) {
  const CliRun r = Cli({"solve", "2", "3", "--trace"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "3\n"
            "round 0: p=2 q=3 delta=1 branch=EUCLID_STEP added=2\n"
            "round 1: p=1 q=1 delta=0 branch=BASE added=1\n"
            "depth 1\n");
}

TEST_F(CliTest, SolveAlgorithms) {
  EXPECT_EQ(Cli({"solve", "9", "10", "--algorithm", "euclid"}).out, "10\n");
  EXPECT_EQ(Cli({"solve", "9", "10", "--algorithm", "square-transfer"}).out,
            "8\n");
  EXPECT_EQ(Cli({"solve", "9", "11", "--algorithm", "square-transfer"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"solve", "9", "10", "--algorithm", "magic"}).code, kExitUsage);
}

TEST_F(CliTest, SolveParseErrors) {
  EXPECT_EQ(Cli({"solve", "0", "3"}).code, kExitUsage);
  EXPECT_EQ(Cli({"solve", "x", "3"}).code, kExitUsage);
  EXPECT_EQ(Cli({"solve", "3"}).code, kExitUsage);
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
}

TEST_F(CliTest, HelpExitsZero) {
  const CliRun r = Cli({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("solve"), std::string::npos);
  const CliRun reduce = Cli({"reduce", "--help"});
  EXPECT_NE(reduce.out.find("irrational"), std::string::npos);
}

TEST_F(CliTest, SolveSvgHasElevenModulesPerSide) {
  const std::string svg = Path("out.svg");
  ASSERT_EQ(Cli({"solve", "9", "10", "--svg", svg}).code, kExitOk);
  const std::string text = Slurp(svg);
  int modules = 0;
  for (size_t pos = text.find("class=\"module\""); pos != std::string::npos;
       pos = text.find("class=\"module\"", pos + 1)) {
    ++modules;
  }
  EXPECT_EQ(modules, 22);
}

TEST_F(CliTest, EmitThenVerify) {
  const std::string doc = Path("pair.json");
  ASSERT_EQ(Cli({"solve", "4", "5", "--emit", doc}).code, kExitOk);
  const CliRun ok = Cli({"verify", doc});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_EQ(Cli({"verify", doc, "--mode", "rotational"}).code, kExitOk);
}

TEST_F(CliTest, EveryEmittedDocumentVerifies) {
  for (const char* algorithm : {"algsirtp", "euclid", "square-transfer"}) {
    const std::string doc = Path(std::string(algorithm) + ".json");
    ASSERT_EQ(Cli({"solve", "16", "17", "--algorithm", algorithm, "--emit", doc})
                  .code,
              kExitOk);
    EXPECT_EQ(Cli({"verify", doc}).code, kExitOk) << algorithm;
  }
}

TEST_F(CliTest, VerifyCorruptedPair) {
  const std::string doc = Path("pair.json");
  ASSERT_EQ(Cli({"solve", "4", "5", "--emit", doc}).code, kExitOk);
  std::string text = Slurp(doc);
  // Shrink the first module of side a from 4x4 to 4x3.
  const std::string from = "[[0,0,4,4]";
  const size_t pos = text.find(from);
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, from.size(), "[[0,0,4,3]");
  Dump(doc, text);
  const CliRun r = Cli({"verify", doc});
  EXPECT_EQ(r.code, kExitCheckFailed);
  EXPECT_NE(r.out.find("coverage"), std::string::npos) << r.out;
}

TEST_F(CliTest, VerifyMalformed) {
  const std::string empty = Path("empty.json");
  Dump(empty, "");
  EXPECT_EQ(Cli({"verify", empty}).code, kExitUsage);
  EXPECT_EQ(Cli({"verify", Path("missing.json")}).code, kExitUsage);
}

TEST_F(CliTest, Oracle) {
  EXPECT_EQ(Cli({"oracle", "2", "3"}).out, "3\n");
  EXPECT_EQ(Cli({"oracle", "4", "4"}).out, "1\n");
  EXPECT_EQ(Cli({"oracle", "1", "5"}).out, "5\n");
  EXPECT_EQ(Cli({"oracle", "7", "7"}).code, kExitUsage);
  EXPECT_EQ(Cli({"oracle", "7", "7", "--max-area", "49"}).out, "1\n");
  EXPECT_EQ(Cli({"oracle", "9", "9", "--max-area", "81"}).code, kExitUsage);
}

TEST_F(CliTest, OracleEmitsWitness) {
  const std::string doc = Path("oracle.json");
  ASSERT_EQ(Cli({"oracle", "3", "5", "--emit", doc}).code, kExitOk);
  EXPECT_NE(Slurp(doc).find("\"kind\":\"oracle\""), std::string::npos);
}

TEST_F(CliTest, OracleBudgetExhaustion) {
  const CliRun r = Cli({"oracle", "7", "9", "--max-area", "64", "--budget-ms", "1"});
  EXPECT_EQ(r.code, kExitOk);
  if (r.out.find("exhausted=false") == std::string::npos) {
    // The machine finished within a millisecond; the size line is all.
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
  }
}

TEST_F(CliTest, Bench) {
  const CliRun r = Cli({"bench", "--family", "successor", "--from", "2", "--to", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
  const CliRun empty = Cli({"bench", "--family", "coprime", "--n", "0", "--seed", "7"});
  EXPECT_EQ(empty.code, kExitOk);
  EXPECT_EQ(std::count(empty.out.begin(), empty.out.end(), '\n'), 1);
}

TEST_F(CliTest, BenchToFileIsDeterministic) {
  const std::vector<std::string> base = {"bench", "--family", "coprime",
                                         "--n",   "40",       "--pmax",
                                         "500",   "--seed",   "3"};
  auto args1 = base;
  args1.insert(args1.end(), {"--out", Path("a.csv")});
  auto args2 = base;
  args2.insert(args2.end(), {"--out", Path("b.csv")});
  ASSERT_EQ(Cli(args1).code, kExitOk);
  ASSERT_EQ(Cli(args2).code, kExitOk);
  EXPECT_EQ(Slurp(Path("a.csv")), Slurp(Path("b.csv")));
  EXPECT_FALSE(Slurp(Path("a.csv")).empty());
}

TEST_F(CliTest, Render) {
  const std::string doc = Path("pair.json");
  ASSERT_EQ(Cli({"solve", "2", "3", "--emit", doc}).code, kExitOk);
  const CliRun r = Cli({"render", doc});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("<svg ", 0), 0u);
  const std::string svg = Path("pair.svg");
  EXPECT_EQ(Cli({"render", doc, "--svg", svg, "--scale", "4"}).code, kExitOk);
  EXPECT_NE(Slurp(svg).find("width=\"8\""), std::string::npos);
}

TEST_F(CliTest, Reduce) {
  const CliRun r = Cli({"reduce", "6", "2", "4", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("sirtp 2 3\n"), std::string::npos);
  EXPECT_EQ(Cli({"reduce", "3/2", "4", "2", "3"}).code, kExitOk);
  EXPECT_EQ(Cli({"reduce", "1", "1", "2", "2"}).code, kExitUsage);
  EXPECT_EQ(Cli({"reduce", "1.5", "1", "1", "1.5"}).code, kExitUsage);
}

TEST_F(CliTest, Irtp) {
  EXPECT_EQ(Cli({"irtp", "12", "2", "6", "4"}).out, "2\n");
  EXPECT_EQ(Cli({"irtp", "15", "2", "6", "5", "--rule", "align-short"}).out,
            "3\n");
  const std::string doc = Path("irtp.json");
  ASSERT_EQ(Cli({"irtp", "15", "2", "6", "5", "--emit", doc}).code, kExitOk);
  EXPECT_EQ(Cli({"verify", doc}).code, kExitOk);
  EXPECT_EQ(Cli({"irtp", "6", "2", "4", "4"}).code, kExitUsage);
}

TEST_F(CliTest, RefusesHugeGeometry) {
  const CliRun r = Cli({"solve", "1", "1000000000000", "--algorithm", "euclid",
                     "--emit", Path("x.json")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_FALSE(fs::exists(Path("x.json")));
  EXPECT_EQ(Cli({"solve", "1", "1000000000000"}).out, "1000000000000\n");
}

}  // namespace
}  // namespace sirtp
