/*
 * Copyright 2026 The fockgate Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gtest/gtest.h"

namespace fockgate::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(std::vector<std::string> args)
{
  args.push_back("--format");
  args.push_back("json");
  const Outcome o = invoke(std::move(args));
  EXPECT_EQ(o.code, 0) << o.err;
  return nlohmann::json::parse(o.out);
}

std::filesystem::path temp_file(const std::string &name)
{
  return std::filesystem::temp_directory_path() / ("fockgate_cli_test_" + name);
}

TEST(ParseReal, Fractions)
{
  EXPECT_DOUBLE_EQ(parse_real("1/3"), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(parse_real(" 0.25 "), 0.25);
  EXPECT_THROW(parse_real("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_real("abc"), std::invalid_argument);
  EXPECT_THROW(parse_real("0.5x"), std::invalid_argument);
}

TEST(ParseComplex, Forms)
{
  EXPECT_EQ(parse_complex("0.5"), Complex(0.5, 0.0));
  EXPECT_EQ(parse_complex("i"), Complex(0.0, 1.0));
  EXPECT_EQ(parse_complex("-i"), Complex(0.0, -1.0));
  EXPECT_EQ(parse_complex("2i"), Complex(0.0, 2.0));
  EXPECT_EQ(parse_complex("1-0.5i"), Complex(1.0, -0.5));
  EXPECT_EQ(parse_complex("1e-3+2i"), Complex(1e-3, 2.0));
  EXPECT_EQ(parse_complex("1/2+1/4i"), Complex(0.5, 0.25));
  EXPECT_THROW(parse_complex(""), std::invalid_argument);
}

TEST(ParseGrid, RangeAndList)
{
  const auto range = parse_grid("0:1:1/12");
  ASSERT_EQ(range.size(), 13u);
  EXPECT_NEAR(range[4], 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(range.back(), 1.0, 1e-12);
  EXPECT_EQ(parse_grid("0,1/3,1/2,1").size(), 4u);
  EXPECT_THROW(parse_grid(""), std::invalid_argument);
  EXPECT_THROW(parse_grid("0.5:0.1:0.1"), std::invalid_argument);
  EXPECT_THROW(parse_grid("0,1.5"), std::invalid_argument);
  EXPECT_THROW(parse_grid("0:1:0"), std::invalid_argument);
}

TEST(ParseAmplitudes, NormalizesWithWarning)
{
  std::ostringstream warn;
  const auto a = parse_amplitudes("1,1,0,0", warn);
  EXPECT_NEAR(std::abs(a[0] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_NE(warn.str().find("renormalized"), std::string::npos);
  std::ostringstream quiet;
  parse_amplitudes("0,i,0,0", quiet);
  EXPECT_TRUE(quiet.str().empty());
  EXPECT_THROW(parse_amplitudes("1,0,0", warn), std::invalid_argument);
  EXPECT_THROW(parse_amplitudes("0,0,0,0", warn), std::invalid_argument);
}

TEST(ParseInput, LabelsAndErrors)
{
  std::ostringstream warn;
  EXPECT_EQ(parse_input("HH", Encoding::PhaseGate, warn).amplitude({1, 0, 1, 0}), Complex(1.0, 0.0));
  EXPECT_THROW(parse_input("HH", Encoding::Cnot, warn), std::invalid_argument);
  EXPECT_NO_THROW(parse_input("10", Encoding::Cnot, warn));
  EXPECT_THROW(parse_rule("lenient"), std::invalid_argument);
}

TEST(Cli, TruthTablePhase)
{
  const auto doc = invoke_json({"truth-table"});
  EXPECT_EQ(doc["meta"]["command"], "truth-table");
  EXPECT_EQ(doc["meta"]["config"]["reflectivity"], "1/3");
  const auto &rows = doc["data"]["rows"];
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0]["out_VV"]["exact"], "1/3");
  EXPECT_EQ(rows[3]["out_HH"]["exact"], "-1/3");
  EXPECT_EQ(rows[3]["out_VV"]["exact"], "0");
  for (const auto &row : rows)
    EXPECT_EQ(row["success_exact"], "1/9");
}

TEST(Cli, TruthTableCnot)
{
  const auto doc = invoke_json({"truth-table", "--encoding", "cnot"});
  const auto &rows = doc["data"]["rows"];
  EXPECT_EQ(rows[2]["input"], "10");
  EXPECT_EQ(rows[2]["out_11"]["exact"], "1/3");
  EXPECT_EQ(rows[3]["out_10"]["exact"], "1/3");
  EXPECT_EQ(rows[0]["out_00"]["exact"], "1/3");
  EXPECT_EQ(rows[2]["out_10"]["exact"], "0");
}

TEST(Cli, ErrorBudgetRows)
{
  const auto doc = invoke_json({"error-budget"});
  const auto &rows = doc["data"]["rows"];
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0]["loss_exact"], "8/9");
  EXPECT_EQ(rows[1]["loss_exact"], "2/3");
  EXPECT_EQ(rows[1]["bunching_exact"], "2/9");
  EXPECT_EQ(rows[3]["bunching_exact"], "8/9");
  for (const auto &row : rows) {
    EXPECT_EQ(row["success_exact"], "1/9");
    EXPECT_EQ(row["total_exact"], "1");
  }
}

TEST(Cli, CustomInputIsConvexMixture)
{
  // VV and VH give orthogonal outputs, so their equal superposition mixes the two rows.
  const Outcome o = invoke({"error-budget", "--input", "1,1,0,0", "--format", "json"});
  ASSERT_EQ(o.code, 0);
  EXPECT_NE(o.err.find("renormalized"), std::string::npos);
  const auto doc = nlohmann::json::parse(o.out);
  const auto &custom = doc["data"]["rows"][4];
  EXPECT_EQ(custom["input"], "custom");
  EXPECT_EQ(custom["success_exact"], "1/9");
  EXPECT_EQ(custom["loss_exact"], "7/9");
  EXPECT_EQ(custom["bunching_exact"], "1/9");
  EXPECT_EQ(doc["meta"]["config"]["input"], "1,1,0,0");

  const auto cnot = invoke_json({"error-budget", "--encoding", "cnot", "--input", "00"});
  EXPECT_EQ(cnot["data"]["rows"][4]["loss_exact"], "7/9");
}

TEST(Cli, PracticalRuleMatchesFull)
{
  const auto full = invoke_json({"truth-table", "--encoding", "cnot"});
  const auto practical = invoke_json({"truth-table", "--encoding", "cnot", "--rule", "practical"});
  EXPECT_EQ(full["data"], practical["data"]);
}

TEST(Cli, ScanGrid)
{
  const auto doc = invoke_json({"scan", "--grid", "0,1/3,1/2,1"});
  const auto &rows = doc["data"]["rows"];
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[1]["two_photon"]["exact"], "-1/3");
  EXPECT_EQ(rows[1]["imbalance_exact"], "0");
  EXPECT_EQ(rows[2]["two_photon"]["exact"], "0");
  EXPECT_EQ(rows[3]["single_01"]["exact"], "1");
  EXPECT_EQ(doc["meta"]["config"]["grid"], "0,1/3,1/2,1");
}

TEST(Cli, TableAndCsvFormats)
{
  const Outcome table = invoke({"truth-table"});
  ASSERT_EQ(table.code, 0);
  EXPECT_EQ(table.out.rfind("# truth-table", 0), 0u);
  EXPECT_NE(table.out.find("(-1/3)"), std::string::npos);
  const Outcome csv = invoke({"scan", "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("R,R_exact,vacuum_re,vacuum_im,vacuum_exact,", 0), 0u);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 14);
}

TEST(Cli, Deterministic)
{
  EXPECT_EQ(invoke({"verify", "--seed", "5"}).out, invoke({"verify", "--seed", "5"}).out);
  EXPECT_EQ(invoke({"error-budget", "--format", "csv"}).out,
            invoke({"error-budget", "--format", "csv"}).out);
}

TEST(Cli, VerifyPasses)
{
  const Outcome o = invoke({"verify"});
  EXPECT_EQ(o.code, 0) << o.out;
  EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
  EXPECT_NE(o.out.find("oracle-equivalence"), std::string::npos);
}

TEST(Cli, VerifyDetectsPerturbedReflectivity)
{
  // success probabilities R^2 and (1-2R)^2 drift apart by (3R-1)(1-R);
  // the CZ table survives column normalization, the CNOT table does not
  const double r = 1.0 / 3.0 + 1e-3;
  ScenarioConfig config;
  config.reflectivity = r;
  const auto checks = run_verification(config);
  bool saw = false;
  for (const auto &c : checks) {
    if (c.name == "uniform-efficiency") {
      saw = true;
      EXPECT_FALSE(c.passed);
      EXPECT_NEAR(c.max_deviation, (3.0 * r - 1.0) * (1.0 - r), 1e-12);
    } else if (c.name == "fidelity-cnot") {
      // control-H columns become (a|V> -+ b|H>)/N with a = R, b = 2R - 1,
      // N^2 = (a^2 + b^2) / 2, so Tr = 2 + (a - b) / N.
      const double a = r, b = 2.0 * r - 1.0;
      const double trace = 2.0 + (a - b) / std::sqrt((a * a + b * b) / 2.0);
      EXPECT_FALSE(c.passed);
      EXPECT_NEAR(c.max_deviation, 1.0 - trace * trace / 16.0, 1e-12);
    } else {
      EXPECT_TRUE(c.passed) << c.name;
    }
  }
  EXPECT_TRUE(saw);
  EXPECT_EQ(invoke({"verify", "--reflectivity", "0.334333333333"}).code, 1);
}

TEST(Cli, Errors)
{
  EXPECT_NE(invoke({}).code, 0);
  EXPECT_NE(invoke({"truth-table", "--encoding", "swap"}).code, 0);
  EXPECT_NE(invoke({"bogus"}).code, 0);
  const Outcome r = invoke({"truth-table", "--reflectivity", "1.5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  EXPECT_EQ(invoke({"scan", "--grid", "2:3:1"}).code, 2);
  EXPECT_EQ(invoke({"error-budget", "--input", "1,0"}).code, 2);
  EXPECT_EQ(invoke({"--version"}).code, 0);
}

TEST(Cli, OutFile)
{
  const auto path = temp_file("out.json");
  std::filesystem::remove(path);
  const Outcome o = invoke({"truth-table", "--format", "json", "--out", path.string()});
  ASSERT_EQ(o.code, 0);
  EXPECT_TRUE(o.out.empty());
  std::ifstream file(path);
  const auto doc = nlohmann::json::parse(file);
  EXPECT_EQ(doc["data"]["rows"].size(), 4u);
  std::filesystem::remove(path);
}

TEST(Cli, ConfigFileWithCommandLineOverride)
{
  const auto path = temp_file("scenario.ini");
  {
    std::ofstream file(path);
    file << "encoding = cnot\nreflectivity = 1/2\nformat = json\n";
  }
  const auto from_file = nlohmann::json::parse(invoke({"truth-table", "--config", path.string()}).out);
  EXPECT_EQ(from_file["meta"]["config"]["encoding"], "cnot");
  EXPECT_EQ(from_file["meta"]["config"]["reflectivity"], "1/2");

  const auto overridden = nlohmann::json::parse(
      invoke({"truth-table", "--config", path.string(), "--reflectivity", "1/3"}).out);
  EXPECT_EQ(overridden["meta"]["config"]["reflectivity"], "1/3");
  EXPECT_EQ(overridden["meta"]["config"]["encoding"], "cnot");
  std::filesystem::remove(path);
}

} // namespace
} // namespace fockgate::cli
