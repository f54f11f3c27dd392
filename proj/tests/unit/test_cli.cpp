// Copyright 2026 The chiralwind Authors
//
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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "chiral/specfun.hpp"
#include "cli.hpp"

namespace chiral::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "chiralwind");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string header_row(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') return line;
  }
  return {};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << contents;
  return path;
}

TEST(CliSpectralFlow, ColumnsFollowMatrixSizes) {
  const Outcome r = invoke({"spectral-flow", "--class", "AIII", "--n", "4", "--steps", "10"});
  ASSERT_EQ(r.code, kPass) << r.err;
  std::string expect = "p";
  for (int i = 0; i < 8; ++i) expect += ",h" + std::to_string(i);
  for (int i = 0; i < 4; ++i) expect += ",k" + std::to_string(i) + "_re,k" + std::to_string(i) + "_im";
  expect += ",det_re,det_im";
  EXPECT_EQ(header_row(r.out), expect);
}

TEST(CliSpectralFlow, RerunIsByteIdentical) {
  const std::vector<std::string> args{"spectral-flow", "--class", "CII", "--n", "2", "--seed", "17"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  EXPECT_NE(invoke(args).out, invoke({"spectral-flow", "--class", "CII", "--n", "2", "--seed", "18"}).out);
}

TEST(CliSpectralFlow, PreambleRecordsSeedAndConfig) {
  const Outcome r = invoke({"spectral-flow", "--n", "1", "--seed", "5", "--steps", "4"});
  ASSERT_EQ(r.code, kPass);
  EXPECT_NE(r.out.find("# seed: 5\n"), std::string::npos);
  EXPECT_NE(r.out.find("\"steps\":4"), std::string::npos);
}

TEST(CliVerifyZ, DefaultPointsPass) {
  for (const char* cls : {"AIII", "CII"}) {
    const std::string n = std::string(cls) == "AIII" ? "2" : "1";
    const Outcome r = invoke({"verify-z", "--class", cls, "--n", n, "--k", "1", "--samples", "200000"});
    ASSERT_EQ(r.code, kPass) << cls << ": " << r.out << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j.at("pass").get<bool>());
    EXPECT_LE(j.at("z_score").get<double>(), 3.0);
    EXPECT_EQ(j.at("config").at("seed").get<int>(), 0);
  }
}

TEST(CliVerifyZ, ReportReplaysAsConfig) {
  const Outcome first = invoke({"verify-z", "--n", "2", "--samples", "20000", "--seed", "9"});
  ASSERT_EQ(first.code, kPass) << first.err;
  const std::string path = temp_file("chiral_replay.json", first.out);
  const Outcome second = invoke({"verify-z", "--config", path});
  EXPECT_EQ(second.code, kPass) << second.err;
  EXPECT_EQ(first.out, second.out);
}

TEST(CliConfig, MalformedJsonExitsTwo) {
  const Outcome r = invoke({"analytic-z", "--config", temp_file("chiral_bad.json", "{\"k\": 1,")});
  EXPECT_EQ(r.code, kConfigError);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliConfig, UnknownKeyExitsTwo) {
  EXPECT_EQ(invoke({"analytic-z", "--config", temp_file("chiral_unknown.json", "{\"kk\": 1}")}).code, kConfigError);
  EXPECT_EQ(invoke({"analytic-z", "--config", temp_file("chiral_field.json", "{\"field\": {\"M\": 2}}")}).code,
            kConfigError);
}

TEST(CliConfig, BadValuesExitTwo) {
  EXPECT_EQ(invoke({"analytic-z", "--class", "BDI"}).code, kConfigError);
  EXPECT_EQ(invoke({"analytic-z", "--n", "0"}).code, kConfigError);
  EXPECT_EQ(invoke({"analytic-z", "--k", "3"}).code, kConfigError);
  EXPECT_EQ(invoke({"analytic-z", "--q", "0.1,0.2", "--p", "0.3"}).code, kConfigError);
  EXPECT_EQ(invoke({"verify-z", "--format", "csv"}).code, kConfigError);
  EXPECT_EQ(invoke({"no-such-command"}).code, kConfigError);
  EXPECT_EQ(invoke({"analytic-z", "--config", "/nonexistent/chiral.json"}).code, kConfigError);
}

TEST(CliConfig, FlagsOverrideConfigFile) {
  const std::string path = temp_file("chiral_override.json", R"({"field": {"class": "CII", "N": 3}, "k": 1})");
  const Outcome r = invoke({"analytic-z", "--config", path, "--n", "2"});
  ASSERT_EQ(r.code, kPass) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("config").at("field").at("N").get<int>(), 2);
  EXPECT_EQ(j.at("config").at("field").at("class").get<std::string>(), "CII");
}

TEST(CliConfig, CoincidentPointsAreInvalidInput) {
  EXPECT_EQ(invoke({"analytic-z", "--q", "0.5", "--p", "0.5"}).code, kConfigError);
}

TEST(CliWindingHist, EvenWindingsForAiii) {
  const Outcome r = invoke({"winding-hist", "--class", "AIII", "--n", "2", "--samples", "200", "--seed", "3"});
  ASSERT_EQ(r.code, kPass) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  long total = 0;
  for (const auto& [key, count] : j.at("counts").items()) {
    EXPECT_EQ(std::stoi(key) % 2, 0) << key;
    total += count.get<long>();
  }
  EXPECT_EQ(total + j.at("rejected").get<long>(), 200);
  EXPECT_EQ(j.at("seed").get<int>(), 3);
}

TEST(CliWindingHist, SingleSampleGivesSingleBin) {
  const Outcome r = invoke({"winding-hist", "--n", "2", "--samples", "1"});
  ASSERT_EQ(r.code, kPass) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out).at("counts").size(), 1u);
}

TEST(CliPolys, LowOrderTable) {
  const Outcome r = invoke({"polys", "--n", "2", "--format", "json"});
  ASSERT_EQ(r.code, kPass) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const auto q = j.at("q_even_coefficients").get<std::vector<std::vector<double>>>();
  ASSERT_EQ(q.size(), 2u);
  EXPECT_EQ(q[0], std::vector<double>{1.0});
  ASSERT_EQ(q[1].size(), 2u);
  EXPECT_NEAR(q[1][0], 2.0 / 3.0, 1e-15);
  EXPECT_EQ(q[1][1], 1.0);
  const auto h = j.at("h").get<std::vector<double>>();
  for (int n = 0; n < 2; ++n) EXPECT_DOUBLE_EQ(h[n], skew_norm(n, 2));
}

TEST(CliPolys, CsvListsEveryCoefficient) {
  const Outcome r = invoke({"polys", "--n", "3"});
  ASSERT_EQ(r.code, kPass);
  EXPECT_EQ(header_row(r.out), "kind,index,power,value");
  std::istringstream in(r.out);
  std::string line;
  int q_rows = 0, h_rows = 0;
  while (std::getline(in, line)) {
    q_rows += line.rfind("q,", 0) == 0;
    h_rows += line.rfind("h,", 0) == 0;
  }
  EXPECT_EQ(q_rows, 6);
  EXPECT_EQ(h_rows, 3);
}

TEST(CliSelftest, Passes) {
  const Outcome r = invoke({"selftest"});
  EXPECT_EQ(r.code, kPass) << r.out;
  EXPECT_NE(r.out.find("selftest passed"), std::string::npos);
}

TEST(CliOutput, WritesFile) {
  const std::string path = ::testing::TempDir() + "chiral_out.json";
  std::remove(path.c_str());
  const Outcome r = invoke({"analytic-z", "--out", path});
  ASSERT_EQ(r.code, kPass);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j.at("config").count("out"), 0u);
}

}  // namespace
}  // namespace chiral::cli
