// Copyright 2026 The swt Authors
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

#include "swt_cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "swt/io.hpp"

using namespace swt;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "swt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string config(const char* name) { return std::string(SWT_CONFIG_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  fs::path p = fs::path(::testing::TempDir()) / ("swt_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write(const fs::path& dir, const char* name, const std::string& text) {
  std::ofstream(dir / name) << text;
  return dir / name;
}

}  // namespace

TEST(Cli, MapListsQubitHamiltonian) {
  const Result r = run({"map", "-c", config("siam2.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1 * ZIZI\n"), std::string::npos);
  EXPECT_NE(r.out.find("-0.25 * IZII\n"), std::string::npos);
  EXPECT_NE(r.out.find("0.1 * YYII\n"), std::string::npos);
}

TEST(Cli, MapChainTermCount) {
  const Result r = run({"map", "-c", config("chain3.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 22);
}

TEST(Cli, MapWithoutHybridizationHasNoXY) {
  const fs::path dir = scratch("novy");
  const fs::path cfg = write(dir, "c.json", R"({"model": "siam2", "U": 4, "mu": 1, "eps": [0.5], "V": [0]})");
  const Result r = run({"map", "-c", cfg.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find_first_of("XY"), std::string::npos);
}

TEST(Cli, RunGeneric) {
  const fs::path dir = scratch("run");
  const Result r = run({"run", "-c", config("chain3.json"), "--out", dir.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  const Json report = Json::parse(slurp(dir / "report.json"));
  EXPECT_LE(report.at("constraint_residual").get<double>(), 1e-10);
  EXPECT_TRUE(report.at("oracle").at("passed").get<bool>());
  EXPECT_EQ(report.at("status"), "ok");
}

TEST(Cli, RunIsDeterministic) {
  const Result a = run({"run", "-c", config("siam2.json"), "--format", "json"});
  const Result b = run({"run", "-c", config("siam2.json"), "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, RunOfMappedHamiltonianMatchesRunOfModel) {
  const fs::path dir = scratch("compose");
  ASSERT_EQ(run({"map", "-c", config("siam2.json"), "--out", dir.string()}).code, 0);
  const Result direct = run({"run", "-c", config("siam2.json"), "--format", "json"});
  const Result mapped = run({"run", "-c", (dir / "hamiltonian.json").string(), "--format", "json"});
  EXPECT_EQ(mapped.code, 0);
  EXPECT_EQ(direct.out, mapped.out);
}

TEST(Cli, RunDiagonalInput) {
  const fs::path dir = scratch("diag");
  const std::string text =
      R"({"n_qubits": 2, "terms": [{"pauli": "ZZ", "re": 1}, {"pauli": "ZI", "re": 0.5}]})";
  const fs::path cfg = write(dir, "h.json", text);
  const Result r = run({"run", "-c", cfg.string(), "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const Json report = Json::parse(r.out);
  EXPECT_TRUE(report.at("generator").at("terms").empty());
  EXPECT_EQ(pauli_sum_from_json(report.at("h_eff")), pauli_sum_from_json(Json::parse(text)));
}

TEST(Cli, RunDegenerateExitsThree) {
  const fs::path dir = scratch("degenerate");
  const Result r = run({"run", "-c", config("degenerate.json"), "--out", dir.string()});
  EXPECT_EQ(r.code, 3);
  const Json report = Json::parse(slurp(dir / "report.json"));
  EXPECT_EQ(report.at("status"), "infeasible");
  EXPECT_EQ(report.at("unmatched").at("terms").size(), 8u);
  EXPECT_EQ(report.at("degenerate_pairs").size(), 4u);
}

TEST(Cli, ClosureFailureExitsThree) {
  const fs::path dir = scratch("closure");
  const fs::path cfg = write(dir, "h.json",
                             R"({"n_qubits": 3, "terms": [{"pauli": "ZZI", "re": 1}, {"pauli": "ZIZ", "re": 0.7},
                                 {"pauli": "ZII", "re": 0.4}, {"pauli": "XII", "re": 0.1}]})");
  EXPECT_EQ(run({"run", "-c", cfg.string(), "--depth", "1"}).code, 3);
  EXPECT_EQ(run({"run", "-c", cfg.string(), "--depth", "2"}).code, 0);
}

TEST(Cli, VerifyPassesAndFails) {
  const Result ok = run({"verify", "-c", config("siam2.json")});
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_NE(ok.out.find("[PASS] second_order_ratio_3"), std::string::npos);
  const Result loose = run({"verify", "-c", config("siam2.json"), "--tol", "1e-2"});
  EXPECT_EQ(loose.code, 0);
  const Result bad = run({"verify", "-c", config("degenerate.json"), "--format", "json"});
  EXPECT_EQ(bad.code, 4);
  const Json report = Json::parse(bad.out);
  EXPECT_EQ(report.at("reason"), "degenerate");
  EXPECT_EQ(report.at("degenerate_pairs").size(), 4u);
}

TEST(Cli, ConfigErrorsExitTwo) {
  const fs::path dir = scratch("errors");
  EXPECT_EQ(run({"map", "-c", (dir / "missing.json").string()}).code, 2);
  EXPECT_EQ(run({"map", "-c", write(dir, "bad.json", "{not json").string()}).code, 2);
  EXPECT_EQ(run({"map", "-c", write(dir, "kind.json", R"({"x": 1})").string()}).code, 2);
  EXPECT_EQ(run({"map", "-c", write(dir, "shape.json",
                                    R"({"model": "siam2", "U": 4, "mu": 1, "eps": [0.5, 1], "V": [0.2]})")
                                  .string()})
                .code,
            2);
  EXPECT_EQ(run({"map"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"run", "-c", config("siam2.json"), "--format", "xml"}).code, 2);
}
