// Copyright 2026 The Privsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "gtest/gtest.h"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs the installed binary through the shell, capturing both streams.
CliResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const fs::path dir =
      fs::temp_directory_path() / ("privsum_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path out_path = dir / ("out" + std::to_string(counter));
  const fs::path err_path = dir / ("err" + std::to_string(counter));
  ++counter;

  std::string cmd = env.empty() ? "" : env + " ";
  cmd += std::string(PRIVSUM_CLI_PATH) + " " + args + " >" +
         out_path.string() + " 2>" + err_path.string();
  const int status = std::system(cmd.c_str());

  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

TEST(Cli, AuditCleanInstance) {
  const auto r = run_cli("audit --L 3 --n 2 --n1 1 --T 1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.err.find("all checks pass"), std::string::npos);
  const json report = json::parse(r.out);
  EXPECT_EQ(report["config"]["L"], 3);
  EXPECT_EQ(report["profile"]["C"], (json{2.0, 1.0, 0.0, 0.0}));
  EXPECT_EQ(report["privacy"]["pass"], true);
}

TEST(Cli, AuditOutFileMatchesStdout) {
  const fs::path dir = fs::temp_directory_path() / "privsum_cli_outfile";
  fs::create_directories(dir);
  const fs::path report_path = dir / "report.json";
  const auto to_stdout = run_cli("audit --L 2 --n 2 --n1 1 --T 0");
  const auto to_file = run_cli("audit --L 2 --n 2 --n1 1 --T 0 --out " +
                               report_path.string());
  EXPECT_EQ(to_stdout.exit_code, 0);
  EXPECT_EQ(to_file.exit_code, 0);
  EXPECT_EQ(slurp(report_path), to_stdout.out);
}

TEST(Cli, AuditIsByteIdenticalAcrossRunsAndThreadCounts) {
  const std::string args = "audit --L 3 --n 2 --n1 2 --T 1";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  EXPECT_EQ(a.out, b.out);
  const auto one = run_cli(args, "PRIVSUM_THREADS=1");
  const auto eight = run_cli(args, "PRIVSUM_THREADS=8");
  EXPECT_EQ(one.out, eight.out);
  EXPECT_EQ(a.out, one.out);
}

TEST(Cli, AuditRespectsSeedBudget) {
  const auto r = run_cli("--max-seed-bits 10 audit --L 3 --n 3 --n1 0 --T 1");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("15"), std::string::npos);
  EXPECT_NE(r.err.find("10"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("audit --L 3 --n 2").exit_code, 2);
  EXPECT_EQ(run_cli("audit --L 3 --n 2 --n1 3 --T 1").exit_code, 2);
  EXPECT_EQ(run_cli("audit --L 3 --n 2 --n1 1 --T 2").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(run_cli("audit --L 3 --n 2 --n1 0 --T 1 --custom /no/such.json")
                .exit_code,
            2);
}

TEST(Cli, HelpExitsCleanly) {
  EXPECT_EQ(run_cli("--help").exit_code, 0);
  EXPECT_EQ(run_cli("audit --help").exit_code, 0);
}

TEST(Cli, CommittedFixtureFailsItsDesignatedCheck) {
  const std::string path =
      std::string(PRIVSUM_SOURCE_DIR) + "/fixtures/plaintext_L3_n2.json";
  ASSERT_TRUE(fs::exists(path)) << path;
  const auto r =
      run_cli("audit --L 3 --n 2 --n1 1 --T 1 --custom " + path);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("privacy"), std::string::npos);
  const json report = json::parse(r.out);
  EXPECT_EQ(report["privacy"]["pass"], false);
  EXPECT_EQ(report["config"]["custom"], true);
}

TEST(Cli, SweepEmitsPinnedCsv) {
  const auto r = run_cli("sweep --L 2 --n 1,2");
  EXPECT_EQ(r.exit_code, 0);
  std::istringstream lines(r.out);
  std::string header;
  ASSERT_TRUE(std::getline(lines, header));
  EXPECT_EQ(header,
            "L,n,n1,T,alpha_num,alpha_den,R_X,R_K,R_K_sum,R_U,max_leak_bits,"
            "delta_bits_required,correct,private,symmetric,thm1,thm2,ramp");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty()) ++rows;
  }
  EXPECT_EQ(rows, 5);  // n=1: n1 in 0..1; n=2: n1 in 0..2

  const auto again = run_cli("sweep --L 2 --n 1,2");
  EXPECT_EQ(again.out, r.out);
}

TEST(Cli, SweepRejectsInvalidGrid) {
  EXPECT_EQ(run_cli("sweep --L 3 --n 2 --T 5").exit_code, 2);
  EXPECT_EQ(run_cli("sweep --L 1 --n 2").exit_code, 2);
}

TEST(Cli, FixturesAllMatchTheirContracts) {
  const auto r = run_cli("fixtures");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("[ok] plaintext"), std::string::npos);
  EXPECT_NE(r.out.find("[ok] key_reuse"), std::string::npos);
  EXPECT_NE(r.out.find("[ok] truncated_key"), std::string::npos);
  EXPECT_EQ(r.out.find("[MISMATCH]"), std::string::npos);
}

TEST(Cli, FixturesEmitWritesLoadableTables) {
  const fs::path dir = fs::temp_directory_path() / "privsum_cli_emit";
  fs::remove_all(dir);
  const auto r = run_cli("fixtures --emit " + dir.string());
  EXPECT_EQ(r.exit_code, 0);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    ++files;
    const json doc = json::parse(slurp(entry.path()));
    EXPECT_TRUE(doc.contains("enc"));
    EXPECT_TRUE(doc.contains("dec"));
  }
  EXPECT_EQ(files, 3);
}

}  // namespace
