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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "privsum/auditor.hpp"
#include "privsum/fixtures.hpp"
#include "privsum/protocol.hpp"
#include "privsum/sweep.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

bool write_or_print(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return true;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return false;
  }
  out << content;
  return true;
}

int cmd_audit(int L, int n, int n1, int T, const std::string& custom_path,
              const std::string& out_path, int max_seed_bits, int threads) {
  privsum::ProtocolConfig config{L, n, n1, T};
  privsum::AuditReport report;
  try {
    config.validate();
    const privsum::ProtocolInstance inst =
        custom_path.empty()
            ? privsum::build_achievability(config)
            : privsum::load_custom_file(custom_path, config);
    report = privsum::audit(inst, {max_seed_bits, threads});
  } catch (const privsum::BudgetExceeded& e) {
    std::cerr << "error: " << e.what()
              << " (raise --max-seed-bits to allow it)\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!write_or_print(out_path, report.to_json().dump(2) + "\n")) {
    return kExitUsage;
  }
  if (report.all_pass()) {
    std::cerr << "audit: all checks pass\n";
    return kExitPass;
  }
  std::cerr << "audit: failing checks:";
  for (const std::string& f : report.failed_families()) std::cerr << " " << f;
  std::cerr << "\n";
  return kExitCheckFailure;
}

int cmd_sweep(const std::vector<int>& Ls, const std::vector<int>& ns,
              const std::vector<int>& n1s, const std::vector<int>& Ts,
              const std::string& out_path, int max_seed_bits, int threads) {
  privsum::SweepResult result;
  try {
    const auto grid = privsum::expand_sweep({Ls, ns, n1s, Ts});
    result = privsum::run_sweep(grid, {max_seed_bits, threads});
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!write_or_print(out_path, result.csv)) return kExitUsage;
  return result.all_pass ? kExitPass : kExitCheckFailure;
}

int cmd_fixtures(const std::string& emit_dir, int max_seed_bits,
                 int threads) {
  if (!emit_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(emit_dir, ec);
    for (const privsum::Fixture& f : privsum::builtin_fixtures()) {
      const std::string path = emit_dir + "/" + f.name + "_L" +
                               std::to_string(f.config.L) + "_n" +
                               std::to_string(f.config.n) + ".json";
      std::ofstream out(path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return kExitUsage;
      }
      out << f.tables.dump(2) << "\n";
      std::cout << "wrote " << path << "\n";
    }
  }

  bool all_match = true;
  for (const privsum::Fixture& f : privsum::builtin_fixtures()) {
    privsum::AuditReport report;
    try {
      const privsum::ProtocolInstance inst =
          privsum::load_custom(f.tables, f.config);
      report = privsum::audit(inst, {max_seed_bits, threads});
    } catch (const std::exception& e) {
      std::cerr << "error: fixture " << f.name << ": " << e.what() << "\n";
      return kExitUsage;
    }
    const std::vector<std::string> failed = report.failed_families();
    bool designated_failed = false;
    for (const std::string& fam : failed) {
      if (fam == f.designated) designated_failed = true;
    }
    const bool match = designated_failed && failed == f.expected_failures;
    all_match = all_match && match;

    std::cout << (match ? "[ok] " : "[MISMATCH] ") << f.name
              << ": designated check '" << f.designated << "' "
              << (designated_failed ? "failed as designed" : "DID NOT FAIL")
              << "; failing families:";
    for (const std::string& fam : failed) std::cout << " " << fam;
    if (!match) {
      std::cout << "; expected:";
      for (const std::string& fam : f.expected_failures) {
        std::cout << " " << fam;
      }
    }
    std::cout << "\n";
  }
  return all_match ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact auditor for sum-revealing multiparty XOR aggregation with a "
      "tunable clear fraction"};
  app.require_subcommand(1);

  int max_seed_bits = 24;
  int threads = 0;
  app.add_option("--max-seed-bits", max_seed_bits,
                 "Refuse enumerations beyond this many seed bits")
      ->capture_default_str();
  app.add_option("--threads", threads,
                 "Worker threads (0 = automatic, PRIVSUM_THREADS also works)")
      ->capture_default_str();

  auto* audit = app.add_subcommand(
      "audit", "Audit one protocol instance and emit a JSON report");
  int L = 0, n = 0, n1 = 0, T = 0;
  std::string custom_path, audit_out;
  audit->add_option("--L", L, "Number of users (>= 2)")->required();
  audit->add_option("--n", n, "Sequence bits per user (>= 1)")->required();
  audit->add_option("--n1", n1, "Clear-block bits (0..n)")->required();
  audit->add_option("--T", T, "Collusion bound (0..L-2)")->required();
  audit->add_option("--custom", custom_path,
                    "JSON truth tables instead of the built-in construction");
  audit->add_option("--out", audit_out, "Write the JSON report here");

  auto* sweep = app.add_subcommand(
      "sweep", "Audit a parameter grid and emit one CSV row per point");
  std::vector<int> Ls, ns, n1s, Ts;
  std::string sweep_out;
  sweep->add_option("--L", Ls, "User counts")->required()->delimiter(',');
  sweep->add_option("--n", ns, "Sequence lengths")->required()->delimiter(',');
  sweep->add_option("--n1", n1s, "Clear-block lengths (default: all 0..n)")
      ->delimiter(',');
  sweep->add_option("--T", Ts, "Collusion bounds (default: L-2 per L)")
      ->delimiter(',');
  sweep->add_option("--out", sweep_out, "Write the CSV here");

  auto* fixtures = app.add_subcommand(
      "fixtures", "Audit the shipped broken protocols and verify that each "
                  "fails exactly its designated checks");
  std::string emit_dir;
  fixtures->add_option("--emit", emit_dir,
                       "Also write the fixture truth tables to this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (audit->parsed()) {
    return cmd_audit(L, n, n1, T, custom_path, audit_out, max_seed_bits,
                     threads);
  }
  if (sweep->parsed()) {
    return cmd_sweep(Ls, ns, n1s, Ts, sweep_out, max_seed_bits, threads);
  }
  return cmd_fixtures(emit_dir, max_seed_bits, threads);
}
