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

#include "privsum/sweep.hpp"

#include <cstdio>
#include <stdexcept>

namespace privsum {
namespace {

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

const char* flag(bool b) { return b ? "1" : "0"; }

}  // namespace

std::vector<ProtocolConfig> expand_sweep(const SweepSpec& spec) {
  if (spec.Ls.empty() || spec.ns.empty()) {
    throw std::invalid_argument("sweep grid is empty");
  }
  std::vector<ProtocolConfig> grid;
  for (int L : spec.Ls) {
    const std::vector<int> Ts =
        spec.Ts.empty() ? std::vector<int>{L - 2} : spec.Ts;
    for (int n : spec.ns) {
      std::vector<int> n1s = spec.n1s;
      if (n1s.empty()) {
        for (int n1 = 0; n1 <= n; ++n1) n1s.push_back(n1);
      }
      for (int n1 : n1s) {
        for (int T : Ts) {
          ProtocolConfig config{L, n, n1, T};
          config.validate();  // any invalid combination voids the grid
          grid.push_back(config);
        }
      }
    }
  }
  if (grid.empty()) throw std::invalid_argument("sweep grid is empty");
  return grid;
}

SweepResult run_sweep(const std::vector<ProtocolConfig>& grid,
                      const AuditOptions& options) {
  SweepResult result;
  result.csv = std::string(kSweepCsvHeader) + "\n";
  for (const ProtocolConfig& config : grid) {
    const ProtocolInstance inst = build_achievability(config);
    const AuditReport report = audit(inst, options);
    if (!report.all_pass()) result.all_pass = false;

    const Rat alpha = config.alpha();
    std::string row;
    row += std::to_string(config.L) + ",";
    row += std::to_string(config.n) + ",";
    row += std::to_string(config.n1) + ",";
    row += std::to_string(config.T) + ",";
    row += std::to_string(alpha.numerator()) + ",";
    row += std::to_string(alpha.denominator()) + ",";
    row += rat_str(report.rates.R_X.front()) + ",";
    row += rat_str(report.rates.R_K.front()) + ",";
    row += rat_str(report.rates.R_K_sum) + ",";
    row += rat_str(report.rates.R_U) + ",";
    row += fmt12(report.privacy.measured) + ",";
    row += fmt12(report.privacy.required) + ",";
    row += std::string(flag(report.correctness_pass)) + ",";
    row += std::string(flag(report.privacy.pass)) + ",";
    row += std::string(flag(report.profile.symmetric)) + ",";

    bool thm1 = true;
    for (const RateCheck& c : report.theorem1) thm1 = thm1 && c.pass;
    row += std::string(flag(thm1)) + ",";

    if (report.theorem2_applicable) {
      bool thm2 = true;
      for (const RateCheck& c : report.theorem2) thm2 = thm2 && c.pass;
      row += std::string(flag(thm2)) + ",";
    } else {
      row += "na,";
    }

    if (report.ramp.applicable && !report.ramp.vacuous) {
      row += flag(report.ramp.pass);
    } else {
      row += "na";
    }
    result.csv += row + "\n";
  }
  return result;
}

}  // namespace privsum
