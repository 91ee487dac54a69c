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

#ifndef PRIVSUM_SWEEP_HPP_
#define PRIVSUM_SWEEP_HPP_

#include <string>
#include <vector>

#include "privsum/auditor.hpp"
#include "privsum/protocol.hpp"

namespace privsum {

// Parameter grid for auditing the time-sharing construction. Empty n1s
// means every 0..n; empty Ts means the single largest bound L-2 per L.
struct SweepSpec {
  std::vector<int> Ls;
  std::vector<int> ns;
  std::vector<int> n1s;
  std::vector<int> Ts;
};

inline constexpr const char* kSweepCsvHeader =
    "L,n,n1,T,alpha_num,alpha_den,R_X,R_K,R_K_sum,R_U,max_leak_bits,"
    "delta_bits_required,correct,private,symmetric,thm1,thm2,ramp";

// Expands the grid in row order (L, then n, then n1, then T ascending).
// Throws std::invalid_argument when the grid is empty or any combination
// violates the configuration invariants.
std::vector<ProtocolConfig> expand_sweep(const SweepSpec& spec);

// One CSV row per configuration, audited with the given options. Booleans
// print as 1/0; a check that is not applicable prints as "na".
struct SweepResult {
  std::string csv;
  bool all_pass = true;
};
SweepResult run_sweep(const std::vector<ProtocolConfig>& grid,
                      const AuditOptions& options);

}  // namespace privsum

#endif  // PRIVSUM_SWEEP_HPP_
