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

#ifndef PRIVSUM_AUDITOR_HPP_
#define PRIVSUM_AUDITOR_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "privsum/joint_table.hpp"
#include "privsum/protocol.hpp"
#include "privsum/rational.hpp"

namespace privsum {

// One measured-vs-required verdict over entropies (bits). `subset` is the
// rendered index set when the check is subset-scoped, else "". The family
// name (check name up to the first parenthesis) groups related checks for
// summary purposes.
struct Check {
  std::string name;
  std::string subset;
  double measured = 0.0;
  double required = 0.0;
  bool pass = true;

  std::string family() const { return name.substr(0, name.find('(')); }
};

// A verdict compared in exact rational arithmetic (rates).
struct RateCheck {
  std::string name;
  Rat measured{0};
  Rat required{0};
  bool pass = true;
};

// Leakage of every colluding set, plus the per-size view. C[l] is the
// maximum leakage over subsets of size l. `symmetric` records whether one
// constant Delta satisfies leak(T) - leak(T + {j}) == Delta for every
// |T| <= L-2 and j outside T (equivalently: same-size constancy plus equal
// per-size decrements); `delta` is that constant and is only meaningful when
// `symmetric` is set.
struct LeakageProfile {
  std::vector<std::vector<int>> subsets;  // lexicographic order
  std::vector<double> leak;               // bits, aligned with subsets
  std::vector<double> C;                  // size L+1
  double delta = 0.0;
  bool symmetric = false;
};

struct PrivacyVerdict {
  double measured = 0.0;  // max leakage over |T| <= config.T, in bits
  double required = 0.0;  // n * alpha * (L-1), in bits
  bool pass = true;
  std::string witness_subset;  // first lexicographic argmax
};

// Normalized key-share leakage about the global randomness, per subset size.
struct RampVerdict {
  bool applicable = false;  // instance has exactly optimal rates
  bool vacuous = false;     // H(U) == 0, nothing to share
  std::vector<double> profile;  // I(U; K_T) / H(U), max per size
  bool pass = true;
};

struct AuditOptions {
  int budget_seed_bits = 24;
  int threads = 0;  // 0 = automatic, see resolve_threads
};

struct AuditReport {
  ProtocolConfig config;
  bool custom = false;
  int seed_bits = 0;
  RateTuple rates;
  bool optimal = false;

  bool correctness_pass = false;
  std::uint64_t points = 0;

  LeakageProfile profile;
  std::vector<Check> properties;
  PrivacyVerdict privacy;
  std::vector<RateCheck> theorem1;
  bool theorem2_applicable = false;
  std::vector<RateCheck> theorem2;
  std::vector<Check> identities;
  RampVerdict ramp;

  bool all_pass() const;
  // Names of check families with at least one failing verdict among the
  // checks that were actually evaluated.
  std::vector<std::string> failed_families() const;
  nlohmann::ordered_json to_json() const;
};

// Leakage of one colluding set: I(S_[L]; X_[L] | Sigma, S_T, K_T) in bits,
// measured against the true sum.
double leakage(const JointTable& joint, const std::vector<int>& T_set, int L);

// Leakage of every subset plus per-size constants and the symmetry verdict.
LeakageProfile profile(const JointTable& joint, int L, int threads = 0);

PrivacyVerdict check_privacy(const LeakageProfile& profile,
                             const ProtocolConfig& config);

// The three converse rate bounds: min_l R_X[l] >= 1, sum_l R_K[l] >=
// (1-alpha) L, R_U >= (1-alpha)(L-1). Exact rational comparisons.
std::vector<RateCheck> check_theorem1(const RateTuple& rates, const Rat& alpha,
                                      int L);

// Per-user key-rate bound R_K[l] >= 1-alpha, meaningful only under leakage
// symmetry. Returns an empty list when not applicable.
std::vector<RateCheck> check_theorem2(const RateTuple& rates, const Rat& alpha,
                                      const LeakageProfile& profile);

// Entropy identities and bounds evaluated on the instance's joint law:
// per-subset leakage decomposition, per-size leakage increments (symmetric
// instances only), the encoder leakage sum bound, joint communication and
// joint local randomness lower bounds, and (on rate-optimal instances) the
// exact residual entropy of the global randomness. Checks whose hypotheses
// do not hold are omitted, not failed.
std::vector<Check> identity_suite(const JointTable& joint,
                                  const ProtocolConfig& config,
                                  const LeakageProfile& profile, bool optimal,
                                  int threads = 0);

// Checks that the keys behave as shares of the global randomness with the
// linear ramp profile: I(U; K_T)/H(U) == |T|/(L-1) capped at 1. Only
// meaningful on rate-optimal instances; vacuous when H(U) == 0. The verdict
// is cross-checked through the secret-sharing auditor on the instance's
// key map.
RampVerdict ramp_necessity(const ProtocolInstance& inst,
                           const JointTable& joint, bool optimal,
                           int threads = 0);

// True when the instance's exact rates equal the optimal values
// R_X[l] == 1, R_K[l] == 1-alpha, R_U == (1-alpha)(L-1).
bool rates_optimal(const RateTuple& rates, const Rat& alpha, int L);

// Full audit: joint law, correctness, leakage profile, privacy, rate
// bounds, identity suite, ramp necessity.
AuditReport audit(const ProtocolInstance& inst, const AuditOptions& options);

}  // namespace privsum

#endif  // PRIVSUM_AUDITOR_HPP_
