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

#ifndef PRIVSUM_SECRET_SHARING_HPP_
#define PRIVSUM_SECRET_SHARING_HPP_

#include <functional>
#include <span>
#include <vector>

#include "privsum/bitvec.hpp"
#include "privsum/joint_table.hpp"

namespace privsum {

// A secret-sharing scheme as a deterministic map over a uniform seed: the
// secret's n_s bits followed by n_r bits of sharing randomness. Audits reduce
// to exact enumeration of the (secret, shares) joint law.
struct ShareScheme {
  int L = 0;    // number of shares
  int n_s = 0;  // secret bit-length
  int n_r = 0;  // randomization bit-length
  std::vector<int> share_widths;
  // (secret, randomness) -> L shares, share l having share_widths[l] bits.
  std::function<std::vector<BitVec>(const BitVec&, const BitVec&)> share_map;
};

// Normalized leakage ratios I(S; H_T) / H(S), one entry per subset size
// 0..L. C[l] is the maximum over subsets of size l; `symmetric` records
// whether all same-size subsets agree within tolerance. A zero-entropy
// secret yields an all-zero profile.
struct LeakageProfileSS {
  std::vector<double> C;
  bool symmetric = false;
};

// Additive shares: shares 1..L-1 are the given blocks, the last share is
// their xor-sum, so all L shares xor to zero. Blocks must have equal length.
std::vector<BitVec> additive_ramp(std::span<const BitVec> blocks);

// Joint law of (secret, shares) under a uniform seed of n_s + n_r bits.
// Variable names: "S", "H_1".."H_L".
JointTable share_joint_law(const ShareScheme& scheme, int threads = 0);

// True iff every subset of exactly t shares determines the secret:
// max over |T| = t of H(S | H_T) == 0 within tolerance.
bool check_recoverability(const ShareScheme& scheme, int t, int threads = 0);

// Measured leakage ratios for every subset size.
LeakageProfileSS leakage_profile(const ShareScheme& scheme, int threads = 0);

// True iff the profile matches the piecewise-linear ramp shape: 0 for
// l <= t - delta, (l - t + delta) / delta for t - delta <= l <= t, and 1 for
// l >= t. Requires 1 <= delta <= t <= L.
bool check_ramp(const LeakageProfileSS& profile, int t, int delta);

}  // namespace privsum

#endif  // PRIVSUM_SECRET_SHARING_HPP_
