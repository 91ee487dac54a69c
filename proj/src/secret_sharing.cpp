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

#include "privsum/secret_sharing.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "privsum/subsets.hpp"

namespace privsum {
namespace {

void validate(const ShareScheme& scheme) {
  if (scheme.L < 1) throw std::invalid_argument("scheme needs L >= 1 shares");
  if (scheme.n_s < 0 || scheme.n_r < 0) {
    throw std::invalid_argument("negative bit-lengths in scheme");
  }
  if (static_cast<int>(scheme.share_widths.size()) != scheme.L) {
    throw std::invalid_argument("scheme share_widths must have L entries");
  }
  if (!scheme.share_map) {
    throw std::invalid_argument("scheme has no share_map");
  }
  if (scheme.n_s + scheme.n_r > JointTable::kMaxSeedBits) {
    throw std::invalid_argument("scheme seed space exceeds enumeration cap");
  }
}

}  // namespace

std::vector<BitVec> additive_ramp(std::span<const BitVec> blocks) {
  if (blocks.empty()) {
    throw std::invalid_argument("additive_ramp needs at least one block");
  }
  const int m = blocks.front().size();
  for (const BitVec& b : blocks) {
    if (b.size() != m) {
      throw std::invalid_argument("additive_ramp blocks must share a length");
    }
  }
  std::vector<BitVec> shares(blocks.begin(), blocks.end());
  // Over F_2 negation is the identity, so the balancing share -sum(blocks)
  // is just the xor-sum.
  shares.push_back(xor_sum(blocks));
  return shares;
}

JointTable share_joint_law(const ShareScheme& scheme, int threads) {
  validate(scheme);
  std::vector<Var> vars;
  vars.push_back({"S", scheme.n_s});
  for (int l = 1; l <= scheme.L; ++l) {
    vars.push_back({"H_" + std::to_string(l),
                    scheme.share_widths[static_cast<std::size_t>(l - 1)]});
  }
  const int seed_bits = scheme.n_s + scheme.n_r;
  return JointTable::enumerate(
      seed_bits, std::move(vars),
      [&scheme](std::uint64_t seed, std::span<std::uint32_t> out) {
        const BitVec secret(scheme.n_s,
                            static_cast<std::uint32_t>(
                                seed & BitVec::mask(scheme.n_s)));
        const BitVec rand(scheme.n_r,
                          static_cast<std::uint32_t>(
                              (seed >> scheme.n_s) & BitVec::mask(scheme.n_r)));
        std::vector<BitVec> shares = scheme.share_map(secret, rand);
        if (static_cast<int>(shares.size()) != scheme.L) {
          throw std::invalid_argument("share_map returned wrong share count");
        }
        out[0] = secret.value();
        for (int l = 0; l < scheme.L; ++l) {
          if (shares[static_cast<std::size_t>(l)].size() !=
              scheme.share_widths[static_cast<std::size_t>(l)]) {
            throw std::invalid_argument("share has wrong declared width");
          }
          out[static_cast<std::size_t>(l) + 1] =
              shares[static_cast<std::size_t>(l)].value();
        }
      },
      threads);
}

bool check_recoverability(const ShareScheme& scheme, int t, int threads) {
  validate(scheme);
  if (t < 1 || t > scheme.L) {
    throw std::invalid_argument("recoverability size t out of range");
  }
  const JointTable joint = share_joint_law(scheme, threads);
  const std::uint32_t secret_mask = 1u;
  for (const auto& subset : all_subsets(scheme.L)) {
    if (static_cast<int>(subset.size()) != t) continue;
    std::uint32_t share_mask = 0;
    for (int l : subset) share_mask |= (1u << l);  // var index l is H_l
    if (joint.cond_entropy_mask(secret_mask, share_mask) > kTolBits) {
      return false;
    }
  }
  return true;
}

LeakageProfileSS leakage_profile(const ShareScheme& scheme, int threads) {
  validate(scheme);
  const JointTable joint = share_joint_law(scheme, threads);
  const std::uint32_t secret_mask = 1u;
  const double h_secret = joint.entropy_mask(secret_mask);

  LeakageProfileSS profile;
  profile.C.assign(static_cast<std::size_t>(scheme.L) + 1, 0.0);
  profile.symmetric = true;
  if (h_secret <= kTolBits) {
    // Nothing to leak; the all-zero profile is trivially symmetric.
    return profile;
  }

  std::vector<bool> seen(static_cast<std::size_t>(scheme.L) + 1, false);
  std::vector<double> first(static_cast<std::size_t>(scheme.L) + 1, 0.0);
  for (const auto& subset : all_subsets(scheme.L)) {
    std::uint32_t share_mask = 0;
    for (int l : subset) share_mask |= (1u << l);
    const double ratio =
        joint.mutual_info_mask(secret_mask, share_mask) / h_secret;
    const std::size_t size = subset.size();
    if (!seen[size]) {
      seen[size] = true;
      first[size] = ratio;
      profile.C[size] = ratio;
    } else {
      if (std::abs(ratio - first[size]) > kTolBits) profile.symmetric = false;
      if (ratio > profile.C[size]) profile.C[size] = ratio;
    }
  }
  return profile;
}

bool check_ramp(const LeakageProfileSS& profile, int t, int delta) {
  const int L = static_cast<int>(profile.C.size()) - 1;
  if (L < 1) throw std::invalid_argument("profile must cover sizes 0..L");
  if (delta < 1 || t < delta || t > L) {
    throw std::invalid_argument("ramp parameters need 1 <= delta <= t <= L");
  }
  for (int l = 0; l <= L; ++l) {
    double want = 0.0;
    if (l >= t) {
      want = 1.0;
    } else if (l > t - delta) {
      want = static_cast<double>(l - t + delta) / static_cast<double>(delta);
    }
    if (std::abs(profile.C[static_cast<std::size_t>(l)] - want) > kTolBits) {
      return false;
    }
  }
  return true;
}

}  // namespace privsum
