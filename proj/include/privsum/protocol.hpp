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

#ifndef PRIVSUM_PROTOCOL_HPP_
#define PRIVSUM_PROTOCOL_HPP_

#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "privsum/bitvec.hpp"
#include "privsum/joint_table.hpp"
#include "privsum/rational.hpp"

namespace privsum {

// Parameters of one private-sum setting: L users each holding a uniform
// n-bit sequence, of which the first n1 bits may travel in the clear, with
// collusion tolerance T at the decoder.
struct ProtocolConfig {
  int L = 0;   // users, >= 2
  int n = 0;   // sequence bits, >= 1
  int n1 = 0;  // clear-block bits, 0 <= n1 <= n
  int T = 0;   // collusion bound, 0 <= T <= L - 2

  void validate() const;
  Rat alpha() const { return Rat(n1, n); }   // clear fraction
  Rat delta() const { return alpha() * (L - 1); }  // leakage budget / n
};

// Exact per-user and global rates, all normalized by n.
struct RateTuple {
  std::vector<Rat> R_X;
  std::vector<Rat> R_K;
  Rat R_K_sum{0};
  Rat R_U{0};
};

// A concrete protocol: a deterministic key derivation from the global
// randomness, per-user encoders, and the decoder. All maps are total
// deterministic functions, so the joint law of every variable is computable
// by exhaustive enumeration.
struct ProtocolInstance {
  ProtocolConfig config;
  int u_bits = 0;                 // bits of global randomness U
  std::vector<int> key_bits;      // per-user key width
  std::vector<int> x_bits;        // per-user message width
  bool custom = false;            // loaded from truth tables
  std::function<std::vector<BitVec>(const BitVec&)> key_map;
  std::function<BitVec(int l, const BitVec& key, const BitVec& s)> enc;
  std::function<BitVec(std::span<const BitVec>)> dec;

  RateTuple rates() const;
};

// One evaluation of the protocol on concrete inputs.
struct Transcript {
  std::vector<BitVec> K;
  std::vector<BitVec> X;
  BitVec sigma_hat;
};

// The time-sharing construction: U is L-1 independent blocks of n2 = n - n1
// bits, keys are the blocks plus their xor-sum (so keys cancel), user l
// sends the clear block alongside the padded remainder, and the decoder
// xors all messages.
ProtocolInstance build_achievability(const ProtocolConfig& config);

// Evaluates key derivation, encoding, and decoding on given inputs.
// S must hold L vectors of n bits; U must have inst.u_bits bits.
Transcript run(const ProtocolInstance& inst, std::span<const BitVec> S,
               const BitVec& U);

// True iff the decoded sum equals the true xor-sum on every point of the
// seed space. Writes the number of points checked to *points when given.
bool exhaustive_correctness(const ProtocolInstance& inst,
                            std::uint64_t* points = nullptr, int threads = 0);

// Thrown when a requested enumeration would exceed the seed-bit budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(int needed, int budget);
  int needed() const { return needed_; }
  int budget() const { return budget_; }

 private:
  int needed_;
  int budget_;
};

// Exact joint law of (S_1..S_L, U, K_1..K_L, X_1..X_L, Sigma) under uniform
// seeds. Seed packs S_1 in the low bits, then S_2..S_L, then U. Throws
// BudgetExceeded when L*n + u_bits > budget_seed_bits.
JointTable joint_law(const ProtocolInstance& inst, int budget_seed_bits = 24,
                     int threads = 0);

// Builds an instance from JSON truth tables. Expected document:
//   {
//     "L": 3, "n": 2, "R_U_bits": 4,
//     "key_bits": [2, 2, 2], "x_bits": [2, 2, 2],
//     "key_map": [["10", "10", "00"], ...],   // 2^R_U_bits entries
//     "enc": [[...], [...], [...]],           // per user, 2^(key+n) entries
//     "dec": ["00", ...]                      // 2^(sum x_bits) entries
//   }
// Bit strings are position-0-first. key_map[u] lists the L keys for the
// global randomness with packed value u. enc[l][i] is indexed by
// i = (s << key_bits[l]) | k. dec[i] is indexed by the concatenation of all
// messages with X_1 in the low bits. Every width and table size is checked.
ProtocolInstance load_custom(const nlohmann::json& doc,
                             const ProtocolConfig& config);

// load_custom over a file path.
ProtocolInstance load_custom_file(const std::string& path,
                                  const ProtocolConfig& config);

}  // namespace privsum

#endif  // PRIVSUM_PROTOCOL_HPP_
