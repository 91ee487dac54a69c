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

#ifndef PRIVSUM_JOINT_TABLE_HPP_
#define PRIVSUM_JOINT_TABLE_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace privsum {

// Global tolerance, in bits, for every floating-point entropy comparison.
inline constexpr double kTolBits = 1e-9;

// A named variable in a joint distribution. Width is in bits, may be zero.
struct Var {
  std::string name;
  int width = 0;
};

// Exact joint distribution of a tuple of finite variables, represented as
// integer outcome counts over a uniform seed space of 2^seed_bits points.
// Probabilities are the dyadic rationals count / 2^seed_bits and are never
// materialized as floats; floating point enters only in the final log2 sums
// of entropy queries. Entropies are in bits.
//
// Outcomes are packed into a single 64-bit word, one field per variable in
// declaration order, so the combined width of all variables must be at most
// 64 and at most 32 variables may be declared. Packed masses are kept sorted
// by outcome, which makes every downstream computation independent of thread
// count and iteration order.
class JointTable {
 public:
  // Hard structural limit on enumeration size. Callers normally enforce a
  // smaller budget; this cap only guards against runaway memory use.
  static constexpr int kMaxSeedBits = 28;

  using Mapping =
      std::function<void(std::uint64_t seed, std::span<std::uint32_t> out)>;

  // Evaluates `mapping` on every seed in [0, 2^seed_bits) and tabulates the
  // resulting joint outcome counts. `mapping` receives a span with one slot
  // per declared variable and must fill each slot with a value that fits the
  // declared width (checked). Enumeration is chunked across workers; counts
  // merge by integer addition, so the table is identical for any worker
  // count. `threads` <= 0 defers to resolve_threads().
  static JointTable enumerate(int seed_bits, std::vector<Var> vars,
                              const Mapping& mapping, int threads = 0);

  int seed_bits() const { return seed_bits_; }
  std::uint64_t total_mass() const { return std::uint64_t{1} << seed_bits_; }
  const std::vector<Var>& vars() const { return vars_; }
  std::size_t var_count() const { return vars_.size(); }

  // Index of a variable by exact name; throws std::out_of_range if unknown.
  int var_index(std::string_view name) const;

  // Bitmask over variable indices for a list of names.
  std::uint32_t var_mask(std::span<const std::string> names) const;

  // Shannon entropy H(A) of the marginal on the variables in `var_set`
  // (a bitmask over variable indices). H of the empty set is exactly 0.
  double entropy_mask(std::uint32_t var_set) const;

  // H(A | B) = H(A,B) - H(B).
  double cond_entropy_mask(std::uint32_t a, std::uint32_t b) const {
    return entropy_mask(a | b) - entropy_mask(b);
  }

  // I(A ; B | C) = H(A|C) - H(A|B,C).
  double mutual_info_mask(std::uint32_t a, std::uint32_t b,
                          std::uint32_t c = 0) const {
    return cond_entropy_mask(a, c) - cond_entropy_mask(a, b | c);
  }

  // Name-based conveniences used by tests and the python bindings.
  double entropy(std::span<const std::string> a) const {
    return entropy_mask(var_mask(a));
  }
  double cond_entropy(std::span<const std::string> a,
                      std::span<const std::string> b) const {
    return cond_entropy_mask(var_mask(a), var_mask(b));
  }
  double mutual_info(std::span<const std::string> a,
                     std::span<const std::string> b,
                     std::span<const std::string> c = {}) const {
    return mutual_info_mask(var_mask(a), var_mask(b), var_mask(c));
  }

  // Sorted (packed outcome, count) pairs. Counts sum to 2^seed_bits.
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& masses() const {
    return masses_;
  }

  // Bit offset of each variable's field inside the packed outcome word.
  const std::vector<int>& offsets() const { return offsets_; }

 private:
  JointTable() = default;

  int seed_bits_ = 0;
  std::vector<Var> vars_;
  std::vector<int> offsets_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> masses_;

  // Entropy cache keyed by variable bitmask. Guarded by a mutex so audits can
  // issue queries from several threads; cached values are pure functions of
  // the table, so races only ever recompute identical numbers.
  struct Cache {
    std::mutex mu;
    std::unordered_map<std::uint32_t, double> values;
  };
  std::unique_ptr<Cache> cache_ = std::make_unique<Cache>();
};

}  // namespace privsum

#endif  // PRIVSUM_JOINT_TABLE_HPP_
