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

#include "privsum/joint_table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "privsum/parallel.hpp"

namespace privsum {
namespace {

std::uint64_t field_mask(int width) {
  return width >= 64 ? ~std::uint64_t{0}
                     : ((std::uint64_t{1} << width) - 1u);
}

}  // namespace

JointTable JointTable::enumerate(int seed_bits, std::vector<Var> vars,
                                 const Mapping& mapping, int threads) {
  if (seed_bits < 0 || seed_bits > kMaxSeedBits) {
    throw std::invalid_argument("joint table seed space must be 0..28 bits");
  }
  if (vars.size() > 32) {
    throw std::invalid_argument("joint table supports at most 32 variables");
  }

  JointTable table;
  table.seed_bits_ = seed_bits;
  table.vars_ = std::move(vars);
  table.offsets_.reserve(table.vars_.size());
  int total_width = 0;
  for (const Var& v : table.vars_) {
    if (v.width < 0 || v.width > 32) {
      throw std::invalid_argument("variable width must be in [0, 32]: " +
                                  v.name);
    }
    table.offsets_.push_back(total_width);
    total_width += v.width;
  }
  if (total_width > 64) {
    throw std::invalid_argument("combined variable width exceeds 64 bits");
  }

  const std::uint64_t total = std::uint64_t{1} << seed_bits;
  const int workers = resolve_threads(threads);
  const std::size_t nvars = table.vars_.size();

  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> partial(
      static_cast<std::size_t>(std::max(workers, 1)));

  parallel_chunks(total, workers, [&](int w, std::uint64_t b, std::uint64_t e) {
    auto& local = partial[static_cast<std::size_t>(w)];
    std::vector<std::uint32_t> out(nvars, 0);
    for (std::uint64_t seed = b; seed < e; ++seed) {
      std::fill(out.begin(), out.end(), 0u);
      mapping(seed, std::span<std::uint32_t>(out));
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < nvars; ++i) {
        const int width = table.vars_[i].width;
        if ((out[i] & ~static_cast<std::uint32_t>(field_mask(width))) != 0) {
          throw std::invalid_argument("outcome for variable '" +
                                      table.vars_[i].name +
                                      "' exceeds its declared width");
        }
        key |= static_cast<std::uint64_t>(out[i]) << table.offsets_[i];
      }
      ++local[key];
    }
  });

  // Merge by integer addition: the result is the exact multiset of outcomes
  // regardless of how the seed range was chunked.
  std::unordered_map<std::uint64_t, std::uint64_t> merged;
  for (auto& m : partial) {
    for (const auto& [key, count] : m) merged[key] += count;
  }
  table.masses_.assign(merged.begin(), merged.end());
  std::sort(table.masses_.begin(), table.masses_.end());
  return table;
}

int JointTable::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return static_cast<int>(i);
  }
  throw std::out_of_range("unknown variable: " + std::string(name));
}

std::uint32_t JointTable::var_mask(std::span<const std::string> names) const {
  std::uint32_t mask = 0;
  for (const std::string& n : names) {
    mask |= (std::uint32_t{1} << var_index(n));
  }
  return mask;
}

double JointTable::entropy_mask(std::uint32_t var_set) const {
  const std::uint32_t all =
      vars_.size() >= 32 ? ~std::uint32_t{0}
                         : ((std::uint32_t{1} << vars_.size()) - 1u);
  var_set &= all;
  if (var_set == 0) return 0.0;

  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->values.find(var_set);
    if (it != cache_->values.end()) return it->second;
  }

  const double n_log = static_cast<double>(seed_bits_);
  double sum_c_log_c = 0.0;

  if (var_set == all) {
    // The stored masses are already grouped by full outcome.
    for (const auto& [key, count] : masses_) {
      (void)key;
      const double c = static_cast<double>(count);
      sum_c_log_c += c * std::log2(c);
    }
  } else {
    // Project each outcome onto the selected fields, then group equal
    // projections by sorting. Single-threaded and order-fixed, so the result
    // depends only on the table and the mask.
    std::vector<std::pair<int, int>> fields;  // (offset, width)
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if ((var_set >> i) & 1u) fields.emplace_back(offsets_[i], vars_[i].width);
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> projected;
    projected.reserve(masses_.size());
    for (const auto& [key, count] : masses_) {
      std::uint64_t proj = 0;
      int pos = 0;
      for (const auto& [off, width] : fields) {
        proj |= ((key >> off) & field_mask(width)) << pos;
        pos += width;
      }
      projected.emplace_back(proj, count);
    }
    std::sort(projected.begin(), projected.end());
    std::uint64_t run_count = 0;
    std::uint64_t run_key = 0;
    bool in_run = false;
    for (const auto& [proj, count] : projected) {
      if (in_run && proj == run_key) {
        run_count += count;
      } else {
        if (in_run) {
          const double c = static_cast<double>(run_count);
          sum_c_log_c += c * std::log2(c);
        }
        run_key = proj;
        run_count = count;
        in_run = true;
      }
    }
    if (in_run) {
      const double c = static_cast<double>(run_count);
      sum_c_log_c += c * std::log2(c);
    }
  }

  // H = log2(N) - (1/N) * sum_x c_x log2 c_x with N = 2^seed_bits.
  const double h =
      n_log - sum_c_log_c / static_cast<double>(total_mass());

  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->values.emplace(var_set, h);
  return h;
}

}  // namespace privsum
