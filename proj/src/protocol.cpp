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

#include "privsum/protocol.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "privsum/parallel.hpp"
#include "privsum/secret_sharing.hpp"

namespace privsum {

void ProtocolConfig::validate() const {
  if (L < 2) throw std::invalid_argument("config needs at least 2 users");
  if (n < 1) throw std::invalid_argument("config needs n >= 1");
  if (n1 < 0 || n1 > n) {
    throw std::invalid_argument("config needs 0 <= n1 <= n");
  }
  if (T < 0 || T > L - 2) {
    throw std::invalid_argument("config needs 0 <= T <= L-2");
  }
}

RateTuple ProtocolInstance::rates() const {
  RateTuple r;
  const int n = config.n;
  for (int l = 0; l < config.L; ++l) {
    r.R_X.emplace_back(x_bits[static_cast<std::size_t>(l)], n);
    r.R_K.emplace_back(key_bits[static_cast<std::size_t>(l)], n);
    r.R_K_sum += r.R_K.back();
  }
  r.R_U = Rat(u_bits, n);
  return r;
}

ProtocolInstance build_achievability(const ProtocolConfig& config) {
  config.validate();
  const int L = config.L;
  const int n = config.n;
  const int n1 = config.n1;
  const int n2 = n - n1;

  ProtocolInstance inst;
  inst.config = config;
  inst.u_bits = (L - 1) * n2;
  inst.key_bits.assign(static_cast<std::size_t>(L), n2);
  inst.x_bits.assign(static_cast<std::size_t>(L), n);

  inst.key_map = [L, n2](const BitVec& u) {
    std::vector<BitVec> blocks;
    blocks.reserve(static_cast<std::size_t>(L - 1));
    for (int i = 0; i < L - 1; ++i) {
      blocks.push_back(u.split(i * n2).second.split(n2).first);
    }
    return additive_ramp(blocks);
  };
  inst.enc = [n1](int /*l*/, const BitVec& key, const BitVec& s) {
    auto [clear, padded] = s.split(n1);
    return BitVec::concat(clear, key ^ padded);
  };
  inst.dec = [](std::span<const BitVec> x) { return xor_sum(x); };
  return inst;
}

Transcript run(const ProtocolInstance& inst, std::span<const BitVec> S,
               const BitVec& U) {
  const int L = inst.config.L;
  if (static_cast<int>(S.size()) != L) {
    throw std::invalid_argument("run needs exactly L sequences");
  }
  for (const BitVec& s : S) {
    if (s.size() != inst.config.n) {
      throw std::invalid_argument("sequence length differs from n");
    }
  }
  if (U.size() != inst.u_bits) {
    throw std::invalid_argument("global randomness has wrong length");
  }

  Transcript t;
  t.K = inst.key_map(U);
  if (static_cast<int>(t.K.size()) != L) {
    throw std::invalid_argument("key_map produced wrong key count");
  }
  for (int l = 0; l < L; ++l) {
    if (t.K[static_cast<std::size_t>(l)].size() !=
        inst.key_bits[static_cast<std::size_t>(l)]) {
      throw std::invalid_argument("key has wrong declared width");
    }
  }
  t.X.reserve(static_cast<std::size_t>(L));
  for (int l = 0; l < L; ++l) {
    BitVec x = inst.enc(l, t.K[static_cast<std::size_t>(l)],
                        S[static_cast<std::size_t>(l)]);
    if (x.size() != inst.x_bits[static_cast<std::size_t>(l)]) {
      throw std::invalid_argument("message has wrong declared width");
    }
    t.X.push_back(std::move(x));
  }
  t.sigma_hat = inst.dec(t.X);
  if (t.sigma_hat.size() != inst.config.n) {
    throw std::invalid_argument("decoded sum has wrong length");
  }
  return t;
}

bool exhaustive_correctness(const ProtocolInstance& inst,
                            std::uint64_t* points, int threads) {
  inst.config.validate();
  const int L = inst.config.L;
  const int n = inst.config.n;
  const int seed_bits = L * n + inst.u_bits;
  if (seed_bits > JointTable::kMaxSeedBits) {
    throw BudgetExceeded(seed_bits, JointTable::kMaxSeedBits);
  }
  const std::uint64_t total = std::uint64_t{1} << seed_bits;
  if (points != nullptr) *points = total;

  std::vector<std::uint64_t> mismatches(
      static_cast<std::size_t>(resolve_threads(threads)), 0);
  parallel_chunks(
      total, resolve_threads(threads),
      [&](int w, std::uint64_t b, std::uint64_t e) {
        std::uint64_t bad = 0;
        std::vector<BitVec> S(static_cast<std::size_t>(L));
        for (std::uint64_t seed = b; seed < e; ++seed) {
          for (int l = 0; l < L; ++l) {
            S[static_cast<std::size_t>(l)] =
                BitVec(n, static_cast<std::uint32_t>((seed >> (l * n)) &
                                                     BitVec::mask(n)));
          }
          const BitVec U(inst.u_bits,
                         static_cast<std::uint32_t>(
                             (seed >> (L * n)) & BitVec::mask(inst.u_bits)));
          const Transcript t = run(inst, S, U);
          if (t.sigma_hat != xor_sum(std::span<const BitVec>(S))) ++bad;
        }
        mismatches[static_cast<std::size_t>(w)] = bad;
      });
  std::uint64_t bad = 0;
  for (std::uint64_t b : mismatches) bad += b;
  return bad == 0;
}

BudgetExceeded::BudgetExceeded(int needed, int budget)
    : std::runtime_error("enumeration needs " + std::to_string(needed) +
                         " seed bits, budget is " + std::to_string(budget)),
      needed_(needed),
      budget_(budget) {}

JointTable joint_law(const ProtocolInstance& inst, int budget_seed_bits,
                     int threads) {
  inst.config.validate();
  const int L = inst.config.L;
  const int n = inst.config.n;
  const int seed_bits = L * n + inst.u_bits;
  if (seed_bits > budget_seed_bits || seed_bits > JointTable::kMaxSeedBits) {
    throw BudgetExceeded(seed_bits,
                         std::min(budget_seed_bits, JointTable::kMaxSeedBits));
  }

  std::vector<Var> vars;
  vars.reserve(static_cast<std::size_t>(3 * L + 3));
  for (int l = 1; l <= L; ++l) vars.push_back({"S_" + std::to_string(l), n});
  vars.push_back({"U", inst.u_bits});
  for (int l = 1; l <= L; ++l) {
    vars.push_back({"K_" + std::to_string(l),
                    inst.key_bits[static_cast<std::size_t>(l - 1)]});
  }
  for (int l = 1; l <= L; ++l) {
    vars.push_back({"X_" + std::to_string(l),
                    inst.x_bits[static_cast<std::size_t>(l - 1)]});
  }
  // Both the true sum (which privacy conditions on) and the decoder output
  // (which correctness compares against it).
  vars.push_back({"Sigma", n});
  vars.push_back({"Sigma_hat", n});

  return JointTable::enumerate(
      seed_bits, std::move(vars),
      [&inst, L, n](std::uint64_t seed, std::span<std::uint32_t> out) {
        std::vector<BitVec> S;
        S.reserve(static_cast<std::size_t>(L));
        for (int l = 0; l < L; ++l) {
          S.emplace_back(n, static_cast<std::uint32_t>(
                                (seed >> (l * n)) & BitVec::mask(n)));
        }
        const BitVec U(inst.u_bits,
                       static_cast<std::uint32_t>((seed >> (L * n)) &
                                                  BitVec::mask(inst.u_bits)));
        const Transcript t = run(inst, S, U);
        std::size_t i = 0;
        for (int l = 0; l < L; ++l) {
          out[i++] = S[static_cast<std::size_t>(l)].value();
        }
        out[i++] = U.value();
        for (int l = 0; l < L; ++l) {
          out[i++] = t.K[static_cast<std::size_t>(l)].value();
        }
        for (int l = 0; l < L; ++l) {
          out[i++] = t.X[static_cast<std::size_t>(l)].value();
        }
        out[i++] = xor_sum(std::span<const BitVec>(S)).value();
        out[i++] = t.sigma_hat.value();
      },
      threads);
}

}  // namespace privsum
