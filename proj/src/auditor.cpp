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

#include "privsum/auditor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <utility>

#include "privsum/parallel.hpp"
#include "privsum/secret_sharing.hpp"
#include "privsum/subsets.hpp"

namespace privsum {
namespace {

// Variable layout produced by joint_law: S_1..S_L, U, K_1..K_L, X_1..X_L,
// Sigma (true sum), Sigma_hat (decoder output).
struct Masks {
  int L;
  explicit Masks(int users) : L(users) {}

  std::uint32_t S(int l) const { return 1u << (l - 1); }
  std::uint32_t U() const { return 1u << L; }
  std::uint32_t K(int l) const { return 1u << (L + l); }
  std::uint32_t X(int l) const { return 1u << (2 * L + l); }
  std::uint32_t Sigma() const { return 1u << (3 * L + 1); }
  std::uint32_t SigmaHat() const { return 1u << (3 * L + 2); }

  std::uint32_t S_set(const std::vector<int>& T) const {
    std::uint32_t m = 0;
    for (int l : T) m |= S(l);
    return m;
  }
  std::uint32_t K_set(const std::vector<int>& T) const {
    std::uint32_t m = 0;
    for (int l : T) m |= K(l);
    return m;
  }
  std::uint32_t X_set(const std::vector<int>& T) const {
    std::uint32_t m = 0;
    for (int l : T) m |= X(l);
    return m;
  }
  std::uint32_t S_all() const {
    return (1u << L) - 1u;
  }
  std::uint32_t K_all() const {
    std::uint32_t m = 0;
    for (int l = 1; l <= L; ++l) m |= K(l);
    return m;
  }
  std::uint32_t X_all() const {
    std::uint32_t m = 0;
    for (int l = 1; l <= L; ++l) m |= X(l);
    return m;
  }
};

// Computes the marginal entropy of every listed variable set in parallel,
// so later serial passes hit the cache. Each value is a pure function of
// the table, so the warmup order is irrelevant.
void prewarm(const JointTable& joint, std::vector<std::uint32_t> masks,
             int threads) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  parallel_chunks(masks.size(), resolve_threads(threads),
                  [&](int, std::uint64_t b, std::uint64_t e) {
                    for (std::uint64_t i = b; i < e; ++i) {
                      joint.entropy_mask(masks[i]);
                    }
                  });
}

// Round through %.12g so serialized reports carry at most 12 significant
// digits and are byte-stable.
double q12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  double out = std::strtod(buf, nullptr);
  if (out == 0.0) out = 0.0;  // collapse negative zero
  return out;
}

nlohmann::ordered_json check_json(const Check& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["subset"] = c.subset;
  j["measured"] = q12(c.measured);
  j["required"] = q12(c.required);
  j["pass"] = c.pass;
  return j;
}

nlohmann::ordered_json rate_check_json(const RateCheck& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["applicable"] = true;
  j["measured"] = rat_str(c.measured);
  j["required"] = rat_str(c.required);
  j["pass"] = c.pass;
  return j;
}

// The chain sets of the per-size increment identity: with user l fixed,
// T_t is {1..t} while t < l and {1..t+1} minus {l} afterwards.
std::vector<int> increment_chain_set(int l, int t) {
  std::vector<int> T;
  if (t < l) {
    for (int i = 1; i <= t; ++i) T.push_back(i);
  } else {
    for (int i = 1; i <= t + 1; ++i) {
      if (i != l) T.push_back(i);
    }
  }
  return T;
}

}  // namespace

double leakage(const JointTable& joint, const std::vector<int>& T_set,
               int L) {
  const Masks m(L);
  const std::uint32_t cond = m.Sigma() | m.S_set(T_set) | m.K_set(T_set);
  return joint.mutual_info_mask(m.S_all(), m.X_all(), cond);
}

LeakageProfile profile(const JointTable& joint, int L, int threads) {
  const Masks m(L);
  LeakageProfile p;
  p.subsets = all_subsets(L);
  p.leak.assign(p.subsets.size(), 0.0);

  std::vector<std::uint32_t> warm;
  for (const auto& T : p.subsets) {
    const std::uint32_t cond = m.Sigma() | m.S_set(T) | m.K_set(T);
    warm.push_back(m.S_all() | cond);
    warm.push_back(cond);
    warm.push_back(m.S_all() | m.X_all() | cond);
    warm.push_back(m.X_all() | cond);
  }
  prewarm(joint, std::move(warm), threads);

  for (std::size_t i = 0; i < p.subsets.size(); ++i) {
    p.leak[i] = leakage(joint, p.subsets[i], L);
  }

  // Per-size maxima and the same-size constancy test.
  p.C.assign(static_cast<std::size_t>(L) + 1, 0.0);
  std::vector<bool> seen(static_cast<std::size_t>(L) + 1, false);
  std::vector<double> first(static_cast<std::size_t>(L) + 1, 0.0);
  bool constant_per_size = true;
  for (std::size_t i = 0; i < p.subsets.size(); ++i) {
    const std::size_t size = p.subsets[i].size();
    if (!seen[size]) {
      seen[size] = true;
      first[size] = p.leak[i];
      p.C[size] = p.leak[i];
    } else {
      if (std::abs(p.leak[i] - first[size]) > kTolBits) {
        constant_per_size = false;
      }
      p.C[size] = std::max(p.C[size], p.leak[i]);
    }
  }

  // The symmetry axiom additionally demands one common decrement across
  // sizes 0..L-2 (the size L-1 to L step is excluded: both are zero).
  p.delta = p.C[0] - p.C[1];
  bool equal_decrements = true;
  for (int l = 0; l + 1 <= L - 1; ++l) {
    const double d = p.C[static_cast<std::size_t>(l)] -
                     p.C[static_cast<std::size_t>(l) + 1];
    if (std::abs(d - p.delta) > kTolBits) equal_decrements = false;
  }
  p.symmetric = constant_per_size && equal_decrements;
  return p;
}

PrivacyVerdict check_privacy(const LeakageProfile& profile,
                             const ProtocolConfig& config) {
  PrivacyVerdict v;
  v.required =
      to_double(Rat(config.n, 1) * config.alpha() * Rat(config.L - 1, 1));
  bool found = false;
  for (std::size_t i = 0; i < profile.subsets.size(); ++i) {
    if (static_cast<int>(profile.subsets[i].size()) > config.T) continue;
    if (!found || profile.leak[i] > v.measured) {
      found = true;
      v.measured = profile.leak[i];
      v.witness_subset = subset_str(profile.subsets[i]);
    }
  }
  v.pass = v.measured <= v.required + kTolBits;
  return v;
}

std::vector<RateCheck> check_theorem1(const RateTuple& rates, const Rat& alpha,
                                      int L) {
  const Rat one(1);
  Rat min_rx = rates.R_X.empty() ? Rat(0) : rates.R_X.front();
  for (const Rat& r : rates.R_X) min_rx = std::min(min_rx, r);

  std::vector<RateCheck> out;
  out.push_back({"R_X_min", min_rx, one, min_rx >= one});
  const Rat key_req = (one - alpha) * Rat(L, 1);
  out.push_back(
      {"R_K_sum", rates.R_K_sum, key_req, rates.R_K_sum >= key_req});
  const Rat u_req = (one - alpha) * Rat(L - 1, 1);
  out.push_back({"R_U", rates.R_U, u_req, rates.R_U >= u_req});
  return out;
}

std::vector<RateCheck> check_theorem2(const RateTuple& rates, const Rat& alpha,
                                      const LeakageProfile& profile) {
  std::vector<RateCheck> out;
  if (!profile.symmetric) return out;
  const Rat req = Rat(1) - alpha;
  for (std::size_t l = 0; l < rates.R_K.size(); ++l) {
    out.push_back({"R_K[" + std::to_string(l + 1) + "]", rates.R_K[l], req,
                   rates.R_K[l] >= req});
  }
  return out;
}

bool rates_optimal(const RateTuple& rates, const Rat& alpha, int L) {
  const Rat one(1);
  for (const Rat& r : rates.R_X) {
    if (r != one) return false;
  }
  for (const Rat& r : rates.R_K) {
    if (r != one - alpha) return false;
  }
  return rates.R_U == (one - alpha) * Rat(L - 1, 1);
}

std::vector<Check> identity_suite(const JointTable& joint,
                                  const ProtocolConfig& config,
                                  const LeakageProfile& profile, bool optimal,
                                  int threads) {
  const int L = config.L;
  const int n = config.n;
  const int n1 = config.n1;
  const Masks m(L);
  const auto& subsets = profile.subsets;

  std::vector<std::uint32_t> warm;
  for (const auto& T : subsets) {
    const std::uint32_t kt = m.K_set(T);
    const std::uint32_t st = m.S_set(T);
    warm.push_back(m.X_all() | kt | st);
    warm.push_back(m.S_all() | m.X_all() | kt);  // adds S_{T^c} to the above
    warm.push_back(m.X_set(T));
    warm.push_back(kt);
    if (optimal) warm.push_back(m.U() | kt);
  }
  for (int l = 1; l <= L; ++l) {
    warm.push_back(m.S(l));
    warm.push_back(m.X(l));
    warm.push_back(m.S(l) | m.X(l));
  }
  if (profile.symmetric) {
    for (int l = 1; l <= L; ++l) {
      for (int t = 0; t <= L - 1; ++t) {
        const auto T = increment_chain_set(l, t);
        const std::uint32_t base = m.K_set(T) | m.S_set(T) | m.X_all();
        warm.push_back(base);
        warm.push_back(base | m.K(l) | m.S(l));
        warm.push_back(m.K_set(T) | m.S_all() | m.X_all());
        warm.push_back(m.K_set(T) | m.S_all() | m.X_all() | m.K(l));
      }
    }
  }
  prewarm(joint, std::move(warm), threads);

  std::vector<Check> checks;

  // Leakage decomposition: for every colluding set, the leakage equals the
  // seed budget left after the colluders' own data, minus the residual
  // uncertainty about the honest sequences given the full transcript.
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const auto& T = subsets[i];
    const std::uint32_t known = m.X_all() | m.K_set(T) | m.S_set(T);
    const int tsize = static_cast<int>(T.size());
    const double residual = joint.cond_entropy_mask(
        m.S_set(subset_complement(T, L)), known);
    const double required =
        static_cast<double>(n * (L - tsize - (tsize != L ? 1 : 0))) -
        residual;
    const double measured = profile.leak[i];
    checks.push_back({"leakage_decomposition", subset_str(T), measured,
                      required, std::abs(measured - required) <= kTolBits});
  }

  // Per-size increment identity, following the fixed chain sets. Only
  // meaningful when the per-size constants exist, i.e. under symmetry.
  if (profile.symmetric) {
    for (int l = 1; l <= L; ++l) {
      for (int t = 0; t <= L - 1; ++t) {
        const auto T = increment_chain_set(l, t);
        const std::uint32_t kt_st = m.K_set(T) | m.S_set(T);
        const double lhs = profile.C[static_cast<std::size_t>(t) + 1] -
                           profile.C[static_cast<std::size_t>(t)];
        const double rhs =
            joint.cond_entropy_mask(m.K(l) | m.S(l), kt_st | m.X_all()) -
            joint.cond_entropy_mask(m.K(l),
                                    m.K_set(T) | m.S_all() | m.X_all()) -
            static_cast<double>(t != L - 1 ? n : 0);
        checks.push_back({"leakage_increment(l=" + std::to_string(l) + ")",
                          subset_str(T), lhs, rhs,
                          std::abs(lhs - rhs) <= kTolBits});
      }
    }
  }

  // Total information each encoder output reveals about its own sequence.
  {
    double sum = 0.0;
    for (int l = 1; l <= L; ++l) {
      sum += joint.mutual_info_mask(m.S(l), m.X(l));
    }
    const double required = to_double(config.alpha() * Rat(n * L, 1));
    checks.push_back({"encoder_leakage_sum", "", sum, required,
                      sum <= required + kTolBits});
  }

  // Minimum joint communication from any set of users.
  for (const auto& T : subsets) {
    const double measured = joint.entropy_mask(m.X_set(T));
    const double required = static_cast<double>(n * T.size());
    checks.push_back({"joint_communication", subset_str(T), measured,
                      required, measured >= required - kTolBits});
  }

  // Minimum joint local randomness at any set of users.
  for (const auto& T : subsets) {
    const int tsize = static_cast<int>(T.size());
    const double measured = joint.entropy_mask(m.K_set(T));
    const double required =
        static_cast<double>((tsize - (tsize == L ? 1 : 0)) * (n - n1));
    checks.push_back({"joint_local_randomness", subset_str(T), measured,
                      required, measured >= required - kTolBits});
  }

  // Residual entropy of the global randomness given colluders' keys; an
  // exact equality on rate-optimal instances.
  if (optimal) {
    for (const auto& T : subsets) {
      const int tsize = static_cast<int>(T.size());
      if (tsize == L) continue;
      const double measured = joint.cond_entropy_mask(m.U(), m.K_set(T));
      const double required =
          static_cast<double>((L - tsize - 1) * (n - n1));
      checks.push_back({"global_randomness_entropy", subset_str(T), measured,
                        required,
                        std::abs(measured - required) <= kTolBits});
    }
  }

  return checks;
}

RampVerdict ramp_necessity(const ProtocolInstance& inst,
                           const JointTable& joint, bool optimal,
                           int threads) {
  RampVerdict v;
  v.applicable = optimal;
  if (!optimal) return v;

  const int L = inst.config.L;
  const Masks m(L);
  const double h_u = joint.entropy_mask(m.U());
  if (h_u <= kTolBits) {
    v.vacuous = true;
    return v;
  }

  const auto subsets = all_subsets(L);
  std::vector<std::uint32_t> warm;
  for (const auto& T : subsets) {
    warm.push_back(m.K_set(T));
    warm.push_back(m.U() | m.K_set(T));
  }
  prewarm(joint, std::move(warm), threads);

  v.profile.assign(static_cast<std::size_t>(L) + 1, 0.0);
  std::vector<bool> seen(static_cast<std::size_t>(L) + 1, false);
  bool ok = true;
  for (const auto& T : subsets) {
    const double ratio =
        joint.mutual_info_mask(m.U(), m.K_set(T)) / h_u;
    const std::size_t size = T.size();
    const double want =
        size >= static_cast<std::size_t>(L - 1)
            ? 1.0
            : static_cast<double>(size) / static_cast<double>(L - 1);
    if (std::abs(ratio - want) > kTolBits) ok = false;
    if (!seen[size]) {
      seen[size] = true;
      v.profile[size] = ratio;
    } else {
      v.profile[size] = std::max(v.profile[size], ratio);
    }
  }

  // Same question asked through the secret-sharing auditor: treat the keys
  // as shares of the secret U and demand the linear ramp shape.
  ShareScheme scheme;
  scheme.L = L;
  scheme.n_s = inst.u_bits;
  scheme.n_r = 0;
  scheme.share_widths = inst.key_bits;
  scheme.share_map = [&inst](const BitVec& secret, const BitVec&) {
    return inst.key_map(secret);
  };
  const LeakageProfileSS ss = leakage_profile(scheme, threads);
  bool cross_ok = check_ramp(ss, L - 1, L - 1);
  for (int l = 0; l <= L; ++l) {
    if (std::abs(ss.C[static_cast<std::size_t>(l)] -
                 v.profile[static_cast<std::size_t>(l)]) > kTolBits) {
      cross_ok = false;
    }
  }

  v.pass = ok && cross_ok;
  return v;
}

AuditReport audit(const ProtocolInstance& inst, const AuditOptions& options) {
  AuditReport r;
  r.config = inst.config;
  r.custom = inst.custom;
  r.rates = inst.rates();
  r.optimal = rates_optimal(r.rates, inst.config.alpha(), inst.config.L);

  const JointTable joint =
      joint_law(inst, options.budget_seed_bits, options.threads);
  r.seed_bits = joint.seed_bits();

  // Correctness: the decoded sum agrees with the true sum on every seed.
  // Each stored outcome row covers at least one seed, so row equality of
  // the two sum fields is exactly per-seed equality.
  const Masks m(inst.config.L);
  const int sigma_idx = 3 * inst.config.L + 1;
  const int sigma_hat_idx = sigma_idx + 1;
  const int sigma_off = joint.offsets()[static_cast<std::size_t>(sigma_idx)];
  const int sigma_hat_off =
      joint.offsets()[static_cast<std::size_t>(sigma_hat_idx)];
  const std::uint64_t nmask = BitVec::mask(inst.config.n);
  r.correctness_pass = true;
  for (const auto& [key, count] : joint.masses()) {
    (void)count;
    if (((key >> sigma_off) & nmask) != ((key >> sigma_hat_off) & nmask)) {
      r.correctness_pass = false;
      break;
    }
  }
  r.points = joint.total_mass();

  r.profile = profile(joint, inst.config.L, options.threads);

  // Forced boundary values: collusion sets of size L-1 or L leak nothing,
  // since the colluders plus the sum already determine every sequence.
  {
    const double tail =
        std::max(std::abs(r.profile.C[static_cast<std::size_t>(
                     inst.config.L - 1)]),
                 std::abs(r.profile.C[static_cast<std::size_t>(
                     inst.config.L)]));
    r.properties.push_back(
        {"leakage_tail_zero", "", tail, 0.0, tail <= kTolBits});
  }
  if (r.profile.symmetric) {
    const int L = inst.config.L;
    double min_step = r.profile.C[0] - r.profile.C[1];
    for (int l = 0; l <= L - 1; ++l) {
      min_step = std::min(min_step,
                          r.profile.C[static_cast<std::size_t>(l)] -
                              r.profile.C[static_cast<std::size_t>(l) + 1]);
    }
    r.properties.push_back(
        {"property2", "", min_step, 0.0, min_step >= -kTolBits});
    const double n_alpha =
        to_double(inst.config.alpha() * Rat(inst.config.n, 1));
    r.properties.push_back({"property3(delta)", "", r.profile.delta, n_alpha,
                            r.profile.delta <= n_alpha + kTolBits});
    const double c0_bound = n_alpha * static_cast<double>(L - 1);
    r.properties.push_back({"property3(C_0)", "", r.profile.C[0], c0_bound,
                            r.profile.C[0] <= c0_bound + kTolBits});
  }

  r.privacy = check_privacy(r.profile, inst.config);
  r.theorem1 = check_theorem1(r.rates, inst.config.alpha(), inst.config.L);
  r.theorem2_applicable = r.profile.symmetric;
  r.theorem2 = check_theorem2(r.rates, inst.config.alpha(), r.profile);
  r.identities = identity_suite(joint, inst.config, r.profile, r.optimal,
                                options.threads);
  r.ramp = ramp_necessity(inst, joint, r.optimal, options.threads);
  return r;
}

bool AuditReport::all_pass() const { return failed_families().empty(); }

std::vector<std::string> AuditReport::failed_families() const {
  std::set<std::string> fams;
  if (!correctness_pass) fams.insert("correctness");
  for (const Check& c : properties) {
    if (!c.pass) fams.insert(c.family());
  }
  if (!privacy.pass) fams.insert("privacy");
  for (const RateCheck& c : theorem1) {
    if (!c.pass) fams.insert("theorem1");
  }
  if (theorem2_applicable) {
    for (const RateCheck& c : theorem2) {
      if (!c.pass) fams.insert("theorem2");
    }
  }
  for (const Check& c : identities) {
    if (!c.pass) fams.insert(c.family());
  }
  if (ramp.applicable && !ramp.vacuous && !ramp.pass) fams.insert("ramp");
  return {fams.begin(), fams.end()};
}

nlohmann::ordered_json AuditReport::to_json() const {
  nlohmann::ordered_json j;

  nlohmann::ordered_json cfg;
  cfg["L"] = config.L;
  cfg["n"] = config.n;
  cfg["n1"] = config.n1;
  cfg["T"] = config.T;
  cfg["alpha_num"] = config.alpha().numerator();
  cfg["alpha_den"] = config.alpha().denominator();
  cfg["custom"] = custom;
  cfg["seed_bits"] = seed_bits;
  nlohmann::ordered_json jr;
  jr["R_X"] = nlohmann::ordered_json::array();
  for (const Rat& r : rates.R_X) jr["R_X"].push_back(rat_str(r));
  jr["R_K"] = nlohmann::ordered_json::array();
  for (const Rat& r : rates.R_K) jr["R_K"].push_back(rat_str(r));
  jr["R_K_sum"] = rat_str(rates.R_K_sum);
  jr["R_U"] = rat_str(rates.R_U);
  cfg["rates"] = std::move(jr);
  cfg["optimal"] = optimal;
  j["config"] = std::move(cfg);

  j["correctness"] = {{"pass", correctness_pass}, {"points", points}};

  nlohmann::ordered_json leaks;
  for (std::size_t i = 0; i < profile.subsets.size(); ++i) {
    leaks[subset_str(profile.subsets[i])] = q12(profile.leak[i]);
  }
  j["leakage_per_subset"] = std::move(leaks);

  nlohmann::ordered_json prof;
  prof["C"] = nlohmann::ordered_json::array();
  for (double c : profile.C) prof["C"].push_back(q12(c));
  if (profile.symmetric) {
    prof["delta"] = q12(profile.delta);
  } else {
    prof["delta"] = nullptr;
  }
  prof["symmetric"] = profile.symmetric;
  j["profile"] = std::move(prof);

  j["properties"] = nlohmann::ordered_json::array();
  for (const Check& c : properties) j["properties"].push_back(check_json(c));

  j["privacy"] = {{"measured", q12(privacy.measured)},
                  {"required", q12(privacy.required)},
                  {"pass", privacy.pass},
                  {"witness_subset", privacy.witness_subset}};

  j["theorem1"] = nlohmann::ordered_json::array();
  for (const RateCheck& c : theorem1) {
    j["theorem1"].push_back(rate_check_json(c));
  }

  j["theorem2"] = nlohmann::ordered_json::array();
  if (theorem2_applicable) {
    for (const RateCheck& c : theorem2) {
      j["theorem2"].push_back(rate_check_json(c));
    }
  } else {
    for (std::size_t l = 0; l < rates.R_K.size(); ++l) {
      nlohmann::ordered_json e;
      e["name"] = "R_K[" + std::to_string(l + 1) + "]";
      e["applicable"] = false;
      j["theorem2"].push_back(std::move(e));
    }
  }

  j["identities"] = nlohmann::ordered_json::array();
  for (const Check& c : identities) j["identities"].push_back(check_json(c));

  nlohmann::ordered_json rj;
  rj["applicable"] = ramp.applicable;
  rj["vacuous"] = ramp.vacuous;
  rj["profile"] = nlohmann::ordered_json::array();
  for (double c : ramp.profile) rj["profile"].push_back(q12(c));
  rj["pass"] = ramp.pass;
  j["ramp"] = std::move(rj);

  return j;
}

}  // namespace privsum
