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

#include "privsum/fixtures.hpp"

#include <cstdint>

#include "privsum/bitvec.hpp"

namespace privsum {
namespace {

std::string bits2(std::uint32_t v) { return BitVec(2, v & 3u).to_string(); }

// XOR decoder table for three 2-bit messages, X_1 in the low index bits.
nlohmann::ordered_json xor_dec_table() {
  auto dec = nlohmann::ordered_json::array();
  for (std::uint32_t idx = 0; idx < 64; ++idx) {
    dec.push_back(bits2((idx ^ (idx >> 2) ^ (idx >> 4)) & 3u));
  }
  return dec;
}

// Per-user encoder table X_l = K_l xor S_l with 2-bit keys.
nlohmann::ordered_json xor_enc_table() {
  auto enc = nlohmann::ordered_json::array();
  for (std::uint32_t idx = 0; idx < 16; ++idx) {
    const std::uint32_t s = idx >> 2;
    const std::uint32_t k = idx & 3u;
    enc.push_back(bits2(s ^ k));
  }
  return enc;
}

nlohmann::ordered_json plaintext_tables() {
  nlohmann::ordered_json doc;
  doc["L"] = 3;
  doc["n"] = 2;
  doc["R_U_bits"] = 0;
  doc["key_bits"] = {0, 0, 0};
  doc["x_bits"] = {2, 2, 2};
  doc["key_map"] = nlohmann::ordered_json::array();
  doc["key_map"].push_back({"", "", ""});
  doc["enc"] = nlohmann::ordered_json::array();
  for (int l = 0; l < 3; ++l) {
    auto enc = nlohmann::ordered_json::array();
    for (std::uint32_t s = 0; s < 4; ++s) enc.push_back(bits2(s));
    doc["enc"].push_back(std::move(enc));
  }
  doc["dec"] = xor_dec_table();
  return doc;
}

nlohmann::ordered_json key_reuse_tables() {
  nlohmann::ordered_json doc;
  doc["L"] = 3;
  doc["n"] = 2;
  doc["R_U_bits"] = 4;
  doc["key_bits"] = {2, 2, 2};
  doc["x_bits"] = {2, 2, 2};
  // Users 1 and 2 both take the first block as their pad; user 3 gets
  // nothing. Keys no longer cancel pairwise with fresh randomness, but the
  // duplicated pads cancel each other, so the sum still decodes.
  doc["key_map"] = nlohmann::ordered_json::array();
  for (std::uint32_t u = 0; u < 16; ++u) {
    const std::uint32_t n1_block = u & 3u;
    doc["key_map"].push_back({bits2(n1_block), bits2(n1_block), bits2(0)});
  }
  doc["enc"] = nlohmann::ordered_json::array();
  for (int l = 0; l < 3; ++l) doc["enc"].push_back(xor_enc_table());
  doc["dec"] = xor_dec_table();
  return doc;
}

nlohmann::ordered_json truncated_key_tables() {
  nlohmann::ordered_json doc;
  doc["L"] = 3;
  doc["n"] = 2;
  doc["R_U_bits"] = 2;
  doc["key_bits"] = {2, 2, 2};
  doc["x_bits"] = {2, 2, 2};
  // Keys are declared 2 bits wide but only bit 0 is ever random: the pads
  // cancel as required, yet bit 1 of every sequence travels in the clear.
  doc["key_map"] = nlohmann::ordered_json::array();
  for (std::uint32_t u = 0; u < 4; ++u) {
    const std::uint32_t b1 = u & 1u;
    const std::uint32_t b2 = (u >> 1) & 1u;
    doc["key_map"].push_back({bits2(b1), bits2(b2), bits2(b1 ^ b2)});
  }
  doc["enc"] = nlohmann::ordered_json::array();
  for (int l = 0; l < 3; ++l) doc["enc"].push_back(xor_enc_table());
  doc["dec"] = xor_dec_table();
  return doc;
}

}  // namespace

std::vector<Fixture> builtin_fixtures() {
  std::vector<Fixture> out;

  Fixture plaintext;
  plaintext.name = "plaintext";
  plaintext.designated = "privacy";
  plaintext.config = {3, 2, 1, 1};
  plaintext.tables = plaintext_tables();
  plaintext.expected_failures = {"encoder_leakage_sum",
                                 "joint_local_randomness",
                                 "privacy",
                                 "property3",
                                 "theorem1",
                                 "theorem2"};
  out.push_back(std::move(plaintext));

  Fixture key_reuse;
  key_reuse.name = "key_reuse";
  key_reuse.designated = "privacy";
  key_reuse.config = {3, 2, 0, 1};
  key_reuse.tables = key_reuse_tables();
  key_reuse.expected_failures = {"encoder_leakage_sum",
                                 "global_randomness_entropy",
                                 "joint_local_randomness",
                                 "privacy",
                                 "ramp"};
  out.push_back(std::move(key_reuse));

  Fixture truncated;
  truncated.name = "truncated_key";
  truncated.designated = "privacy";
  truncated.config = {3, 2, 0, 1};
  truncated.tables = truncated_key_tables();
  truncated.expected_failures = {"encoder_leakage_sum",
                                 "joint_local_randomness",
                                 "privacy",
                                 "property3",
                                 "theorem1"};
  out.push_back(std::move(truncated));

  return out;
}

}  // namespace privsum
