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

#include <cstdint>
#include <fstream>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "privsum/protocol.hpp"

namespace privsum {
namespace {

// Materialized truth tables shared by the instance's closures.
struct Tables {
  int L = 0;
  int n = 0;
  int u_bits = 0;
  std::vector<int> key_bits;
  std::vector<int> x_bits;
  std::vector<int> x_offsets;
  std::vector<std::vector<BitVec>> keys;          // [u] -> L keys
  std::vector<std::vector<BitVec>> enc;           // [l][(s << kb) | k] -> X_l
  std::vector<BitVec> dec;                        // [packed X] -> sigma
};

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("custom protocol: " + what);
}

int get_int(const nlohmann::json& doc, const char* field, int lo, int hi) {
  if (!doc.contains(field) || !doc[field].is_number_integer()) {
    fail(std::string("missing integer field '") + field + "'");
  }
  const int v = doc[field].get<int>();
  if (v < lo || v > hi) {
    fail(std::string("field '") + field + "' out of range");
  }
  return v;
}

BitVec parse_bits(const nlohmann::json& j, int want_width,
                  const char* where) {
  if (!j.is_string()) fail(std::string(where) + " entry is not a string");
  const std::string s = j.get<std::string>();
  if (static_cast<int>(s.size()) != want_width) {
    fail(std::string(where) + " entry has wrong width");
  }
  try {
    return BitVec::from_string(s);
  } catch (const std::exception&) {
    fail(std::string(where) + " entry is not a 0/1 string");
  }
}

std::vector<int> get_widths(const nlohmann::json& doc, const char* field,
                            int L) {
  if (!doc.contains(field) || !doc[field].is_array() ||
      static_cast<int>(doc[field].size()) != L) {
    fail(std::string("field '") + field + "' must be an array of L widths");
  }
  std::vector<int> out;
  for (const auto& j : doc[field]) {
    if (!j.is_number_integer()) fail(std::string(field) + " entries");
    const int w = j.get<int>();
    if (w < 0 || w > 32) fail(std::string(field) + " width out of range");
    out.push_back(w);
  }
  return out;
}

}  // namespace

ProtocolInstance load_custom(const nlohmann::json& doc,
                             const ProtocolConfig& config) {
  config.validate();
  auto t = std::make_shared<Tables>();
  t->L = get_int(doc, "L", 2, 8);
  t->n = get_int(doc, "n", 1, 32);
  if (t->L != config.L || t->n != config.n) {
    fail("document L/n disagree with the requested configuration");
  }
  t->u_bits = get_int(doc, "R_U_bits", 0, 24);
  t->key_bits = get_widths(doc, "key_bits", t->L);
  t->x_bits = get_widths(doc, "x_bits", t->L);

  int x_total = 0;
  for (int w : t->x_bits) {
    t->x_offsets.push_back(x_total);
    x_total += w;
  }
  if (x_total > 24) fail("combined message width too large to tabulate");

  // key_map: 2^{u_bits} entries, each an array of L bit strings.
  if (!doc.contains("key_map") || !doc["key_map"].is_array() ||
      doc["key_map"].size() != (std::size_t{1} << t->u_bits)) {
    fail("key_map must list all 2^R_U_bits entries");
  }
  for (const auto& row : doc["key_map"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != t->L) {
      fail("key_map row must list L keys");
    }
    std::vector<BitVec> keys;
    for (int l = 0; l < t->L; ++l) {
      keys.push_back(parse_bits(row[static_cast<std::size_t>(l)],
                                t->key_bits[static_cast<std::size_t>(l)],
                                "key_map"));
    }
    t->keys.push_back(std::move(keys));
  }

  // enc: per user, 2^{key_bits[l] + n} entries indexed by (s << kb) | k.
  if (!doc.contains("enc") || !doc["enc"].is_array() ||
      static_cast<int>(doc["enc"].size()) != t->L) {
    fail("enc must list one table per user");
  }
  for (int l = 0; l < t->L; ++l) {
    const auto& table = doc["enc"][static_cast<std::size_t>(l)];
    const int kb = t->key_bits[static_cast<std::size_t>(l)];
    if (kb + t->n > 24) fail("encoder table too large to tabulate");
    if (!table.is_array() ||
        table.size() != (std::size_t{1} << (kb + t->n))) {
      fail("enc table must list all 2^(key_bits+n) entries");
    }
    std::vector<BitVec> rows;
    for (const auto& j : table) {
      rows.push_back(
          parse_bits(j, t->x_bits[static_cast<std::size_t>(l)], "enc"));
    }
    t->enc.push_back(std::move(rows));
  }

  // dec: 2^{sum x_bits} entries indexed by the packed messages.
  if (!doc.contains("dec") || !doc["dec"].is_array() ||
      doc["dec"].size() != (std::size_t{1} << x_total)) {
    fail("dec must list all 2^(sum x_bits) entries");
  }
  for (const auto& j : doc["dec"]) {
    t->dec.push_back(parse_bits(j, t->n, "dec"));
  }

  ProtocolInstance inst;
  inst.config = config;
  inst.u_bits = t->u_bits;
  inst.key_bits = t->key_bits;
  inst.x_bits = t->x_bits;
  inst.custom = true;
  inst.key_map = [t](const BitVec& u) {
    return t->keys[static_cast<std::size_t>(u.value())];
  };
  inst.enc = [t](int l, const BitVec& key, const BitVec& s) {
    const std::size_t idx =
        (static_cast<std::size_t>(s.value())
         << t->key_bits[static_cast<std::size_t>(l)]) |
        key.value();
    return t->enc[static_cast<std::size_t>(l)][idx];
  };
  inst.dec = [t](std::span<const BitVec> x) {
    std::uint64_t idx = 0;
    for (int l = 0; l < t->L; ++l) {
      idx |= static_cast<std::uint64_t>(x[static_cast<std::size_t>(l)].value())
             << t->x_offsets[static_cast<std::size_t>(l)];
    }
    return t->dec[static_cast<std::size_t>(idx)];
  };
  return inst;
}

ProtocolInstance load_custom_file(const std::string& path,
                                  const ProtocolConfig& config) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open custom protocol file: " + path);
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("custom protocol JSON parse error: " +
                                std::string(e.what()));
  }
  return load_custom(doc, config);
}

}  // namespace privsum
