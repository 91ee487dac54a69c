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

#ifndef PRIVSUM_BITVEC_HPP_
#define PRIVSUM_BITVEC_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace privsum {

// A fixed-length vector over F_2, at most 32 bits long. Position 0 is the
// least significant bit of the packed word, and string renderings list
// position 0 first. Zero-length vectors are legal; they behave as the unique
// element of F_2^0.
class BitVec {
 public:
  static constexpr int kMaxBits = 32;

  constexpr BitVec() = default;

  BitVec(int len, std::uint32_t bits) : len_(len), bits_(bits) {
    if (len < 0 || len > kMaxBits) {
      throw std::invalid_argument("BitVec length must be in [0, 32]");
    }
    if ((bits & ~mask(len)) != 0) {
      throw std::invalid_argument("BitVec value does not fit declared length");
    }
  }

  static BitVec zero(int len) { return BitVec(len, 0); }

  int size() const { return len_; }
  std::uint32_t value() const { return bits_; }
  bool empty() const { return len_ == 0; }

  int bit(int i) const {
    if (i < 0 || i >= len_) throw std::out_of_range("BitVec bit index");
    return static_cast<int>((bits_ >> i) & 1u);
  }

  BitVec operator^(const BitVec& other) const {
    if (len_ != other.len_) {
      throw std::invalid_argument("BitVec xor requires equal lengths");
    }
    return BitVec(len_, bits_ ^ other.bits_);
  }

  // Splits into (low, high): the first `prefix` positions and the rest.
  std::pair<BitVec, BitVec> split(int prefix) const {
    if (prefix < 0 || prefix > len_) {
      throw std::invalid_argument("BitVec split point out of range");
    }
    return {BitVec(prefix, bits_ & mask(prefix)),
            BitVec(len_ - prefix, bits_ >> prefix)};
  }

  // Concatenation places `low` in positions [0, low.size()).
  static BitVec concat(const BitVec& low, const BitVec& high) {
    if (low.len_ + high.len_ > kMaxBits) {
      throw std::invalid_argument("BitVec concat exceeds 32 bits");
    }
    return BitVec(low.len_ + high.len_,
                  low.bits_ | (high.bits_ << low.len_));
  }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(len_), '0');
    for (int i = 0; i < len_; ++i) {
      if ((bits_ >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
  }

  static BitVec from_string(std::string_view s) {
    if (s.size() > kMaxBits) {
      throw std::invalid_argument("BitVec string longer than 32 characters");
    }
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        bits |= (1u << i);
      } else if (s[i] != '0') {
        throw std::invalid_argument("BitVec string must contain only 0 and 1");
      }
    }
    return BitVec(static_cast<int>(s.size()), bits);
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;

  static constexpr std::uint32_t mask(int len) {
    return len >= kMaxBits ? ~std::uint32_t{0}
                           : ((std::uint32_t{1} << len) - 1u);
  }

 private:
  int len_ = 0;
  std::uint32_t bits_ = 0;
};

// XOR of a non-empty sequence of equal-length vectors.
inline BitVec xor_sum(std::span<const BitVec> vecs) {
  if (vecs.empty()) {
    throw std::invalid_argument("xor_sum of an empty sequence");
  }
  BitVec acc = vecs.front();
  for (std::size_t i = 1; i < vecs.size(); ++i) acc = acc ^ vecs[i];
  return acc;
}

}  // namespace privsum

#endif  // PRIVSUM_BITVEC_HPP_
