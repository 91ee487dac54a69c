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

#include "privsum/bitvec.hpp"

#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

namespace privsum {
namespace {

TEST(BitVec, ConstructAndBits) {
  const BitVec v(4, 0b1101);
  EXPECT_EQ(v.size(), 4);
  EXPECT_EQ(v.value(), 0b1101u);
  EXPECT_EQ(v.bit(0), 1);
  EXPECT_EQ(v.bit(1), 0);
  EXPECT_EQ(v.bit(2), 1);
  EXPECT_EQ(v.bit(3), 1);
}

TEST(BitVec, ZeroLengthIsAllowed) {
  const BitVec v = BitVec::zero(0);
  EXPECT_EQ(v.size(), 0);
  EXPECT_EQ(v.value(), 0u);
  EXPECT_EQ(v.to_string(), "");
}

TEST(BitVec, ConstructorRejectsBadArguments) {
  EXPECT_THROW(BitVec(33, 0), std::invalid_argument);
  EXPECT_THROW(BitVec(-1, 0), std::invalid_argument);
  EXPECT_THROW(BitVec(2, 0b100), std::invalid_argument);
  EXPECT_THROW(BitVec(0, 1), std::invalid_argument);
}

TEST(BitVec, BitIndexOutOfRangeThrows) {
  const BitVec v(3, 0b101);
  EXPECT_THROW(v.bit(3), std::out_of_range);
  EXPECT_THROW(v.bit(-1), std::out_of_range);
}

TEST(BitVec, XorMatchesWorkedValues) {
  // 101 xor 011 = 110 as integer values.
  const BitVec a(3, 0b101);
  const BitVec b(3, 0b011);
  EXPECT_EQ(a ^ b, BitVec(3, 0b110));
}

TEST(BitVec, XorProperties) {
  for (std::uint32_t x = 0; x < 8; ++x) {
    const BitVec v(3, x);
    EXPECT_EQ(v ^ v, BitVec::zero(3));
    EXPECT_EQ(v ^ BitVec::zero(3), v);
    for (std::uint32_t y = 0; y < 8; ++y) {
      const BitVec w(3, y);
      EXPECT_EQ(v ^ w, w ^ v);
    }
  }
}

TEST(BitVec, XorLengthMismatchThrows) {
  EXPECT_THROW(BitVec(3, 1) ^ BitVec(2, 1), std::invalid_argument);
}

TEST(BitVec, XorSumMatchesWorkedValues) {
  const std::vector<BitVec> vs = {BitVec(2, 0b10), BitVec(2, 0b01),
                                  BitVec(2, 0b11)};
  EXPECT_EQ(xor_sum(vs), BitVec::zero(2));

  const std::vector<BitVec> single = {BitVec(4, 0b1011)};
  EXPECT_EQ(xor_sum(single), BitVec(4, 0b1011));
}

TEST(BitVec, XorSumIsOrderInvariant) {
  const std::vector<BitVec> a = {BitVec(3, 5), BitVec(3, 3), BitVec(3, 6)};
  const std::vector<BitVec> b = {BitVec(3, 6), BitVec(3, 5), BitVec(3, 3)};
  EXPECT_EQ(xor_sum(a), xor_sum(b));
}

TEST(BitVec, XorSumEmptyThrows) {
  EXPECT_THROW(xor_sum(std::vector<BitVec>{}), std::invalid_argument);
}

TEST(BitVec, SplitMatchesWorkedValues) {
  // Bit sequence 1,1,0,1 split after two bits gives 1,1 and 0,1.
  const BitVec v = BitVec::from_string("1101");
  const auto [lo, hi] = v.split(2);
  EXPECT_EQ(lo, BitVec::from_string("11"));
  EXPECT_EQ(hi, BitVec::from_string("01"));
}

TEST(BitVec, SplitEdgeCases) {
  const BitVec v(4, 0b1101);
  const auto [lo0, hi0] = v.split(0);
  EXPECT_EQ(lo0, BitVec::zero(0));
  EXPECT_EQ(hi0, v);
  const auto [lo4, hi4] = v.split(4);
  EXPECT_EQ(lo4, v);
  EXPECT_EQ(hi4, BitVec::zero(0));
  EXPECT_THROW(v.split(5), std::invalid_argument);
  EXPECT_THROW(v.split(-1), std::invalid_argument);
}

TEST(BitVec, ConcatMatchesWorkedValues) {
  // Concatenating the one-bit sequences 1 and 0 gives the sequence 1,0.
  const BitVec joined = BitVec::concat(BitVec(1, 1), BitVec(1, 0));
  EXPECT_EQ(joined.size(), 2);
  EXPECT_EQ(joined.to_string(), "10");
  EXPECT_EQ(joined.value(), 0b01u);
}

TEST(BitVec, ConcatWithEmpty) {
  const BitVec v(3, 0b101);
  EXPECT_EQ(BitVec::concat(BitVec::zero(0), v), v);
  EXPECT_EQ(BitVec::concat(v, BitVec::zero(0)), v);
}

TEST(BitVec, ConcatInvertsSplit) {
  for (std::uint32_t x = 0; x < 16; ++x) {
    const BitVec v(4, x);
    for (int k = 0; k <= 4; ++k) {
      const auto [lo, hi] = v.split(k);
      EXPECT_EQ(BitVec::concat(lo, hi), v);
    }
  }
}

TEST(BitVec, ConcatLengthOverflowThrows) {
  EXPECT_THROW(BitVec::concat(BitVec(20, 0), BitVec(13, 0)), std::invalid_argument);
}

TEST(BitVec, StringRoundTrip) {
  for (std::uint32_t x = 0; x < 32; ++x) {
    const BitVec v(5, x);
    EXPECT_EQ(BitVec::from_string(v.to_string()), v);
  }
  EXPECT_EQ(BitVec::from_string(""), BitVec::zero(0));
  // First character is bit 0.
  EXPECT_EQ(BitVec::from_string("100"), BitVec(3, 0b001));
}

TEST(BitVec, FromStringRejectsBadInput) {
  EXPECT_THROW(BitVec::from_string("10x"), std::invalid_argument);
  EXPECT_THROW(BitVec::from_string("102"), std::invalid_argument);
  EXPECT_THROW(BitVec::from_string(std::string(33, '0')),
               std::invalid_argument);
}

TEST(BitVec, Mask) {
  EXPECT_EQ(BitVec::mask(0), 0u);
  EXPECT_EQ(BitVec::mask(3), 0b111u);
  EXPECT_EQ(BitVec::mask(32), 0xffffffffu);
}

}  // namespace
}  // namespace privsum
