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

#include "privsum/sweep.hpp"

#include <stdexcept>
#include <string>

#include "gtest/gtest.h"

namespace privsum {
namespace {

TEST(ExpandSweep, DefaultsFillClearLengthsAndCollusionBound) {
  const auto grid = expand_sweep({{3}, {2}, {}, {}});
  ASSERT_EQ(grid.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(grid[i].L, 3);
    EXPECT_EQ(grid[i].n, 2);
    EXPECT_EQ(grid[i].n1, i);
    EXPECT_EQ(grid[i].T, 1);
  }
}

TEST(ExpandSweep, RowOrderIsLThenNThenN1ThenT) {
  const auto grid = expand_sweep({{2, 3}, {1, 2}, {0}, {0}});
  ASSERT_EQ(grid.size(), 4u);
  EXPECT_EQ(grid[0].L, 2);
  EXPECT_EQ(grid[0].n, 1);
  EXPECT_EQ(grid[1].n, 2);
  EXPECT_EQ(grid[2].L, 3);
  EXPECT_EQ(grid[3].n, 2);
}

TEST(ExpandSweep, RejectsBadGrids) {
  EXPECT_THROW(expand_sweep({{}, {2}, {}, {}}), std::invalid_argument);
  EXPECT_THROW(expand_sweep({{3}, {}, {}, {}}), std::invalid_argument);
  EXPECT_THROW(expand_sweep({{3}, {2}, {3}, {}}), std::invalid_argument);
  EXPECT_THROW(expand_sweep({{3}, {2}, {}, {2}}), std::invalid_argument);
  EXPECT_THROW(expand_sweep({{1}, {2}, {}, {}}), std::invalid_argument);
}

TEST(RunSweep, PinnedCsvForATwoUserGrid) {
  const auto grid = expand_sweep({{2}, {2}, {}, {}});
  const auto result = run_sweep(grid, AuditOptions{});
  const std::string expected =
      std::string(kSweepCsvHeader) + "\n" +
      "2,2,0,0,0,1,1,1,2,1,0,0,1,1,1,1,1,1\n" +
      "2,2,1,0,1,2,1,1/2,1,1/2,1,1,1,1,1,1,1,1\n" +
      "2,2,2,0,1,1,1,0,0,0,2,2,1,1,1,1,1,na\n";
  EXPECT_EQ(result.csv, expected);
  EXPECT_TRUE(result.all_pass);
}

TEST(RunSweep, ByteIdenticalAcrossThreadCounts) {
  const auto grid = expand_sweep({{3}, {1, 2}, {}, {}});
  AuditOptions one;
  one.threads = 1;
  AuditOptions four;
  four.threads = 4;
  EXPECT_EQ(run_sweep(grid, one).csv, run_sweep(grid, four).csv);
}

}  // namespace
}  // namespace privsum
