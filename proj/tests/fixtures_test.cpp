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

#include <algorithm>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "privsum/auditor.hpp"

namespace privsum {
namespace {

constexpr double kTol = kTolBits;

TEST(Fixtures, SuiteShape) {
  const auto fixtures = builtin_fixtures();
  ASSERT_EQ(fixtures.size(), 3u);
  EXPECT_EQ(fixtures[0].name, "plaintext");
  EXPECT_EQ(fixtures[1].name, "key_reuse");
  EXPECT_EQ(fixtures[2].name, "truncated_key");
  for (const auto& f : fixtures) {
    EXPECT_EQ(f.designated, "privacy");
    EXPECT_TRUE(std::is_sorted(f.expected_failures.begin(),
                               f.expected_failures.end()))
        << f.name;
    EXPECT_NO_THROW(f.config.validate()) << f.name;
  }
}

TEST(Fixtures, EveryFixtureDecodesCorrectly) {
  for (const auto& f : builtin_fixtures()) {
    const auto inst = load_custom(f.tables, f.config);
    EXPECT_TRUE(exhaustive_correctness(inst)) << f.name;
  }
}

TEST(Fixtures, FailuresMatchTheContractExactly) {
  for (const auto& f : builtin_fixtures()) {
    const auto report = audit(load_custom(f.tables, f.config), AuditOptions{});
    const auto failed = report.failed_families();
    EXPECT_EQ(failed, f.expected_failures) << f.name;
    EXPECT_NE(std::find(failed.begin(), failed.end(), f.designated),
              failed.end())
        << f.name << ": designated check did not fail";
  }
}

TEST(Fixtures, PlaintextLeaksEverythingButTheSum) {
  const auto fixtures = builtin_fixtures();
  const auto& f = fixtures.front();
  const auto report = audit(load_custom(f.tables, f.config), AuditOptions{});
  // Messages equal sequences: colluders learn all but what the sum implies,
  // n(L-1) bits.
  ASSERT_EQ(report.profile.C.size(), 4u);
  EXPECT_NEAR(report.profile.C[0], 4.0, kTol);
  EXPECT_NEAR(report.profile.C[1], 2.0, kTol);
  EXPECT_NEAR(report.profile.C[2], 0.0, kTol);
  EXPECT_TRUE(report.profile.symmetric);
  EXPECT_NEAR(report.profile.delta, 2.0, kTol);
}

TEST(Fixtures, TruncatedKeyIsSymmetricButNotOptimal) {
  const auto fixtures = builtin_fixtures();
  const auto& f = fixtures[2];
  const auto report = audit(load_custom(f.tables, f.config), AuditOptions{});
  EXPECT_TRUE(report.profile.symmetric);
  EXPECT_FALSE(report.optimal);
  EXPECT_FALSE(report.ramp.applicable);
}

}  // namespace
}  // namespace privsum
