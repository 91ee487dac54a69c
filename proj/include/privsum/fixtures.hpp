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

#ifndef PRIVSUM_FIXTURES_HPP_
#define PRIVSUM_FIXTURES_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "privsum/protocol.hpp"

namespace privsum {

// A deliberately broken protocol shipped for sensitivity testing: auditing
// it must fail its designated check, and the full set of failing check
// families must match `expected_failures` exactly.
struct Fixture {
  std::string name;
  std::string designated;
  ProtocolConfig config;
  nlohmann::ordered_json tables;
  std::vector<std::string> expected_failures;  // sorted family names
};

// The shipped suite: a plaintext protocol (messages are the raw sequences),
// a key-reuse protocol (two users share one pad and the third has none),
// and a truncated-key protocol (declared key width padded with a dead bit).
// All three decode the sum correctly; each leaks.
std::vector<Fixture> builtin_fixtures();

}  // namespace privsum

#endif  // PRIVSUM_FIXTURES_HPP_
