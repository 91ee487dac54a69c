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

#ifndef PRIVSUM_RATIONAL_HPP_
#define PRIVSUM_RATIONAL_HPP_

#include <boost/rational.hpp>
#include <string>

namespace privsum {

// Exact rational arithmetic for rates. All rate comparisons in the auditor
// are exact; doubles appear only in entropy measurements.
using Rat = boost::rational<long long>;

inline double to_double(const Rat& r) {
  return boost::rational_cast<double>(r);
}

// "3/2" for non-integers, "2" for integers.
inline std::string rat_str(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace privsum

#endif  // PRIVSUM_RATIONAL_HPP_
