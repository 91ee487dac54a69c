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

#ifndef PRIVSUM_SUBSETS_HPP_
#define PRIVSUM_SUBSETS_HPP_

#include <string>
#include <vector>

namespace privsum {

// All subsets of {1..L} in lexicographic order over the sorted index lists:
// {}, {1}, {1,2}, {1,2,3}, {1,3}, {2}, ... Fixed order keeps every report
// reproducible.
inline std::vector<std::vector<int>> all_subsets(int L) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    out.push_back(cur);
    for (int i = next; i <= L; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// "{}", "{2}", "{1,3}" renderings for reports.
inline std::string subset_str(const std::vector<int>& subset) {
  std::string s = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(subset[i]);
  }
  s += "}";
  return s;
}

// Complement of a subset of {1..L}, ascending.
inline std::vector<int> subset_complement(const std::vector<int>& subset,
                                          int L) {
  std::vector<int> out;
  std::size_t j = 0;
  for (int i = 1; i <= L; ++i) {
    if (j < subset.size() && subset[j] == i) {
      ++j;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace privsum

#endif  // PRIVSUM_SUBSETS_HPP_
