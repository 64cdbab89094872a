// Copyright 2026 The tempograph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TEMPOGRAPH_BRIDGES_HPP_
#define TEMPOGRAPH_BRIDGES_HPP_

#include <cstdint>
#include <vector>

namespace tempograph::bridges {

// n people cross n bridges; bridge i (1-based) carrying m_i people costs
// m_i + i. Index 0 of each vector is bridge 1.
struct Solution {
  std::vector<std::uint64_t> contents;
  std::vector<std::uint64_t> costs;  // m_i + i, or 0 for an empty bridge
  std::uint64_t max_cost = 0;        // over non-empty bridges
  std::uint64_t opt_formula = 0;     // ceil(sqrt(2n) + 1/2)
};

// Greedy assignment, O(n^2): each person in turn joins the first bridge of
// minimum current cost.
Solution greedy(std::uint64_t n);

// Same assignment as greedy(), found with an indexed min-heap in
// O(n log n). For sweeps where the quadratic scan is too slow.
Solution greedy_indexed(std::uint64_t n);

// Smallest C such that bridges 1..min(n, C-1) can absorb n people without any
// cost exceeding C (bridge i takes at most C - i).
std::uint64_t oracle(std::uint64_t n);

}  // namespace tempograph::bridges

#endif  // TEMPOGRAPH_BRIDGES_HPP_
