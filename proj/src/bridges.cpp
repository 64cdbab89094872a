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

#include "tempograph/bridges.hpp"

#include <algorithm>
#include <queue>
#include <utility>

#include "tempograph/errors.hpp"
#include "tempograph/formulas.hpp"

namespace tempograph::bridges {
namespace {

void check(std::uint64_t n) {
  if (n == 0) throw InputError("bridges needs at least one person");
  if (n > (std::uint64_t{1} << 32)) throw InputError("n too large");
}

Solution finish(std::uint64_t n, std::vector<std::uint64_t> contents,
                std::vector<std::uint64_t> costs) {
  Solution sol;
  for (std::size_t i = 0; i < n; ++i) {
    if (contents[i] == 0) {
      costs[i] = 0;
    } else {
      sol.max_cost = std::max(sol.max_cost, costs[i]);
    }
  }
  sol.contents = std::move(contents);
  sol.costs = std::move(costs);
  sol.opt_formula = formulas::bridges_opt_formula(n);
  return sol;
}

}  // namespace

Solution greedy(std::uint64_t n) {
  check(n);
  std::vector<std::uint64_t> contents(n, 0);
  std::vector<std::uint64_t> costs(n);
  for (std::size_t i = 0; i < n; ++i) costs[i] = i + 1;

  for (std::uint64_t person = 0; person < n; ++person) {
    std::size_t bridge = 0;
    for (std::size_t j = 1; j < n; ++j) {
      if (costs[j] < costs[bridge]) bridge = j;
    }
    ++contents[bridge];
    ++costs[bridge];
  }
  return finish(n, std::move(contents), std::move(costs));
}

Solution greedy_indexed(std::uint64_t n) {
  check(n);
  std::vector<std::uint64_t> contents(n, 0);
  std::vector<std::uint64_t> costs(n);
  for (std::size_t i = 0; i < n; ++i) costs[i] = i + 1;

  // (cost, index) ordered ascending: ties resolve to the first bridge.
  using Entry = std::pair<std::uint64_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (std::size_t i = 0; i < n; ++i) heap.emplace(costs[i], i);
  for (std::uint64_t person = 0; person < n; ++person) {
    const std::size_t bridge = heap.top().second;
    heap.pop();
    ++contents[bridge];
    ++costs[bridge];
    heap.emplace(costs[bridge], bridge);
  }
  return finish(n, std::move(contents), std::move(costs));
}

std::uint64_t oracle(std::uint64_t n) {
  check(n);
  auto capacity = [n](std::uint64_t c) {
    const std::uint64_t m = std::min(n, c - 1);
    return m * c - m * (m + 1) / 2;
  };
  // capacity(n + 1) >= n always (bridge 1 alone takes n).
  std::uint64_t lo = 2;
  std::uint64_t hi = n + 1;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (capacity(mid) >= n) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace tempograph::bridges
