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

#ifndef TEMPOGRAPH_PARALLEL_HPP_
#define TEMPOGRAPH_PARALLEL_HPP_

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace tempograph::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, count) into contiguous chunks, runs `body(acc, index)` on each
// index with one accumulator per chunk, and folds the accumulators with
// `merge(into, from)` in chunk order. Callers keep accumulators integral so
// the result does not depend on the chunking.
template <typename Acc, typename MakeAcc, typename Body, typename Merge>
Acc for_each_index(std::uint64_t count, unsigned threads, MakeAcc make_acc,
                   Body body, Merge merge) {
  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_threads(threads), count));
  std::vector<Acc> partial;
  partial.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) partial.push_back(make_acc());

  auto run = [&](std::uint64_t w) {
    const std::uint64_t begin = count * w / workers;
    const std::uint64_t end = count * (w + 1) / workers;
    for (std::uint64_t i = begin; i < end; ++i) body(partial[w], i);
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          run(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  Acc total = std::move(partial.front());
  for (std::uint64_t w = 1; w < workers; ++w) merge(total, partial[w]);
  return total;
}

}  // namespace tempograph::detail

#endif  // TEMPOGRAPH_PARALLEL_HPP_
