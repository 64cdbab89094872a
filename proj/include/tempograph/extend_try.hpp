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

#ifndef TEMPOGRAPH_EXTEND_TRY_HPP_
#define TEMPOGRAPH_EXTEND_TRY_HPP_

#include <cstdint>
#include <optional>

#include "tempograph/formulas.hpp"
#include "tempograph/sampling.hpp"
#include "tempograph/temporal_graph.hpp"

namespace tempograph {

enum class ExtendTryFailure {
  kNone,
  kNoExtension,        // no unvisited vertex in the current hop window
  kWindowExhausted,    // ran out of iterations before reaching t
  kWindowUnreachable,  // success window lies above every possible label
};

const char* to_string(ExtendTryFailure f);

struct ExtendTryOutcome {
  bool success = false;
  std::optional<Journey> journey;  // present on success
  std::uint64_t hops = 0;          // iteration index at termination
  Label arrival_time = 0;          // last label on success, 0 otherwise
  ExtendTryFailure failure_mode = ExtendTryFailure::kNone;
};

// Greedy journey search on a normalized uniform random clique (a == n).
//
// Starting at s, iteration i first checks whether the edge to t carries a
// label inside the open success window (params.window_lower,
// params.window_upper); if so the walk ends there. Otherwise it moves along
// an edge to an unvisited vertex other than t whose label lies in the open
// hop window (k i, k (i+1)), picking the smallest such label and then the
// smallest vertex. Iterations run for i = 0 .. params.iterations; the last one
// only checks the success edge.
//
// The TemporalGraph overload throws InputError unless the graph is a single
// labeled clique with max_label == num_vertices.
ExtendTryOutcome extend_try(const TemporalGraph& graph, Vertex s, Vertex t,
                            const formulas::ExtendTryParams& params);
ExtendTryOutcome extend_try(const LazyCliqueLabeling& labels, Vertex s,
                            Vertex t, const formulas::ExtendTryParams& params);

struct ExtendTryReport {
  formulas::ExtendTryParams params;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t successes = 0;
  std::uint64_t no_extension = 0;
  std::uint64_t window_exhausted = 0;
  std::uint64_t window_unreachable = 0;
  double success_rate = 0.0;
  double std_error = 0.0;
};

// Runs extend_try from vertex 0 to vertex 1 on `trials` independent normalized
// clique labelings (sample index = trial number). InputError when c1 or r is
// at most 1 unless allow_small_params is set.
ExtendTryReport extend_try_experiment(std::uint64_t n, double c1, double r,
                                      std::uint64_t trials, std::uint64_t seed,
                                      bool allow_small_params = false,
                                      unsigned threads = 0);

}  // namespace tempograph

#endif  // TEMPOGRAPH_EXTEND_TRY_HPP_
