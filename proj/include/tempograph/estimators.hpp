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

#ifndef TEMPOGRAPH_ESTIMATORS_HPP_
#define TEMPOGRAPH_ESTIMATORS_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tempograph/formulas.hpp"
#include "tempograph/sampling.hpp"
#include "tempograph/temporal_graph.hpp"

namespace tempograph {

enum class Quantity { kPathCount, kMd, kTd, kPairDistance };

const char* to_string(Quantity q);

struct EstimateReport {
  Quantity quantity = Quantity::kMd;
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(samples)
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::optional<std::pair<Vertex, Vertex>> argmax_pair;
  // The same mean as an exact fraction of the integer sample sums. Used for
  // order comparisons (TD >= MD) that must not depend on rounding.
  Rational exact_mean;
};

// Number of journeys with exactly `length` time edges, counted over all
// ordered start vertices.
std::uint64_t count_journeys(const TemporalGraph& graph, std::size_t length);

inline constexpr std::uint64_t kMaxPathCountClique = 8;
inline constexpr std::uint64_t kMaxExhaustiveLabelings = 1'000'000;

// Mean number of length-k journeys over `samples` uniform labelings of K_n.
// ScaleError for n > 8, InputError for k > n-1 or samples == 0.
EstimateReport estimate_path_count(std::uint64_t n, std::uint64_t k,
                                   Label a, std::uint64_t samples,
                                   std::uint64_t seed, unsigned threads = 0);

// MD and TD from one shared set of labelings.
struct DistanceEstimates {
  EstimateReport md;
  EstimateReport td;
  std::size_t num_vertices = 0;
  std::vector<double> pair_means;  // row-major E(delta(s, t)); diagonal 0
  std::optional<Label> max_delta_prime;  // largest finite delta' seen
  double max_delta = 0.0;                // largest delta seen
};

DistanceEstimates estimate_distances(const BaseGraph& base, Label a,
                                     double nprime, std::uint64_t samples,
                                     std::uint64_t seed, unsigned threads = 0);

// Max over pairs s != t of the per-pair sample mean of delta(s, t). Biased
// upward by O(std_error) as a max of means.
EstimateReport estimate_md(const BaseGraph& base, Label a, double nprime,
                           std::uint64_t samples, std::uint64_t seed,
                           unsigned threads = 0);

// Mean over samples of min(max over pairs of delta', n').
EstimateReport estimate_td(const BaseGraph& base, Label a, double nprime,
                           std::uint64_t samples, std::uint64_t seed,
                           unsigned threads = 0);

// Exact expectations over all a^m equally likely single-label assignments.
struct ExhaustiveResult {
  std::uint64_t labelings = 0;
  std::size_t num_vertices = 0;
  std::vector<Rational> pair_means;  // row-major E(delta(s, t))
  Rational md;
  std::optional<std::pair<Vertex, Vertex>> md_argmax;
  Rational td;
  std::optional<Rational> path_count;  // when a path length was requested
};

// ScaleError when a^m > 1e6.
ExhaustiveResult exhaustive_all(const BaseGraph& base, Label a, double nprime,
                                std::optional<std::size_t> path_length = {});

// One scalar: kMd, kTd, or kPathCount (with path_length).
Rational exhaustive_expectation(const BaseGraph& base, Label a, double nprime,
                                Quantity quantity,
                                std::size_t path_length = 0);

}  // namespace tempograph

#endif  // TEMPOGRAPH_ESTIMATORS_HPP_
