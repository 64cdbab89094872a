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

#ifndef TEMPOGRAPH_SAMPLING_HPP_
#define TEMPOGRAPH_SAMPLING_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "tempograph/temporal_graph.hpp"

namespace tempograph {

// Unlabeled underlying graph. Edges canonical: u < v, sorted, unique.
class BaseGraph {
 public:
  BaseGraph(std::size_t num_vertices,
            std::vector<std::pair<Vertex, Vertex>> edges);

  std::size_t num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  // Structure of an existing temporal graph with its labels dropped.
  static BaseGraph of(const TemporalGraph& graph);

 private:
  std::size_t num_vertices_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

BaseGraph make_clique(std::size_t n);
// Star with `leaves` leaves; vertex 0 is the centre.
BaseGraph make_star(std::size_t leaves);
// Path with `length` edges over vertices 0..length in line order.
BaseGraph make_path(std::size_t length);

// Every label in 1..a equally likely.
struct UniformLabels {
  Label a = 1;
};
// weights[i] is the probability of label i + 1.
struct DiscreteLabels {
  std::vector<double> weights;
};

class LabelDistribution {
 public:
  // Throws InputError for a = 0, empty/negative weights or weights that do not
  // sum to 1 within 1e-12.
  LabelDistribution(UniformLabels u);  // NOLINT(google-explicit-constructor)
  LabelDistribution(DiscreteLabels d);  // NOLINT(google-explicit-constructor)

  Label max_label() const;
  bool is_uniform() const { return std::holds_alternative<UniformLabels>(kind_); }
  const std::variant<UniformLabels, DiscreteLabels>& kind() const { return kind_; }

 private:
  std::variant<UniformLabels, DiscreteLabels> kind_;
  std::vector<double> cdf_;

  friend class LabelStream;
};

// Seed derivation and the label stream.
//
// RNG contract (stable across releases; golden outputs depend on it):
//   mix64(x)         SplitMix64 finaliser (Stafford variant 13).
//   derive(k, i)     mix64(k ^ mix64(i + 0x9E3779B97F4A7C15)).
//   sample key       derive(seed, sample_index).
//   edge stream      SplitMix64 with state derive(sample key, edge index),
//                    where edge index is the position in canonical order.
//   uniform label    Lemire's multiply-shift with rejection on 64-bit draws.
//   discrete label   inverse CDF on a 53-bit uniform double.
std::uint64_t mix64(std::uint64_t x);
std::uint64_t derive_key(std::uint64_t key, std::uint64_t index);

class LabelStream {
 public:
  explicit LabelStream(std::uint64_t state) : state_(state) {}

  std::uint64_t next();
  // Uniform integer in [1, bound].
  std::uint32_t uniform(std::uint32_t bound);
  Label draw(const LabelDistribution& dist);

 private:
  std::uint64_t state_;
};

// Label of the edge at canonical position `edge_index` in sample
// `sample_index`. sample_labeling is built from exactly this function.
Label edge_label(const LabelDistribution& dist, std::uint64_t seed,
                 std::uint64_t sample_index, std::uint64_t edge_index);

struct SampleSpec {
  const BaseGraph* base_graph = nullptr;
  LabelDistribution distribution = UniformLabels{1};
  std::uint64_t seed = 0;
  std::uint64_t sample_index = 0;
  double slow_arrival = 1.0;
};

// One label per edge, drawn independently. A pure function of the spec.
TemporalGraph sample_labeling(const SampleSpec& spec);

// Position of {u, v} in make_clique(n)'s canonical edge order.
inline std::uint64_t clique_edge_index(std::uint64_t n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return static_cast<std::uint64_t>(u) * n -
         static_cast<std::uint64_t>(u) * (u + 1) / 2 + (v - u - 1);
}

// The labeling sample_labeling would produce for make_clique(n) under
// UniformLabels{a}, evaluated per edge on demand.
class LazyCliqueLabeling {
 public:
  LazyCliqueLabeling(std::size_t n, Label a, std::uint64_t seed,
                     std::uint64_t sample_index);

  std::size_t num_vertices() const { return n_; }
  Label max_label() const { return a_; }
  Label label(Vertex u, Vertex v) const;

 private:
  std::size_t n_;
  Label a_;
  std::uint64_t sample_key_;
};

}  // namespace tempograph

#endif  // TEMPOGRAPH_SAMPLING_HPP_
