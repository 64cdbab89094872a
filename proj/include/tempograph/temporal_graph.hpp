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

#ifndef TEMPOGRAPH_TEMPORAL_GRAPH_HPP_
#define TEMPOGRAPH_TEMPORAL_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tempograph {

using Vertex = std::uint32_t;
using Label = std::uint32_t;

// An undirected edge together with its availability labels.
struct LabeledEdge {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Label> labels;

  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

// A traversal of edge {from, to} at time `label`.
struct TimeEdge {
  Vertex from = 0;
  Vertex to = 0;
  Label label = 0;

  friend bool operator==(const TimeEdge&, const TimeEdge&) = default;
};

// Undirected graph whose edges carry sets of discrete availability labels in
// [1, max_label], plus the fixed arrival time of the fallback "slow" journey.
//
// Immutable once constructed. Edges are stored canonically: u < v, sorted by
// (u, v), labels strictly ascending. Construction throws InputError when any
// of those invariants cannot be established (self-loop, repeated pair, label
// out of range, empty label set, vertex out of range).
class TemporalGraph {
 public:
  TemporalGraph(std::size_t num_vertices, std::vector<LabeledEdge> edges,
                Label max_label, double slow_arrival);

  std::size_t num_vertices() const { return num_vertices_; }
  Label max_label() const { return max_label_; }
  double slow_arrival() const { return slow_arrival_; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }

  // Index into edges() of {u, v}, if present.
  std::optional<std::size_t> find_edge(Vertex u, Vertex v) const;
  bool has_time_edge(Vertex u, Vertex v, Label label) const;

  // Every (edge index, label) pair, sorted by label then edge index.
  struct TimeEdgeRef {
    Label label;
    std::uint32_t edge;
  };
  std::span<const TimeEdgeRef> time_edges_by_label() const {
    return by_label_;
  }

  // Neighbours of v as (neighbour, edge index), ascending by neighbour.
  std::span<const std::pair<Vertex, std::uint32_t>> neighbours(Vertex v) const {
    return {adjacency_.data() + adjacency_offsets_[v],
            adjacency_.data() + adjacency_offsets_[v + 1]};
  }

  bool is_complete() const {
    return edges_.size() == num_vertices_ * (num_vertices_ - 1) / 2;
  }

  friend bool operator==(const TemporalGraph& a, const TemporalGraph& b) {
    return a.num_vertices_ == b.num_vertices_ &&
           a.max_label_ == b.max_label_ &&
           a.slow_arrival_ == b.slow_arrival_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t num_vertices_;
  std::vector<LabeledEdge> edges_;
  Label max_label_;
  double slow_arrival_;
  std::vector<TimeEdgeRef> by_label_;
  std::vector<std::size_t> adjacency_offsets_;
  std::vector<std::pair<Vertex, std::uint32_t>> adjacency_;
};

// Sequence of time edges. The empty journey stays at its start vertex and
// has arrival time 0.
class Journey {
 public:
  Journey() = default;
  explicit Journey(std::vector<TimeEdge> edges) : edges_(std::move(edges)) {}

  const std::vector<TimeEdge>& time_edges() const { return edges_; }
  std::size_t length() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  Label arrival_time() const { return edges_.empty() ? 0 : edges_.back().label; }

  friend bool operator==(const Journey&, const Journey&) = default;

 private:
  std::vector<TimeEdge> edges_;
};

// delta_prime is the foremost arrival time (nullopt when t is unreachable
// from s, 0 when s == t); delta = min(delta_prime, slow_arrival).
struct DistanceReport {
  std::optional<Label> delta_prime;
  double delta = 0.0;
  std::optional<Journey> witness;

  bool reachable() const { return delta_prime.has_value(); }
};

// True iff every time edge exists in `graph`, consecutive edges chain, all
// visited vertices are distinct and labels strictly increase.
bool validate_journey(const TemporalGraph& graph, const Journey& journey);

// Earliest-arrival time from `source` to every vertex, written to `out`
// (size num_vertices). Unreachable vertices get kUnreachable.
inline constexpr Label kUnreachable = ~Label{0};
void earliest_arrivals(const TemporalGraph& graph, Vertex source,
                       std::span<Label> out);

DistanceReport foremost_journey(const TemporalGraph& graph, Vertex s, Vertex t);

// Row-major n x n matrix; entry (s, t) equals foremost_journey(graph, s, t).
class DistanceMatrix {
 public:
  DistanceMatrix(std::size_t n, std::vector<DistanceReport> entries)
      : n_(n), entries_(std::move(entries)) {}

  std::size_t size() const { return n_; }
  const DistanceReport& at(Vertex s, Vertex t) const {
    return entries_[static_cast<std::size_t>(s) * n_ + t];
  }

 private:
  std::size_t n_;
  std::vector<DistanceReport> entries_;
};

DistanceMatrix all_pairs_distances(const TemporalGraph& graph);

}  // namespace tempograph

#endif  // TEMPOGRAPH_TEMPORAL_GRAPH_HPP_
