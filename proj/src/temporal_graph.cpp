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

#include "tempograph/temporal_graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "tempograph/errors.hpp"

namespace tempograph {

TemporalGraph::TemporalGraph(std::size_t num_vertices,
                             std::vector<LabeledEdge> edges, Label max_label,
                             double slow_arrival)
    : num_vertices_(num_vertices),
      edges_(std::move(edges)),
      max_label_(max_label),
      slow_arrival_(slow_arrival) {
  if (num_vertices_ == 0) throw InputError("graph needs at least one vertex");
  if (num_vertices_ > (std::size_t{1} << 31)) {
    throw InputError("too many vertices");
  }
  if (max_label_ == 0) throw InputError("max label must be positive");
  if (!(slow_arrival_ > 0.0) || !std::isfinite(slow_arrival_)) {
    throw InputError("slow arrival time must be a positive finite number");
  }

  for (auto& e : edges_) {
    if (e.u >= num_vertices_ || e.v >= num_vertices_) {
      throw InputError("edge {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "} references a missing vertex");
    }
    if (e.u == e.v) {
      throw InputError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.labels.empty()) {
      throw InputError("edge {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "} has no labels");
    }
    std::sort(e.labels.begin(), e.labels.end());
    if (std::adjacent_find(e.labels.begin(), e.labels.end()) !=
        e.labels.end()) {
      throw InputError("edge {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "} repeats a label");
    }
    if (e.labels.front() < 1 || e.labels.back() > max_label_) {
      throw InputError("edge {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "} has a label outside [1, " +
                       std::to_string(max_label_) + "]");
    }
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const LabeledEdge& a, const LabeledEdge& b) {
              return std::pair(a.u, a.v) < std::pair(b.u, b.v);
            });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) {
      throw InputError("edge {" + std::to_string(edges_[i].u) + "," +
                       std::to_string(edges_[i].v) + "} appears twice");
    }
  }

  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    for (Label l : edges_[i].labels) by_label_.push_back({l, i});
  }
  std::stable_sort(by_label_.begin(), by_label_.end(),
                   [](const TimeEdgeRef& a, const TimeEdgeRef& b) {
                     return a.label < b.label;
                   });

  std::vector<std::size_t> degree(num_vertices_, 0);
  for (const auto& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  adjacency_offsets_.assign(num_vertices_ + 1, 0);
  for (std::size_t v = 0; v < num_vertices_; ++v) {
    adjacency_offsets_[v + 1] = adjacency_offsets_[v] + degree[v];
  }
  adjacency_.resize(adjacency_offsets_.back());
  std::vector<std::size_t> fill(adjacency_offsets_.begin(),
                                adjacency_offsets_.end() - 1);
  // Edges are sorted by (u, v), so each row fills in ascending neighbour
  // order only for the u side; sort afterwards.
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    adjacency_[fill[edges_[i].u]++] = {edges_[i].v, i};
    adjacency_[fill[edges_[i].v]++] = {edges_[i].u, i};
  }
  for (std::size_t v = 0; v < num_vertices_; ++v) {
    std::sort(adjacency_.begin() + adjacency_offsets_[v],
              adjacency_.begin() + adjacency_offsets_[v + 1]);
  }
}

std::optional<std::size_t> TemporalGraph::find_edge(Vertex u, Vertex v) const {
  if (u >= num_vertices_ || v >= num_vertices_ || u == v) return std::nullopt;
  auto row = neighbours(u);
  auto it = std::lower_bound(
      row.begin(), row.end(), v,
      [](const std::pair<Vertex, std::uint32_t>& p, Vertex x) {
        return p.first < x;
      });
  if (it == row.end() || it->first != v) return std::nullopt;
  return it->second;
}

bool TemporalGraph::has_time_edge(Vertex u, Vertex v, Label label) const {
  auto idx = find_edge(u, v);
  if (!idx) return false;
  const auto& labels = edges_[*idx].labels;
  return std::binary_search(labels.begin(), labels.end(), label);
}

bool validate_journey(const TemporalGraph& graph, const Journey& journey) {
  const auto& hops = journey.time_edges();
  if (hops.empty()) return true;
  std::unordered_set<Vertex> seen;
  seen.insert(hops.front().from);
  for (std::size_t i = 0; i < hops.size(); ++i) {
    const TimeEdge& h = hops[i];
    if (!graph.has_time_edge(h.from, h.to, h.label)) return false;
    if (i > 0) {
      if (hops[i - 1].to != h.from) return false;
      if (!(hops[i - 1].label < h.label)) return false;
    }
    if (!seen.insert(h.to).second) return false;
  }
  return true;
}

namespace {

struct Predecessor {
  Vertex vertex = 0;
  Label label = 0;
};

// Single ascending-label pass. A time edge (u, v, l) relaxes v iff
// arrival[u] < l; equal labels therefore never chain.
void scan(const TemporalGraph& graph, Vertex source, std::span<Label> arrival,
          std::vector<Predecessor>* pred) {
  std::fill(arrival.begin(), arrival.end(), kUnreachable);
  arrival[source] = 0;
  const auto& edges = graph.edges();
  for (const auto& ref : graph.time_edges_by_label()) {
    const LabeledEdge& e = edges[ref.edge];
    const Label l = ref.label;
    if (arrival[e.u] < l && l < arrival[e.v]) {
      arrival[e.v] = l;
      if (pred) (*pred)[e.v] = {e.u, l};
    } else if (arrival[e.v] < l && l < arrival[e.u]) {
      arrival[e.u] = l;
      if (pred) (*pred)[e.u] = {e.v, l};
    }
  }
}

// Arrival times strictly decrease along the predecessor chain and each vertex
// has a single arrival time, so the chain never revisits a vertex.
Journey reconstruct(Vertex s, Vertex t, const std::vector<Predecessor>& pred) {
  std::vector<TimeEdge> hops;
  for (Vertex cur = t; cur != s;) {
    const Predecessor& p = pred[cur];
    hops.push_back({p.vertex, cur, p.label});
    cur = p.vertex;
  }
  std::reverse(hops.begin(), hops.end());
  return Journey(std::move(hops));
}

DistanceReport make_report(const TemporalGraph& graph, Vertex s, Vertex t,
                           std::span<const Label> arrival,
                           const std::vector<Predecessor>& pred) {
  DistanceReport report;
  if (arrival[t] == kUnreachable) {
    report.delta = graph.slow_arrival();
    return report;
  }
  report.delta_prime = arrival[t];
  report.delta = std::min(static_cast<double>(arrival[t]), graph.slow_arrival());
  report.witness = reconstruct(s, t, pred);
  return report;
}

void check_vertex(const TemporalGraph& graph, Vertex v) {
  if (v >= graph.num_vertices()) {
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(graph.num_vertices()) + ")");
  }
}

}  // namespace

void earliest_arrivals(const TemporalGraph& graph, Vertex source,
                       std::span<Label> out) {
  check_vertex(graph, source);
  if (out.size() != graph.num_vertices()) {
    throw InputError("arrival buffer size does not match vertex count");
  }
  scan(graph, source, out, nullptr);
}

DistanceReport foremost_journey(const TemporalGraph& graph, Vertex s,
                                Vertex t) {
  check_vertex(graph, s);
  check_vertex(graph, t);
  std::vector<Label> arrival(graph.num_vertices());
  std::vector<Predecessor> pred(graph.num_vertices());
  scan(graph, s, arrival, &pred);
  return make_report(graph, s, t, arrival, pred);
}

DistanceMatrix all_pairs_distances(const TemporalGraph& graph) {
  const std::size_t n = graph.num_vertices();
  std::vector<DistanceReport> entries;
  entries.reserve(n * n);
  std::vector<Label> arrival(n);
  std::vector<Predecessor> pred(n);
  for (Vertex s = 0; s < n; ++s) {
    scan(graph, s, arrival, &pred);
    for (Vertex t = 0; t < n; ++t) {
      entries.push_back(make_report(graph, s, t, arrival, pred));
    }
  }
  return DistanceMatrix(n, std::move(entries));
}

}  // namespace tempograph
