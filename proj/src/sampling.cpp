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

#include "tempograph/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tempograph/errors.hpp"

namespace tempograph {
namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

BaseGraph::BaseGraph(std::size_t num_vertices,
                     std::vector<std::pair<Vertex, Vertex>> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ == 0) throw InputError("graph needs at least one vertex");
  for (auto& [u, v] : edges_) {
    if (u >= num_vertices_ || v >= num_vertices_) {
      throw InputError("edge references a missing vertex");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InputError("repeated edge in base graph");
  }
}

BaseGraph BaseGraph::of(const TemporalGraph& graph) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(graph.edges().size());
  for (const auto& e : graph.edges()) edges.emplace_back(e.u, e.v);
  return BaseGraph(graph.num_vertices(), std::move(edges));
}

BaseGraph make_clique(std::size_t n) {
  if (n == 0) throw InputError("clique needs n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return BaseGraph(n, std::move(edges));
}

BaseGraph make_star(std::size_t leaves) {
  if (leaves == 0) throw InputError("star needs at least one leaf");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return BaseGraph(leaves + 1, std::move(edges));
}

BaseGraph make_path(std::size_t length) {
  if (length == 0) throw InputError("path needs at least one edge");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < length; ++v) edges.emplace_back(v, v + 1);
  return BaseGraph(length + 1, std::move(edges));
}

LabelDistribution::LabelDistribution(UniformLabels u) : kind_(u) {
  if (u.a == 0) throw InputError("max label a must be at least 1");
}

LabelDistribution::LabelDistribution(DiscreteLabels d) : kind_(d) {
  const auto& w = d.weights;
  if (w.empty()) throw InputError("discrete distribution needs weights");
  if (w.size() >= kUnreachable) throw InputError("too many labels");
  double total = 0.0;
  cdf_.reserve(w.size());
  for (double x : w) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw InputError("discrete weights must be non-negative");
    }
    total += x;
    cdf_.push_back(total);
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw InputError("discrete weights must sum to 1");
  }
}

Label LabelDistribution::max_label() const {
  if (const auto* u = std::get_if<UniformLabels>(&kind_)) return u->a;
  return static_cast<Label>(std::get<DiscreteLabels>(kind_).weights.size());
}

std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_key(std::uint64_t key, std::uint64_t index) {
  return mix64(key ^ mix64(index + 0x9E3779B97F4A7C15ULL));
}

std::uint64_t LabelStream::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix64(state_);
}

std::uint32_t LabelStream::uniform(std::uint32_t bound) {
  // Lemire, "Fast Random Integer Generation in an Interval" (2019).
  std::uint64_t x = next();
  u128 m = static_cast<u128>(x) * bound;
  std::uint64_t low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - static_cast<std::uint64_t>(bound)) % bound;
    while (low < threshold) {
      x = next();
      m = static_cast<u128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint32_t>(m >> 64) + 1;
}

Label LabelStream::draw(const LabelDistribution& dist) {
  if (const auto* u = std::get_if<UniformLabels>(&dist.kind_)) {
    return uniform(u->a);
  }
  const double x = static_cast<double>(next() >> 11) * 0x1.0p-53;
  auto it = std::upper_bound(dist.cdf_.begin(), dist.cdf_.end(), x);
  // Rounding can leave the last cdf entry just below 1.
  std::size_t idx = static_cast<std::size_t>(it - dist.cdf_.begin());
  if (idx == dist.cdf_.size()) idx = dist.cdf_.size() - 1;
  const auto& weights = std::get<DiscreteLabels>(dist.kind_).weights;
  while (idx > 0 && weights[idx] == 0.0) --idx;
  return static_cast<Label>(idx + 1);
}

Label edge_label(const LabelDistribution& dist, std::uint64_t seed,
                 std::uint64_t sample_index, std::uint64_t edge_index) {
  LabelStream stream(derive_key(derive_key(seed, sample_index), edge_index));
  return stream.draw(dist);
}

TemporalGraph sample_labeling(const SampleSpec& spec) {
  if (spec.base_graph == nullptr) throw InputError("sample spec has no graph");
  const BaseGraph& base = *spec.base_graph;
  const std::uint64_t sample_key = derive_key(spec.seed, spec.sample_index);
  std::vector<LabeledEdge> edges;
  edges.reserve(base.edges().size());
  for (std::size_t i = 0; i < base.edges().size(); ++i) {
    LabelStream stream(derive_key(sample_key, i));
    const auto [u, v] = base.edges()[i];
    edges.push_back({u, v, {stream.draw(spec.distribution)}});
  }
  return TemporalGraph(base.num_vertices(), std::move(edges),
                       spec.distribution.max_label(), spec.slow_arrival);
}

LazyCliqueLabeling::LazyCliqueLabeling(std::size_t n, Label a,
                                       std::uint64_t seed,
                                       std::uint64_t sample_index)
    : n_(n), a_(a), sample_key_(derive_key(seed, sample_index)) {
  if (n == 0) throw InputError("clique needs n >= 1");
  if (a == 0) throw InputError("max label a must be at least 1");
}

Label LazyCliqueLabeling::label(Vertex u, Vertex v) const {
  LabelStream stream(derive_key(sample_key_, clique_edge_index(n_, u, v)));
  return stream.uniform(a_);
}

}  // namespace tempograph
