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

#include "oracles.hpp"

#include <cmath>

namespace tempograph::oracles {
namespace {

void dfs(const TemporalGraph& graph, Vertex at, Label last, Vertex target,
         std::vector<bool>& on_path, std::optional<Label>& best) {
  for (const auto& e : graph.edges()) {
    Vertex next;
    if (e.u == at) {
      next = e.v;
    } else if (e.v == at) {
      next = e.u;
    } else {
      continue;
    }
    if (on_path[next]) continue;
    for (Label l : e.labels) {
      if (l <= last) continue;
      if (next == target) {
        if (!best || l < *best) best = l;
        continue;
      }
      on_path[next] = true;
      dfs(graph, next, l, target, on_path, best);
      on_path[next] = false;
    }
  }
}

Label label_of(const TemporalGraph& graph, Vertex u, Vertex v) {
  for (const auto& e : graph.edges()) {
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.labels.front();
  }
  return 0;
}

bool sequences_rec(const TemporalGraph& graph, std::vector<Vertex>& seq,
                   std::size_t want, std::uint64_t& count) {
  if (seq.size() == want) {
    Label prev = 0;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      const Label l = label_of(graph, seq[i], seq[i + 1]);
      if (l == 0 || l <= prev) return false;
      prev = l;
    }
    ++count;
    return true;
  }
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    bool used = false;
    for (Vertex w : seq) used = used || w == v;
    if (used) continue;
    seq.push_back(v);
    sequences_rec(graph, seq, want, count);
    seq.pop_back();
  }
  return true;
}

}  // namespace

std::optional<Label> brute_force_foremost(const TemporalGraph& graph, Vertex s,
                                          Vertex t) {
  if (s == t) return Label{0};
  std::vector<bool> on_path(graph.num_vertices(), false);
  on_path[s] = true;
  std::optional<Label> best;
  dfs(graph, s, 0, t, on_path, best);
  return best;
}

void for_each_labeling(const BaseGraph& base, Label a, double nprime,
                       const std::function<void(const TemporalGraph&)>& f) {
  const auto& pairs = base.edges();
  std::vector<Label> labels(pairs.size(), 1);
  while (true) {
    std::vector<LabeledEdge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      edges.push_back({pairs[i].first, pairs[i].second, {labels[i]}});
    }
    f(TemporalGraph(base.num_vertices(), std::move(edges), a, nprime));
    std::size_t i = 0;
    while (i < labels.size() && labels[i] == a) labels[i++] = 1;
    if (i == labels.size()) return;
    ++labels[i];
  }
}

std::uint64_t count_increasing_paths(const TemporalGraph& graph, std::size_t k) {
  std::uint64_t count = 0;
  std::vector<Vertex> seq;
  sequences_rec(graph, seq, k + 1, count);
  return count;
}

Rational phi_by_counting(std::uint64_t k, std::uint64_t a) {
  std::vector<std::uint64_t> seq(k, 1);
  std::uint64_t good = 0;
  std::uint64_t total = 0;
  while (true) {
    ++total;
    bool increasing = true;
    for (std::size_t i = 1; i < k; ++i) increasing = increasing && seq[i - 1] < seq[i];
    if (increasing) ++good;
    std::size_t i = 0;
    while (i < k && seq[i] == a) seq[i++] = 1;
    if (i == k) break;
    ++seq[i];
  }
  return Rational(good, total);
}

Rational star_leaf_pair(std::uint64_t a, const Rational& nprime) {
  Rational sum = 0;
  for (std::uint64_t l1 = 1; l1 <= a; ++l1) {
    for (std::uint64_t l2 = 1; l2 <= a; ++l2) {
      sum += l1 < l2 ? Rational(l2) : nprime;
    }
  }
  return sum / (a * a);
}

Rational star_cond_exp(std::uint64_t a) {
  Rational sum = 0;
  std::uint64_t cases = 0;
  for (std::uint64_t l1 = 1; l1 <= a; ++l1) {
    for (std::uint64_t l2 = l1 + 1; l2 <= a; ++l2) {
      sum += l2;
      ++cases;
    }
  }
  return cases == 0 ? Rational(0) : sum / cases;
}

Rational star_p_fail(std::uint64_t a) {
  std::uint64_t fail = 0;
  for (std::uint64_t l1 = 1; l1 <= a; ++l1) {
    for (std::uint64_t l2 = 1; l2 <= a; ++l2) fail += l2 <= l1 ? 1 : 0;
  }
  return Rational(fail, a * a);
}

std::optional<double> extend_try_success_probability(std::uint64_t n, double c1,
                                                     double r) {
  const double dn = static_cast<double>(n);
  const double ln = std::log(dn);
  const double k = r * ln;
  const auto steps = static_cast<std::uint64_t>(std::floor(c1 * std::sqrt(dn) * ln));
  const double lower = c1 * std::sqrt(dn) * ln * k;
  const double upper = lower + std::sqrt(dn);
  if (lower >= dn) return std::nullopt;
  // Integers strictly inside (lo, hi) and inside [1, n].
  auto count = [&](double lo, double hi) -> double {
    const double first = std::max(1.0, std::floor(lo) + 1);
    const double last = std::min(dn, std::ceil(hi) - 1);
    return std::max(0.0, last - first + 1);
  };
  const double p_window = count(lower, upper) / dn;
  double alive = 1.0;
  double success = 0.0;
  for (std::uint64_t i = 0; i <= steps; ++i) {
    success += alive * p_window;
    alive *= 1.0 - p_window;
    if (i == steps) break;
    // Candidates exclude t and the i + 1 vertices already on the journey.
    const double candidates = dn - static_cast<double>(i + 2);
    if (candidates <= 0) {
      alive = 0;
      break;
    }
    const double w = count(k * i, k * (i + 1)) / dn;
    alive *= 1.0 - std::pow(1.0 - w, candidates);
  }
  return success;
}

std::uint64_t bridges_opt_by_scan(std::uint64_t n) {
  for (std::uint64_t c = 2;; ++c) {
    std::uint64_t capacity = 0;
    for (std::uint64_t i = 1; i <= std::min(n, c - 1) && capacity < n; ++i) {
      capacity += c - i;
    }
    if (capacity >= n) return c;
  }
}

}  // namespace tempograph::oracles
