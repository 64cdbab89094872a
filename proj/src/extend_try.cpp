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

#include "tempograph/extend_try.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "parallel.hpp"
#include "tempograph/errors.hpp"

namespace tempograph {
namespace {

class DenseCliqueLabels {
 public:
  explicit DenseCliqueLabels(const TemporalGraph& g)
      : n_(g.num_vertices()), labels_(n_ * n_, 0) {
    for (const auto& e : g.edges()) {
      if (e.labels.size() != 1) {
        throw InputError("Extend-Try expects exactly one label per edge");
      }
      labels_[e.u * n_ + e.v] = labels_[e.v * n_ + e.u] = e.labels.front();
    }
  }
  std::size_t num_vertices() const { return n_; }
  Label label(Vertex u, Vertex v) const { return labels_[u * n_ + v]; }

 private:
  std::size_t n_;
  std::vector<Label> labels_;
};

bool inside(Label l, double lo, double hi) {
  const double x = static_cast<double>(l);
  return lo < x && x < hi;
}

template <typename Labels>
ExtendTryOutcome run(const Labels& labels, Vertex s, Vertex t,
                     const formulas::ExtendTryParams& p) {
  const std::size_t n = labels.num_vertices();
  if (p.n != n) throw InputError("parameters were built for a different n");
  if (s >= n || t >= n) throw InputError("vertex out of range");
  if (s == t) throw InputError("Extend-Try needs s != t");

  ExtendTryOutcome out;
  if (!p.window_reachable) {
    out.failure_mode = ExtendTryFailure::kWindowUnreachable;
    return out;
  }

  std::vector<char> visited(n, 0);
  visited[s] = 1;
  std::vector<TimeEdge> hops;
  Vertex current = s;
  for (std::uint64_t i = 0;; ++i) {
    out.hops = i;
    const Label direct = labels.label(current, t);
    if (inside(direct, p.window_lower, p.window_upper)) {
      hops.push_back({current, t, direct});
      out.success = true;
      out.arrival_time = direct;
      out.journey = Journey(std::move(hops));
      return out;
    }
    if (i == p.iterations) {
      out.failure_mode = ExtendTryFailure::kWindowExhausted;
      return out;
    }
    const double lo = p.k * static_cast<double>(i);
    const double hi = p.k * static_cast<double>(i + 1);
    Vertex best = 0;
    Label best_label = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (visited[u] || u == t) continue;
      const Label l = labels.label(current, u);
      if (inside(l, lo, hi) && (best_label == 0 || l < best_label)) {
        best = u;
        best_label = l;
      }
    }
    if (best_label == 0) {
      out.failure_mode = ExtendTryFailure::kNoExtension;
      return out;
    }
    hops.push_back({current, best, best_label});
    visited[best] = 1;
    current = best;
  }
}

}  // namespace

const char* to_string(ExtendTryFailure f) {
  switch (f) {
    case ExtendTryFailure::kNone:
      return "NONE";
    case ExtendTryFailure::kNoExtension:
      return "NO_EXTENSION";
    case ExtendTryFailure::kWindowExhausted:
      return "WINDOW_EXHAUSTED";
    case ExtendTryFailure::kWindowUnreachable:
      return "WINDOW_UNREACHABLE";
  }
  return "UNKNOWN";
}

ExtendTryOutcome extend_try(const TemporalGraph& graph, Vertex s, Vertex t,
                            const formulas::ExtendTryParams& params) {
  if (!graph.is_complete()) throw InputError("Extend-Try needs a clique");
  if (graph.max_label() != graph.num_vertices()) {
    throw InputError("Extend-Try needs a normalized clique (a == n)");
  }
  return run(DenseCliqueLabels(graph), s, t, params);
}

ExtendTryOutcome extend_try(const LazyCliqueLabeling& labels, Vertex s,
                            Vertex t, const formulas::ExtendTryParams& params) {
  if (labels.max_label() != labels.num_vertices()) {
    throw InputError("Extend-Try needs a normalized clique (a == n)");
  }
  return run(labels, s, t, params);
}

ExtendTryReport extend_try_experiment(std::uint64_t n, double c1, double r,
                                      std::uint64_t trials, std::uint64_t seed,
                                      bool allow_small_params,
                                      unsigned threads) {
  if (trials == 0) throw InputError("trials must be at least 1");
  if (n > (std::uint64_t{1} << 31)) throw InputError("n too large");
  const formulas::ExtendTryParams params = formulas::extend_try_params(n, c1, r);
  if (params.below_regime && !allow_small_params) {
    throw InputError("c1 and r must exceed 1; pass allow_small_params to "
                     "experiment outside that regime");
  }

  struct Counts {
    std::uint64_t success = 0, no_extension = 0, exhausted = 0,
                  unreachable = 0;
  };
  Counts total = detail::for_each_index<Counts>(
      trials, threads, [] { return Counts{}; },
      [&](Counts& acc, std::uint64_t i) {
        LazyCliqueLabeling labels(n, static_cast<Label>(n), seed, i);
        const ExtendTryOutcome o = extend_try(labels, 0, 1, params);
        switch (o.failure_mode) {
          case ExtendTryFailure::kNone:
            ++acc.success;
            break;
          case ExtendTryFailure::kNoExtension:
            ++acc.no_extension;
            break;
          case ExtendTryFailure::kWindowExhausted:
            ++acc.exhausted;
            break;
          case ExtendTryFailure::kWindowUnreachable:
            ++acc.unreachable;
            break;
        }
      },
      [](Counts& into, const Counts& from) {
        into.success += from.success;
        into.no_extension += from.no_extension;
        into.exhausted += from.exhausted;
        into.unreachable += from.unreachable;
      });

  ExtendTryReport report;
  report.params = params;
  report.trials = trials;
  report.seed = seed;
  report.successes = total.success;
  report.no_extension = total.no_extension;
  report.window_exhausted = total.exhausted;
  report.window_unreachable = total.unreachable;
  const double N = static_cast<double>(trials);
  const double rate = static_cast<double>(total.success) / N;
  report.success_rate = rate;
  report.std_error =
      trials > 1 ? std::sqrt(rate * (1.0 - rate) * N / (N - 1.0) / N) : 0.0;
  return report;
}

}  // namespace tempograph
