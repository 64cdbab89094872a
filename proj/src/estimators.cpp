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

#include "tempograph/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "parallel.hpp"
#include "tempograph/errors.hpp"

namespace tempograph {
namespace {

__extension__ using u128 = unsigned __int128;

// Running sums for a quantity whose per-sample value is either an integer
// arrival time ("finite") or the slow-journey time n'.
struct DeltaSums {
  std::uint64_t finite_sum = 0;
  u128 finite_sq = 0;
  std::uint64_t slow = 0;

  void add_finite(std::uint64_t x) {
    finite_sum += x;
    finite_sq += static_cast<u128>(x) * x;
  }
  void add_slow() { ++slow; }
  void merge(const DeltaSums& o) {
    finite_sum += o.finite_sum;
    finite_sq += o.finite_sq;
    slow += o.slow;
  }

  Rational exact_mean(const Rational& nprime, std::uint64_t n) const {
    return (Rational(finite_sum) + Rational(slow) * nprime) / Rational(n);
  }

  double std_error(double nprime, std::uint64_t n) const {
    if (n < 2) return 0.0;
    const long double N = static_cast<long double>(n);
    const long double sum = static_cast<long double>(finite_sum) +
                            static_cast<long double>(slow) * nprime;
    const long double sq = static_cast<long double>(finite_sq) +
                           static_cast<long double>(slow) * nprime * nprime;
    long double var = (sq - sum * sum / N) / (N - 1);
    if (var < 0) var = 0;
    return static_cast<double>(std::sqrt(var / N));
  }
};

void count_from(const TemporalGraph& g, Vertex v, Label last,
                std::size_t remaining, std::vector<char>& visited,
                std::uint64_t& count) {
  if (remaining == 0) {
    ++count;
    return;
  }
  for (const auto& [w, e] : g.neighbours(v)) {
    if (visited[w]) continue;
    for (Label l : g.edges()[e].labels) {
      if (l <= last) continue;
      visited[w] = 1;
      count_from(g, w, l, remaining - 1, visited, count);
      visited[w] = 0;
    }
  }
}

void check_sampling_args(Label a, double nprime, std::uint64_t samples) {
  if (a == 0) throw InputError("max label a must be at least 1");
  if (!(nprime > 0.0) || !std::isfinite(nprime)) {
    throw InputError("nprime must be positive");
  }
  if (samples == 0) throw InputError("samples must be at least 1");
}

// Per-labeling distance bookkeeping shared by Monte Carlo and exhaustive
// enumeration.
struct DistanceAcc {
  std::vector<DeltaSums> pairs;
  DeltaSums diameter;
  Label max_delta_prime = 0;
  double max_delta = 0.0;

  std::vector<Label> arrival;

  explicit DistanceAcc(std::size_t n) : pairs(n * n), arrival(n) {}

  void observe(const TemporalGraph& g) {
    const std::size_t n = g.num_vertices();
    const double nprime = g.slow_arrival();
    bool diam_slow = false;
    Label diam = 0;
    for (Vertex s = 0; s < n; ++s) {
      earliest_arrivals(g, s, arrival);
      for (Vertex t = 0; t < n; ++t) {
        if (t == s) continue;
        const Label dp = arrival[t];
        DeltaSums& cell = pairs[static_cast<std::size_t>(s) * n + t];
        if (dp == kUnreachable) {
          cell.add_slow();
          diam_slow = true;
          max_delta = std::max(max_delta, nprime);
          continue;
        }
        max_delta_prime = std::max(max_delta_prime, dp);
        diam = std::max(diam, dp);
        if (static_cast<double>(dp) < nprime) {
          cell.add_finite(dp);
          max_delta = std::max(max_delta, static_cast<double>(dp));
        } else {
          cell.add_slow();
          max_delta = std::max(max_delta, nprime);
        }
      }
    }
    if (diam_slow || !(static_cast<double>(diam) < nprime)) {
      diameter.add_slow();
    } else {
      diameter.add_finite(diam);
    }
  }

  void merge(const DistanceAcc& o) {
    for (std::size_t i = 0; i < pairs.size(); ++i) pairs[i].merge(o.pairs[i]);
    diameter.merge(o.diameter);
    max_delta_prime = std::max(max_delta_prime, o.max_delta_prime);
    max_delta = std::max(max_delta, o.max_delta);
  }
};

struct MaxPair {
  Rational value;
  std::optional<std::pair<Vertex, Vertex>> argmax;
};

MaxPair max_pair(const std::vector<Rational>& means, std::size_t n) {
  MaxPair best;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = 0; t < n; ++t) {
      if (s == t) continue;
      const Rational& m = means[static_cast<std::size_t>(s) * n + t];
      if (!best.argmax || m > best.value) {
        best.value = m;
        best.argmax = std::pair(s, t);
      }
    }
  }
  return best;
}

}  // namespace

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::kPathCount:
      return "PATH_COUNT";
    case Quantity::kMd:
      return "MD";
    case Quantity::kTd:
      return "TD";
    case Quantity::kPairDistance:
      return "PAIR_DISTANCE";
  }
  return "UNKNOWN";
}

std::uint64_t count_journeys(const TemporalGraph& graph, std::size_t length) {
  std::uint64_t count = 0;
  std::vector<char> visited(graph.num_vertices(), 0);
  for (Vertex s = 0; s < graph.num_vertices(); ++s) {
    visited[s] = 1;
    count_from(graph, s, 0, length, visited, count);
    visited[s] = 0;
  }
  return count;
}

EstimateReport estimate_path_count(std::uint64_t n, std::uint64_t k, Label a,
                                   std::uint64_t samples, std::uint64_t seed,
                                   unsigned threads) {
  if (n > kMaxPathCountClique) {
    throw ScaleError("path counting enumerates every ordered vertex sequence; "
                     "n = " + std::to_string(n) + " exceeds the limit of " +
                     std::to_string(kMaxPathCountClique));
  }
  if (n < 2) throw InputError("path count needs n >= 2");
  if (k < 1 || k > n - 1) {
    throw InputError("path length k must lie in [1, n-1]");
  }
  check_sampling_args(a, 1.0, samples);

  const BaseGraph clique = make_clique(n);
  const LabelDistribution dist = UniformLabels{a};
  DeltaSums total = detail::for_each_index<DeltaSums>(
      samples, threads, [] { return DeltaSums{}; },
      [&](DeltaSums& acc, std::uint64_t i) {
        SampleSpec spec{&clique, dist, seed, i, 1.0};
        acc.add_finite(count_journeys(sample_labeling(spec), k));
      },
      [](DeltaSums& into, const DeltaSums& from) { into.merge(from); });

  EstimateReport report;
  report.quantity = Quantity::kPathCount;
  report.samples = samples;
  report.seed = seed;
  report.exact_mean = total.exact_mean(Rational(0), samples);
  report.mean = report.exact_mean.convert_to<double>();
  report.std_error = total.std_error(0.0, samples);
  return report;
}

DistanceEstimates estimate_distances(const BaseGraph& base, Label a,
                                     double nprime, std::uint64_t samples,
                                     std::uint64_t seed, unsigned threads) {
  check_sampling_args(a, nprime, samples);
  const std::size_t n = base.num_vertices();
  const LabelDistribution dist = UniformLabels{a};

  DistanceAcc total = detail::for_each_index<DistanceAcc>(
      samples, threads, [n] { return DistanceAcc(n); },
      [&](DistanceAcc& acc, std::uint64_t i) {
        SampleSpec spec{&base, dist, seed, i, nprime};
        acc.observe(sample_labeling(spec));
      },
      [](DistanceAcc& into, const DistanceAcc& from) { into.merge(from); });

  const Rational np(nprime);
  DistanceEstimates out;
  out.num_vertices = n;
  std::vector<Rational> exact(n * n);
  out.pair_means.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n * n; ++i) {
    if (i / n == i % n) continue;
    exact[i] = total.pairs[i].exact_mean(np, samples);
    out.pair_means[i] = exact[i].convert_to<double>();
  }
  MaxPair best = max_pair(exact, n);

  out.md.quantity = Quantity::kMd;
  out.md.samples = samples;
  out.md.seed = seed;
  out.md.argmax_pair = best.argmax;
  out.md.exact_mean = best.value;
  out.md.mean = best.value.convert_to<double>();
  if (best.argmax) {
    const auto [s, t] = *best.argmax;
    out.md.std_error = total.pairs[static_cast<std::size_t>(s) * n + t]
                           .std_error(nprime, samples);
  }

  out.td.quantity = Quantity::kTd;
  out.td.samples = samples;
  out.td.seed = seed;
  out.td.exact_mean = total.diameter.exact_mean(np, samples);
  out.td.mean = out.td.exact_mean.convert_to<double>();
  out.td.std_error = total.diameter.std_error(nprime, samples);

  if (total.max_delta_prime > 0) out.max_delta_prime = total.max_delta_prime;
  out.max_delta = total.max_delta;
  return out;
}

EstimateReport estimate_md(const BaseGraph& base, Label a, double nprime,
                           std::uint64_t samples, std::uint64_t seed,
                           unsigned threads) {
  return estimate_distances(base, a, nprime, samples, seed, threads).md;
}

EstimateReport estimate_td(const BaseGraph& base, Label a, double nprime,
                           std::uint64_t samples, std::uint64_t seed,
                           unsigned threads) {
  return estimate_distances(base, a, nprime, samples, seed, threads).td;
}

ExhaustiveResult exhaustive_all(const BaseGraph& base, Label a, double nprime,
                                std::optional<std::size_t> path_length) {
  check_sampling_args(a, nprime, 1);
  const std::size_t m = base.edges().size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    total *= a;
    if (total > kMaxExhaustiveLabelings) {
      throw ScaleError("exhaustive enumeration needs a^m <= 1e6; a = " +
                       std::to_string(a) + ", m = " + std::to_string(m));
    }
  }

  const std::size_t n = base.num_vertices();
  DistanceAcc acc(n);
  std::uint64_t path_total = 0;
  std::vector<Label> labels(m, 1);
  for (std::uint64_t iter = 0; iter < total; ++iter) {
    std::vector<LabeledEdge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      edges.push_back({base.edges()[i].first, base.edges()[i].second, {labels[i]}});
    }
    TemporalGraph g(n, std::move(edges), a, nprime);
    acc.observe(g);
    if (path_length) path_total += count_journeys(g, *path_length);
    for (std::size_t i = 0; i < m; ++i) {
      if (labels[i] < a) {
        ++labels[i];
        break;
      }
      labels[i] = 1;
    }
  }

  const Rational np(nprime);
  ExhaustiveResult out;
  out.labelings = total;
  out.num_vertices = n;
  out.pair_means.assign(n * n, Rational(0));
  for (std::size_t i = 0; i < n * n; ++i) {
    if (i / n != i % n) out.pair_means[i] = acc.pairs[i].exact_mean(np, total);
  }
  MaxPair best = max_pair(out.pair_means, n);
  out.md = best.value;
  out.md_argmax = best.argmax;
  out.td = acc.diameter.exact_mean(np, total);
  if (path_length) out.path_count = Rational(path_total) / Rational(total);
  return out;
}

Rational exhaustive_expectation(const BaseGraph& base, Label a, double nprime,
                                Quantity quantity, std::size_t path_length) {
  switch (quantity) {
    case Quantity::kMd:
      return exhaustive_all(base, a, nprime).md;
    case Quantity::kTd:
      return exhaustive_all(base, a, nprime).td;
    case Quantity::kPathCount:
      return *exhaustive_all(base, a, nprime, path_length).path_count;
    case Quantity::kPairDistance:
      break;
  }
  throw InputError("use exhaustive_all for the per-pair matrix");
}

}  // namespace tempograph
