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

// extern "C" surface over the C++ core. Every entry point funnels exceptions
// through guard() so nothing propagates across the ABI.

#include "tempograph/tempograph.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "tempograph/bridges.hpp"
#include "tempograph/errors.hpp"
#include "tempograph/estimators.hpp"
#include "tempograph/extend_try.hpp"
#include "tempograph/formulas.hpp"
#include "tempograph/graph_io.hpp"
#include "tempograph/sampling.hpp"
#include "tempograph/temporal_graph.hpp"
#include "tempograph/version.hpp"

struct tg_graph {
  tempograph::TemporalGraph graph;
};

struct tg_base_graph {
  tempograph::BaseGraph base;
};

struct tg_distance {
  tempograph::DistanceReport report;
  std::vector<tg_time_edge> witness;
};

struct tg_bridges {
  tempograph::bridges::Solution solution;
};

namespace {

thread_local std::string g_last_error;

tg_status fail(tg_status status, const char* what) {
  g_last_error = what;
  return status;
}

template <typename F>
tg_status guard(F&& f) {
  try {
    f();
    return TG_OK;
  } catch (const tempograph::ScaleError& e) {
    return fail(TG_ERR_SCALE, e.what());
  } catch (const tempograph::InputError& e) {
    return fail(TG_ERR_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TG_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    throw tempograph::InputError(std::string(what) + " must not be NULL");
  }
}

tg_estimate to_c(const tempograph::EstimateReport& r) {
  tg_estimate e{};
  e.quantity = static_cast<tg_quantity>(r.quantity);
  e.mean = r.mean;
  e.std_error = r.std_error;
  e.samples = r.samples;
  e.seed = r.seed;
  if (r.argmax_pair) {
    e.has_argmax = 1;
    e.argmax_s = r.argmax_pair->first;
    e.argmax_t = r.argmax_pair->second;
  }
  return e;
}

tg_extend_try_params to_c(const tempograph::formulas::ExtendTryParams& p) {
  return {p.n,          p.c1,           p.r,
          p.k,          p.t0,           p.success_bound,
          p.window_lower, p.window_upper, p.iterations,
          p.below_regime, p.window_reachable, p.bound_vacuous};
}

tempograph::formulas::ExtendTryParams from_c(const tg_extend_try_params& p) {
  return {p.n,          p.c1,           p.r,
          p.k,          p.t0,           p.success_bound,
          p.window_lower, p.window_upper, p.iterations,
          p.below_regime != 0, p.window_reachable != 0, p.bound_vacuous != 0};
}

}  // namespace

extern "C" {

const char* tg_version(void) { return tempograph::kVersion; }

const char* tg_last_error(void) { return g_last_error.c_str(); }

tg_status tg_graph_parse(const char* text, size_t length, tg_graph** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new tg_graph{tempograph::parse_tgraph({text, length})};
  });
}

tg_status tg_graph_load(const char* path, tg_graph** out) {
  tg_status st = guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new tg_graph{tempograph::load_tgraph(path)};
  });
  if (st == TG_ERR_INPUT && g_last_error.rfind("cannot open", 0) == 0) {
    st = TG_ERR_IO;
  }
  return st;
}

tg_status tg_graph_save(const tg_graph* graph, const char* path) {
  tg_status st = guard([&] {
    require(graph, "graph");
    require(path, "path");
    tempograph::save_tgraph(graph->graph, path);
  });
  return st == TG_ERR_INPUT ? TG_ERR_IO : st;
}

tg_status tg_graph_format(const tg_graph* graph, char** out) {
  return guard([&] {
    require(graph, "graph");
    require(out, "out");
    const std::string text = tempograph::format_tgraph(graph->graph);
    auto buf = std::make_unique<char[]>(text.size() + 1);
    std::memcpy(buf.get(), text.c_str(), text.size() + 1);
    *out = buf.release();
  });
}

void tg_string_free(char* text) { delete[] text; }

void tg_graph_free(tg_graph* graph) { delete graph; }

uint32_t tg_graph_num_vertices(const tg_graph* graph) {
  return static_cast<uint32_t>(graph->graph.num_vertices());
}
size_t tg_graph_num_edges(const tg_graph* graph) {
  return graph->graph.edges().size();
}
uint32_t tg_graph_max_label(const tg_graph* graph) {
  return graph->graph.max_label();
}
double tg_graph_nprime(const tg_graph* graph) {
  return graph->graph.slow_arrival();
}

tg_status tg_base_make(tg_family family, uint32_t num_vertices,
                       tg_base_graph** out) {
  return guard([&] {
    require(out, "out");
    if (num_vertices < 1) throw tempograph::InputError("need at least 1 vertex");
    switch (family) {
      case TG_FAMILY_CLIQUE:
        *out = new tg_base_graph{tempograph::make_clique(num_vertices)};
        return;
      case TG_FAMILY_STAR:
        if (num_vertices < 2) {
          throw tempograph::InputError("a star needs at least 2 vertices");
        }
        *out = new tg_base_graph{tempograph::make_star(num_vertices - 1)};
        return;
      case TG_FAMILY_PATH:
        if (num_vertices < 2) {
          throw tempograph::InputError("a path needs at least 2 vertices");
        }
        *out = new tg_base_graph{tempograph::make_path(num_vertices - 1)};
        return;
    }
    throw tempograph::InputError("unknown graph family");
  });
}

tg_status tg_base_from_graph(const tg_graph* graph, tg_base_graph** out) {
  return guard([&] {
    require(graph, "graph");
    require(out, "out");
    *out = new tg_base_graph{tempograph::BaseGraph::of(graph->graph)};
  });
}

void tg_base_free(tg_base_graph* base) { delete base; }

uint32_t tg_base_num_vertices(const tg_base_graph* base) {
  return static_cast<uint32_t>(base->base.num_vertices());
}
size_t tg_base_num_edges(const tg_base_graph* base) {
  return base->base.edges().size();
}

tg_status tg_graph_sample(const tg_base_graph* base, uint32_t a, double nprime,
                          uint64_t seed, uint64_t sample_index,
                          tg_graph** out) {
  return guard([&] {
    require(base, "base");
    require(out, "out");
    tempograph::SampleSpec spec{&base->base, tempograph::UniformLabels{a}, seed,
                                sample_index, nprime};
    *out = new tg_graph{tempograph::sample_labeling(spec)};
  });
}

int tg_validate_journey(const tg_graph* graph, const tg_time_edge* edges,
                        size_t count) {
  if (graph == nullptr || (edges == nullptr && count > 0)) return 0;
  std::vector<tempograph::TimeEdge> hops;
  hops.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    hops.push_back({edges[i].from, edges[i].to, edges[i].label});
  }
  return tempograph::validate_journey(graph->graph,
                                      tempograph::Journey(std::move(hops)))
             ? 1
             : 0;
}

tg_status tg_foremost_journey(const tg_graph* graph, uint32_t s, uint32_t t,
                              tg_distance** out) {
  return guard([&] {
    require(graph, "graph");
    require(out, "out");
    auto d = std::make_unique<tg_distance>();
    d->report = tempograph::foremost_journey(graph->graph, s, t);
    if (d->report.witness) {
      for (const auto& h : d->report.witness->time_edges()) {
        d->witness.push_back({h.from, h.to, h.label});
      }
    }
    *out = d.release();
  });
}

uint32_t tg_distance_delta_prime(const tg_distance* d) {
  return d->report.delta_prime.value_or(TG_UNREACHABLE);
}
double tg_distance_delta(const tg_distance* d) { return d->report.delta; }
size_t tg_distance_witness_length(const tg_distance* d) {
  return d->witness.size();
}
const tg_time_edge* tg_distance_witness(const tg_distance* d) {
  return d->witness.empty() ? nullptr : d->witness.data();
}
void tg_distance_free(tg_distance* d) { delete d; }

tg_status tg_all_pairs(const tg_graph* graph, uint32_t* delta_prime,
                       double* delta) {
  return guard([&] {
    require(graph, "graph");
    const auto m = tempograph::all_pairs_distances(graph->graph);
    const std::size_t n = m.size();
    for (tempograph::Vertex s = 0; s < n; ++s) {
      for (tempograph::Vertex t = 0; t < n; ++t) {
        const auto& r = m.at(s, t);
        if (delta_prime) delta_prime[s * n + t] = r.delta_prime.value_or(TG_UNREACHABLE);
        if (delta) delta[s * n + t] = r.delta;
      }
    }
  });
}

tg_status tg_expected_paths_full(uint64_t n, double* out) {
  return guard([&] {
    require(out, "out");
    *out = tempograph::formulas::expected_paths_full(n);
  });
}

tg_status tg_phi(uint64_t k, uint64_t a, double* out) {
  return guard([&] {
    require(out, "out");
    *out = tempograph::formulas::phi(k, a);
  });
}

tg_status tg_expected_paths(uint64_t n, uint64_t k, uint64_t a, double* value,
                            double* large_a_approx) {
  return guard([&] {
    require(value, "value");
    *value = tempograph::formulas::expected_paths({n, k, a});
    if (large_a_approx) {
      *large_a_approx = tempograph::formulas::expected_paths_large_a(n, k);
    }
  });
}

tg_status tg_star_md_formula(uint64_t a, double nprime, tg_star_md* out) {
  return guard([&] {
    require(out, "out");
    const auto md = tempograph::formulas::star_md(a, nprime);
    *out = {md.value, md.cond_exp, md.p_fail};
  });
}

tg_status tg_extend_try_params_compute(uint64_t n, double c1, double r,
                                       tg_extend_try_params* out) {
  return guard([&] {
    require(out, "out");
    *out = to_c(tempograph::formulas::extend_try_params(n, c1, r));
  });
}

tg_status tg_bridges_opt_formula(uint64_t n, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = tempograph::formulas::bridges_opt_formula(n);
  });
}

size_t tg_formula_count(void) { return tempograph::formulas::catalog().size(); }

tg_status tg_formula_get(size_t index, tg_formula_info* out) {
  return guard([&] {
    require(out, "out");
    const auto cat = tempograph::formulas::catalog();
    if (index >= cat.size()) throw tempograph::InputError("formula index out of range");
    // Catalog entries are string literals, hence NUL-terminated.
    *out = {cat[index].name.data(), cat[index].expression.data(),
            cat[index].citation.data()};
  });
}

tg_status tg_estimate_path_count(uint64_t n, uint64_t k, uint32_t a,
                                 uint64_t samples, uint64_t seed,
                                 unsigned threads, tg_estimate* out) {
  return guard([&] {
    require(out, "out");
    *out = to_c(tempograph::estimate_path_count(n, k, a, samples, seed, threads));
  });
}

tg_status tg_estimate_distances(const tg_base_graph* base, uint32_t a,
                                double nprime, uint64_t samples, uint64_t seed,
                                unsigned threads, tg_distance_estimates* out,
                                double* pair_means) {
  return guard([&] {
    require(base, "base");
    require(out, "out");
    const auto est = tempograph::estimate_distances(base->base, a, nprime,
                                                    samples, seed, threads);
    out->md = to_c(est.md);
    out->td = to_c(est.td);
    out->max_delta_prime = est.max_delta_prime.value_or(0);
    out->max_delta = est.max_delta;
    if (pair_means) {
      std::memcpy(pair_means, est.pair_means.data(),
                  est.pair_means.size() * sizeof(double));
    }
  });
}

tg_status tg_exhaustive_expectation(const tg_base_graph* base, uint32_t a,
                                    double nprime, int64_t path_length,
                                    tg_exhaustive* out, double* pair_means) {
  return guard([&] {
    require(base, "base");
    require(out, "out");
    std::optional<std::size_t> len;
    if (path_length >= 0) len = static_cast<std::size_t>(path_length);
    const auto ex = tempograph::exhaustive_all(base->base, a, nprime, len);
    *out = {};
    out->labelings = ex.labelings;
    out->md = ex.md.convert_to<double>();
    out->td = ex.td.convert_to<double>();
    if (ex.md_argmax) {
      out->has_argmax = 1;
      out->argmax_s = ex.md_argmax->first;
      out->argmax_t = ex.md_argmax->second;
    }
    if (ex.path_count) {
      out->has_path_count = 1;
      out->path_count = ex.path_count->convert_to<double>();
    }
    if (pair_means) {
      for (std::size_t i = 0; i < ex.pair_means.size(); ++i) {
        pair_means[i] = ex.pair_means[i].convert_to<double>();
      }
    }
  });
}

tg_status tg_extend_try(const tg_graph* graph, uint32_t s, uint32_t t,
                        const tg_extend_try_params* params,
                        tg_extend_try_outcome* out, tg_time_edge* journey,
                        size_t capacity) {
  return guard([&] {
    require(graph, "graph");
    require(params, "params");
    require(out, "out");
    const auto o = tempograph::extend_try(graph->graph, s, t, from_c(*params));
    *out = {};
    out->success = o.success ? 1 : 0;
    out->hops = o.hops;
    out->arrival_time = o.arrival_time;
    out->failure_mode = static_cast<tg_extend_try_failure>(o.failure_mode);
    if (o.journey) {
      const auto& hops = o.journey->time_edges();
      out->journey_length = hops.size();
      for (size_t i = 0; journey && i < hops.size() && i < capacity; ++i) {
        journey[i] = {hops[i].from, hops[i].to, hops[i].label};
      }
    }
  });
}

tg_status tg_extend_try_experiment(uint64_t n, double c1, double r,
                                   uint64_t trials, uint64_t seed,
                                   int allow_small_params, unsigned threads,
                                   tg_extend_try_report* out) {
  return guard([&] {
    require(out, "out");
    const auto rep = tempograph::extend_try_experiment(
        n, c1, r, trials, seed, allow_small_params != 0, threads);
    *out = {to_c(rep.params), rep.trials,       rep.seed,
            rep.successes,    rep.no_extension, rep.window_exhausted,
            rep.window_unreachable, rep.success_rate, rep.std_error};
  });
}

tg_status tg_bridges_solve(uint64_t n, tg_bridges** out) {
  return guard([&] {
    require(out, "out");
    *out = new tg_bridges{tempograph::bridges::greedy(n)};
  });
}

size_t tg_bridges_size(const tg_bridges* b) { return b->solution.contents.size(); }
const uint64_t* tg_bridges_contents(const tg_bridges* b) {
  return b->solution.contents.data();
}
const uint64_t* tg_bridges_costs(const tg_bridges* b) {
  return b->solution.costs.data();
}
uint64_t tg_bridges_max_cost(const tg_bridges* b) { return b->solution.max_cost; }
uint64_t tg_bridges_opt(const tg_bridges* b) { return b->solution.opt_formula; }
void tg_bridges_free(tg_bridges* b) { delete b; }

tg_status tg_bridges_oracle(uint64_t n, uint64_t* out) {
  return guard([&] {
    require(out, "out");
    *out = tempograph::bridges::oracle(n);
  });
}

}  // extern "C"
