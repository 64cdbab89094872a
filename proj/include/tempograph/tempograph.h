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

/*
 * C interface to the tempograph library.
 *
 * Every fallible call returns a tg_status. On failure a description is
 * available from tg_last_error() on the same thread until the next failing
 * call. Objects behind opaque handles are immutable and may be shared across
 * threads; release each with its matching *_free function.
 */
#ifndef TEMPOGRAPH_TEMPOGRAPH_H_
#define TEMPOGRAPH_TEMPOGRAPH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TEMPOGRAPH_BUILDING)
#    define TG_API __declspec(dllexport)
#  else
#    define TG_API __declspec(dllimport)
#  endif
#else
#  define TG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tg_status {
  TG_OK = 0,
  TG_ERR_INPUT = 1,  /* precondition violated or malformed input */
  TG_ERR_SCALE = 2,  /* exceeds an exhaustive-enumeration guard */
  TG_ERR_IO = 3,
  TG_ERR_INTERNAL = 4
} tg_status;

TG_API const char* tg_version(void);
TG_API const char* tg_last_error(void);

/* ---- graphs ------------------------------------------------------------ */

typedef struct tg_graph tg_graph;            /* labeled temporal graph */
typedef struct tg_base_graph tg_base_graph;  /* unlabeled structure */

typedef enum tg_family {
  TG_FAMILY_CLIQUE = 0,
  TG_FAMILY_STAR = 1, /* vertex 0 is the centre */
  TG_FAMILY_PATH = 2  /* vertices in line order */
} tg_family;

#define TG_UNREACHABLE UINT32_MAX

typedef struct tg_time_edge {
  uint32_t from;
  uint32_t to;
  uint32_t label;
} tg_time_edge;

TG_API tg_status tg_graph_parse(const char* text, size_t length, tg_graph** out);
TG_API tg_status tg_graph_load(const char* path, tg_graph** out);
TG_API tg_status tg_graph_save(const tg_graph* graph, const char* path);
/* Canonical tgraph text; release with tg_string_free. */
TG_API tg_status tg_graph_format(const tg_graph* graph, char** out);
TG_API void tg_string_free(char* text);
TG_API void tg_graph_free(tg_graph* graph);

TG_API uint32_t tg_graph_num_vertices(const tg_graph* graph);
TG_API size_t tg_graph_num_edges(const tg_graph* graph);
TG_API uint32_t tg_graph_max_label(const tg_graph* graph);
TG_API double tg_graph_nprime(const tg_graph* graph);

/* num_vertices counts every vertex (a star has num_vertices - 1 leaves). */
TG_API tg_status tg_base_make(tg_family family, uint32_t num_vertices,
                              tg_base_graph** out);
TG_API tg_status tg_base_from_graph(const tg_graph* graph, tg_base_graph** out);
TG_API void tg_base_free(tg_base_graph* base);
TG_API uint32_t tg_base_num_vertices(const tg_base_graph* base);
TG_API size_t tg_base_num_edges(const tg_base_graph* base);

/* One uniform label in 1..a per edge; pure function of (seed, sample_index). */
TG_API tg_status tg_graph_sample(const tg_base_graph* base, uint32_t a,
                                 double nprime, uint64_t seed,
                                 uint64_t sample_index, tg_graph** out);

/* ---- journeys ---------------------------------------------------------- */

typedef struct tg_distance tg_distance;

TG_API int tg_validate_journey(const tg_graph* graph, const tg_time_edge* edges,
                               size_t count);
TG_API tg_status tg_foremost_journey(const tg_graph* graph, uint32_t s,
                                     uint32_t t, tg_distance** out);
/* TG_UNREACHABLE when no journey exists; 0 when s == t. */
TG_API uint32_t tg_distance_delta_prime(const tg_distance* d);
TG_API double tg_distance_delta(const tg_distance* d);
/* Witness foremost journey; length 0 and NULL when unreachable or s == t. */
TG_API size_t tg_distance_witness_length(const tg_distance* d);
TG_API const tg_time_edge* tg_distance_witness(const tg_distance* d);
TG_API void tg_distance_free(tg_distance* d);

/* Row-major n*n buffers; either may be NULL. */
TG_API tg_status tg_all_pairs(const tg_graph* graph, uint32_t* delta_prime,
                              double* delta);

/* ---- closed forms ------------------------------------------------------ */

TG_API tg_status tg_expected_paths_full(uint64_t n, double* out);
TG_API tg_status tg_phi(uint64_t k, uint64_t a, double* out);
/* large_a_approx may be NULL. */
TG_API tg_status tg_expected_paths(uint64_t n, uint64_t k, uint64_t a,
                                   double* value, double* large_a_approx);

typedef struct tg_star_md {
  double value;
  double cond_exp;
  double p_fail;
} tg_star_md;
TG_API tg_status tg_star_md_formula(uint64_t a, double nprime, tg_star_md* out);

typedef struct tg_extend_try_params {
  uint64_t n;
  double c1;
  double r;
  double k;
  double t0;
  double success_bound;
  double window_lower;
  double window_upper;
  uint64_t iterations;
  int below_regime;
  int window_reachable;
  int bound_vacuous;
} tg_extend_try_params;
TG_API tg_status tg_extend_try_params_compute(uint64_t n, double c1, double r,
                                              tg_extend_try_params* out);

TG_API tg_status tg_bridges_opt_formula(uint64_t n, uint64_t* out);

typedef struct tg_formula_info {
  const char* name;
  const char* expression;
  const char* citation;
} tg_formula_info;
TG_API size_t tg_formula_count(void);
TG_API tg_status tg_formula_get(size_t index, tg_formula_info* out);

/* ---- estimators -------------------------------------------------------- */

typedef enum tg_quantity {
  TG_QUANTITY_PATH_COUNT = 0,
  TG_QUANTITY_MD = 1,
  TG_QUANTITY_TD = 2,
  TG_QUANTITY_PAIR_DISTANCE = 3
} tg_quantity;

typedef struct tg_estimate {
  tg_quantity quantity;
  double mean;
  double std_error;
  uint64_t samples;
  uint64_t seed;
  int has_argmax;
  uint32_t argmax_s;
  uint32_t argmax_t;
} tg_estimate;

/* threads == 0 uses the available hardware parallelism. Results do not
 * depend on the thread count. */
TG_API tg_status tg_estimate_path_count(uint64_t n, uint64_t k, uint32_t a,
                                        uint64_t samples, uint64_t seed,
                                        unsigned threads, tg_estimate* out);

typedef struct tg_distance_estimates {
  tg_estimate md;
  tg_estimate td;
  uint32_t max_delta_prime; /* largest finite delta' seen, 0 if none */
  double max_delta;
} tg_distance_estimates;

/* pair_means: optional row-major n*n buffer of per-pair mean delta. */
TG_API tg_status tg_estimate_distances(const tg_base_graph* base, uint32_t a,
                                       double nprime, uint64_t samples,
                                       uint64_t seed, unsigned threads,
                                       tg_distance_estimates* out,
                                       double* pair_means);

typedef struct tg_exhaustive {
  uint64_t labelings;
  double md;
  double td;
  int has_argmax;
  uint32_t argmax_s;
  uint32_t argmax_t;
  int has_path_count;
  double path_count;
} tg_exhaustive;

/* path_length < 0 skips journey counting. */
TG_API tg_status tg_exhaustive_expectation(const tg_base_graph* base,
                                           uint32_t a, double nprime,
                                           int64_t path_length,
                                           tg_exhaustive* out,
                                           double* pair_means);

/* ---- Extend-Try -------------------------------------------------------- */

typedef enum tg_extend_try_failure {
  TG_EXTEND_TRY_NONE = 0,
  TG_EXTEND_TRY_NO_EXTENSION = 1,
  TG_EXTEND_TRY_WINDOW_EXHAUSTED = 2,
  TG_EXTEND_TRY_WINDOW_UNREACHABLE = 3
} tg_extend_try_failure;

typedef struct tg_extend_try_outcome {
  int success;
  uint64_t hops;
  uint32_t arrival_time;
  tg_extend_try_failure failure_mode;
  size_t journey_length;
} tg_extend_try_outcome;

/* journey may be NULL; otherwise up to `capacity` time edges are written. */
TG_API tg_status tg_extend_try(const tg_graph* graph, uint32_t s, uint32_t t,
                               const tg_extend_try_params* params,
                               tg_extend_try_outcome* out,
                               tg_time_edge* journey, size_t capacity);

typedef struct tg_extend_try_report {
  tg_extend_try_params params;
  uint64_t trials;
  uint64_t seed;
  uint64_t successes;
  uint64_t no_extension;
  uint64_t window_exhausted;
  uint64_t window_unreachable;
  double success_rate;
  double std_error;
} tg_extend_try_report;

TG_API tg_status tg_extend_try_experiment(uint64_t n, double c1, double r,
                                          uint64_t trials, uint64_t seed,
                                          int allow_small_params,
                                          unsigned threads,
                                          tg_extend_try_report* out);

/* ---- bridges ----------------------------------------------------------- */

typedef struct tg_bridges tg_bridges;

TG_API tg_status tg_bridges_solve(uint64_t n, tg_bridges** out);
TG_API size_t tg_bridges_size(const tg_bridges* b);
TG_API const uint64_t* tg_bridges_contents(const tg_bridges* b);
TG_API const uint64_t* tg_bridges_costs(const tg_bridges* b);
TG_API uint64_t tg_bridges_max_cost(const tg_bridges* b);
TG_API uint64_t tg_bridges_opt(const tg_bridges* b);
TG_API void tg_bridges_free(tg_bridges* b);
TG_API tg_status tg_bridges_oracle(uint64_t n, uint64_t* out);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* TEMPOGRAPH_TEMPOGRAPH_H_ */
