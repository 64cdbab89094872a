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

// tempograph command-line front end. Links only the C API.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tempograph/tempograph.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 20170101;
constexpr int kExitInput = 2;
constexpr int kExitScale = 3;
constexpr int kExitInternal = 1;

struct CliError {
  int code;
  std::string message;
};

int exit_code_for(tg_status st) {
  switch (st) {
    case TG_OK: return 0;
    case TG_ERR_INPUT:
    case TG_ERR_IO: return kExitInput;
    case TG_ERR_SCALE: return kExitScale;
    default: return kExitInternal;
  }
}

void check(tg_status st) {
  if (st != TG_OK) throw CliError{exit_code_for(st), tg_last_error()};
}

[[noreturn]] void input_error(const std::string& message) {
  throw CliError{kExitInput, message};
}

struct GraphDeleter {
  void operator()(tg_graph* g) const { tg_graph_free(g); }
};
struct BaseDeleter {
  void operator()(tg_base_graph* b) const { tg_base_free(b); }
};
struct DistanceDeleter {
  void operator()(tg_distance* d) const { tg_distance_free(d); }
};
struct BridgesDeleter {
  void operator()(tg_bridges* b) const { tg_bridges_free(b); }
};
using GraphPtr = std::unique_ptr<tg_graph, GraphDeleter>;
using BasePtr = std::unique_ptr<tg_base_graph, BaseDeleter>;
using DistancePtr = std::unique_ptr<tg_distance, DistanceDeleter>;
using BridgesPtr = std::unique_ptr<tg_bridges, BridgesDeleter>;

GraphPtr load_graph(const std::string& path) {
  tg_graph* g = nullptr;
  check(tg_graph_load(path.c_str(), &g));
  return GraphPtr(g);
}

struct Globals {
  unsigned threads = 0;
  std::string format = "json";
  std::optional<std::uint64_t> seed;

  std::uint64_t resolved_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("TEMPOGRAPH_SEED"); env && *env) {
      std::uint64_t v = 0;
      const std::string s(env);
      std::size_t used = 0;
      try {
        v = std::stoull(s, &used, 10);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != s.size() || s.front() == '-') {
        input_error("TEMPOGRAPH_SEED is not an unsigned integer: " + s);
      }
      return v;
    }
    return kDefaultSeed;
  }
  bool csv() const { return format == "csv"; }
};

Json header(const std::string& command, const std::string& citation) {
  Json j;
  j["schema"] = 1;
  j["tool"] = "tempograph";
  j["tool_version"] = tg_version();
  j["command"] = command;
  j["citation"] = citation;
  return j;
}

Json finite_or_null(double v) {
  return std::isfinite(v) ? Json(v) : Json(nullptr);
}

Json delta_prime_json(std::uint32_t dp) {
  return dp == TG_UNREACHABLE ? Json(nullptr) : Json(dp);
}

Json journey_json(const tg_time_edge* edges, std::size_t count) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < count; ++i) {
    arr.push_back({{"from", edges[i].from}, {"to", edges[i].to},
                   {"label", edges[i].label}});
  }
  return arr;
}

Json estimate_json(const tg_estimate& e) {
  Json j;
  j["mean"] = e.mean;
  j["std_error"] = e.std_error;
  if (e.has_argmax) {
    j["argmax_pair"] = {e.argmax_s, e.argmax_t};
  }
  return j;
}

tg_family parse_family(const std::string& name) {
  if (name == "clique") return TG_FAMILY_CLIQUE;
  if (name == "star") return TG_FAMILY_STAR;
  if (name == "path") return TG_FAMILY_PATH;
  input_error("unknown family: " + name);
}

// Shared graph parameters for generate, md and td.
struct FamilyArgs {
  std::string family = "clique";
  std::uint32_t n = 0;
  std::optional<std::uint32_t> a;
  std::optional<double> nprime;

  void add_to(CLI::App* cmd, bool n_required) {
    cmd->add_option("--family", family, "clique, star or path")
        ->check(CLI::IsMember({"clique", "star", "path"}));
    auto* opt = cmd->add_option("--n", n, "number of vertices");
    if (n_required) opt->required();
    cmd->add_option("--a", a, "lifetime: labels are drawn from 1..a (default n)");
    cmd->add_option("--nprime", nprime,
                    "slow-journey time n' (default n/2 for the normalized "
                    "clique, a otherwise)");
  }
  std::uint32_t lifetime() const { return a.value_or(n); }
  double slow_arrival() const {
    if (nprime) return *nprime;
    if (family == "clique" && lifetime() == n) return n / 2.0;
    return lifetime();
  }
  BasePtr make_base() const {
    tg_base_graph* b = nullptr;
    check(tg_base_make(parse_family(family), n, &b));
    return BasePtr(b);
  }
};

// ---- generate ----

struct GenerateArgs {
  FamilyArgs graph;
  std::string out;
};

void run_generate(const Globals& g, const GenerateArgs& args) {
  BasePtr base = args.graph.make_base();
  tg_graph* raw = nullptr;
  check(tg_graph_sample(base.get(), args.graph.lifetime(),
                        args.graph.slow_arrival(), g.resolved_seed(), 0, &raw));
  GraphPtr graph(raw);
  if (!args.out.empty()) {
    check(tg_graph_save(graph.get(), args.out.c_str()));
    return;
  }
  char* text = nullptr;
  check(tg_graph_format(graph.get(), &text));
  std::cout << text;
  tg_string_free(text);
}

// ---- distance ----

struct DistanceArgs {
  std::string in;
  std::optional<std::uint32_t> source;
  std::optional<std::uint32_t> target;
};

void print_matrix_csv(std::uint32_t n, const std::vector<std::uint32_t>& dp,
                      const std::vector<double>& d) {
  std::cout << "source,target,delta_prime,delta\n";
  for (std::uint32_t s = 0; s < n; ++s) {
    for (std::uint32_t t = 0; t < n; ++t) {
      const std::uint32_t v = dp[std::size_t{s} * n + t];
      std::cout << s << ',' << t << ',';
      if (v != TG_UNREACHABLE) std::cout << v;
      std::cout << ',' << Json(d[std::size_t{s} * n + t]).dump() << '\n';
    }
  }
}

void run_distance(const Globals& g, const DistanceArgs& args, Json& out) {
  GraphPtr graph = load_graph(args.in);
  const std::uint32_t n = tg_graph_num_vertices(graph.get());
  if (args.source.has_value() != args.target.has_value()) {
    input_error("--source and --target must be given together");
  }
  if (!args.source) {
    std::vector<std::uint32_t> dp(std::size_t{n} * n);
    std::vector<double> d(std::size_t{n} * n);
    check(tg_all_pairs(graph.get(), dp.data(), d.data()));
    if (g.csv()) {
      print_matrix_csv(n, dp, d);
      return;
    }
    out = header("distance", "foremost journeys and temporal distance, all pairs");
    out["input"] = args.in;
    out["num_vertices"] = n;
    out["max_label"] = tg_graph_max_label(graph.get());
    out["nprime"] = tg_graph_nprime(graph.get());
    Json rows = Json::array();
    Json rows_delta = Json::array();
    for (std::uint32_t s = 0; s < n; ++s) {
      Json row = Json::array();
      Json row_delta = Json::array();
      for (std::uint32_t t = 0; t < n; ++t) {
        row.push_back(delta_prime_json(dp[std::size_t{s} * n + t]));
        row_delta.push_back(d[std::size_t{s} * n + t]);
      }
      rows.push_back(std::move(row));
      rows_delta.push_back(std::move(row_delta));
    }
    out["delta_prime"] = std::move(rows);
    out["delta"] = std::move(rows_delta);
    return;
  }
  if (g.csv()) input_error("CSV output is only available for the full matrix");
  tg_distance* raw = nullptr;
  check(tg_foremost_journey(graph.get(), *args.source, *args.target, &raw));
  DistancePtr dist(raw);
  out = header("distance", "foremost journey and temporal distance");
  out["input"] = args.in;
  out["source"] = *args.source;
  out["target"] = *args.target;
  const std::uint32_t dp = tg_distance_delta_prime(dist.get());
  out["reachable"] = dp != TG_UNREACHABLE;
  out["delta_prime"] = delta_prime_json(dp);
  out["delta"] = tg_distance_delta(dist.get());
  if (dp != TG_UNREACHABLE) {
    out["witness"] = journey_json(tg_distance_witness(dist.get()),
                                  tg_distance_witness_length(dist.get()));
  } else {
    out["witness"] = nullptr;
  }
}

// ---- path-count ----

struct PathCountArgs {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint32_t a = 0;
  std::uint64_t samples = 0;
  bool exhaustive = false;
};

void run_path_count(const Globals& g, const PathCountArgs& args, Json& out) {
  if (g.csv()) input_error("path-count has no tabular output; use --format json");
  double value = 0;
  double large_a = 0;
  check(tg_expected_paths(args.n, args.k, args.a, &value, &large_a));
  out = header("path-count",
               "expected number of length-k temporal paths in the uniform "
               "random temporal clique");
  out["n"] = args.n;
  out["k"] = args.k;
  out["a"] = args.a;
  out["formula"] = value;
  out["large_a_approximation"] = finite_or_null(large_a);
  if (args.samples > 0) {
    const std::uint64_t seed = g.resolved_seed();
    tg_estimate e{};
    check(tg_estimate_path_count(args.n, args.k, args.a, args.samples, seed,
                                 g.threads, &e));
    out["seed"] = seed;
    out["samples"] = args.samples;
    out["estimate"] = estimate_json(e);
  }
  if (args.exhaustive) {
    if (args.n > UINT32_MAX) input_error("n too large for exhaustive mode");
    tg_base_graph* raw = nullptr;
    check(tg_base_make(TG_FAMILY_CLIQUE, static_cast<std::uint32_t>(args.n), &raw));
    BasePtr base(raw);
    tg_exhaustive ex{};
    check(tg_exhaustive_expectation(base.get(), args.a, args.a,
                                    static_cast<std::int64_t>(args.k), &ex,
                                    nullptr));
    out["exhaustive"] = {{"labelings", ex.labelings},
                         {"path_count", ex.path_count}};
  }
}

// ---- md / td ----

struct DistanceEstimateArgs {
  FamilyArgs graph;
  std::string in;
  std::uint64_t samples = 10000;
  bool exhaustive = false;
};

void run_md_td(const Globals& g, const DistanceEstimateArgs& args,
               bool is_md, Json& out) {
  const std::string command = is_md ? "md" : "td";
  BasePtr base;
  std::uint32_t a = 0;
  double nprime = 0;
  std::string family = args.graph.family;
  if (!args.in.empty()) {
    GraphPtr graph = load_graph(args.in);
    tg_base_graph* raw = nullptr;
    check(tg_base_from_graph(graph.get(), &raw));
    base.reset(raw);
    a = args.graph.a.value_or(tg_graph_max_label(graph.get()));
    nprime = args.graph.nprime.value_or(tg_graph_nprime(graph.get()));
    family = "file";
  } else {
    if (args.graph.n == 0) input_error("--n is required unless --in is given");
    base = args.graph.make_base();
    a = args.graph.lifetime();
    nprime = args.graph.slow_arrival();
  }
  const std::uint32_t n = tg_base_num_vertices(base.get());
  const std::uint64_t seed = g.resolved_seed();

  std::vector<double> pair_means(std::size_t{n} * n);
  tg_distance_estimates est{};
  if (args.samples > 0) {
    check(tg_estimate_distances(base.get(), a, nprime, args.samples, seed,
                                g.threads, &est, pair_means.data()));
  }
  std::optional<tg_exhaustive> ex;
  std::vector<double> exact_pairs(std::size_t{n} * n);
  if (args.exhaustive) {
    ex.emplace();
    check(tg_exhaustive_expectation(base.get(), a, nprime, -1, &*ex,
                                    exact_pairs.data()));
  }
  if (args.samples == 0 && !ex) input_error("--samples must be positive");

  if (g.csv()) {
    if (!is_md) input_error("td has no tabular output; use --format json");
    const auto& m = ex ? exact_pairs : pair_means;
    std::cout << "source,target,expected_delta\n";
    for (std::uint32_t s = 0; s < n; ++s) {
      for (std::uint32_t t = 0; t < n; ++t) {
        if (s == t) continue;
        std::cout << s << ',' << t << ','
                  << Json(m[std::size_t{s} * n + t]).dump() << '\n';
      }
    }
    return;
  }

  out = header(command, is_md ? "maximum expected temporal distance (MD)"
                              : "expected temporal diameter (TD)");
  out["family"] = family;
  if (!args.in.empty()) out["input"] = args.in;
  out["n"] = n;
  out["a"] = a;
  out["nprime"] = nprime;
  if (args.samples > 0) {
    out["seed"] = seed;
    out["samples"] = args.samples;
    out["estimate"] = estimate_json(is_md ? est.md : est.td);
    out["max_delta_prime_seen"] = est.max_delta_prime;
  }
  if (ex) {
    Json e;
    e["labelings"] = ex->labelings;
    e["value"] = is_md ? ex->md : ex->td;
    if (is_md && ex->has_argmax) e["argmax_pair"] = {ex->argmax_s, ex->argmax_t};
    out["exhaustive"] = std::move(e);
  }
  if (is_md && family == "star") {
    tg_star_md md{};
    const tg_status st = tg_star_md_formula(a, nprime, &md);
    if (st == TG_OK) {
      out["closed_form"] = {{"value", md.value},
                            {"cond_exp", md.cond_exp},
                            {"p_fail", md.p_fail},
                            {"citation",
                             "uniform random star, maximum expected temporal "
                             "distance"}};
    } else {
      std::cerr << "tempograph: closed form skipped: " << tg_last_error() << '\n';
      out["closed_form"] = nullptr;
    }
  }
}

// ---- extend-try ----

struct ExtendTryArgs {
  std::uint64_t n = 0;
  double c1 = 0;
  double r = 0;
  std::uint64_t trials = 100;
  bool allow_small = false;
};

Json params_json(const tg_extend_try_params& p) {
  Json j;
  j["k"] = p.k;
  j["t0"] = p.t0;
  j["success_bound"] = p.success_bound;
  j["window_lower"] = p.window_lower;
  j["window_upper"] = p.window_upper;
  j["iterations"] = p.iterations;
  j["below_regime"] = p.below_regime != 0;
  j["window_reachable"] = p.window_reachable != 0;
  j["bound_vacuous"] = p.bound_vacuous != 0;
  return j;
}

void run_extend_try(const Globals& g, const ExtendTryArgs& args, Json& out) {
  if (g.csv()) input_error("extend-try has no tabular output; use --format json");
  const std::uint64_t seed = g.resolved_seed();
  tg_extend_try_report rep{};
  check(tg_extend_try_experiment(args.n, args.c1, args.r, args.trials, seed,
                                 args.allow_small ? 1 : 0, g.threads, &rep));
  out = header("extend-try",
               "Extend-Try greedy journey on the normalized uniform random "
               "temporal clique");
  out["n"] = args.n;
  out["c1"] = args.c1;
  out["r"] = args.r;
  out["seed"] = seed;
  out["trials"] = rep.trials;
  out["params"] = params_json(rep.params);
  out["successes"] = rep.successes;
  out["failures"] = {{"no_extension", rep.no_extension},
                     {"window_exhausted", rep.window_exhausted},
                     {"window_unreachable", rep.window_unreachable}};
  out["success_rate"] = rep.success_rate;
  out["std_error"] = rep.std_error;
}

// ---- bridges ----

void run_bridges(const Globals& g, std::uint64_t n, Json& out) {
  tg_bridges* raw = nullptr;
  check(tg_bridges_solve(n, &raw));
  BridgesPtr sol(raw);
  std::uint64_t oracle = 0;
  check(tg_bridges_oracle(n, &oracle));
  const std::size_t size = tg_bridges_size(sol.get());
  const std::uint64_t* contents = tg_bridges_contents(sol.get());
  const std::uint64_t* costs = tg_bridges_costs(sol.get());
  if (g.csv()) {
    std::cout << "bridge,contents,cost\n";
    for (std::size_t i = 0; i < size; ++i) {
      std::cout << i + 1 << ',' << contents[i] << ',' << costs[i] << '\n';
    }
    return;
  }
  out = header("bridges", "bridges min-max assignment optimum");
  out["n"] = n;
  out["framing"] =
      "n people cross n bridges, bridge i costing i plus its load; "
      "equivalently n journeys through a two-vertex multi-labeled digraph";
  out["contents"] = std::vector<std::uint64_t>(contents, contents + size);
  out["costs"] = std::vector<std::uint64_t>(costs, costs + size);
  out["max_cost"] = tg_bridges_max_cost(sol.get());
  out["opt_oracle"] = oracle;
  out["opt_formula"] = tg_bridges_opt(sol.get());
}

// ---- formulas ----

void run_formulas(const Globals& g, Json& out) {
  const std::size_t count = tg_formula_count();
  if (g.csv()) {
    std::cout << "name,expression,citation\n";
    for (std::size_t i = 0; i < count; ++i) {
      tg_formula_info info{};
      check(tg_formula_get(i, &info));
      std::cout << info.name << ",\"" << info.expression << "\",\""
                << info.citation << "\"\n";
    }
    return;
  }
  out = header("formulas", "closed forms implemented by tempograph");
  Json list = Json::array();
  for (std::size_t i = 0; i < count; ++i) {
    tg_formula_info info{};
    check(tg_formula_get(i, &info));
    list.push_back({{"name", info.name},
                    {"expression", info.expression},
                    {"citation", info.citation}});
  }
  out["formulas"] = std::move(list);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniform random temporal graphs: journeys, distances, "
               "Extend-Try and bridges"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(tg_version()));

  Globals globals;
  app.add_option("--threads", globals.threads,
                 "worker threads (default: available parallelism)");
  app.add_option("--format", globals.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", globals.seed,
                 "RNG seed (default: $TEMPOGRAPH_SEED, else 20170101)");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "sample a labeled graph in tgraph format");
  gen.graph.add_to(generate, true);
  generate->add_option("--out", gen.out, "output file (default stdout)");

  DistanceArgs dist;
  auto* distance = app.add_subcommand(
      "distance", "foremost journey for one pair, or the all-pairs matrix");
  distance->add_option("--in", dist.in, "tgraph file")->required();
  distance->add_option("--source", dist.source);
  distance->add_option("--target", dist.target);

  PathCountArgs pc;
  auto* path_count = app.add_subcommand(
      "path-count", "expected temporal path count in the random clique");
  path_count->add_option("--n", pc.n)->required();
  path_count->add_option("--k", pc.k, "path length in edges")->required();
  path_count->add_option("--a", pc.a)->required();
  path_count->add_option("--samples", pc.samples,
                         "Monte Carlo samples (0 disables, n <= 8)");
  path_count->add_flag("--exhaustive", pc.exhaustive,
                       "exact expectation over all labelings");

  DistanceEstimateArgs md_args;
  auto* md = app.add_subcommand("md", "maximum expected temporal distance");
  md_args.graph.add_to(md, false);
  md->add_option("--in", md_args.in, "use the structure of a tgraph file");
  md->add_option("--samples", md_args.samples);
  md->add_flag("--exhaustive", md_args.exhaustive);

  DistanceEstimateArgs td_args;
  auto* td = app.add_subcommand("td", "expected temporal diameter");
  td_args.graph.add_to(td, false);
  td->add_option("--in", td_args.in, "use the structure of a tgraph file");
  td->add_option("--samples", td_args.samples);
  td->add_flag("--exhaustive", td_args.exhaustive);

  ExtendTryArgs et;
  auto* extend_try = app.add_subcommand(
      "extend-try", "run Extend-Try from vertex 0 to vertex 1 on random cliques");
  extend_try->add_option("--n", et.n)->required();
  extend_try->add_option("--c1", et.c1)->required();
  extend_try->add_option("--r", et.r)->required();
  extend_try->add_option("--trials", et.trials);
  extend_try->add_flag("--allow-small-params", et.allow_small,
                       "permit c1 <= 1 or r <= 1");

  std::uint64_t bridges_n = 0;
  auto* bridges = app.add_subcommand(
      "bridges",
      "min-max bridges assignment (equivalently, journeys through a "
      "two-vertex multi-labeled digraph)");
  bridges->add_option("--n", bridges_n, "number of people and bridges")->required();

  bool list = false;
  auto* formulas = app.add_subcommand("formulas", "closed forms and citations");
  formulas->add_flag("--list", list)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  Json out;
  try {
    if (*generate) {
      run_generate(globals, gen);
    } else if (*distance) {
      run_distance(globals, dist, out);
    } else if (*path_count) {
      run_path_count(globals, pc, out);
    } else if (*md) {
      run_md_td(globals, md_args, true, out);
    } else if (*td) {
      run_md_td(globals, td_args, false, out);
    } else if (*extend_try) {
      run_extend_try(globals, et, out);
    } else if (*bridges) {
      run_bridges(globals, bridges_n, out);
    } else if (*formulas) {
      run_formulas(globals, out);
    }
  } catch (const CliError& e) {
    std::cerr << "tempograph: error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "tempograph: error: " << e.what() << '\n';
    return kExitInternal;
  }
  if (!out.is_null()) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    out["runtime_ms"] =
        std::chrono::duration<double, std::milli>(elapsed).count();
    std::cout << out.dump(2) << '\n';
  }
  return 0;
}
