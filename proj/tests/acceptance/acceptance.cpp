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

// Acceptance suite. Prints one PASS/FAIL line per criterion; exits nonzero if
// any selected criterion fails. Tolerances are fixed below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "../support/run_command.hpp"
#include "CLI11.hpp"
#include "tempograph/bridges.hpp"
#include "tempograph/estimators.hpp"
#include "tempograph/extend_try.hpp"
#include "tempograph/formulas.hpp"
#include "tempograph/sampling.hpp"
#include "tempograph/temporal_graph.hpp"

namespace {

using namespace tempograph;

// Criterion 1
constexpr int kForemostGraphs = 500;
constexpr double kForemostBudgetSeconds = 30;
// Criterion 2
constexpr std::uint64_t kPathCountSamples = 100'000;
constexpr double kPathCountSigmas = 4;
constexpr double kPathCountBudgetSeconds = 120;
// Criterion 3
constexpr double kSignificantDigitsTolerance = 1e-12;
// Criterion 4
constexpr std::uint64_t kStarSamples = 100'000;
constexpr double kStarRelativeTolerance = 0.02;
constexpr double kStarClosedForm = 7.48;
// Criterion 5
constexpr std::uint64_t kMaxExhaustive = kMaxExhaustiveLabelings;
constexpr std::uint64_t kSharedSamples = 10'000;
// Criterion 6
constexpr std::uint64_t kCliqueSamples = 10'000;
constexpr double kSuccessSigmas = 4;
struct RegimeRun {
  std::uint64_t n;
  double c1;
  double r;
  std::uint64_t trials;
};
constexpr RegimeRun kRegimeRuns[] = {{10'000, 1.01, 1.01, 5000},
                                     {100'000, 1.01, 2.0, 100}};
// Criterion 7
constexpr std::uint64_t kBridgesGreedyMax = 10'000;
constexpr std::uint64_t kBridgesLiteralMax = 2'000;
constexpr std::uint64_t kBridgesFormulaMax = 1'000'000;
constexpr double kBridgesBudgetSeconds = 60;

constexpr std::uint64_t kSeed = 20170101;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [violated: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

BaseGraph random_base(std::uint64_t key, std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::uint64_t bits = mix64(key);
  std::uint64_t used = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (used == 64) {
        bits = mix64(bits);
        used = 0;
      }
      // Keep each pair with probability 3/4.
      if ((bits & 3) != 0) edges.emplace_back(u, v);
      bits >>= 2;
      used += 2;
    }
  }
  return BaseGraph(n, std::move(edges));
}

void criterion_1(Verdict& v) {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t pairs = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t bad_witnesses = 0;
  for (int i = 0; i < kForemostGraphs; ++i) {
    const std::size_t n = 2 + i % 6;
    const Label a = 1 + (i / 6) % 6;
    const BaseGraph base = i % 5 == 0 ? make_clique(n) : random_base(kSeed + i, n);
    const auto g = sample_labeling({&base, UniformLabels{a}, kSeed, static_cast<std::uint64_t>(i),
                                    (a + 1) / 2.0});
    const auto m = all_pairs_distances(g);
    for (Vertex s = 0; s < n; ++s) {
      for (Vertex t = 0; t < n; ++t) {
        ++pairs;
        const auto& r = m.at(s, t);
        if (r.delta_prime != oracles::brute_force_foremost(g, s, t)) ++mismatches;
        if (r.delta_prime && s != t && !(r.witness && validate_journey(g, *r.witness))) {
          ++bad_witnesses;
        }
      }
    }
  }
  const double secs = seconds_since(start);
  v.detail << kForemostGraphs << " graphs, " << pairs << " ordered pairs, "
           << mismatches << " mismatches, " << bad_witnesses << " bad witnesses, "
           << secs << " s";
  v.require(mismatches == 0, "foremost == brute force");
  v.require(bad_witnesses == 0, "witnesses validate");
  v.require(secs < kForemostBudgetSeconds, "runtime < 30 s");
}

void criterion_2(Verdict& v) {
  const auto start = std::chrono::steady_clock::now();
  int exact_checked = 0;
  int exact_failed = 0;
  for (std::uint64_t n = 2; n <= 4; ++n) {
    const auto base = make_clique(n);
    for (std::uint64_t a = 1; a <= 4; ++a) {
      for (std::uint64_t k = 1; k <= n - 1; ++k) {
        const Rational got = exhaustive_expectation(base, static_cast<Label>(a), a,
                                                    Quantity::kPathCount, k);
        ++exact_checked;
        if (got != formulas::expected_paths_exact({n, k, a})) ++exact_failed;
      }
    }
  }
  const auto k3 = make_clique(3);
  v.require(exhaustive_expectation(k3, 3, 3, Quantity::kPathCount, 2) == Rational(2),
            "n=3,k=2,a=3 -> 2");
  v.require(exhaustive_expectation(k3, 2, 2, Quantity::kPathCount, 2) == Rational(3, 2),
            "n=3,k=2,a=2 -> 3/2");
  v.detail << exact_checked << " exact (n,k,a) triples, " << exact_failed << " mismatches;";
  v.require(exact_failed == 0, "exhaustive == formula");

  double worst_sigma = 0;
  for (std::uint64_t k : {2, 3, 4}) {
    for (Label a : {4u, 8u}) {
      const auto est = estimate_path_count(5, k, a, kPathCountSamples, kSeed + k * 10 + a);
      const double want = formulas::expected_paths({5, k, a});
      const double sigma = std::abs(est.mean - want) / est.std_error;
      worst_sigma = std::max(worst_sigma, sigma);
      v.require(std::abs(est.mean - want) <= kPathCountSigmas * est.std_error,
                "MC n=5 k=" + std::to_string(k) + " a=" + std::to_string(a));
    }
  }
  const double secs = seconds_since(start);
  v.detail << " Monte Carlo worst deviation " << worst_sigma << " stderr; " << secs << " s";
  v.require(secs < kPathCountBudgetSeconds, "runtime < 2 min");
}

void criterion_3(Verdict& v) {
  double worst = 0;
  for (std::uint64_t n = 2; n <= 20; ++n) {
    Rational want = 1;
    for (std::uint64_t i = 2; i <= n; ++i) want *= i;
    Rational denom = 1;
    for (std::uint64_t i = 0; i + 1 < n; ++i) denom *= n - 1;
    want /= denom;
    const double w = want.convert_to<double>();
    const double rel = std::abs(formulas::expected_paths({n, n - 1, n - 1}) - w) / w;
    worst = std::max(worst, rel);
  }
  v.require(worst <= kSignificantDigitsTolerance, "12 significant digits for n <= 20");
  int increases = 0;
  for (std::uint64_t n = 5; n <= 200; ++n) {
    if (!(formulas::expected_paths({n, n - 1, n - 1}) <
          formulas::expected_paths({n - 1, n - 2, n - 2}))) {
      ++increases;
    }
  }
  v.require(increases == 0, "strictly decreasing on [4, 200]");
  v.detail << "worst relative error " << worst << "; " << increases
           << " non-decreasing steps; value at n=200 is "
           << formulas::expected_paths({200, 199, 199});
}

void criterion_4(Verdict& v) {
  const auto star = make_star(10);
  const auto est = estimate_md(star, 10, 10, kStarSamples, kSeed);
  const double rel = std::abs(est.mean - kStarClosedForm) / kStarClosedForm;
  v.detail << "MC MD(star a=10 n'=10) = " << est.mean << " +- " << est.std_error
           << " vs closed form " << formulas::star_md(10, 10).value << " (rel err "
           << rel << ", exhaustive leaf pair "
           << oracles::star_leaf_pair(10, 10).convert_to<double>() << ");";
  v.require(rel <= kStarRelativeTolerance, "MC within 2% of 7.48");

  const auto small = exhaustive_all(star, 2, 2);
  v.require(small.md == Rational(2), "exhaustive a=2 n'=2 -> 2");
  v.detail << " exhaustive a=2: " << small.md.convert_to<double>() << ";";

  for (std::uint64_t a = 1; a <= 4; ++a) {
    const auto f = formulas::star_md(a, static_cast<double>(a));
    const double p_fail = oracles::star_p_fail(a).convert_to<double>();
    v.require(std::abs(f.p_fail - p_fail) < 1e-15, "p_fail a=" + std::to_string(a));
    if (a >= 2) {
      const double cond = oracles::star_cond_exp(a).convert_to<double>();
      v.detail << " cond_exp a=" << a << ": formula " << f.cond_exp << " enumeration " << cond
               << ";";
      v.require(std::abs(f.cond_exp - cond) < 1e-12, "cond_exp a=" + std::to_string(a));
    }
  }
}

struct ExhaustiveConfig {
  std::string name;
  BaseGraph base;
};

void criterion_5(Verdict& v) {
  std::vector<ExhaustiveConfig> configs;
  for (std::size_t leaves = 1; leaves <= 6; ++leaves) {
    configs.push_back({"star" + std::to_string(leaves), make_star(leaves)});
    configs.push_back({"path" + std::to_string(leaves), make_path(leaves)});
  }
  for (std::size_t n = 2; n <= 5; ++n) {
    configs.push_back({"clique" + std::to_string(n), make_clique(n)});
  }
  int runs = 0;
  int violations = 0;
  std::uint64_t labelings = 0;
  for (const auto& c : configs) {
    const std::size_t m = c.base.edges().size();
    for (Label a = 1; a <= 8; ++a) {
      if (std::pow(static_cast<double>(a), static_cast<double>(m)) > kMaxExhaustive) break;
      for (double nprime : {(a + 1) / 2.0, static_cast<double>(a)}) {
        const auto r = exhaustive_all(c.base, a, nprime);
        ++runs;
        labelings += r.labelings;
        if (r.td < r.md) {
          ++violations;
          v.detail << " violation " << c.name << " a=" << a << ";";
        }
      }
    }
  }
  int mc_runs = 0;
  for (std::size_t n : {4u, 7u, 10u}) {
    const std::vector<ExhaustiveConfig> families{{"star", make_star(n - 1)},
                                                 {"path", make_path(n - 1)},
                                                 {"clique", make_clique(n)}};
    for (const auto& f : families) {
      for (double nprime : {n / 2.0, static_cast<double>(n)}) {
        const auto est = estimate_distances(f.base, static_cast<Label>(n), nprime,
                                            kSharedSamples, kSeed + n);
        ++mc_runs;
        if (est.td.exact_mean < est.md.exact_mean) {
          ++violations;
          v.detail << " MC violation " << f.name << n << ";";
        }
      }
    }
  }
  v.detail << runs << " exhaustive runs (" << labelings << " labelings), " << mc_runs
           << " shared-sample runs, " << violations << " violations";
  v.require(violations == 0, "TD >= MD");
}

void criterion_6(Verdict& v) {
  const auto est = estimate_distances(make_clique(8), 8, 4, kCliqueSamples, kSeed);
  v.require(est.max_delta_prime.value_or(0) <= 8, "every delta' <= 8");
  v.require(est.max_delta <= 4, "every delta <= 4");
  v.require(est.md.mean <= 4 && est.td.mean <= 4, "MD, TD <= 4");
  v.detail << "K8: max delta' " << est.max_delta_prime.value_or(0) << ", max delta "
           << est.max_delta << ", MD " << est.md.mean << ", TD " << est.td.mean << ";";

  // (a)
  const auto unreachable = extend_try_experiment(100, 2, 2, 50, kSeed);
  v.require(unreachable.window_unreachable == 50 && unreachable.params.bound_vacuous,
            "(a) window unreachable at n=100, c1=r=2");
  v.detail << " (a) " << unreachable.window_unreachable << "/50 unreachable;";

  // (b)
  std::vector<LabeledEdge> edges;
  for (Vertex a = 0; a < 6; ++a) {
    for (Vertex b = a + 1; b < 6; ++b) {
      Label l = 6;
      if (a == 0 && b == 2) l = 1;
      if (a == 1 && b == 2) l = 4;
      edges.push_back({a, b, {l}});
    }
  }
  const TemporalGraph planted(6, edges, 6, 3);
  const auto p6 = formulas::extend_try_params(6, 0.5, 1.5 / std::log(6.0));
  const auto out = extend_try(planted, 0, 1, p6);
  const bool planted_ok = out.success && out.hops == 1 && out.journey &&
                          out.journey->time_edges() ==
                              std::vector<TimeEdge>{{0, 2, 1}, {2, 1, 4}} &&
                          validate_journey(planted, *out.journey);
  v.require(planted_ok, "(b) planted chain");
  int checked = 0;
  int wrong = 0;
  const auto base = make_clique(400);
  const auto p400 = formulas::extend_try_params(400, 0.3, 0.3);
  for (std::uint64_t i = 0; i < 500; ++i) {
    const auto g = sample_labeling({&base, UniformLabels{400}, kSeed, i, 200});
    const auto o = extend_try(g, 0, 1, p400);
    if (!o.success) continue;
    ++checked;
    const auto& hops = o.journey->time_edges();
    bool ok = validate_journey(g, *o.journey) && o.arrival_time > p400.window_lower &&
              o.arrival_time < p400.window_upper && hops.back().to == 1;
    for (std::size_t j = 0; j + 1 < hops.size(); ++j) {
      ok = ok && hops[j].label > p400.k * j && hops[j].label < p400.k * (j + 1);
    }
    if (!ok) ++wrong;
  }
  v.require(wrong == 0, "(b) sampled successes are valid");
  v.detail << " (b) planted " << (planted_ok ? "ok" : "WRONG") << ", " << checked
           << " sampled successes, " << wrong << " invalid;";

  // (c)
  for (const auto& run : kRegimeRuns) {
    const auto rep = extend_try_experiment(run.n, run.c1, run.r, run.trials, kSeed);
    const auto exact = oracles::extend_try_success_probability(run.n, run.c1, run.r);
    const bool reachable = rep.params.window_reachable;
    v.detail << " (c) n=" << run.n << " c1=" << run.c1 << " r=" << run.r << ": "
             << rep.successes << "/" << rep.trials << " = " << rep.success_rate << " +- "
             << rep.std_error << ", bound " << rep.params.success_bound << ", exact "
             << (exact ? std::to_string(*exact) : std::string("n/a")) << ";";
    v.require(reachable, "(c) window reachable");
    v.require(rep.success_rate >= rep.params.success_bound - kSuccessSigmas * rep.std_error,
              "(c) rate >= bound - 4 stderr at n=" + std::to_string(run.n));
  }
}

void criterion_7(Verdict& v) {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t greedy_mismatch = 0;
  for (std::uint64_t n = 1; n <= kBridgesGreedyMax; ++n) {
    const std::uint64_t opt = bridges::oracle(n);
    if (bridges::greedy_indexed(n).max_cost != opt) ++greedy_mismatch;
    if (n <= kBridgesLiteralMax && bridges::greedy(n).max_cost != opt) ++greedy_mismatch;
  }
  std::uint64_t formula_mismatch = 0;
  std::uint64_t first_mismatch = 0;
  for (std::uint64_t n = 1; n <= kBridgesFormulaMax; ++n) {
    if (bridges::oracle(n) != formulas::bridges_opt_formula(n)) {
      if (formula_mismatch++ == 0) first_mismatch = n;
    }
  }
  const double secs = seconds_since(start);
  v.require(greedy_mismatch == 0, "greedy == oracle on [1, 1e4]");
  v.require(formula_mismatch == 0, "oracle == formula on [1, 1e6]");
  v.require(bridges::greedy(1).max_cost == 2, "n=1 -> 2");
  v.require(secs < kBridgesBudgetSeconds, "runtime < 1 min");
  v.detail << greedy_mismatch << " greedy mismatches, " << formula_mismatch
           << " formula mismatches";
  if (formula_mismatch) v.detail << " (first at n=" << first_mismatch << ")";
  v.detail << ", " << secs << " s";
}

void criterion_8(Verdict& v) {
  const std::string cli = TEMPOGRAPH_CLI_PATH;
  const auto graph = std::filesystem::temp_directory_path() / "tempograph_acceptance.tg";
  const auto gen = testing::run_command(cli + " --seed 4 generate --family clique --n 7 --out " +
                                        graph.string());
  v.require(gen.exit_code == 0, "generate input graph");
  const std::vector<std::string> invocations{
      "generate --family star --n 9 --a 6",
      "distance --in " + graph.string() + " --source 0 --target 5",
      "path-count --n 6 --k 3 --a 5 --samples 3000",
      "md --family star --n 8 --a 6 --nprime 6 --samples 3000",
      "td --family path --n 6 --a 5 --samples 3000",
      "extend-try --n 500 --c1 0.3 --r 0.4 --trials 300 --allow-small-params",
      "bridges --n 40",
      "formulas --list",
  };
  int differing = 0;
  for (const auto& args : invocations) {
    const auto first = testing::run_command(cli + " --seed 7 --threads 1 " + args);
    const auto again = testing::run_command(cli + " --seed 7 --threads 1 " + args);
    const auto threaded = testing::run_command(cli + " --seed 7 --threads 4 " + args);
    const std::string a = testing::without_runtime(first.out);
    const bool same = first.exit_code == 0 && !a.empty() &&
                      a == testing::without_runtime(again.out) &&
                      a == testing::without_runtime(threaded.out);
    if (!same) {
      ++differing;
      v.detail << " differs: " << args.substr(0, args.find(' ')) << ";";
    }
  }
  std::filesystem::remove(graph);
  v.detail << invocations.size() << " subcommands run 3x each, " << differing << " differing";
  v.require(differing == 0, "byte-identical output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tempograph acceptance suite"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "criterion numbers to run (default all)")
      ->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);
  if (selected.empty()) selected = {1, 2, 3, 4, 5, 6, 7, 8};

  const std::vector<std::pair<const char*, std::function<void(Verdict&)>>> criteria{
      {"foremost journeys equal brute force", criterion_1},
      {"path-count formulas", criterion_2},
      {"full-length path count and trend", criterion_3},
      {"star MD", criterion_4},
      {"TD >= MD", criterion_5},
      {"normalized clique bounds and Extend-Try", criterion_6},
      {"bridges", criterion_7},
      {"CLI reproducibility", criterion_8},
  };
  bool all = true;
  for (int id : selected) {
    Verdict v;
    const auto& [name, run] = criteria[id - 1];
    try {
      run(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " [exception: " << e.what() << "]";
    }
    all = all && v.pass;
    std::cout << "criterion " << id << " " << (v.pass ? "PASS" : "FAIL") << " (" << name
              << "): " << v.detail.str() << std::endl;
  }
  return all ? 0 : 1;
}
