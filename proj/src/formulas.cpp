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

#include "tempograph/formulas.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "tempograph/errors.hpp"

namespace tempograph::formulas {
namespace {

// log(x (x-1) ... (x-m+1)).
double log_falling(std::uint64_t x, std::uint64_t m) {
  if (m <= 256) {
    double s = 0.0;
    for (std::uint64_t j = 0; j < m; ++j) s += std::log(static_cast<double>(x - j));
    return s;
  }
  return std::lgamma(static_cast<double>(x) + 1.0) -
         std::lgamma(static_cast<double>(x - m) + 1.0);
}

double log_phi(std::uint64_t k, std::uint64_t a) {
  const double ad = static_cast<double>(a);
  double s = 0.0;
  if (k <= 256) {
    for (std::uint64_t j = 1; j < k; ++j) s += std::log1p(-static_cast<double>(j) / ad);
  } else {
    s = log_falling(a, k) - static_cast<double>(k) * std::log(ad);
  }
  return s - std::lgamma(static_cast<double>(k) + 1.0);
}

Rational falling_exact(std::uint64_t x, std::uint64_t m) {
  boost::multiprecision::cpp_int p = 1;
  for (std::uint64_t j = 0; j < m; ++j) p *= x - j;
  return Rational(p);
}

Rational factorial_exact(std::uint64_t m) { return falling_exact(m, m); }

void check_query(const PathCountQuery& q) {
  if (q.n < 2) throw InputError("path count needs n >= 2");
  if (q.k < 1) throw InputError("path count needs k >= 1");
  if (q.a < 1) throw InputError("path count needs a >= 1");
  if (q.k > q.n - 1) {
    throw InputError("no simple path of length " + std::to_string(q.k) +
                     " exists in K_" + std::to_string(q.n));
  }
}

std::uint64_t isqrt(std::uint64_t m) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(m)));
  while (s * s > m) --s;
  while ((s + 1) * (s + 1) <= m) ++s;
  return s;
}

}  // namespace

Rational expected_paths_full_exact(std::uint64_t n) {
  if (n < 2) throw InputError("expected_paths_full needs n >= 2");
  boost::multiprecision::cpp_int den = 1;
  for (std::uint64_t i = 0; i + 1 < n; ++i) den *= n - 1;
  return factorial_exact(n) / Rational(den);
}

double expected_paths_full(std::uint64_t n) {
  if (n < 2) throw InputError("expected_paths_full needs n >= 2");
  if (n <= 20) return expected_paths_full_exact(n).convert_to<double>();
  const double nd = static_cast<double>(n);
  return std::exp(std::lgamma(nd + 1.0) - (nd - 1.0) * std::log(nd - 1.0));
}

Rational phi_exact(std::uint64_t k, std::uint64_t a) {
  if (k < 1 || a < 1) throw InputError("phi needs k >= 1 and a >= 1");
  if (k > a) return Rational(0);
  boost::multiprecision::cpp_int ak = 1;
  for (std::uint64_t i = 0; i < k; ++i) ak *= a;
  return falling_exact(a, k) / (factorial_exact(k) * Rational(ak));
}

double phi(std::uint64_t k, std::uint64_t a) {
  if (k < 1 || a < 1) throw InputError("phi needs k >= 1 and a >= 1");
  if (k > a) return 0.0;
  return std::exp(log_phi(k, a));
}

double expected_paths(const PathCountQuery& q) {
  check_query(q);
  if (q.k > q.a) return 0.0;
  return std::exp(log_falling(q.n, q.k + 1) + log_phi(q.k, q.a));
}

Rational expected_paths_exact(const PathCountQuery& q) {
  check_query(q);
  return falling_exact(q.n, q.k + 1) * phi_exact(q.k, q.a);
}

double expected_paths_large_a(std::uint64_t n, std::uint64_t k) {
  check_query({n, k, 1});
  return std::exp(log_falling(n, k + 1) -
                  std::lgamma(static_cast<double>(k) + 1.0));
}

StarMd star_md(std::uint64_t a, double nprime) {
  if (a < 1) throw InputError("star_md needs a >= 1");
  const double ad = static_cast<double>(a);
  if (!(nprime >= (ad + 1.0) / 2.0)) {
    throw InputError("nprime must be at least (a+1)/2, the expected label");
  }
  StarMd md;
  md.cond_exp = (ad + 1.0) * (ad + 2.0) / (3.0 * ad);
  md.p_fail = (ad + 1.0) / (2.0 * ad);
  md.value = (ad - 1.0) * (ad + 1.0) * (ad + 2.0) / (6.0 * ad * ad) +
             nprime * (ad + 1.0) / (2.0 * ad);
  return md;
}

ExtendTryParams extend_try_params(std::uint64_t n, double c1, double r) {
  if (n < 2) throw InputError("Extend-Try needs n >= 2");
  if (!(c1 > 0.0) || !(r > 0.0) || !std::isfinite(c1) || !std::isfinite(r)) {
    throw InputError("c1 and r must be positive");
  }
  const double nd = static_cast<double>(n);
  const double root = std::sqrt(nd);
  const double ln = std::log(nd);
  ExtendTryParams p{};
  p.n = n;
  p.c1 = c1;
  p.r = r;
  p.k = r * ln;
  p.window_lower = c1 * root * ln * p.k;
  p.window_upper = p.window_lower + root;
  p.t0 = p.window_upper;
  p.iterations = static_cast<std::uint64_t>(std::floor(c1 * root * ln));
  const double bound = (1.0 - std::pow(nd, -c1)) *
                       (1.0 - std::numbers::e * std::pow(nd, -r));
  p.success_bound = bound < 0.0 ? 0.0 : bound;
  p.below_regime = !(c1 > 1.0) || !(r > 1.0);
  p.window_reachable = p.window_lower < nd;
  p.bound_vacuous = p.t0 > nd;
  return p;
}

std::uint64_t bridges_opt_formula(std::uint64_t n) {
  if (n < 1) throw InputError("bridges needs n >= 1");
  if (n > (std::uint64_t{1} << 58)) throw InputError("n too large");
  const std::uint64_t m = 8 * n;
  std::uint64_t x = isqrt(m);
  if (x * x < m) ++x;
  if (x % 2 == 0) ++x;
  return (x + 1) / 2;
}

std::span<const FormulaInfo> catalog() {
  static constexpr std::array<FormulaInfo, 10> kCatalog{{
      {"expected_paths_full", "n! / (n-1)^(n-1)",
       "expected number of length n-1 temporal paths in the uniform random "
       "temporal clique with a = n-1"},
      {"phi", "a! / (k! a^k (a-k)!)",
       "probability that k independent uniform labels on {1..a} are strictly "
       "increasing"},
      {"expected_paths", "n! a! / ((n-k-1)! k! a^k (a-k)!)",
       "expected number of length-k temporal paths in the uniform random "
       "temporal clique"},
      {"expected_paths_large_a", "n (n-1) ... (n-k) / k!",
       "expected length-k temporal path count when a is far larger than k"},
      {"star_cond_exp", "(a+1)(a+2) / (3a)",
       "uniform random star, stated E(l2 | l2 > l1) for two leaf edges"},
      {"star_p_fail", "(a+1) / (2a)",
       "uniform random star, probability P(l2 <= l1) that no leaf-to-leaf "
       "journey exists"},
      {"star_md", "(a-1)(a+1)(a+2) / (6a^2) + n' (a+1) / (2a)",
       "uniform random star, maximum expected temporal distance"},
      {"extend_try_t0", "c1 sqrt(n) ln(n) k + sqrt(n), k = r ln(n)",
       "Extend-Try arrival-time guarantee on the normalized uniform random "
       "temporal clique"},
      {"extend_try_bound", "(1 - n^-c1) (1 - e n^-r)",
       "Extend-Try success probability lower bound"},
      {"bridges_opt", "ceil(sqrt(2n) + 1/2)",
       "bridges min-max assignment optimum"},
  }};
  return kCatalog;
}

}  // namespace tempograph::formulas
