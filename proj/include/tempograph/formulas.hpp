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

#ifndef TEMPOGRAPH_FORMULAS_HPP_
#define TEMPOGRAPH_FORMULAS_HPP_

#include <cstdint>
#include <span>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tempograph {

using Rational = boost::multiprecision::cpp_rational;

namespace formulas {

struct PathCountQuery {
  std::uint64_t n = 2;  // clique size
  std::uint64_t k = 1;  // path length in edges
  std::uint64_t a = 1;  // max label
};

// n! / (n-1)^(n-1): expected number of length n-1 journeys in the uniform
// random clique with a = n-1. Exact for n <= 20, log-gamma beyond.
double expected_paths_full(std::uint64_t n);
Rational expected_paths_full_exact(std::uint64_t n);

// Probability that k i.i.d. uniform labels on {1..a} are strictly increasing:
// a! / (k! a^k (a-k)!). Zero when k > a.
double phi(std::uint64_t k, std::uint64_t a);
Rational phi_exact(std::uint64_t k, std::uint64_t a);

// n! a! / ((n-k-1)! k! a^k (a-k)!), evaluated in log space. Zero when k > a;
// InputError when k > n-1.
double expected_paths(const PathCountQuery& q);
Rational expected_paths_exact(const PathCountQuery& q);
// Limit as a grows: n (n-1) ... (n-k) / k!.
double expected_paths_large_a(std::uint64_t n, std::uint64_t k);

// Leaf-to-leaf closed form for the uniform random star:
//   value    = (a-1)(a+1)(a+2) / (6 a^2) + n' (a+1) / (2a)
//   cond_exp = (a+1)(a+2) / (3a)            the stated E(l2 | l2 > l1)
//   p_fail   = (a+1) / (2a)                 P(l2 <= l1)
// so value = cond_exp (1 - p_fail) + n' p_fail. Requires n' >= (a+1)/2.
struct StarMd {
  double value;
  double cond_exp;
  double p_fail;
};
StarMd star_md(std::uint64_t a, double nprime);

struct ExtendTryParams {
  std::uint64_t n;
  double c1;
  double r;
  double k;              // r ln n
  double t0;             // c1 sqrt(n) ln(n) k + sqrt(n)
  double success_bound;  // (1 - n^-c1)(1 - e n^-r), clamped to [0, 1)
  double window_lower;   // c1 sqrt(n) ln(n) k
  double window_upper;   // window_lower + sqrt(n) == t0
  std::uint64_t iterations;  // floor(c1 sqrt(n) ln n)
  bool below_regime;     // c1 <= 1 or r <= 1: the guarantee does not apply
  bool window_reachable; // some label in 1..n can land in the window
  bool bound_vacuous;    // t0 > n, so the guarantee says nothing here
};
ExtendTryParams extend_try_params(std::uint64_t n, double c1, double r);

// ceil(sqrt(2n) + 1/2) in integer arithmetic: the smallest C with
// (2C - 1)^2 >= 8n.
std::uint64_t bridges_opt_formula(std::uint64_t n);

struct FormulaInfo {
  std::string_view name;
  std::string_view expression;
  std::string_view citation;
};
std::span<const FormulaInfo> catalog();

}  // namespace formulas
}  // namespace tempograph

#endif  // TEMPOGRAPH_FORMULAS_HPP_
