// Copyright 2026 The pcrtv Authors
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

#ifndef PCRTV_ORACLE_HPP
#define PCRTV_ORACLE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "pcrtv/geometry.hpp"
#include "pcrtv/rof.hpp"

namespace pcrtv {

// min_u sum_e w_e |u_a - u_b| + 1/(2 lambda) sum_c area_c (u_c - f_c)^2
// in floating point. Edges with b = -1 tie u_a to a fixed zero outside
// the grid box (plane mode).
struct GraphTvProblem {
  std::vector<double> weight;
  std::vector<double> datum;
  struct Edge {
    int a;
    int b;
    double w;
  };
  std::vector<Edge> edges;
  double lambda = 0;
};

GraphTvProblem make_graph_tv_problem(const PcrFunction& u0, const Rational& lambda, Mode mode);

double graph_tv_objective(const GraphTvProblem& p, std::span<const double> u);

struct OracleResult {
  std::vector<double> u;
  double primal = 0;
  double dual = 0;
  double gap = 0;
  long sweeps = 0;
};

// Dual coordinate ascent. Stops once primal - dual <= tol * (1 + |primal|).
// seed = 0 sweeps edges in order, otherwise in a fresh seeded permutation
// per sweep. Throws ConvergenceError after max_sweeps.
OracleResult graph_tv_solve(const GraphTvProblem& p, double tol, std::uint64_t seed = 0, long max_sweeps = 2000000);

struct Comparison {
  double max_deviation = 0;
  bool passed = false;
};

// exact and approx on the same grid.
Comparison compare(const PcrFunction& exact, std::span<const double> approx, double tol);
// The solution is first mapped onto `grid` (the input grid of the solve).
Comparison compare(const RofSolution& exact, const GridPtr& grid, std::span<const double> approx, double tol);

}  // namespace pcrtv

#endif  // PCRTV_ORACLE_HPP
