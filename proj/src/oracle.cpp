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

#include "pcrtv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "pcrtv/error.hpp"

namespace pcrtv {

GraphTvProblem make_graph_tv_problem(const PcrFunction& u0, const Rational& lambda, Mode mode) {
  require(lambda > 0, "lambda must be positive");
  const Grid& g = u0.grid();
  GraphTvProblem p;
  p.lambda = to_double(lambda);
  for (int c = 0; c < g.cell_count(); ++c) {
    p.weight.push_back(to_double(g.area(c)));
    p.datum.push_back(to_double(u0.at(c)));
  }
  for (int id = 0; id < g.edge_count(); ++id) {
    auto [lo, hi] = g.edge_cells(id);
    double w = to_double(g.edge_length(id));
    if (lo >= 0 && hi >= 0)
      p.edges.push_back({lo, hi, w});
    else if (mode == Mode::plane)
      p.edges.push_back({lo >= 0 ? lo : hi, -1, w});
  }
  return p;
}

double graph_tv_objective(const GraphTvProblem& p, std::span<const double> u) {
  require(u.size() == p.weight.size(), "iterate does not match the problem");
  double tv = 0, fid = 0;
  for (const auto& e : p.edges) tv += e.w * std::abs(u[e.a] - (e.b >= 0 ? u[e.b] : 0.0));
  for (std::size_t c = 0; c < u.size(); ++c) fid += p.weight[c] * (u[c] - p.datum[c]) * (u[c] - p.datum[c]);
  return tv + fid / (2 * p.lambda);
}

namespace {

double dual_value(const GraphTvProblem& p, const std::vector<double>& s) {
  double d = 0;
  for (std::size_t c = 0; c < s.size(); ++c) d += s[c] * p.datum[c] - p.lambda / 2 * s[c] * s[c] / p.weight[c];
  return d;
}

}  // namespace

OracleResult graph_tv_solve(const GraphTvProblem& p, double tol, std::uint64_t seed, long max_sweeps) {
  require(tol > 0, "tolerance must be positive");
  require(p.lambda > 0, "lambda must be positive");
  const std::size_t n = p.weight.size();
  for (double w : p.weight) require(w > 0, "node weights must be positive");

  std::vector<double> flux(p.edges.size(), 0.0), s(n, 0.0), u = p.datum;
  std::vector<std::size_t> order(p.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);

  OracleResult r;
  for (long sweep = 0;; ++sweep) {
    r.primal = graph_tv_objective(p, u);
    r.dual = dual_value(p, s);
    r.gap = r.primal - r.dual;
    r.sweeps = sweep;
    if (r.gap <= tol * (1 + std::abs(r.primal))) break;
    if (sweep >= max_sweeps) throw ConvergenceError("graph-TV oracle did not reach the requested gap");
    if (seed != 0) std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t k : order) {
      const auto& e = p.edges[k];
      const double ub = e.b >= 0 ? u[e.b] : 0.0;
      const double curv = p.lambda * (1 / p.weight[e.a] + (e.b >= 0 ? 1 / p.weight[e.b] : 0.0));
      const double next = std::clamp(flux[k] + (u[e.a] - ub) / curv, -e.w, e.w);
      const double delta = next - flux[k];
      if (delta == 0) continue;
      flux[k] = next;
      s[e.a] += delta;
      u[e.a] = p.datum[e.a] - p.lambda * s[e.a] / p.weight[e.a];
      if (e.b >= 0) {
        s[e.b] -= delta;
        u[e.b] = p.datum[e.b] - p.lambda * s[e.b] / p.weight[e.b];
      }
    }
  }
  r.u = std::move(u);
  return r;
}

Comparison compare(const PcrFunction& exact, std::span<const double> approx, double tol) {
  require(static_cast<int>(approx.size()) == exact.grid().cell_count(), "grid mismatch");
  Comparison c;
  for (std::size_t k = 0; k < approx.size(); ++k)
    c.max_deviation = std::max(c.max_deviation, std::abs(to_double(exact.at(static_cast<int>(k))) - approx[k]));
  c.passed = c.max_deviation <= tol;
  return c;
}

Comparison compare(const RofSolution& exact, const GridPtr& grid, std::span<const double> approx, double tol) {
  return compare(resample(exact.u, grid, exact.mode), approx, tol);
}

}  // namespace pcrtv
