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

#include <random>

#include "doctest.h"
#include "pcrtv/cutsolve.hpp"
#include "pcrtv/energy.hpp"
#include "support/fixtures.hpp"

using namespace pcrtv;
using fixtures::q;

namespace {

CellSet random_subset(std::mt19937_64& rng, const CellSet& region) {
  std::uniform_int_distribution<int> coin(0, 1);
  CellSet e(region.universe());
  for (int c : region.cells())
    if (coin(rng)) e.insert(c);
  return e;
}

// Minimum of N(E) - lambda |E| over all subsets of the region, empty set
// included, and the union of all minimizing subsets.
std::pair<Rational, CellSet> enumerate_energy(const CheegerProblem& p, const Rational& lambda) {
  std::vector<int> cells = p.region.cells();
  const int n = static_cast<int>(cells.size());
  Rational best = 0;
  CellSet best_union(p.grid->cell_count());
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    CellSet e(p.grid->cell_count());
    for (int k = 0; k < n; ++k)
      if (mask >> k & 1u) e.insert(cells[k]);
    Rational v = ratio_numerator(p, e) - lambda * area(*p.grid, e);
    if (v < best) {
      best = v;
      best_union = e;
    } else if (v == best) {
      best_union |= e;
    }
  }
  return {best, best_union};
}

}  // namespace

TEST_CASE("cut instance reproduces the cut energy") {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 100; ++it) {
    CheegerProblem p = fixtures::random_problem(rng, 16);
    Rational lambda = q(static_cast<long>(rng() % 13) - 6, 3);
    CutInstance inst = build_cut_instance(p, lambda);
    CellSet e = random_subset(rng, p.region);
    CHECK(cut_energy(inst, e) == ratio_numerator(p, e) - lambda * area(*p.grid, e));
  }
}

TEST_CASE("minimum cut on the cross at 4/3") {
  CheegerProblem p = fixtures::cross_problem();
  CutResult r = min_cut(build_cut_instance(p, q(4, 3)));
  CHECK(r.energy == 0);
  CHECK(r.maximal_set == fixtures::centre_cells(*p.grid));
  CellSet arms = fixtures::arm_cells(*p.grid);
  CHECK(cut_energy(build_cut_instance(p, q(4, 3)), cells_in(*p.grid, fixtures::cross_arms()[0])) == q(8, 3));
  CHECK(ratio_numerator(p, arms) - q(4, 3) * 4 == q(32, 3));
}

TEST_CASE("minimum cut matches enumeration, value and maximal set") {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 150; ++it) {
    CheegerProblem p = fixtures::random_problem(rng, 12);
    Rational lambda = q(static_cast<long>(rng() % 17) - 8, 4);
    CutResult r = min_cut(build_cut_instance(p, lambda));
    auto [best, best_union] = enumerate_energy(p, lambda);
    CHECK(r.energy == best);
    CHECK(r.maximal_set == best_union);
  }
}

TEST_CASE("ratio minimization on the square and the cross") {
  RatioResult r = dinkelbach_min_ratio(fixtures::cross_problem());
  CHECK(r.ratio == q(4, 3));
  CHECK(r.minimizer == fixtures::centre_cells(*fixtures::cross_problem().grid));
  CHECK(r.trace.front() == q(20, 13));
  for (std::size_t k = 1; k < r.trace.size(); ++k) CHECK(r.trace[k] < r.trace[k - 1]);
}

TEST_CASE("ratio minimization equals exhaustive search") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    CheegerProblem p = fixtures::random_problem(rng, 16);
    RatioResult r = dinkelbach_min_ratio(p);
    BruteForceResult b = brute_force_min(p);
    CHECK(r.ratio == b.min_value);
    CHECK(r.minimizer == b.maximal);
    CHECK(has_negative_ratio(p) == (b.min_value < 0));
    for (std::size_t k = 1; k < r.trace.size(); ++k) CHECK(r.trace[k] < r.trace[k - 1]);
  }
}

TEST_CASE("huge denominators take the multiprecision path") {
  std::mt19937_64 rng(4);
  const Rational tiny(mpz_class(1), mpz_class("1000000000000000000000000000057"));
  for (int it = 0; it < 20; ++it) {
    CheegerProblem p = fixtures::random_problem(rng, 9);
    std::vector<Rational> xs = p.grid->xs(), ys = p.grid->ys();
    for (std::size_t k = 1; k < xs.size(); ++k) xs[k] += tiny * static_cast<long>(k);
    auto g = std::make_shared<const Grid>(xs, ys);
    CheegerProblem big{g, p.region, p.plus, p.minus, p.datum, p.open_exterior};
    if (!big.datum.empty()) big.datum[big.region.cells().front()] += tiny;
    RatioResult r = dinkelbach_min_ratio(big);
    BruteForceResult b = brute_force_min(big);
    CHECK(r.ratio == b.min_value);
    CHECK(r.minimizer == b.maximal);
  }
}
