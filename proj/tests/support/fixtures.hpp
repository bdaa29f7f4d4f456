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

#ifndef PCRTV_TESTS_FIXTURES_HPP
#define PCRTV_TESTS_FIXTURES_HPP

#include <random>
#include <vector>

#include "pcrtv/energy.hpp"
#include "pcrtv/flow.hpp"
#include "pcrtv/geometry.hpp"

namespace fixtures {

using pcrtv::CellSet;
using pcrtv::CheegerProblem;
using pcrtv::GridPtr;
using pcrtv::PcrFunction;
using pcrtv::Rational;
using pcrtv::Rect;

Rational q(long num, long den = 1);

// Cross made of the square [-3/2, 3/2]^2 and four unit arms reaching 5/2.
Rect cross_center();
std::vector<Rect> cross_arms();

// 3 on the arms, 5/2 on the centre, 0 elsewhere, on the 5 x 5 cross grid.
PcrFunction stepped_cross();
// Indicator of the cross on the same grid.
PcrFunction cross_indicator();
// Indicator of [0, side]^2 on a one-cell grid.
PcrFunction square_indicator(const Rational& side);

CellSet centre_cells(const pcrtv::Grid& g);
CellSet arm_cells(const pcrtv::Grid& g);

// Region = cross, plus = boundary of the cross, f = 0.
CheegerProblem cross_problem();

// Staircase of level n: the square [-1,1]^2 and, for j = 2..n, four strips of
// width 1/n and half length 1 - (j-1)/n stacked outward.
struct Staircase {
  PcrFunction chi;
  int n;
  std::vector<std::vector<Rect>> layers;  // layers[j-1] = pieces of layer j
};
Staircase staircase(int n);
CellSet staircase_core(const Staircase& s, int k);
// Index k with layers 1..k forming the first facet of d, or -1.
int staircase_core_index(const Staircase& s, const pcrtv::FacetDecomposition& d);
// Does k satisfy k/n >= x > (k-1)/n, x = sqrt((1-1/(2n))^2+1) - (1-1/(2n))?
bool staircase_index_ok(int n, int k);
// 2(1+(k-1)/n) / (1+2((k-1)/n)(1-k/(2n)))
Rational staircase_core_speed(int n, int k);

// Random data. Cell sides are drawn from {1/2, 1, 3/2, 2}; values are
// multiples of 1/4 in [0, 4], with a fair share of zeros.
PcrFunction random_pcr(std::mt19937_64& rng, int max_nx, int max_ny, bool zeros = true, int min_cells = 1);
// Region of at most max_cells cells with random signature, datum and
// exterior flag.
CheegerProblem random_problem(std::mt19937_64& rng, int max_cells);

// Independent perimeter: length shared by the closed rectangles of cells
// in E and cells in F \ E, found by pairwise coordinate overlap.
Rational reference_interior_perimeter(const pcrtv::Grid& g, const CellSet& e, const CellSet& f);

// Two-cell fused lasso minimizer for equal areas a and edge length w.
std::pair<Rational, Rational> two_point_solution(const Rational& f1, const Rational& f2, const Rational& a,
                                                 const Rational& w, const Rational& lambda);

}  // namespace fixtures

#endif  // PCRTV_TESTS_FIXTURES_HPP
