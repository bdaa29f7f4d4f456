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

#ifndef PCRTV_ENERGY_HPP
#define PCRTV_ENERGY_HPP

#include <vector>

#include "pcrtv/geometry.hpp"

namespace pcrtv {

// Ratio functional over nonempty E in region:
//   J(E) = [P(E, int region) + |dE & plus| - |dE & minus| - int_E f] / |E|
// With open_exterior the region continues past the grid box, so box edges
// of E count as interior perimeter.
struct CheegerProblem {
  GridPtr grid;
  CellSet region;
  EdgeSet plus;
  EdgeSet minus;
  std::vector<Rational> datum;  // per grid cell, empty means f = 0
  bool open_exterior = false;
};

void validate(const CheegerProblem& p);

// Numerator of J(E), i.e. J(E) * |E|.
Rational ratio_numerator(const CheegerProblem& p, const CellSet& e);
Rational eval_J(const CheegerProblem& p, const CellSet& e);
// Dual functional: -J of the problem with plus/minus swapped and f negated.
Rational eval_J_check(const CheegerProblem& p, const CellSet& e);
CheegerProblem swapped(const CheegerProblem& p);

// Numerator split into a per-cell term and a pair term:
//   N(E) = sum_{c in E} unary[c] + sum_{pairs cut by E} length.
struct RatioModel {
  std::vector<int> cells;       // node -> grid cell
  std::vector<int> node_of;     // grid cell -> node or -1
  std::vector<Rational> unary;
  std::vector<Rational> area;
  struct Pair {
    int u;
    int v;
    Rational length;
  };
  std::vector<Pair> pairs;
};
RatioModel decompose(const CheegerProblem& p);

struct BruteForceResult {
  Rational min_value;
  std::vector<CellSet> minimizers;
  CellSet maximal;
  bool union_is_minimizer = false;
};
// Exhaustive search; the region must have at most `cap` cells (cap <= 30).
BruteForceResult brute_force_min(const CheegerProblem& p, int cap = 20);

// min P(F, omega) over nonempty proper subsets F of omega.
Rational min_relative_perimeter(const Grid& g, const CellSet& omega);

}  // namespace pcrtv

#endif  // PCRTV_ENERGY_HPP
