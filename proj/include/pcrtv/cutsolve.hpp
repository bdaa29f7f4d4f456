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

#ifndef PCRTV_CUTSOLVE_HPP
#define PCRTV_CUTSOLVE_HPP

#include <vector>

#include "pcrtv/energy.hpp"

namespace pcrtv {

// Cut energy E -> N(E) - lambda * |E| as unary plus pairwise terms.
struct CutInstance {
  int universe = 0;
  std::vector<int> cells;
  std::vector<Rational> unary;
  std::vector<RatioModel::Pair> pairs;
};

CutInstance build_cut_instance(const CheegerProblem& p, const Rational& lambda);
CutInstance build_cut_instance(const RatioModel& m, int universe, const Rational& lambda);

// Energy of a selection of cells; cells outside the instance must not appear.
Rational cut_energy(const CutInstance& inst, const CellSet& s);

struct CutResult {
  Rational energy;
  CellSet maximal_set;  // union of all minimum-energy selections
};
CutResult min_cut(const CutInstance& inst);

struct RatioResult {
  Rational ratio;
  CellSet minimizer;  // maximal minimizer
  int iterations = 0;
  std::vector<Rational> trace;  // lambda per iteration, strictly decreasing
};
RatioResult dinkelbach_min_ratio(const CheegerProblem& p);

// True when some nonempty E has J(E) < 0.
bool has_negative_ratio(const CheegerProblem& p);

}  // namespace pcrtv

#endif  // PCRTV_CUTSOLVE_HPP
