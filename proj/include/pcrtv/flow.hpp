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

#ifndef PCRTV_FLOW_HPP
#define PCRTV_FLOW_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pcrtv/geometry.hpp"

namespace pcrtv {

// A facet moving at constant speed during one segment of the flow.
// `value` is taken at the start of the segment.
struct FacetState {
  CellSet cells;
  Signature signature;
  Rational value;
  Rational speed;
  bool unbounded = false;
};

struct FacetDecomposition {
  GridPtr grid;
  std::vector<FacetState> facets;  // by level set, decreasing value, then stage order
};

// Plane mode works on the support box plus a margin ring, as the solvers do.
FacetDecomposition facet_decomposition(const PcrFunction& w, Mode mode);

// Facet decomposition of w on its own grid. In plane mode the zero level
// set is taken as unbounded and must not be touched by any bounded stage.
FacetDecomposition decompose_levels(const PcrFunction& w, Mode mode);

struct MergeTime {
  std::optional<Rational> time;
  std::vector<std::pair<int, int>> pairs;
};
// First t > t_now at which two adjacent facets meet. Values are taken at
// t_start.
MergeTime next_merging_time(const Grid& g, std::span<const FacetState> facets, const Rational& t_start,
                            const Rational& t_now);

// sum of |F| * speed^2 over bounded facets
Rational speed_energy(const Grid& g, std::span<const FacetState> facets);

struct FlowSegment {
  Rational t_start;
  std::vector<FacetState> facets;
};

struct FlowEvent {
  Rational t;
  bool merging = false;
  bool breaking = false;
};

struct FlowTimeline {
  Mode mode;
  GridPtr input_grid;
  GridPtr grid;  // working grid
  PcrFunction initial;
  std::vector<FlowSegment> segments;
  std::vector<FlowEvent> events;
  Rational horizon;  // extinction time when steady, else the requested end
  bool steady = false;
  PcrFunction final_state;
  std::vector<FacetState> final_facets;  // decomposition of the steady state
};

FlowTimeline flow_evolve(const PcrFunction& u0, Mode mode, const std::optional<Rational>& t_end = std::nullopt);

// On the input grid.
PcrFunction solution_at(const FlowTimeline& tl, const Rational& t);
// On the working grid.
PcrFunction working_solution_at(const FlowTimeline& tl, const Rational& t);

std::vector<FlowEvent> classify_events(const FlowTimeline& tl);

// First breaking time after t = 0, else the horizon.
Rational rof_equivalence_window(const FlowTimeline& tl);

Rational extinction_bound(const PcrFunction& u0, Mode mode);

}  // namespace pcrtv

#endif  // PCRTV_FLOW_HPP
