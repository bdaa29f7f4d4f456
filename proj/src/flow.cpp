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

#include "pcrtv/flow.hpp"

#include <algorithm>

#include "frame.hpp"
#include "pcrtv/cutsolve.hpp"
#include "pcrtv/energy.hpp"
#include "pcrtv/error.hpp"

namespace pcrtv {

namespace {

CellSet box_ring(const Grid& g) {
  CellSet ring(g.cell_count());
  for (int c = 0; c < g.cell_count(); ++c) {
    int i = g.col(c), j = g.row(c);
    if (i == 0 || j == 0 || i == g.nx() - 1 || j == g.ny() - 1) ring.insert(c);
  }
  return ring;
}

void decompose_level(const PcrFunction& w, const LevelPartition& lp, int level, bool unbounded, const CellSet& ring,
                     std::vector<FacetState>& out) {
  const GridPtr& gp = w.grid_ptr();
  const Grid& g = *gp;
  const CellSet& q = lp.members[level];
  std::vector<int> plus_ids, minus_ids;
  for (int id : boundary_edges(g, q).ids()) {
    auto [lo, hi] = g.edge_cells(id);
    if (lo < 0 || hi < 0) continue;
    int other = q.contains(lo) ? hi : lo;
    (lp.label[other] > level ? plus_ids : minus_ids).push_back(id);
  }
  const EdgeSet plus_q = EdgeSet::from_ids(std::move(plus_ids));
  const EdgeSet minus_q = EdgeSet::from_ids(std::move(minus_ids));

  CellSet done(g.cell_count());
  CellSet rest = q;
  while (!rest.empty()) {
    CheegerProblem p;
    p.grid = gp;
    p.region = rest;
    const EdgeSet bd = boundary_edges(g, rest);
    p.plus = bd & plus_q;
    p.minus = (bd & minus_q) | shared_edges(g, rest, done);
    p.open_exterior = unbounded;
    if (unbounded && !has_negative_ratio(p)) {
      out.push_back({rest, {p.plus, p.minus}, lp.values[level], Rational(0), true});
      ensure(p.plus.empty(), "unbounded facet with plus edges");
      return;
    }
    RatioResult rr = dinkelbach_min_ratio(p);
    const CellSet& f = rr.minimizer;
    if (unbounded && f.intersects(ring)) throw detail::MarginExceeded();
    const EdgeSet fb = boundary_edges(g, f);
    Signature s{(fb & plus_q) | shared_edges(g, f, rest - f), (fb & minus_q) | shared_edges(g, f, done)};
    Rational speed = -(total_length(g, s.plus) - total_length(g, s.minus)) / area(g, f);
    ensure(speed == -rr.ratio, "facet speed disagrees with its ratio");
    out.push_back({f, std::move(s), lp.values[level], std::move(speed), false});
    done |= f;
    rest -= f;
  }
}

PcrFunction advance(const GridPtr& g, const std::vector<FacetState>& facets, const Rational& dt) {
  std::vector<CellSet> cells;
  std::vector<Rational> values;
  for (const auto& f : facets) {
    cells.push_back(f.cells);
    values.push_back(f.value + f.speed * dt);
  }
  return from_partition(g, cells, values);
}

OrientedSignature oriented(const Grid& g, const std::vector<FacetState>& facets) {
  std::vector<CellSet> cells;
  ConsistentSignature sig;
  for (const auto& f : facets) {
    cells.push_back(f.cells);
    sig.push_back(f.signature);
  }
  return orient(g, cells, sig);
}

}  // namespace

FacetDecomposition decompose_levels(const PcrFunction& w, Mode mode) {
  LevelPartition lp = level_partition(w);
  const CellSet ring = mode == Mode::plane ? box_ring(w.grid()) : CellSet(w.grid().cell_count());
  FacetDecomposition d{w.grid_ptr(), {}};
  for (int level = 0; level < static_cast<int>(lp.members.size()); ++level) {
    bool unbounded = mode == Mode::plane && lp.values[level] == 0;
    if (mode == Mode::plane) require(lp.values[level] >= 0, "plane mode needs non-negative data");
    if (unbounded) ensure(ring.is_subset_of(lp.members[level]), "margin ring is not in the zero level set");
    decompose_level(w, lp, level, unbounded, ring, d.facets);
  }
  return d;
}

FacetDecomposition facet_decomposition(const PcrFunction& w, Mode mode) {
  return detail::with_frame(w, mode, [&](const detail::Frame& fr) { return decompose_levels(fr.u0, mode); });
}

MergeTime next_merging_time(const Grid& g, std::span<const FacetState> facets, const Rational& t_start,
                            const Rational& t_now) {
  std::vector<CellSet> cells;
  for (const auto& f : facets) cells.push_back(f.cells);
  MergeTime mt;
  for (const Adjacency& adj : adjacency(g, cells)) {
    const FacetState& a = facets[adj.a];
    const FacetState& b = facets[adj.b];
    if (adj.length <= 0 || a.speed == b.speed) continue;
    Rational t = t_start + (b.value - a.value) / (a.speed - b.speed);
    if (t <= t_now) continue;
    if (!mt.time || t < *mt.time) {
      mt.time = t;
      mt.pairs.clear();
    }
    if (t == *mt.time) mt.pairs.push_back({adj.a, adj.b});
  }
  return mt;
}

Rational speed_energy(const Grid& g, std::span<const FacetState> facets) {
  Rational e = 0;
  for (const auto& f : facets)
    if (!f.unbounded) e += area(g, f.cells) * f.speed * f.speed;
  return e;
}

namespace {

FlowTimeline evolve_on_frame(const PcrFunction& u0, const detail::Frame& fr, const std::optional<Rational>& t_end) {
  const Grid& g = *fr.grid;
  PcrFunction w = fr.u0;
  Rational t = 0;
  std::vector<FlowSegment> segments;
  bool steady = false;
  Rational horizon;
  std::optional<Rational> last_energy;
  std::vector<FacetState> final_facets;
  const int cap = 8 * g.cell_count() + 64;

  while (true) {
    ensure(static_cast<int>(segments.size()) <= cap, "event count exceeded its cap");
    FacetDecomposition dec = decompose_levels(w, fr.mode);
    Rational energy = speed_energy(g, dec.facets);
    if (last_energy) ensure(energy < *last_energy, "speed energy failed to drop at a merging time");
    last_energy = energy;
    const bool still = std::all_of(dec.facets.begin(), dec.facets.end(), [](const FacetState& f) { return f.speed == 0; });
    if (still) {
      steady = true;
      horizon = t;
      final_facets = std::move(dec.facets);
      break;
    }
    MergeTime mt = next_merging_time(g, dec.facets, t, t);
    ensure(mt.time.has_value(), "moving facets never meet");
    segments.push_back({t, dec.facets});
    if (t_end && *mt.time > *t_end) {
      horizon = *t_end;
      w = advance(fr.grid, dec.facets, *t_end - t);
      break;
    }
    w = advance(fr.grid, dec.facets, *mt.time - t);
    t = *mt.time;
  }
  FlowTimeline tl{fr.mode, u0.grid_ptr(), fr.grid, fr.u0, std::move(segments), {}, horizon, steady, w, std::move(final_facets)};
  tl.events = classify_events(tl);
  return tl;
}

}  // namespace

FlowTimeline flow_evolve(const PcrFunction& u0, Mode mode, const std::optional<Rational>& t_end) {
  if (t_end) require(*t_end >= 0, "end time must be non-negative");
  return detail::with_frame(u0, mode, [&](const detail::Frame& fr) { return evolve_on_frame(u0, fr, t_end); });
}

PcrFunction working_solution_at(const FlowTimeline& tl, const Rational& t) {
  require(t >= 0, "time must be non-negative");
  if (tl.steady && t >= tl.horizon) return tl.final_state;
  require(t <= tl.horizon, "time lies beyond the computed horizon");
  if (tl.segments.empty()) return tl.final_state;
  auto it = std::upper_bound(tl.segments.begin(), tl.segments.end(), t,
                             [](const Rational& x, const FlowSegment& s) { return x < s.t_start; });
  const FlowSegment& seg = *std::prev(it);
  return advance(tl.grid, seg.facets, t - seg.t_start);
}

PcrFunction solution_at(const FlowTimeline& tl, const Rational& t) {
  return resample(working_solution_at(tl, t), tl.input_grid, tl.mode);
}

std::vector<FlowEvent> classify_events(const FlowTimeline& tl) {
  std::vector<FlowEvent> events;
  if (tl.segments.empty()) return events;
  const Grid& g = *tl.grid;
  LevelPartition lp = level_partition(tl.initial);
  OrientedSignature prev = orient(g, lp.members, induced_signature(tl.initial));
  for (std::size_t k = 0; k < tl.segments.size(); ++k) {
    OrientedSignature cur = oriented(g, tl.segments[k].facets);
    const bool breaking = !cur.is_subset_of(prev);
    if (k == 0) {
      if (breaking) events.push_back({tl.segments[k].t_start, false, true});
    } else {
      events.push_back({tl.segments[k].t_start, true, breaking});
    }
    prev = std::move(cur);
  }
  if (tl.steady) events.push_back({tl.horizon, true, false});
  return events;
}

Rational rof_equivalence_window(const FlowTimeline& tl) {
  for (const FlowEvent& e : tl.events)
    if (e.t > 0 && e.breaking) return e.t;
  return tl.horizon;
}

Rational extinction_bound(const PcrFunction& u0, Mode mode) {
  const Grid& g = u0.grid();
  if (mode == Mode::plane) {
    for (const Rational& v : u0.values()) require(v >= 0, "plane mode needs non-negative data");
    Rect box;
    if (!support_box(u0, box)) return 0;
    Rational w = box.x1 - box.x0, h = box.y1 - box.y0;
    Rational top = *std::max_element(u0.values().begin(), u0.values().end());
    return w * h / (2 * (w + h)) * top;
  }
  const CellSet all(g.cell_count(), true);
  Rational total = area(g, all);
  Rational mean = integral(u0, all) / total;
  Rational dev = 0;
  for (const Rational& v : u0.values()) dev = std::max(dev, Rational(abs(v - mean)));
  if (dev == 0) return 0;
  return total / min_relative_perimeter(g, all) * dev;
}

}  // namespace pcrtv
