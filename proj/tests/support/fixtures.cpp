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

#include "support/fixtures.hpp"

#include <algorithm>

namespace fixtures {

using pcrtv::Grid;

Rational q(long num, long den) { return pcrtv::ratio(num, den); }

Rect cross_center() { return {q(-3, 2), q(-3, 2), q(3, 2), q(3, 2)}; }

std::vector<Rect> cross_arms() {
  return {{q(3, 2), q(-1, 2), q(5, 2), q(1, 2)},
          {q(-5, 2), q(-1, 2), q(-3, 2), q(1, 2)},
          {q(-1, 2), q(3, 2), q(1, 2), q(5, 2)},
          {q(-1, 2), q(-5, 2), q(1, 2), q(-3, 2)}};
}

namespace {

GridPtr cross_grid() {
  std::vector<Rect> rects = cross_arms();
  rects.push_back(cross_center());
  return std::make_shared<const Grid>(pcrtv::build_grid(rects));
}

PcrFunction cross_valued(const Rational& arm, const Rational& centre) {
  std::vector<std::pair<Rect, Rational>> pieces;
  for (const Rect& r : cross_arms()) pieces.push_back({r, arm});
  pieces.push_back({cross_center(), centre});
  return pcrtv::rasterize(cross_grid(), pieces);
}

}  // namespace

PcrFunction stepped_cross() { return cross_valued(q(3), q(5, 2)); }

PcrFunction cross_indicator() { return cross_valued(q(1), q(1)); }

PcrFunction square_indicator(const Rational& side) {
  return PcrFunction(Grid({q(0), side}, {q(0), side}), {q(1)});
}

CellSet centre_cells(const Grid& g) { return pcrtv::cells_in(g, cross_center()); }

CellSet arm_cells(const Grid& g) {
  CellSet s(g.cell_count());
  for (const Rect& r : cross_arms()) s |= pcrtv::cells_in(g, r);
  return s;
}

CheegerProblem cross_problem() {
  CheegerProblem p;
  p.grid = cross_grid();
  p.region = centre_cells(*p.grid) | arm_cells(*p.grid);
  p.plus = pcrtv::boundary_edges(*p.grid, p.region);
  return p;
}

Staircase staircase(int n) {
  Staircase s{cross_indicator(), n, {}};
  s.layers.push_back({{q(-1), q(-1), q(1), q(1)}});
  for (int j = 2; j <= n; ++j) {
    Rational len = 1 - q(j - 1, n), a = 1 + q(j - 2, n), b = 1 + q(j - 1, n);
    s.layers.push_back({{a, -len, b, len}, {-b, -len, -a, len}, {-len, a, len, b}, {-len, -b, len, -a}});
  }
  std::vector<Rect> all;
  std::vector<std::pair<Rect, Rational>> pieces;
  for (const auto& layer : s.layers)
    for (const Rect& r : layer) {
      all.push_back(r);
      pieces.push_back({r, q(1)});
    }
  s.chi = pcrtv::rasterize(std::make_shared<const Grid>(pcrtv::build_grid(all)), pieces);
  return s;
}

CellSet staircase_core(const Staircase& s, int k) {
  const Grid& g = s.chi.grid();
  CellSet core(g.cell_count());
  for (int j = 0; j < k; ++j)
    for (const Rect& r : s.layers[j]) core |= pcrtv::cells_in(g, r);
  return core;
}

int staircase_core_index(const Staircase& s, const pcrtv::FacetDecomposition& d) {
  const Grid& g = s.chi.grid();
  std::vector<Rational> ind(d.grid->cell_count());
  for (int c : d.facets.front().cells.cells()) ind[c] = 1;
  PcrFunction back = pcrtv::resample(PcrFunction(d.grid, ind), s.chi.grid_ptr(), pcrtv::Mode::plane);
  CellSet core(g.cell_count());
  for (int c = 0; c < g.cell_count(); ++c)
    if (back.at(c) == 1) core.insert(c);
  // the facet must also be the exact union on the working grid
  Rational mass = 0;
  for (int c : d.facets.front().cells.cells()) mass += d.grid->area(c);
  if (mass != pcrtv::area(g, core)) return -1;
  for (int k = 1; k <= s.n; ++k)
    if (staircase_core(s, k) == core) return k;
  return -1;
}

bool staircase_index_ok(int n, int k) {
  // x >= sqrt(a^2+1) - a  <=>  (x+a)^2 >= a^2+1 for x + a > 0
  Rational a = 1 - q(1, 2 * n);
  auto above = [&](const Rational& x) { return (x + a) * (x + a) >= a * a + 1; };
  return above(q(k, n)) && !above(q(k - 1, n));
}

Rational staircase_core_speed(int n, int k) {
  Rational r = q(k - 1, n);
  return 2 * (1 + r) / (1 + 2 * r * (1 - q(k, 2 * n)));
}

namespace {

std::vector<Rational> random_lines(std::mt19937_64& rng, int cells) {
  static const long halves[] = {1, 2, 3, 4};
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Rational> lines{q(0)};
  for (int k = 0; k < cells; ++k) lines.push_back(lines.back() + q(halves[pick(rng)], 2));
  return lines;
}

}  // namespace

PcrFunction random_pcr(std::mt19937_64& rng, int max_nx, int max_ny, bool zeros, int min_cells) {
  std::uniform_int_distribution<int> dx(1, max_nx), dy(1, max_ny), value(1, 16), coin(0, 9);
  int nx = 0, ny = 0;
  do {
    nx = dx(rng);
    ny = dy(rng);
  } while (nx * ny < min_cells);
  auto grid = std::make_shared<const Grid>(random_lines(rng, nx), random_lines(rng, ny));
  std::vector<Rational> v(grid->cell_count());
  for (Rational& r : v) r = (zeros && coin(rng) < 3) ? q(0) : q(value(rng), 4);
  return PcrFunction(std::move(grid), std::move(v));
}

CheegerProblem random_problem(std::mt19937_64& rng, int max_cells) {
  std::uniform_int_distribution<int> side(1, 4), three(0, 2), coin(0, 1), fval(-6, 6);
  CheegerProblem p;
  int nx = 0, ny = 0;
  do {
    nx = side(rng);
    ny = side(rng);
  } while (nx * ny > max_cells);
  p.grid = std::make_shared<const Grid>(random_lines(rng, nx), random_lines(rng, ny));
  const Grid& g = *p.grid;
  do {
    p.region = CellSet(g.cell_count());
    for (int c = 0; c < g.cell_count(); ++c)
      if (three(rng) != 0) p.region.insert(c);
  } while (p.region.empty());
  std::vector<int> plus, minus;
  for (int id : pcrtv::boundary_edges(g, p.region).ids()) {
    int r = three(rng);
    if (r == 1) plus.push_back(id);
    if (r == 2) minus.push_back(id);
  }
  p.plus = pcrtv::EdgeSet::from_ids(plus);
  p.minus = pcrtv::EdgeSet::from_ids(minus);
  if (coin(rng)) {
    p.datum.resize(g.cell_count());
    for (Rational& f : p.datum) f = q(fval(rng), 2);
  }
  p.open_exterior = coin(rng) == 1;
  return p;
}

Rational reference_interior_perimeter(const Grid& g, const CellSet& e, const CellSet& f) {
  Rational total = 0;
  auto overlap = [](const Rational& a0, const Rational& a1, const Rational& b0, const Rational& b1) {
    Rational lo = std::max(a0, b0), hi = std::min(a1, b1);
    return hi > lo ? Rational(hi - lo) : Rational(0);
  };
  for (int c : e.cells())
    for (int d : (f - e).cells()) {
      const Rational cx0 = g.xs()[g.col(c)], cx1 = g.xs()[g.col(c) + 1];
      const Rational cy0 = g.ys()[g.row(c)], cy1 = g.ys()[g.row(c) + 1];
      const Rational dx0 = g.xs()[g.col(d)], dx1 = g.xs()[g.col(d) + 1];
      const Rational dy0 = g.ys()[g.row(d)], dy1 = g.ys()[g.row(d) + 1];
      if (cx1 == dx0 || dx1 == cx0) total += overlap(cy0, cy1, dy0, dy1);
      if (cy1 == dy0 || dy1 == cy0) total += overlap(cx0, cx1, dx0, dx1);
    }
  return total;
}

std::pair<Rational, Rational> two_point_solution(const Rational& f1, const Rational& f2, const Rational& a,
                                                 const Rational& w, const Rational& lambda) {
  Rational shift = lambda * w / a;
  if (abs(f1 - f2) <= 2 * shift) {
    Rational m = (f1 + f2) / 2;
    return {m, m};
  }
  Rational s = f1 > f2 ? shift : Rational(-shift);
  return {f1 - s, f2 + s};
}

}  // namespace fixtures
