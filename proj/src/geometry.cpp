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

#include "pcrtv/geometry.hpp"

#include <algorithm>
#include <map>

#include "pcrtv/error.hpp"

namespace pcrtv {

Grid::Grid(std::vector<Rational> xs, std::vector<Rational> ys) : xs_(std::move(xs)), ys_(std::move(ys)) {
  require(xs_.size() >= 2 && ys_.size() >= 2, "grid needs at least two lines per axis");
  for (std::size_t k = 1; k < xs_.size(); ++k) require(xs_[k - 1] < xs_[k], "x lines must be strictly increasing");
  for (std::size_t k = 1; k < ys_.size(); ++k) require(ys_[k - 1] < ys_[k], "y lines must be strictly increasing");
  nx_ = static_cast<int>(xs_.size()) - 1;
  ny_ = static_cast<int>(ys_.size()) - 1;
  areas_.reserve(cell_count());
  for (int j = 0; j < ny_; ++j)
    for (int i = 0; i < nx_; ++i) areas_.push_back(width(i) * height(j));
  lengths_.resize(edge_count());
  for (int id = 0; id < edge_count(); ++id) {
    GridEdge e = edge(id);
    lengths_[id] = e.orientation == EdgeOrientation::vertical ? height(e.j) : width(e.i);
  }
}

int Grid::edge_id(const GridEdge& e) const {
  if (e.orientation == EdgeOrientation::vertical) {
    require(e.i >= 0 && e.i <= nx_ && e.j >= 0 && e.j < ny_, "vertical edge out of range");
    return e.j * (nx_ + 1) + e.i;
  }
  require(e.i >= 0 && e.i < nx_ && e.j >= 0 && e.j <= ny_, "horizontal edge out of range");
  return vertical_edge_count() + e.j * nx_ + e.i;
}

GridEdge Grid::edge(int id) const {
  const int nv = vertical_edge_count();
  if (id < nv) return {EdgeOrientation::vertical, id % (nx_ + 1), id / (nx_ + 1)};
  id -= nv;
  return {EdgeOrientation::horizontal, id % nx_, id / nx_};
}

std::array<int, 2> Grid::edge_cells(int id) const {
  GridEdge e = edge(id);
  if (e.orientation == EdgeOrientation::vertical)
    return {e.i > 0 ? cell(e.i - 1, e.j) : -1, e.i < nx_ ? cell(e.i, e.j) : -1};
  return {e.j > 0 ? cell(e.i, e.j - 1) : -1, e.j < ny_ ? cell(e.i, e.j) : -1};
}

std::array<int, 4> Grid::cell_edges(int c) const {
  const int i = col(c), j = row(c), nv = vertical_edge_count();
  return {j * (nx_ + 1) + i, j * (nx_ + 1) + i + 1, nv + j * nx_ + i, nv + (j + 1) * nx_ + i};
}

int Grid::locate(const Rational& x, const Rational& y) const {
  if (x < xs_.front() || x >= xs_.back() || y < ys_.front() || y >= ys_.back()) return -1;
  int i = static_cast<int>(std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin()) - 1;
  int j = static_cast<int>(std::upper_bound(ys_.begin(), ys_.end(), y) - ys_.begin()) - 1;
  return cell(i, j);
}

CellSet CellSet::from_cells(int universe, std::span<const int> cells) {
  CellSet s(universe);
  for (int c : cells) {
    require(c >= 0 && c < universe, "cell id out of range");
    s.insert(c);
  }
  return s;
}

int CellSet::count() const { return static_cast<int>(std::count(mask_.begin(), mask_.end(), 1)); }

std::vector<int> CellSet::cells() const {
  std::vector<int> out;
  for (int c = 0; c < universe(); ++c)
    if (mask_[c]) out.push_back(c);
  return out;
}

bool CellSet::is_subset_of(const CellSet& o) const {
  require(o.universe() == universe(), "cell sets over different grids");
  for (int c = 0; c < universe(); ++c)
    if (mask_[c] && !o.mask_[c]) return false;
  return true;
}

bool CellSet::intersects(const CellSet& o) const {
  require(o.universe() == universe(), "cell sets over different grids");
  for (int c = 0; c < universe(); ++c)
    if (mask_[c] && o.mask_[c]) return true;
  return false;
}

CellSet& CellSet::operator|=(const CellSet& o) {
  require(o.universe() == universe(), "cell sets over different grids");
  for (int c = 0; c < universe(); ++c) mask_[c] |= o.mask_[c];
  return *this;
}

CellSet& CellSet::operator&=(const CellSet& o) {
  require(o.universe() == universe(), "cell sets over different grids");
  for (int c = 0; c < universe(); ++c) mask_[c] &= o.mask_[c];
  return *this;
}

CellSet& CellSet::operator-=(const CellSet& o) {
  require(o.universe() == universe(), "cell sets over different grids");
  for (int c = 0; c < universe(); ++c)
    if (o.mask_[c]) mask_[c] = 0;
  return *this;
}

EdgeSet EdgeSet::from_ids(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  EdgeSet s;
  s.ids_ = std::move(ids);
  return s;
}

bool EdgeSet::contains(int id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

bool EdgeSet::is_subset_of(const EdgeSet& o) const {
  return std::includes(o.ids_.begin(), o.ids_.end(), ids_.begin(), ids_.end());
}

EdgeSet operator|(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet s;
  std::set_union(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(), std::back_inserter(s.ids_));
  return s;
}

EdgeSet operator&(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet s;
  std::set_intersection(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(), std::back_inserter(s.ids_));
  return s;
}

EdgeSet operator-(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet s;
  std::set_difference(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(), std::back_inserter(s.ids_));
  return s;
}

PcrFunction::PcrFunction(GridPtr grid, std::vector<Rational> values) : grid_(std::move(grid)), values_(std::move(values)) {
  require(grid_ != nullptr, "null grid");
  require(static_cast<int>(values_.size()) == grid_->cell_count(), "value count does not match the grid");
}

PcrFunction::PcrFunction(Grid grid, std::vector<Rational> values)
    : PcrFunction(std::make_shared<const Grid>(std::move(grid)), std::move(values)) {}

Grid build_grid(std::span<const Rect> rects, std::span<const Rational> extra_xs, std::span<const Rational> extra_ys) {
  std::vector<Rational> xs(extra_xs.begin(), extra_xs.end()), ys(extra_ys.begin(), extra_ys.end());
  for (const Rect& r : rects) {
    require(r.x0 < r.x1 && r.y0 < r.y1, "degenerate rectangle");
    xs.push_back(r.x0);
    xs.push_back(r.x1);
    ys.push_back(r.y0);
    ys.push_back(r.y1);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  require(xs.size() >= 2 && ys.size() >= 2, "no rectangles and no bounding box");
  return Grid(std::move(xs), std::move(ys));
}

namespace {

Rational centre_x(const Grid& g, int i) { return Rational(g.xs()[i] + g.xs()[i + 1]) / 2; }
Rational centre_y(const Grid& g, int j) { return Rational(g.ys()[j] + g.ys()[j + 1]) / 2; }

bool inside(const Rect& r, const Rational& x, const Rational& y) {
  return r.x0 <= x && x <= r.x1 && r.y0 <= y && y <= r.y1;
}

}  // namespace

PcrFunction rasterize(GridPtr grid, std::span<const std::pair<Rect, Rational>> pieces) {
  std::vector<Rational> values(grid->cell_count());
  for (int j = 0; j < grid->ny(); ++j) {
    Rational cy = centre_y(*grid, j);
    for (int i = 0; i < grid->nx(); ++i) {
      Rational cx = centre_x(*grid, i);
      for (const auto& [r, v] : pieces)
        if (inside(r, cx, cy)) values[grid->cell(i, j)] += v;
    }
  }
  return PcrFunction(std::move(grid), std::move(values));
}

CellSet cells_in(const Grid& g, const Rect& r) {
  CellSet s(g.cell_count());
  for (int j = 0; j < g.ny(); ++j)
    for (int i = 0; i < g.nx(); ++i)
      if (inside(r, centre_x(g, i), centre_y(g, j))) s.insert(g.cell(i, j));
  return s;
}

Rational area(const Grid& g, const CellSet& e) {
  require(e.universe() == g.cell_count(), "cell set does not match the grid");
  Rational a = 0;
  for (int c = 0; c < g.cell_count(); ++c)
    if (e.contains(c)) a += g.area(c);
  return a;
}

Rational integral(const PcrFunction& w, const CellSet& e) {
  const Grid& g = w.grid();
  require(e.universe() == g.cell_count(), "cell set does not match the grid");
  Rational s = 0;
  for (int c = 0; c < g.cell_count(); ++c)
    if (e.contains(c)) s += w.at(c) * g.area(c);
  return s;
}

Rational total_length(const Grid& g, const EdgeSet& edges) {
  Rational s = 0;
  for (int id : edges.ids()) s += g.edge_length(id);
  return s;
}

Rational interior_perimeter(const Grid& g, const CellSet& e, const CellSet& f0) {
  require(e.universe() == g.cell_count() && f0.universe() == g.cell_count(), "cell set does not match the grid");
  require(e.is_subset_of(f0), "E is not a subset of F0");
  Rational p = 0;
  for (int id = 0; id < g.edge_count(); ++id) {
    auto [lo, hi] = g.edge_cells(id);
    if (lo < 0 || hi < 0) continue;
    bool a = e.contains(lo), b = e.contains(hi);
    if (a == b) continue;
    int other = a ? hi : lo;
    if (f0.contains(other)) p += g.edge_length(id);
  }
  return p;
}

EdgeSet boundary_edges(const Grid& g, const CellSet& e) {
  require(e.universe() == g.cell_count(), "cell set does not match the grid");
  std::vector<int> ids;
  for (int id = 0; id < g.edge_count(); ++id) {
    auto [lo, hi] = g.edge_cells(id);
    bool a = lo >= 0 && e.contains(lo), b = hi >= 0 && e.contains(hi);
    if (a != b) ids.push_back(id);
  }
  return EdgeSet::from_ids(std::move(ids));
}

Rational boundary_overlap(const Grid& g, const CellSet& e, const EdgeSet& edges) {
  return total_length(g, boundary_edges(g, e) & edges);
}

EdgeSet shared_edges(const Grid& g, const CellSet& a, const CellSet& b) {
  std::vector<int> ids;
  for (int id = 0; id < g.edge_count(); ++id) {
    auto [lo, hi] = g.edge_cells(id);
    if (lo < 0 || hi < 0) continue;
    if ((a.contains(lo) && b.contains(hi)) || (a.contains(hi) && b.contains(lo))) ids.push_back(id);
  }
  return EdgeSet::from_ids(std::move(ids));
}

LevelPartition level_partition(const PcrFunction& w) {
  const Grid& g = w.grid();
  std::map<Rational, int, std::greater<>> index;
  for (int c = 0; c < g.cell_count(); ++c) index.emplace(w.at(c), 0);
  LevelPartition lp;
  int k = 0;
  for (auto& [v, idx] : index) {
    idx = k++;
    lp.values.push_back(v);
    lp.members.emplace_back(g.cell_count());
  }
  lp.label.resize(g.cell_count());
  for (int c = 0; c < g.cell_count(); ++c) {
    int m = index.at(w.at(c));
    lp.label[c] = m;
    lp.members[m].insert(c);
  }
  return lp;
}

std::vector<int> member_labels(const Grid& g, std::span<const CellSet> members) {
  std::vector<int> label(g.cell_count(), -1);
  for (std::size_t m = 0; m < members.size(); ++m) {
    require(members[m].universe() == g.cell_count(), "cell set does not match the grid");
    for (int c : members[m].cells()) {
      require(label[c] < 0, "partition members overlap");
      label[c] = static_cast<int>(m);
    }
  }
  return label;
}

PcrFunction from_partition(GridPtr grid, std::span<const CellSet> members, std::span<const Rational> values) {
  require(members.size() == values.size(), "one value per member required");
  std::vector<int> label = member_labels(*grid, members);
  std::vector<Rational> v(grid->cell_count());
  for (int c = 0; c < grid->cell_count(); ++c) {
    require(label[c] >= 0, "partition does not cover the grid");
    v[c] = values[label[c]];
  }
  return PcrFunction(std::move(grid), std::move(v));
}

ConsistentSignature induced_signature(const PcrFunction& w) {
  const Grid& g = w.grid();
  LevelPartition lp = level_partition(w);
  std::vector<std::vector<int>> plus(lp.members.size()), minus(lp.members.size());
  for (int id = 0; id < g.edge_count(); ++id) {
    auto [lo, hi] = g.edge_cells(id);
    if (lo < 0 || hi < 0) continue;
    const int order = cmp(w.at(lo), w.at(hi));
    if (order == 0) continue;
    const int high = order > 0 ? lo : hi, low = order > 0 ? hi : lo;
    plus[lp.label[high]].push_back(id);
    minus[lp.label[low]].push_back(id);
  }
  ConsistentSignature sig(lp.members.size());
  for (std::size_t m = 0; m < sig.size(); ++m) {
    sig[m].plus = EdgeSet::from_ids(std::move(plus[m]));
    sig[m].minus = EdgeSet::from_ids(std::move(minus[m]));
  }
  return sig;
}

bool is_consistent(const Grid& g, std::span<const CellSet> members, const ConsistentSignature& sig) {
  if (sig.size() != members.size()) return false;
  std::vector<int> label = member_labels(g, members);
  for (std::size_t m = 0; m < members.size(); ++m) {
    if (!(sig[m].plus & sig[m].minus).empty()) return false;
    EdgeSet bd = boundary_edges(g, members[m]);
    if (!sig[m].plus.is_subset_of(bd) || !sig[m].minus.is_subset_of(bd)) return false;
    for (const EdgeSet* s : {&sig[m].plus, &sig[m].minus}) {
      for (int id : s->ids()) {
        auto [lo, hi] = g.edge_cells(id);
        if (lo < 0 || hi < 0) continue;
        int other = label[lo] == static_cast<int>(m) ? label[hi] : label[lo];
        if (other < 0) continue;
        const EdgeSet& mirror = s == &sig[m].plus ? sig[other].minus : sig[other].plus;
        if (!mirror.contains(id)) return false;
      }
    }
  }
  return true;
}

std::vector<Adjacency> adjacency(const Grid& g, std::span<const CellSet> members) {
  std::vector<int> label = member_labels(g, members);
  std::map<std::pair<int, int>, Rational> acc;
  for (int id = 0; id < g.edge_count(); ++id) {
    auto [lo, hi] = g.edge_cells(id);
    if (lo < 0 || hi < 0) continue;
    int a = label[lo], b = label[hi];
    if (a < 0 || b < 0 || a == b) continue;
    acc[{std::min(a, b), std::max(a, b)}] += g.edge_length(id);
  }
  std::vector<Adjacency> out;
  for (auto& [k, len] : acc) out.push_back({k.first, k.second, len});
  return out;
}

bool OrientedSignature::is_subset_of(const OrientedSignature& o) const {
  return std::includes(o.plus.begin(), o.plus.end(), plus.begin(), plus.end()) &&
         std::includes(o.minus.begin(), o.minus.end(), minus.begin(), minus.end());
}

OrientedSignature orient(const Grid& g, std::span<const CellSet> members, const ConsistentSignature& sig) {
  require(sig.size() == members.size(), "signature does not match the partition");
  OrientedSignature out;
  for (std::size_t m = 0; m < members.size(); ++m) {
    auto side_of = [&](int id) -> std::int64_t {
      auto [lo, hi] = g.edge_cells(id);
      int side = (lo >= 0 && members[m].contains(lo)) ? 0 : 1;
      return 2 * static_cast<std::int64_t>(id) + side;
    };
    for (int id : sig[m].plus.ids()) out.plus.push_back(side_of(id));
    for (int id : sig[m].minus.ids()) out.minus.push_back(side_of(id));
  }
  std::sort(out.plus.begin(), out.plus.end());
  std::sort(out.minus.begin(), out.minus.end());
  return out;
}

Rational max_strip_oscillation(const PcrFunction& w, Axis axis, int m) {
  const Grid& g = w.grid();
  require(m >= 0, "m must be non-negative");
  Rational best = 0;
  const int lines = axis == Axis::x ? g.ny() : g.nx();
  const int len = axis == Axis::x ? g.nx() : g.ny();
  for (int s = 0; s < lines; ++s)
    for (int a = 0; a < len; ++a)
      for (int b = a + 1; b < len && b - a <= m + 1; ++b) {
        const Rational& va = axis == Axis::x ? w.at(a, s) : w.at(s, a);
        const Rational& vb = axis == Axis::x ? w.at(b, s) : w.at(s, b);
        Rational d = abs(va - vb);
        if (d > best) best = d;
      }
  return best;
}

PcrFunction resample(const PcrFunction& w, GridPtr target, Mode mode) {
  std::vector<Rational> v(target->cell_count());
  for (int j = 0; j < target->ny(); ++j) {
    Rational cy = centre_y(*target, j);
    for (int i = 0; i < target->nx(); ++i) {
      int c = w.grid().locate(centre_x(*target, i), cy);
      if (c < 0) {
        require(mode == Mode::plane, "target cell outside the source box in bounded mode");
        continue;
      }
      v[target->cell(i, j)] = w.at(c);
    }
  }
  return PcrFunction(std::move(target), std::move(v));
}

bool support_box(const PcrFunction& w, Rect& out) {
  const Grid& g = w.grid();
  int i0 = g.nx(), i1 = -1, j0 = g.ny(), j1 = -1;
  for (int c = 0; c < g.cell_count(); ++c) {
    if (w.at(c) == 0) continue;
    i0 = std::min(i0, g.col(c));
    i1 = std::max(i1, g.col(c));
    j0 = std::min(j0, g.row(c));
    j1 = std::max(j1, g.row(c));
  }
  if (i1 < 0) return false;
  out = {g.xs()[i0], g.ys()[j0], g.xs()[i1 + 1], g.ys()[j1 + 1]};
  return true;
}

}  // namespace pcrtv
