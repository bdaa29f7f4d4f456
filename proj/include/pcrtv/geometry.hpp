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

#ifndef PCRTV_GEOMETRY_HPP
#define PCRTV_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "pcrtv/rational.hpp"

namespace pcrtv {

enum class Mode { bounded, plane };

enum class Axis { x, y };

enum class EdgeOrientation { vertical, horizontal };

// Vertical edge (i, j) lies on x = xs[i] between ys[j] and ys[j+1].
// Horizontal edge (i, j) lies on y = ys[j] between xs[i] and xs[i+1].
struct GridEdge {
  EdgeOrientation orientation;
  int i;
  int j;
  friend bool operator==(const GridEdge&, const GridEdge&) = default;
};

struct Rect {
  Rational x0, y0, x1, y1;
};

// Tensor grid of cells. Cell (i, j) is [xs[i], xs[i+1]] x [ys[j], ys[j+1]];
// its id is j * nx + i, so row 0 is the bottom row.
//
// Edge ids: vertical edges first, id = j * (nx + 1) + i, then horizontal
// edges, id = V + j * nx + i with V = (nx + 1) * ny.
class Grid {
 public:
  Grid(std::vector<Rational> xs, std::vector<Rational> ys);

  const std::vector<Rational>& xs() const { return xs_; }
  const std::vector<Rational>& ys() const { return ys_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int cell_count() const { return nx_ * ny_; }
  int cell(int i, int j) const { return j * nx_ + i; }
  int col(int c) const { return c % nx_; }
  int row(int c) const { return c / nx_; }

  Rational width(int i) const { return xs_[i + 1] - xs_[i]; }
  Rational height(int j) const { return ys_[j + 1] - ys_[j]; }
  const Rational& area(int c) const { return areas_[c]; }
  Rect box() const { return {xs_.front(), ys_.front(), xs_.back(), ys_.back()}; }

  int vertical_edge_count() const { return (nx_ + 1) * ny_; }
  int edge_count() const { return vertical_edge_count() + nx_ * (ny_ + 1); }
  int edge_id(const GridEdge& e) const;
  GridEdge edge(int id) const;
  const Rational& edge_length(int id) const { return lengths_[id]; }
  // {cell on the low side, cell on the high side}; -1 outside the box.
  std::array<int, 2> edge_cells(int id) const;
  // left, right, bottom, top
  std::array<int, 4> cell_edges(int c) const;

  // Cell containing the point, or -1. Points on a grid line resolve to the
  // cell above/right of it; callers use cell centres.
  int locate(const Rational& x, const Rational& y) const;

  friend bool operator==(const Grid& a, const Grid& b) { return a.xs_ == b.xs_ && a.ys_ == b.ys_; }

 private:
  std::vector<Rational> xs_, ys_;
  int nx_ = 0, ny_ = 0;
  std::vector<Rational> areas_;
  std::vector<Rational> lengths_;
};

using GridPtr = std::shared_ptr<const Grid>;

class CellSet {
 public:
  CellSet() = default;
  explicit CellSet(int universe, bool filled = false) : mask_(universe, filled ? 1 : 0) {}
  static CellSet from_cells(int universe, std::span<const int> cells);

  int universe() const { return static_cast<int>(mask_.size()); }
  bool contains(int c) const { return mask_[c] != 0; }
  void insert(int c) { mask_[c] = 1; }
  void erase(int c) { mask_[c] = 0; }
  int count() const;
  bool empty() const { return count() == 0; }
  std::vector<int> cells() const;
  bool is_subset_of(const CellSet& other) const;
  bool intersects(const CellSet& other) const;

  CellSet& operator|=(const CellSet& o);
  CellSet& operator&=(const CellSet& o);
  CellSet& operator-=(const CellSet& o);
  friend CellSet operator|(CellSet a, const CellSet& b) { return a |= b; }
  friend CellSet operator&(CellSet a, const CellSet& b) { return a &= b; }
  friend CellSet operator-(CellSet a, const CellSet& b) { return a -= b; }
  friend bool operator==(const CellSet&, const CellSet&) = default;

 private:
  std::vector<std::uint8_t> mask_;
};

// Sorted set of edge ids.
class EdgeSet {
 public:
  EdgeSet() = default;
  static EdgeSet from_ids(std::vector<int> ids);

  const std::vector<int>& ids() const& { return ids_; }
  std::vector<int> ids() && { return std::move(ids_); }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(int id) const;
  bool is_subset_of(const EdgeSet& other) const;

  friend EdgeSet operator|(const EdgeSet& a, const EdgeSet& b);
  friend EdgeSet operator&(const EdgeSet& a, const EdgeSet& b);
  friend EdgeSet operator-(const EdgeSet& a, const EdgeSet& b);
  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<int> ids_;
};

struct Signature {
  EdgeSet plus;
  EdgeSet minus;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// One signature per partition member, in member order.
using ConsistentSignature = std::vector<Signature>;

class PcrFunction {
 public:
  PcrFunction(GridPtr grid, std::vector<Rational> values);
  PcrFunction(Grid grid, std::vector<Rational> values);

  const Grid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& at(int c) const { return values_[c]; }
  const Rational& at(int i, int j) const { return values_[grid_->cell(i, j)]; }

  friend bool operator==(const PcrFunction& a, const PcrFunction& b) {
    return *a.grid_ == *b.grid_ && a.values_ == b.values_;
  }

 private:
  GridPtr grid_;
  std::vector<Rational> values_;
};

Grid build_grid(std::span<const Rect> rects, std::span<const Rational> extra_xs = {},
                std::span<const Rational> extra_ys = {});

// Value on each cell is the sum of the values of the pieces covering it.
PcrFunction rasterize(GridPtr grid, std::span<const std::pair<Rect, Rational>> pieces);

// Cell set of all cells lying inside r.
CellSet cells_in(const Grid& g, const Rect& r);

Rational area(const Grid& g, const CellSet& e);
Rational integral(const PcrFunction& w, const CellSet& e);
Rational total_length(const Grid& g, const EdgeSet& edges);

// Length of edges separating E from F0 \ E; E must be a subset of F0.
Rational interior_perimeter(const Grid& g, const CellSet& e, const CellSet& f0);
Rational boundary_overlap(const Grid& g, const CellSet& e, const EdgeSet& edges);
// Edges with exactly one side in E, box edges included.
EdgeSet boundary_edges(const Grid& g, const CellSet& e);
// Edges with one side in A and the other in B.
EdgeSet shared_edges(const Grid& g, const CellSet& a, const CellSet& b);

struct LevelPartition {
  std::vector<CellSet> members;  // decreasing value
  std::vector<Rational> values;
  std::vector<int> label;        // cell -> member
};

LevelPartition level_partition(const PcrFunction& w);
PcrFunction from_partition(GridPtr grid, std::span<const CellSet> members, std::span<const Rational> values);

// Member index of every cell. Throws ValidationError on overlap; uncovered
// cells get -1.
std::vector<int> member_labels(const Grid& g, std::span<const CellSet> members);

// Signature induced by w, aligned with level_partition(w). Edges on the box
// boundary are neutral.
ConsistentSignature induced_signature(const PcrFunction& w);

bool is_consistent(const Grid& g, std::span<const CellSet> members, const ConsistentSignature& sig);

struct Adjacency {
  int a;
  int b;
  Rational length;
};
std::vector<Adjacency> adjacency(const Grid& g, std::span<const CellSet> members);

// Half-edge id = 2 * edge + side, side 0 the low cell, 1 the high cell.
// A plus label of member M on edge e becomes the half-edge on M's side.
struct OrientedSignature {
  std::vector<std::int64_t> plus;
  std::vector<std::int64_t> minus;
  bool is_subset_of(const OrientedSignature& other) const;
  friend bool operator==(const OrientedSignature&, const OrientedSignature&) = default;
};
OrientedSignature orient(const Grid& g, std::span<const CellSet> members, const ConsistentSignature& sig);

// max |w(R1) - w(R2)| over cells R1, R2 in the same row (Axis::x) or column
// (Axis::y) whose index gap is between 1 and m + 1.
Rational max_strip_oscillation(const PcrFunction& w, Axis axis, int m);

// Value of w at each target cell centre; zero outside w's box in plane mode.
PcrFunction resample(const PcrFunction& w, GridPtr target, Mode mode);

// Smallest rectangle holding the support of w, or nullopt-like empty flag.
bool support_box(const PcrFunction& w, Rect& out);

}  // namespace pcrtv

#endif  // PCRTV_GEOMETRY_HPP
