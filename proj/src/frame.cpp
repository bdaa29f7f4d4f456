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

#include "frame.hpp"

namespace pcrtv::detail {

Frame make_frame(const PcrFunction& u0, Mode mode, int factor) {
  if (mode == Mode::bounded) return {mode, u0.grid_ptr(), u0, CellSet(u0.grid().cell_count())};

  for (const Rational& v : u0.values()) require(v >= 0, "plane mode needs non-negative data");
  const Grid& in = u0.grid();
  Rect box;
  if (!support_box(u0, box)) box = in.box();
  Rational side = std::max(Rational(box.x1 - box.x0), Rational(box.y1 - box.y0));
  Rational margin = side * factor;

  std::vector<Rational> xs{box.x0 - margin}, ys{box.y0 - margin};
  for (const Rational& x : in.xs())
    if (box.x0 <= x && x <= box.x1) xs.push_back(x);
  for (const Rational& y : in.ys())
    if (box.y0 <= y && y <= box.y1) ys.push_back(y);
  xs.push_back(box.x1 + margin);
  ys.push_back(box.y1 + margin);

  auto grid = std::make_shared<const Grid>(std::move(xs), std::move(ys));
  CellSet ring(grid->cell_count());
  for (int c = 0; c < grid->cell_count(); ++c) {
    int i = grid->col(c), j = grid->row(c);
    if (i == 0 || j == 0 || i == grid->nx() - 1 || j == grid->ny() - 1) ring.insert(c);
  }
  PcrFunction u = resample(u0, grid, Mode::plane);
  return {mode, std::move(grid), std::move(u), std::move(ring)};
}

}  // namespace pcrtv::detail
