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

#ifndef PCRTV_SRC_FRAME_HPP
#define PCRTV_SRC_FRAME_HPP

#include "pcrtv/error.hpp"
#include "pcrtv/geometry.hpp"

namespace pcrtv::detail {

// Grid the solvers work on. Bounded mode uses the input grid. Plane mode
// crops to the support box and adds one ring of cells whose width is
// `factor` times the larger side of that box.
struct Frame {
  Mode mode;
  GridPtr grid;
  PcrFunction u0;
  CellSet ring;
};

// Thrown when a plane-mode set reaches the ring; the caller widens it.
class MarginExceeded : public InternalError {
 public:
  MarginExceeded() : InternalError("set reached the margin ring") {}
};

Frame make_frame(const PcrFunction& u0, Mode mode, int factor);

// Runs f(frame) and retries with a doubled ring while it throws MarginExceeded.
template <class F>
auto with_frame(const PcrFunction& u0, Mode mode, F&& f) {
  for (int factor = 1;; factor *= 2) {
    try {
      return f(make_frame(u0, mode, factor));
    } catch (const MarginExceeded&) {
      if (mode != Mode::plane || factor >= 64) throw;
    }
  }
}

}  // namespace pcrtv::detail

#endif  // PCRTV_SRC_FRAME_HPP
