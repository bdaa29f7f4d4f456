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

#ifndef PCRTV_ROF_HPP
#define PCRTV_ROF_HPP

#include <string>
#include <vector>

#include "pcrtv/geometry.hpp"

namespace pcrtv {

// Exact minimizer of the anisotropic ROF energy, with its stage structure.
// Everything lives on the solve grid: the input grid in bounded mode, the
// support box plus a margin ring in plane mode.
struct RofSolution {
  Mode mode;
  Rational lambda;
  PcrFunction u;
  std::vector<CellSet> partition;  // construction order, values decreasing
  ConsistentSignature signature;
  std::vector<Rational> stage_ratios;
  // Plane mode: the last member is the unbounded zero region.
  bool unbounded_tail = false;
};

RofSolution solve_rof(const PcrFunction& u0, const Rational& lambda, Mode mode);
RofSolution solve_rof_bounded(const PcrFunction& u0, const Rational& lambda);
RofSolution solve_rof_plane(const PcrFunction& u0, const Rational& lambda);

// Minimizer on u0's grid. lambda = 0 returns u0.
PcrFunction minimize(const PcrFunction& u0, const Rational& lambda, Mode mode);

struct CertificateCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CertificateReport {
  std::vector<CertificateCheck> checks;
  bool passed() const;
};

CertificateReport verify_certificate(const RofSolution& sol, const PcrFunction& u0);

}  // namespace pcrtv

#endif  // PCRTV_ROF_HPP
