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

#include "pcrtv/cutsolve.hpp"

#include "intscale.hpp"
#include "maxflow.hpp"
#include "pcrtv/error.hpp"

namespace pcrtv {

CutInstance build_cut_instance(const RatioModel& m, int universe, const Rational& lambda) {
  CutInstance inst;
  inst.universe = universe;
  inst.cells = m.cells;
  inst.pairs = m.pairs;
  inst.unary.reserve(m.unary.size());
  for (std::size_t k = 0; k < m.unary.size(); ++k) inst.unary.push_back(m.unary[k] - lambda * m.area[k]);
  return inst;
}

CutInstance build_cut_instance(const CheegerProblem& p, const Rational& lambda) {
  return build_cut_instance(decompose(p), p.grid->cell_count(), lambda);
}

Rational cut_energy(const CutInstance& inst, const CellSet& s) {
  require(s.universe() == inst.universe, "cell set does not match the instance");
  std::vector<bool> in(inst.cells.size());
  Rational e = 0;
  int found = 0;
  for (std::size_t k = 0; k < inst.cells.size(); ++k)
    if (s.contains(inst.cells[k])) {
      in[k] = true;
      e += inst.unary[k];
      ++found;
    }
  require(found == s.count(), "selection contains cells outside the instance");
  for (const auto& pr : inst.pairs)
    if (in[pr.u] != in[pr.v]) e += pr.length;
  return e;
}

namespace {

template <class Cap>
std::pair<mpz_class, std::vector<bool>> solve_flow(const CutInstance& inst, const detail::Scaled& sc, Cap (*conv)(const mpz_class&)) {
  const int n = static_cast<int>(inst.cells.size());
  const int s = n, t = n + 1;
  detail::Dinic<Cap> d(n + 2);
  for (int k = 0; k < n; ++k) {
    const mpz_class& u = sc.values[k];
    if (u > 0)
      d.add_edge(k, t, conv(u), Cap(0));
    else if (u < 0)
      d.add_edge(s, k, conv(mpz_class(-u)), Cap(0));
  }
  for (std::size_t q = 0; q < inst.pairs.size(); ++q) {
    Cap c = conv(sc.values[n + q]);
    d.add_edge(inst.pairs[q].u, inst.pairs[q].v, c, c);
  }
  Cap flow = d.max_flow(s, t);
  std::vector<bool> reach = d.reaches(t);
  if constexpr (std::is_same_v<Cap, mpz_class>)
    return {flow, reach};
  else
    return {mpz_class(static_cast<long>(flow)), reach};
}

std::int64_t as_i64(const mpz_class& z) { return detail::to_i64(z); }
mpz_class as_mpz(const mpz_class& z) { return z; }

}  // namespace

CutResult min_cut(const CutInstance& inst) {
  const int n = static_cast<int>(inst.cells.size());
  std::vector<Rational> caps = inst.unary;
  for (const auto& pr : inst.pairs) caps.push_back(pr.length);
  detail::Scaled sc = detail::scale_to_integers(caps);

  mpz_class flow;
  std::vector<bool> reach;
  if (sc.fits(detail::pow2(60)))
    std::tie(flow, reach) = solve_flow<std::int64_t>(inst, sc, &as_i64);
  else
    std::tie(flow, reach) = solve_flow<mpz_class>(inst, sc, &as_mpz);

  mpz_class offset = 0;
  for (int k = 0; k < n; ++k)
    if (sc.values[k] < 0) offset += sc.values[k];

  CutResult r;
  r.maximal_set = CellSet(inst.universe);
  for (int k = 0; k < n; ++k)
    if (!reach[k]) r.maximal_set.insert(inst.cells[k]);
  r.energy = Rational(flow + offset, sc.factor);
  r.energy.canonicalize();
  ensure(cut_energy(inst, r.maximal_set) == r.energy, "cut energy disagrees with the flow value");
  return r;
}

RatioResult dinkelbach_min_ratio(const CheegerProblem& p) {
  RatioModel m = decompose(p);
  const int universe = p.grid->cell_count();
  Rational num = 0, den = 0;
  for (std::size_t k = 0; k < m.cells.size(); ++k) {
    num += m.unary[k];
    den += m.area[k];
  }
  RatioResult r;
  r.ratio = num / den;
  r.trace.push_back(r.ratio);
  const int cap = 4 * static_cast<int>(m.cells.size()) + 64;
  for (int it = 1;; ++it) {
    ensure(it <= cap, "ratio iteration did not terminate");
    r.iterations = it;
    CutResult c = min_cut(build_cut_instance(m, universe, r.ratio));
    if (c.energy == 0) {
      ensure(!c.maximal_set.empty(), "optimal set vanished at the optimum");
      r.minimizer = std::move(c.maximal_set);
      return r;
    }
    ensure(c.energy < 0, "positive minimum cut energy");
    Rational next = eval_J(p, c.maximal_set);
    ensure(next < r.ratio, "ratio did not decrease");
    r.ratio = next;
    r.trace.push_back(next);
  }
}

bool has_negative_ratio(const CheegerProblem& p) {
  return min_cut(build_cut_instance(p, Rational(0))).energy < 0;
}

}  // namespace pcrtv
