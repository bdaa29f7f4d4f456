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

#include "pcrtv/energy.hpp"

#include <bit>
#include <cstdint>
#include <queue>
#include <unordered_map>

#include "intscale.hpp"
#include "pcrtv/error.hpp"

namespace pcrtv {

void validate(const CheegerProblem& p) {
  require(p.grid != nullptr, "problem has no grid");
  const Grid& g = *p.grid;
  require(p.region.universe() == g.cell_count(), "region does not match the grid");
  require(!p.region.empty(), "empty region");
  require(p.datum.empty() || static_cast<int>(p.datum.size()) == g.cell_count(), "datum does not match the grid");
  require((p.plus & p.minus).empty(), "plus and minus edge sets overlap");
  EdgeSet bd = boundary_edges(g, p.region);
  require(p.plus.is_subset_of(bd), "plus edges must lie on the region boundary");
  require(p.minus.is_subset_of(bd), "minus edges must lie on the region boundary");
}

namespace {

// Contribution of a region-boundary edge seen from a region cell.
Rational boundary_term(const CheegerProblem& p, int id, int other) {
  if (p.plus.contains(id)) return p.grid->edge_length(id);
  if (p.minus.contains(id)) return -p.grid->edge_length(id);
  if (other < 0 && p.open_exterior) return p.grid->edge_length(id);
  return 0;
}

Rational datum_at(const CheegerProblem& p, int c) { return p.datum.empty() ? Rational(0) : p.datum[c]; }

}  // namespace

Rational ratio_numerator(const CheegerProblem& p, const CellSet& e) {
  const Grid& g = *p.grid;
  require(e.universe() == g.cell_count(), "cell set does not match the grid");
  require(e.is_subset_of(p.region), "E is not a subset of the region");
  Rational n = 0;
  for (int c : e.cells()) {
    for (int id : g.cell_edges(c)) {
      auto [lo, hi] = g.edge_cells(id);
      int other = lo == c ? hi : lo;
      if (other >= 0 && e.contains(other)) continue;
      if (other >= 0 && p.region.contains(other))
        n += g.edge_length(id);
      else
        n += boundary_term(p, id, other);
    }
    n -= datum_at(p, c) * g.area(c);
  }
  return n;
}

Rational eval_J(const CheegerProblem& p, const CellSet& e) {
  require(!e.empty(), "E must be nonempty");
  return ratio_numerator(p, e) / area(*p.grid, e);
}

CheegerProblem swapped(const CheegerProblem& p) {
  CheegerProblem q = p;
  std::swap(q.plus, q.minus);
  for (Rational& f : q.datum) f = -f;
  return q;
}

Rational eval_J_check(const CheegerProblem& p, const CellSet& e) { return -eval_J(swapped(p), e); }

RatioModel decompose(const CheegerProblem& p) {
  validate(p);
  const Grid& g = *p.grid;
  RatioModel m;
  m.node_of.assign(g.cell_count(), -1);
  for (int c : p.region.cells()) {
    m.node_of[c] = static_cast<int>(m.cells.size());
    m.cells.push_back(c);
  }
  m.unary.resize(m.cells.size());
  m.area.resize(m.cells.size());
  for (std::size_t k = 0; k < m.cells.size(); ++k) {
    int c = m.cells[k];
    m.area[k] = g.area(c);
    Rational u = -datum_at(p, c) * g.area(c);
    for (int id : g.cell_edges(c)) {
      auto [lo, hi] = g.edge_cells(id);
      int other = lo == c ? hi : lo;
      if (other >= 0 && p.region.contains(other)) {
        if (c == lo) m.pairs.push_back({m.node_of[lo], m.node_of[hi], g.edge_length(id)});
        continue;
      }
      u += boundary_term(p, id, other);
    }
    m.unary[k] = u;
  }
  return m;
}

namespace {

BruteForceResult finish_brute(const CheegerProblem& p, const RatioModel& m, std::vector<std::uint32_t> masks) {
  const Grid& g = *p.grid;
  BruteForceResult r;
  std::uint32_t all = 0;
  for (std::uint32_t mask : masks) {
    CellSet s(g.cell_count());
    for (std::size_t k = 0; k < m.cells.size(); ++k)
      if (mask >> k & 1u) s.insert(m.cells[k]);
    r.minimizers.push_back(std::move(s));
    all |= mask;
  }
  r.min_value = eval_J(p, r.minimizers.front());
  r.maximal = CellSet(g.cell_count());
  for (std::size_t k = 0; k < m.cells.size(); ++k)
    if (all >> k & 1u) r.maximal.insert(m.cells[k]);
  r.union_is_minimizer = eval_J(p, r.maximal) == r.min_value;
  return r;
}

}  // namespace

BruteForceResult brute_force_min(const CheegerProblem& p, int cap) {
  require(cap >= 1 && cap <= 30, "brute force cap must lie in [1, 30]");
  RatioModel m = decompose(p);
  const int n = static_cast<int>(m.cells.size());
  require(n <= cap, "region too large for exhaustive search");

  std::vector<Rational> num_terms = m.unary;
  for (const auto& pr : m.pairs) num_terms.push_back(pr.length);
  detail::Scaled sn = detail::scale_to_integers(num_terms);
  detail::Scaled sa = detail::scale_to_integers(m.area);
  const mpz_class limit = detail::pow2(61);
  std::vector<std::uint32_t> best_masks;

  if (sn.fits(limit) && sa.fits(limit)) {
    std::vector<std::int64_t> b(n), a(n);
    for (int k = 0; k < n; ++k) {
      b[k] = detail::to_i64(sn.values[k]);
      a[k] = detail::to_i64(sa.values[k]);
    }
    std::vector<std::vector<std::pair<int, std::int64_t>>> nbr(n);
    for (std::size_t q = 0; q < m.pairs.size(); ++q) {
      std::int64_t len = detail::to_i64(sn.values[n + q]);
      nbr[m.pairs[q].u].push_back({m.pairs[q].v, len});
      nbr[m.pairs[q].v].push_back({m.pairs[q].u, len});
    }
    std::uint32_t mask = 0;
    std::int64_t num = 0, den = 0, best_num = 0, best_den = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < total; ++k) {
      const int bit = std::countr_zero(k);
      const bool adding = !(mask >> bit & 1u);
      std::int64_t delta = adding ? b[bit] : -b[bit];
      for (auto [v, len] : nbr[bit]) {
        const bool in = mask >> v & 1u;
        delta += (adding == in) ? -len : len;
      }
      num += delta;
      den += adding ? a[bit] : -a[bit];
      mask ^= 1u << bit;
      if (best_masks.empty()) {
        best_num = num;
        best_den = den;
        best_masks.push_back(mask);
        continue;
      }
      __int128 lhs = static_cast<__int128>(num) * best_den;
      __int128 rhs = static_cast<__int128>(best_num) * den;
      if (lhs < rhs) {
        best_num = num;
        best_den = den;
        best_masks.assign(1, mask);
      } else if (lhs == rhs) {
        best_masks.push_back(mask);
      }
    }
  } else {
    Rational best;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
      Rational num = 0, den = 0;
      for (int k = 0; k < n; ++k)
        if (mask >> k & 1u) {
          num += m.unary[k];
          den += m.area[k];
        }
      for (const auto& pr : m.pairs)
        if ((mask >> pr.u & 1u) != (mask >> pr.v & 1u)) num += pr.length;
      Rational j = num / den;
      if (best_masks.empty() || j < best) {
        best = j;
        best_masks.assign(1, mask);
      } else if (j == best) {
        best_masks.push_back(mask);
      }
    }
  }
  return finish_brute(p, m, std::move(best_masks));
}

namespace {

template <class W>
W stoer_wagner(int n, const std::vector<std::tuple<int, int, W>>& edges) {
  std::vector<std::unordered_map<int, W>> adj(n);
  for (const auto& [u, v, w] : edges) {
    adj[u][v] += w;
    adj[v][u] += w;
  }
  std::vector<bool> alive(n, true);
  bool have = false;
  W best = 0;
  for (int phase = 0; phase < n - 1; ++phase) {
    std::vector<W> key(n, W(0));
    std::vector<bool> taken(n, false);
    std::priority_queue<std::pair<W, int>> pq;
    int alive_count = 0;
    for (int v = 0; v < n; ++v)
      if (alive[v]) {
        pq.push({W(0), v});
        ++alive_count;
      }
    int prev = -1, last = -1;
    for (int step = 0; step < alive_count; ++step) {
      int v = -1;
      while (!pq.empty()) {
        auto [k, cand] = pq.top();
        pq.pop();
        if (!taken[cand] && k == key[cand]) {
          v = cand;
          break;
        }
      }
      ensure(v >= 0, "minimum cut phase ran out of vertices");
      taken[v] = true;
      prev = last;
      last = v;
      for (const auto& [u, w] : adj[v])
        if (alive[u] && !taken[u]) {
          key[u] += w;
          pq.push({key[u], u});
        }
    }
    if (!have || key[last] < best) {
      best = key[last];
      have = true;
    }
    for (const auto& [u, w] : adj[last]) {
      if (u == prev) continue;
      adj[prev][u] += w;
      adj[u][prev] += w;
      adj[u].erase(last);
    }
    adj[prev].erase(last);
    adj[last].clear();
    alive[last] = false;
  }
  return best;
}

}  // namespace

Rational min_relative_perimeter(const Grid& g, const CellSet& omega) {
  require(omega.universe() == g.cell_count(), "cell set does not match the grid");
  std::vector<int> cells = omega.cells();
  const int n = static_cast<int>(cells.size());
  require(n >= 2, "omega needs at least two cells");
  std::vector<int> node(g.cell_count(), -1);
  for (int k = 0; k < n; ++k) node[cells[k]] = k;
  std::vector<std::pair<int, int>> ends;
  std::vector<Rational> lens;
  for (int id = 0; id < g.edge_count(); ++id) {
    auto [lo, hi] = g.edge_cells(id);
    if (lo < 0 || hi < 0 || node[lo] < 0 || node[hi] < 0) continue;
    ends.push_back({node[lo], node[hi]});
    lens.push_back(g.edge_length(id));
  }
  detail::Scaled s = detail::scale_to_integers(lens);
  if (s.fits(detail::pow2(61))) {
    std::vector<std::tuple<int, int, std::int64_t>> edges;
    for (std::size_t k = 0; k < ends.size(); ++k) edges.emplace_back(ends[k].first, ends[k].second, detail::to_i64(s.values[k]));
    Rational r(mpz_class(static_cast<long>(stoer_wagner(n, edges))), s.factor);
    r.canonicalize();
    return r;
  }
  std::vector<std::tuple<int, int, mpz_class>> edges;
  for (std::size_t k = 0; k < ends.size(); ++k) edges.emplace_back(ends[k].first, ends[k].second, s.values[k]);
  Rational r(stoer_wagner(n, edges), s.factor);
  r.canonicalize();
  return r;
}

}  // namespace pcrtv
