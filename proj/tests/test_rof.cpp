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

#include <random>

#include "doctest.h"
#include "pcrtv/error.hpp"
#include "pcrtv/oracle.hpp"
#include "pcrtv/rof.hpp"
#include "support/fixtures.hpp"

using namespace pcrtv;
using fixtures::q;

namespace {

Rational value_on(const PcrFunction& u, const Rect& r) {
  const Grid& g = u.grid();
  return u.at(cells_in(g, r).cells().front());
}

Rational l2_sq(const PcrFunction& a, const PcrFunction& b) {
  Rational s = 0;
  for (int c = 0; c < a.grid().cell_count(); ++c) s += a.grid().area(c) * (a.at(c) - b.at(c)) * (a.at(c) - b.at(c));
  return s;
}

Rational random_lambda(std::mt19937_64& rng) { return q(static_cast<long>(rng() % 32) + 1, 8); }

}  // namespace

TEST_CASE("constant data is a fixed point") {
  Grid g({q(0), q(1), q(3)}, {q(0), q(2)});
  PcrFunction u0(g, {q(5, 2), q(5, 2)});
  RofSolution sol = solve_rof_bounded(u0, q(7));
  CHECK(sol.u == u0);
  CHECK(sol.partition.size() == 1);
  CHECK(verify_certificate(sol, u0).passed());
}

TEST_CASE("two stacked cells follow the two-point closed form") {
  Grid g({q(0), q(1)}, {q(0), q(1), q(2)});
  PcrFunction u0(g, {q(0), q(1)});
  for (Rational lambda : {q(1, 8), q(1, 4), q(1, 2), q(3, 4), q(2)}) {
    auto [top, bottom] = fixtures::two_point_solution(q(1), q(0), q(1), q(1), lambda);
    PcrFunction u = minimize(u0, lambda, Mode::bounded);
    CHECK(u.at(0, 1) == top);
    CHECK(u.at(0, 0) == bottom);
  }
  CHECK(minimize(u0, q(1, 8), Mode::bounded).at(0, 1) == q(7, 8));
}

TEST_CASE("square indicator in the plane") {
  PcrFunction u0 = fixtures::square_indicator(q(2));
  CHECK(minimize(u0, q(1, 4), Mode::plane).at(0) == q(1, 2));
  CHECK(minimize(u0, q(1, 2), Mode::plane).at(0) == 0);
  RofSolution sol = solve_rof_plane(u0, q(1, 4));
  CHECK(sol.unbounded_tail);
  CHECK(sol.partition.size() == 2);
  CHECK(sol.stage_ratios.front() == -2);
  CHECK(verify_certificate(sol, u0).passed());
}

TEST_CASE("cross datum below the first merging time") {
  PcrFunction u0 = fixtures::stepped_cross();
  PcrFunction u = minimize(u0, q(1, 10), Mode::plane);
  for (const Rect& r : fixtures::cross_arms()) CHECK(value_on(u, r) == q(13, 5));
  CHECK(value_on(u, fixtures::cross_center()) == q(5, 2) - q(4, 9) * q(1, 10));
  CHECK(value_on(u, fixtures::cross_center()) == q(221, 90));
  RofSolution sol = solve_rof_plane(u0, q(1, 10));
  CHECK(sol.partition.size() == 3);
  CHECK(verify_certificate(sol, u0).passed());
}

TEST_CASE("cross datum after merging") {
  PcrFunction u0 = fixtures::stepped_cross();
  PcrFunction u = minimize(u0, q(1, 2), Mode::plane);
  Rational merged = q(69, 26) - q(20, 13) * q(1, 2);
  CHECK(merged == q(49, 26));
  CHECK(value_on(u, fixtures::cross_center()) == merged);
  for (const Rect& r : fixtures::cross_arms()) CHECK(value_on(u, r) == merged);
}

TEST_CASE("cross datum beyond 3/4, adjudicated by the oracle") {
  PcrFunction u0 = fixtures::stepped_cross();
  for (Rational lambda : {q(1), q(5, 4)}) {
    PcrFunction u = minimize(u0, lambda, Mode::plane);
    CHECK(value_on(u, fixtures::cross_center()) == q(5, 2) - q(4, 3) * lambda);
    for (const Rect& r : fixtures::cross_arms()) CHECK(value_on(u, r) == 3 - 2 * lambda);
    OracleResult o = graph_tv_solve(make_graph_tv_problem(u0, lambda, Mode::plane), 1e-12);
    CHECK(compare(u, o.u, 1e-6).passed);
    CHECK(verify_certificate(solve_rof_plane(u0, lambda), u0).passed());
  }
  // both formulas meet at 3/4
  CHECK(q(69, 26) - q(20, 13) * q(3, 4) == q(5, 2) - q(4, 3) * q(3, 4));
}

TEST_CASE("invalid arguments") {
  PcrFunction u0 = fixtures::stepped_cross();
  CHECK_THROWS_AS(solve_rof_bounded(u0, q(0)), ValidationError);
  CHECK_THROWS_AS(solve_rof_plane(u0, q(-1)), ValidationError);
  Grid g({q(0), q(1)}, {q(0), q(1)});
  CHECK_THROWS_AS(solve_rof_plane(PcrFunction(g, {q(-1)}), q(1)), ValidationError);
  CHECK(minimize(u0, q(0), Mode::plane) == u0);
}

TEST_CASE("all-zero plane data") {
  PcrFunction z(fixtures::stepped_cross().grid_ptr(), std::vector<Rational>(25));
  RofSolution sol = solve_rof_plane(z, q(1));
  CHECK(sol.partition.size() == 1);
  CHECK(minimize(z, q(1), Mode::plane) == z);
  CHECK(verify_certificate(sol, z).passed());
}

TEST_CASE("certificates verify on random data") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 40; ++it) {
    PcrFunction u0 = fixtures::random_pcr(rng, 5, 5);
    Mode mode = it % 2 ? Mode::plane : Mode::bounded;
    RofSolution sol = solve_rof(u0, random_lambda(rng), mode);
    CertificateReport rep = verify_certificate(sol, u0);
    CHECK(rep.passed());
  }
}

TEST_CASE("tampered certificates fail") {
  PcrFunction u0 = fixtures::stepped_cross();
  RofSolution sol = solve_rof_plane(u0, q(1, 10));
  REQUIRE(verify_certificate(sol, u0).passed());

  RofSolution t = sol;
  std::vector<Rational> v = t.u.values();
  v[t.partition[0].cells().front()] += q(1, 1000);
  t.u = PcrFunction(t.u.grid_ptr(), v);
  CHECK_FALSE(verify_certificate(t, u0).passed());

  t = sol;
  t.stage_ratios[1] -= 1;
  CHECK_FALSE(verify_certificate(t, u0).passed());

  t = sol;
  t.lambda = q(1, 9);
  CHECK_FALSE(verify_certificate(t, u0).passed());

  t = sol;
  std::swap(t.partition[0], t.partition[1]);
  CHECK_FALSE(verify_certificate(t, u0).passed());

  t = sol;
  t.mode = Mode::bounded;
  CHECK_FALSE(verify_certificate(t, u0).passed());

  t = sol;
  t.signature[0].plus = t.signature[0].plus - EdgeSet::from_ids({t.signature[0].plus.ids().front()});
  CHECK_FALSE(verify_certificate(t, u0).passed());
}

TEST_CASE("mean, maximum principle, contraction and jump monotonicity") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 40; ++it) {
    PcrFunction u0 = fixtures::random_pcr(rng, 6, 6);
    const Grid& g = u0.grid();
    Rational lambda = random_lambda(rng);
    PcrFunction u = minimize(u0, lambda, Mode::bounded);
    CellSet all(g.cell_count(), true);
    CHECK(integral(u, all) == integral(u0, all));
    Rational lo = *std::min_element(u0.values().begin(), u0.values().end());
    Rational hi = *std::max_element(u0.values().begin(), u0.values().end());
    for (const Rational& x : u.values()) CHECK((lo <= x && x <= hi));
    for (int m = 0; m < std::max(g.nx(), g.ny()); ++m) {
      CHECK(max_strip_oscillation(u, Axis::x, m) <= max_strip_oscillation(u0, Axis::x, m));
      CHECK(max_strip_oscillation(u, Axis::y, m) <= max_strip_oscillation(u0, Axis::y, m));
    }

    std::vector<Rational> other = u0.values();
    for (Rational& x : other) x += q(static_cast<long>(rng() % 5), 4);
    PcrFunction v0(u0.grid_ptr(), other);
    PcrFunction v = minimize(v0, lambda, Mode::bounded);
    CHECK(l2_sq(u, v) <= l2_sq(u0, v0));
    for (int c = 0; c < g.cell_count(); ++c) CHECK(u.at(c) <= v.at(c));
  }
}

TEST_CASE("plane solutions stay non-negative and below the datum maximum") {
  std::mt19937_64 rng(29);
  for (int it = 0; it < 30; ++it) {
    PcrFunction u0 = fixtures::random_pcr(rng, 5, 5);
    PcrFunction u = minimize(u0, random_lambda(rng), Mode::plane);
    Rational hi = *std::max_element(u0.values().begin(), u0.values().end());
    for (const Rational& x : u.values()) CHECK((0 <= x && x <= hi));
  }
}

TEST_CASE("random 4x4 data agrees with a tight oracle") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 20; ++it) {
    PcrFunction u0 = fixtures::random_pcr(rng, 4, 4, true, 2);
    Rational lambda = random_lambda(rng);
    Mode mode = it % 2 ? Mode::plane : Mode::bounded;
    PcrFunction u = minimize(u0, lambda, mode);
    OracleResult o = graph_tv_solve(make_graph_tv_problem(u0, lambda, mode), 1e-14);
    CHECK(compare(u, o.u, 1e-9).passed);
  }
}
