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

#include "pcrtv/rof.hpp"

#include <optional>
#include <sstream>

#include "frame.hpp"
#include "pcrtv/cutsolve.hpp"
#include "pcrtv/energy.hpp"
#include "pcrtv/error.hpp"

namespace pcrtv {

namespace {

CheegerProblem stage_problem(const detail::Frame& fr, const CellSet& done, const std::vector<Rational>& datum) {
  CheegerProblem p;
  p.grid = fr.grid;
  p.region = CellSet(fr.grid->cell_count(), true) - done;
  p.minus = shared_edges(*fr.grid, p.region, done);
  p.datum = datum;
  p.open_exterior = fr.mode == Mode::plane;
  return p;
}

std::vector<Rational> scaled_datum(const PcrFunction& u0, const Rational& lambda) {
  std::vector<Rational> d = u0.values();
  for (Rational& v : d) v /= lambda;
  return d;
}

Signature stage_signature(const Grid& g, const CellSet& f, const CellSet& done) {
  const CellSet rest = CellSet(g.cell_count(), true) - done - f;
  return {shared_edges(g, f, rest), shared_edges(g, f, done)};
}

RofSolution solve_on_frame(const detail::Frame& fr, const Rational& lambda) {
  require(lambda > 0, "lambda must be positive");
  const Grid& g = *fr.grid;
  const std::vector<Rational> datum = scaled_datum(fr.u0, lambda);
  const CellSet all(g.cell_count(), true);
  CellSet done(g.cell_count());
  std::vector<CellSet> members;
  ConsistentSignature sig;
  std::vector<Rational> ratios, values;
  bool tail = false;

  while (done != all) {
    CheegerProblem p = stage_problem(fr, done, datum);
    if (fr.mode == Mode::plane && !has_negative_ratio(p)) {
      tail = true;
      members.push_back(p.region);
      sig.push_back({EdgeSet(), p.minus});
      ratios.push_back(0);
      values.push_back(0);
      break;
    }
    RatioResult rr = dinkelbach_min_ratio(p);
    if (fr.mode == Mode::plane && rr.minimizer.intersects(fr.ring)) throw detail::MarginExceeded();
    sig.push_back(stage_signature(g, rr.minimizer, done));
    values.push_back(-lambda * rr.ratio);
    ratios.push_back(rr.ratio);
    done |= rr.minimizer;
    members.push_back(std::move(rr.minimizer));
  }
  ensure(fr.mode == Mode::bounded || tail, "plane solve ended without the unbounded region");
  for (std::size_t k = 1; k < values.size(); ++k) ensure(values[k] < values[k - 1], "stage values not decreasing");

  PcrFunction u = from_partition(fr.grid, members, values);
  return {fr.mode, lambda, std::move(u), std::move(members), std::move(sig), std::move(ratios), tail};
}

}  // namespace

RofSolution solve_rof_bounded(const PcrFunction& u0, const Rational& lambda) {
  return solve_on_frame(detail::make_frame(u0, Mode::bounded, 1), lambda);
}

RofSolution solve_rof_plane(const PcrFunction& u0, const Rational& lambda) {
  require(lambda > 0, "lambda must be positive");
  return detail::with_frame(u0, Mode::plane, [&](const detail::Frame& fr) { return solve_on_frame(fr, lambda); });
}

RofSolution solve_rof(const PcrFunction& u0, const Rational& lambda, Mode mode) {
  return mode == Mode::plane ? solve_rof_plane(u0, lambda) : solve_rof_bounded(u0, lambda);
}

PcrFunction minimize(const PcrFunction& u0, const Rational& lambda, Mode mode) {
  require(lambda >= 0, "lambda must be non-negative");
  if (mode == Mode::plane)
    for (const Rational& v : u0.values()) require(v >= 0, "plane mode needs non-negative data");
  if (lambda == 0) return u0;
  RofSolution sol = solve_rof(u0, lambda, mode);
  return resample(sol.u, u0.grid_ptr(), mode);
}

bool CertificateReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

namespace {

class Checker {
 public:
  explicit Checker(CertificateReport& r) : report_(r) {}

  template <class F>
  void run(const std::string& name, F&& f) {
    CertificateCheck c{name, false, ""};
    try {
      c.detail = f();
      c.passed = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    report_.checks.push_back(std::move(c));
  }

 private:
  CertificateReport& report_;
};

std::string member_msg(std::size_t k, const std::string& what) {
  std::ostringstream os;
  os << "member " << k << ": " << what;
  return os.str();
}

}  // namespace

CertificateReport verify_certificate(const RofSolution& sol, const PcrFunction& u0_in) {
  CertificateReport report;
  Checker check(report);
  const Grid& g = sol.u.grid();
  const std::size_t n = sol.partition.size();
  const std::size_t bounded_count = sol.unbounded_tail ? n - 1 : n;

  check.run("lambda_positive", [&]() -> std::string { return sol.lambda > 0 ? "" : "lambda is not positive"; });

  check.run("mode_consistent", [&]() -> std::string {
    if (sol.mode == Mode::bounded) {
      if (sol.unbounded_tail) return "bounded solution with an unbounded member";
      if (!(u0_in.grid() == g)) return "bounded solution on a grid other than the input grid";
      return "";
    }
    if (!sol.unbounded_tail) return "plane solution without the unbounded member";
    for (const Rational& v : u0_in.values())
      if (v < 0) return "plane mode datum has negative values";
    return "";
  });

  std::optional<PcrFunction> resampled;
  check.run("datum_on_grid", [&]() -> std::string {
    try {
      resampled = resample(u0_in, sol.u.grid_ptr(), sol.mode);
    } catch (const ValidationError& e) {
      return e.what();
    }
    return "";
  });
  if (!resampled) return report;
  const PcrFunction& u0 = *resampled;
  const std::vector<Rational> datum = [&] {
    std::vector<Rational> d = u0.values();
    if (sol.lambda != 0)
      for (Rational& v : d) v /= sol.lambda;
    return d;
  }();

  bool structure_ok = false;
  check.run("partition_covers", [&]() -> std::string {
    if (n == 0) return "empty partition";
    if (sol.signature.size() != n || sol.stage_ratios.size() != n) return "partition, signature and ratios differ in length";
    std::vector<int> label = member_labels(g, sol.partition);
    for (int l : label)
      if (l < 0) return "partition does not cover the domain";
    for (std::size_t k = 0; k < n; ++k)
      if (sol.partition[k].empty()) return member_msg(k, "empty");
    structure_ok = true;
    return "";
  });
  if (!structure_ok) return report;

  auto value_of = [&](std::size_t k) -> Rational { return sol.u.at(sol.partition[k].cells().front()); };

  check.run("values_match_stage_formula", [&]() -> std::string {
    for (std::size_t k = 0; k < n; ++k) {
      const CellSet& f = sol.partition[k];
      Rational expect = 0;
      if (k < bounded_count) {
        const Signature& s = sol.signature[k];
        expect = (integral(u0, f) - sol.lambda * (total_length(g, s.plus) - total_length(g, s.minus))) / area(g, f);
      }
      for (int c : f.cells())
        if (sol.u.at(c) != expect) return member_msg(k, "value " + to_string(sol.u.at(c)) + " expected " + to_string(expect));
    }
    return "";
  });

  check.run("values_strictly_decrease", [&]() -> std::string {
    for (std::size_t k = 1; k < n; ++k)
      if (!(value_of(k) < value_of(k - 1))) return member_msg(k, "not below the previous stage");
    return "";
  });

  check.run("stage_ratio_matches_value", [&]() -> std::string {
    for (std::size_t k = 0; k < n; ++k) {
      Rational expect = k < bounded_count ? Rational(-value_of(k) / sol.lambda) : Rational(0);
      if (sol.stage_ratios[k] != expect) return member_msg(k, "ratio " + to_string(sol.stage_ratios[k]) + " expected " + to_string(expect));
    }
    return "";
  });

  check.run("signature_matches_construction", [&]() -> std::string {
    CellSet done(g.cell_count());
    for (std::size_t k = 0; k < n; ++k) {
      Signature expect = stage_signature(g, sol.partition[k], done);
      if (!(sol.signature[k] == expect)) return member_msg(k, "signature differs from the stage construction");
      done |= sol.partition[k];
    }
    return "";
  });

  check.run("stage_minimality", [&]() -> std::string {
    detail::Frame fr{sol.mode, sol.u.grid_ptr(), u0, CellSet(g.cell_count())};
    CellSet done(g.cell_count());
    for (std::size_t k = 0; k < n; ++k) {
      CheegerProblem p = stage_problem(fr, done, datum);
      if (k < bounded_count) {
        RatioResult rr = dinkelbach_min_ratio(p);
        if (rr.ratio != sol.stage_ratios[k]) return member_msg(k, "minimum ratio is " + to_string(rr.ratio));
        if (rr.minimizer != sol.partition[k]) return member_msg(k, "not the maximal minimizer");
      } else {
        if (p.region != sol.partition[k]) return member_msg(k, "unbounded member is not the remainder");
        if (has_negative_ratio(p)) return member_msg(k, "remainder still holds a set of negative ratio");
      }
      done |= sol.partition[k];
    }
    return "";
  });

  check.run("signature_matches_induced", [&]() -> std::string {
    LevelPartition lp = level_partition(sol.u);
    OrientedSignature induced = orient(g, lp.members, induced_signature(sol.u));
    OrientedSignature built = orient(g, sol.partition, sol.signature);
    return induced == built ? "" : "stage signature differs from the one induced by u";
  });

  return report;
}

}  // namespace pcrtv
