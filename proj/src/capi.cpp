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

#include "pcrtv/pcrtv.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "pcrtv/error.hpp"
#include "pcrtv/flow.hpp"
#include "pcrtv/io.hpp"
#include "pcrtv/oracle.hpp"
#include "pcrtv/rof.hpp"

struct pcrtv_pcr {
  pcrtv::PcrDocument doc;
};

struct pcrtv_rof {
  pcrtv::RofSolution sol;
  pcrtv::GridPtr input_grid;
};

struct pcrtv_timeline {
  pcrtv::FlowTimeline tl;
};

namespace {

thread_local std::string last_error;

// Runs f, mapping exceptions to status codes. Null pointers among `ptrs`
// are rejected before f runs.
template <class F, class... P>
pcrtv_status guarded(F&& f, const P*... ptrs) {
  if (((ptrs == nullptr) || ...)) {
    last_error = "null argument";
    return PCRTV_ERR_ARGUMENT;
  }
  try {
    f();
    last_error.clear();
    return PCRTV_OK;
  } catch (const pcrtv::ValidationError& e) {
    last_error = e.what();
    return PCRTV_ERR_VALIDATION;
  } catch (const pcrtv::IoError& e) {
    last_error = e.what();
    return PCRTV_ERR_IO;
  } catch (const pcrtv::ConvergenceError& e) {
    last_error = e.what();
    return PCRTV_ERR_CONVERGENCE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PCRTV_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PCRTV_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

pcrtv::Rational rational_arg(const char* s) {
  if (!s) throw pcrtv::ValidationError("missing rational argument");
  return pcrtv::parse_rational(s);
}

pcrtv_pcr* wrap(pcrtv::Mode mode, pcrtv::PcrFunction f) { return new pcrtv_pcr{{mode, std::move(f)}}; }

}  // namespace

extern "C" {

const char* pcrtv_version(void) { return "0.1.0"; }

const char* pcrtv_last_error(void) { return last_error.c_str(); }

void pcrtv_string_free(char* s) { std::free(s); }

pcrtv_status pcrtv_pcr_parse_json(const char* text, pcrtv_pcr** out) {
  return guarded([&] { *out = new pcrtv_pcr{pcrtv::parse_pcr(text)}; }, text, out);
}

pcrtv_status pcrtv_pcr_read(const char* path, pcrtv_pcr** out) {
  return guarded([&] { *out = new pcrtv_pcr{pcrtv::read_pcr_file(path)}; }, path, out);
}

pcrtv_status pcrtv_pcr_import_pgm(const char* path, int levels, pcrtv_pcr** out) {
  return guarded(
      [&] {
        std::optional<int> lv;
        if (levels > 0) lv = levels;
        *out = wrap(pcrtv::Mode::bounded, pcrtv::import_pgm(path, lv));
      },
      path, out);
}

pcrtv_status pcrtv_pcr_to_json(const pcrtv_pcr* f, char** out) {
  return guarded([&] { *out = dup(pcrtv::write_pcr(f->doc)); }, f, out);
}

pcrtv_status pcrtv_pcr_write(const pcrtv_pcr* f, const char* path) {
  return guarded([&] { pcrtv::write_pcr_file(f->doc, path); }, f, path);
}

pcrtv_status pcrtv_pcr_get_mode(const pcrtv_pcr* f, pcrtv_mode* out) {
  return guarded([&] { *out = f->doc.mode == pcrtv::Mode::plane ? PCRTV_MODE_PLANE : PCRTV_MODE_BOUNDED; }, f, out);
}

pcrtv_status pcrtv_pcr_set_mode(pcrtv_pcr* f, pcrtv_mode mode) {
  return guarded(
      [&] {
        if (mode != PCRTV_MODE_BOUNDED && mode != PCRTV_MODE_PLANE) throw pcrtv::ValidationError("unknown mode");
        pcrtv::Mode m = mode == PCRTV_MODE_PLANE ? pcrtv::Mode::plane : pcrtv::Mode::bounded;
        if (m == pcrtv::Mode::plane)
          for (const auto& v : f->doc.function.values())
            if (v < 0) throw pcrtv::ValidationError("plane mode needs non-negative data");
        f->doc.mode = m;
      },
      f);
}

pcrtv_status pcrtv_pcr_dims(const pcrtv_pcr* f, size_t* nx, size_t* ny) {
  return guarded(
      [&] {
        *nx = static_cast<size_t>(f->doc.function.grid().nx());
        *ny = static_cast<size_t>(f->doc.function.grid().ny());
      },
      f, nx, ny);
}

pcrtv_status pcrtv_pcr_range(const pcrtv_pcr* f, char** min, char** max) {
  return guarded(
      [&] {
        const auto& v = f->doc.function.values();
        std::string lo = pcrtv::to_string(*std::min_element(v.begin(), v.end()));
        std::string hi = pcrtv::to_string(*std::max_element(v.begin(), v.end()));
        char* a = dup(lo);
        try {
          *max = dup(hi);
        } catch (...) {
          std::free(a);
          throw;
        }
        *min = a;
      },
      f, min, max);
}

pcrtv_status pcrtv_pcr_value(const pcrtv_pcr* f, size_t i, size_t j, char** out) {
  return guarded(
      [&] {
        const pcrtv::Grid& g = f->doc.function.grid();
        if (i >= static_cast<size_t>(g.nx()) || j >= static_cast<size_t>(g.ny()))
          throw pcrtv::ValidationError("cell index out of range");
        *out = dup(pcrtv::to_string(f->doc.function.at(static_cast<int>(i), static_cast<int>(j))));
      },
      f, out);
}

pcrtv_status pcrtv_pcr_render_pgm(const pcrtv_pcr* f, const char* path, int scale, const char* vmin, const char* vmax) {
  return guarded(
      [&] {
        std::optional<pcrtv::GrayRange> range;
        if (vmin || vmax) {
          if (!vmin || !vmax) throw pcrtv::ValidationError("give both ends of the gray range or neither");
          range = pcrtv::GrayRange{rational_arg(vmin), rational_arg(vmax)};
        }
        pcrtv::render_pgm(f->doc.function, path, scale, range);
      },
      f, path);
}

void pcrtv_pcr_free(pcrtv_pcr* f) { delete f; }

pcrtv_status pcrtv_minimize(const pcrtv_pcr* u0, const char* lambda, pcrtv_pcr** out) {
  return guarded(
      [&] { *out = wrap(u0->doc.mode, pcrtv::minimize(u0->doc.function, rational_arg(lambda), u0->doc.mode)); }, u0,
      lambda, out);
}

pcrtv_status pcrtv_rof_solve(const pcrtv_pcr* u0, const char* lambda, pcrtv_rof** out) {
  return guarded(
      [&] {
        *out = new pcrtv_rof{pcrtv::solve_rof(u0->doc.function, rational_arg(lambda), u0->doc.mode),
                             u0->doc.function.grid_ptr()};
      },
      u0, lambda, out);
}

pcrtv_status pcrtv_rof_result(const pcrtv_rof* sol, pcrtv_pcr** out) {
  return guarded([&] { *out = wrap(sol->sol.mode, pcrtv::resample(sol->sol.u, sol->input_grid, sol->sol.mode)); }, sol,
                 out);
}

pcrtv_status pcrtv_rof_stage_count(const pcrtv_rof* sol, size_t* out) {
  return guarded([&] { *out = sol->sol.partition.size(); }, sol, out);
}

pcrtv_status pcrtv_rof_verify(const pcrtv_rof* sol, const pcrtv_pcr* u0, int* passed, char** report_json) {
  return guarded(
      [&] {
        pcrtv::CertificateReport r = pcrtv::verify_certificate(sol->sol, u0->doc.function);
        *passed = r.passed() ? 1 : 0;
        if (report_json) *report_json = dup(pcrtv::certificate_json(r));
      },
      sol, u0, passed);
}

void pcrtv_rof_free(pcrtv_rof* sol) { delete sol; }

pcrtv_status pcrtv_flow(const pcrtv_pcr* u0, const char* t_end, pcrtv_timeline** out) {
  return guarded(
      [&] {
        std::optional<pcrtv::Rational> end;
        if (t_end && std::string(t_end) != "inf") end = rational_arg(t_end);
        *out = new pcrtv_timeline{pcrtv::flow_evolve(u0->doc.function, u0->doc.mode, end)};
      },
      u0, out);
}

pcrtv_status pcrtv_timeline_event_count(const pcrtv_timeline* tl, size_t* out) {
  return guarded([&] { *out = tl->tl.events.size(); }, tl, out);
}

pcrtv_status pcrtv_timeline_events_json(const pcrtv_timeline* tl, char** out) {
  return guarded([&] { *out = dup(pcrtv::event_log_json(tl->tl)); }, tl, out);
}

pcrtv_status pcrtv_timeline_horizon(const pcrtv_timeline* tl, char** out) {
  return guarded([&] { *out = dup(pcrtv::to_string(tl->tl.horizon)); }, tl, out);
}

pcrtv_status pcrtv_timeline_equivalence_window(const pcrtv_timeline* tl, char** out) {
  return guarded([&] { *out = dup(pcrtv::to_string(pcrtv::rof_equivalence_window(tl->tl))); }, tl, out);
}

pcrtv_status pcrtv_timeline_solution_at(const pcrtv_timeline* tl, const char* t, pcrtv_pcr** out) {
  return guarded([&] { *out = wrap(tl->tl.mode, pcrtv::solution_at(tl->tl, rational_arg(t))); }, tl, t, out);
}

void pcrtv_timeline_free(pcrtv_timeline* tl) { delete tl; }

pcrtv_status pcrtv_extinction_bound(const pcrtv_pcr* u0, char** out) {
  return guarded([&] { *out = dup(pcrtv::to_string(pcrtv::extinction_bound(u0->doc.function, u0->doc.mode))); }, u0,
                 out);
}

pcrtv_status pcrtv_oracle_check(const pcrtv_pcr* u0, const char* lambda, double tol, double* max_deviation, double* gap) {
  return guarded(
      [&] {
        pcrtv::Rational lam = rational_arg(lambda);
        const pcrtv::PcrFunction& f = u0->doc.function;
        pcrtv::PcrFunction exact = pcrtv::minimize(f, lam, u0->doc.mode);
        pcrtv::OracleResult r = pcrtv::graph_tv_solve(pcrtv::make_graph_tv_problem(f, lam, u0->doc.mode), tol);
        *max_deviation = pcrtv::compare(exact, r.u, 0.0).max_deviation;
        if (gap) *gap = r.gap;
      },
      u0, lambda, max_deviation);
}

}  // extern "C"
