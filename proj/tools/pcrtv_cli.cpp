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

// pcrtv-cli: exact TV denoising and TV flow for piecewise constant data.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pcrtv/pcrtv.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitInternal = 3;

struct Failure {
  int code;
  std::string message;
};

int exit_code(pcrtv_status s) {
  switch (s) {
    case PCRTV_OK:
      return kExitOk;
    case PCRTV_ERR_INTERNAL:
    case PCRTV_ERR_CONVERGENCE:
      return kExitInternal;
    default:
      return kExitValidation;
  }
}

void check(pcrtv_status s) {
  if (s != PCRTV_OK) throw Failure{exit_code(s), pcrtv_last_error()};
}

struct PcrDeleter {
  void operator()(pcrtv_pcr* p) const { pcrtv_pcr_free(p); }
};
struct RofDeleter {
  void operator()(pcrtv_rof* p) const { pcrtv_rof_free(p); }
};
struct TimelineDeleter {
  void operator()(pcrtv_timeline* p) const { pcrtv_timeline_free(p); }
};
using Pcr = std::unique_ptr<pcrtv_pcr, PcrDeleter>;
using Rof = std::unique_ptr<pcrtv_rof, RofDeleter>;
using Timeline = std::unique_ptr<pcrtv_timeline, TimelineDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  pcrtv_string_free(s);
  return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct InputOptions {
  std::string path;
  std::string mode;
  int levels = 0;
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--in", in.path, "PCR JSON or PGM input")->required();
  cmd->add_option("--mode", in.mode, "bounded or plane (default: the document's mode)")
      ->check(CLI::IsMember({"bounded", "plane"}));
  cmd->add_option("--levels", in.levels, "quantize PGM input to this many levels")->check(CLI::PositiveNumber);
}

Pcr load(const InputOptions& in) {
  pcrtv_pcr* raw = nullptr;
  if (ends_with(in.path, ".pgm") || ends_with(in.path, ".PGM"))
    check(pcrtv_pcr_import_pgm(in.path.c_str(), in.levels, &raw));
  else
    check(pcrtv_pcr_read(in.path.c_str(), &raw));
  Pcr f(raw);
  if (!in.mode.empty()) check(pcrtv_pcr_set_mode(f.get(), in.mode == "plane" ? PCRTV_MODE_PLANE : PCRTV_MODE_BOUNDED));
  return f;
}

std::pair<std::string, std::string> value_range(const pcrtv_pcr* f) {
  char* lo = nullptr;
  char* hi = nullptr;
  check(pcrtv_pcr_range(f, &lo, &hi));
  return {take(lo), take(hi)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact anisotropic TV denoising and TV flow for piecewise constant data"};
  app.require_subcommand(1);

  InputOptions min_in;
  std::string lambda, out_path;
  bool certificate = false;
  auto* minimize = app.add_subcommand("minimize", "exact ROF minimizer");
  add_input(minimize, min_in);
  minimize->add_option("--lambda", lambda, "fidelity weight, exact rational")->required();
  minimize->add_option("--out", out_path, "output PCR JSON")->required();
  minimize->add_flag("--certificate", certificate, "verify the stage certificate and print the report");

  InputOptions flow_in;
  std::string t_end = "inf", events_path, frames, frame_prefix;
  int scale = 4;
  auto* flow = app.add_subcommand("flow", "evolve the TV flow and write its event log");
  add_input(flow, flow_in);
  flow->add_option("--t-end", t_end, "end time, exact rational or inf");
  flow->add_option("--events", events_path, "event log JSON output")->required();
  flow->add_option("--frames", frames, "comma separated times to render as PGM");
  flow->add_option("--frame-prefix", frame_prefix, "frame file prefix (default: events path stem)");
  flow->add_option("--scale", scale, "pixels per shortest cell side")->check(CLI::PositiveNumber);

  InputOptions ev_in;
  auto* events = app.add_subcommand("events", "print the event log of the full flow");
  add_input(events, ev_in);

  InputOptions or_in;
  std::string or_lambda;
  double tol = 1e-9, max_dev = 1e-6;
  auto* oracle = app.add_subcommand("oracle-check", "compare the exact minimizer with the floating-point oracle");
  add_input(oracle, or_in);
  oracle->add_option("--lambda", or_lambda, "fidelity weight, exact rational")->required();
  oracle->add_option("--tol", tol, "oracle relative duality gap")->check(CLI::PositiveNumber);
  oracle->add_option("--max-dev", max_dev, "largest accepted max-norm deviation");

  InputOptions bd_in;
  auto* bound = app.add_subcommand("bound", "extinction time bound");
  add_input(bound, bd_in);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*minimize) {
      Pcr u0 = load(min_in);
      pcrtv_pcr* raw = nullptr;
      if (certificate) {
        pcrtv_rof* sol_raw = nullptr;
        check(pcrtv_rof_solve(u0.get(), lambda.c_str(), &sol_raw));
        Rof sol(sol_raw);
        int passed = 0;
        char* report = nullptr;
        check(pcrtv_rof_verify(sol.get(), u0.get(), &passed, &report));
        std::cout << take(report);
        check(pcrtv_rof_result(sol.get(), &raw));
        Pcr u(raw);
        check(pcrtv_pcr_write(u.get(), out_path.c_str()));
        if (!passed) throw Failure{kExitInternal, "certificate verification failed"};
      } else {
        check(pcrtv_minimize(u0.get(), lambda.c_str(), &raw));
        Pcr u(raw);
        check(pcrtv_pcr_write(u.get(), out_path.c_str()));
      }
    } else if (*flow) {
      Pcr u0 = load(flow_in);
      pcrtv_timeline* raw = nullptr;
      check(pcrtv_flow(u0.get(), t_end.c_str(), &raw));
      Timeline tl(raw);
      char* log = nullptr;
      check(pcrtv_timeline_events_json(tl.get(), &log));
      std::string text = take(log);
      std::FILE* fp = std::fopen(events_path.c_str(), "wb");
      if (!fp) throw Failure{kExitValidation, "cannot write " + events_path};
      std::fwrite(text.data(), 1, text.size(), fp);
      std::fclose(fp);
      if (!frames.empty()) {
        std::string prefix = frame_prefix;
        if (prefix.empty()) {
          prefix = events_path;
          if (ends_with(prefix, ".json")) prefix.resize(prefix.size() - 5);
          prefix += "_frame";
        }
        auto [lo, hi] = value_range(u0.get());
        std::vector<std::string> times = CLI::detail::split(frames, ',');
        for (std::size_t k = 0; k < times.size(); ++k) {
          pcrtv_pcr* fr = nullptr;
          check(pcrtv_timeline_solution_at(tl.get(), CLI::detail::trim_copy(times[k]).c_str(), &fr));
          Pcr frame(fr);
          std::string path = prefix + "_" + std::to_string(k) + ".pgm";
          check(pcrtv_pcr_render_pgm(frame.get(), path.c_str(), scale, lo.c_str(), hi.c_str()));
        }
      }
    } else if (*events) {
      Pcr u0 = load(ev_in);
      pcrtv_timeline* raw = nullptr;
      check(pcrtv_flow(u0.get(), "inf", &raw));
      Timeline tl(raw);
      char* log = nullptr;
      check(pcrtv_timeline_events_json(tl.get(), &log));
      std::cout << take(log);
    } else if (*oracle) {
      Pcr u0 = load(or_in);
      double dev = 0, gap = 0;
      check(pcrtv_oracle_check(u0.get(), or_lambda.c_str(), tol, &dev, &gap));
      const bool ok = dev <= max_dev;
      std::printf("{\"max_deviation\": %.17g, \"gap\": %.17g, \"passed\": %s}\n", dev, gap, ok ? "true" : "false");
      if (!ok) return kExitInternal;
    } else if (*bound) {
      Pcr u0 = load(bd_in);
      char* b = nullptr;
      check(pcrtv_extinction_bound(u0.get(), &b));
      std::cout << take(b) << "\n";
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
