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

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include <unistd.h>

#include "doctest.h"
#include "pcrtv/pcrtv.h"

namespace {

const std::string data_dir = PCRTV_TEST_DATA;

std::string take(char* s) {
  std::string out = s ? s : "";
  pcrtv_string_free(s);
  return out;
}

pcrtv_pcr* load(const std::string& name) {
  pcrtv_pcr* f = nullptr;
  REQUIRE(pcrtv_pcr_read((data_dir + "/" + name).c_str(), &f) == PCRTV_OK);
  return f;
}

std::string value(const pcrtv_pcr* f, size_t i, size_t j) {
  char* s = nullptr;
  REQUIRE(pcrtv_pcr_value(f, i, j, &s) == PCRTV_OK);
  return take(s);
}

std::filesystem::path scratch(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / ("pcrtv_capi_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("handles and accessors") {
  CHECK(std::strlen(pcrtv_version()) > 0);
  pcrtv_pcr* f = load("cross_steps.json");
  size_t nx = 0, ny = 0;
  CHECK(pcrtv_pcr_dims(f, &nx, &ny) == PCRTV_OK);
  CHECK(nx == 5);
  CHECK(ny == 5);
  pcrtv_mode m;
  CHECK(pcrtv_pcr_get_mode(f, &m) == PCRTV_OK);
  CHECK(m == PCRTV_MODE_PLANE);
  CHECK(value(f, 2, 2) == "5/2");
  CHECK(value(f, 0, 2) == "3");
  char *lo = nullptr, *hi = nullptr;
  CHECK(pcrtv_pcr_range(f, &lo, &hi) == PCRTV_OK);
  CHECK(take(lo) == "0");
  CHECK(take(hi) == "3");
  char* s = nullptr;
  CHECK(pcrtv_pcr_value(f, 5, 0, &s) == PCRTV_ERR_VALIDATION);
  CHECK(std::strlen(pcrtv_last_error()) > 0);

  char* json = nullptr;
  CHECK(pcrtv_pcr_to_json(f, &json) == PCRTV_OK);
  std::string text = take(json);
  pcrtv_pcr* g = nullptr;
  CHECK(pcrtv_pcr_parse_json(text.c_str(), &g) == PCRTV_OK);
  CHECK(pcrtv_pcr_to_json(g, &json) == PCRTV_OK);
  CHECK(take(json) == text);
  pcrtv_pcr_free(g);
  pcrtv_pcr_free(f);
  pcrtv_pcr_free(nullptr);
}

TEST_CASE("error codes") {
  pcrtv_pcr* f = nullptr;
  CHECK(pcrtv_pcr_parse_json("{", &f) == PCRTV_ERR_VALIDATION);
  CHECK(f == nullptr);
  CHECK(pcrtv_pcr_read("/nonexistent/x.json", &f) == PCRTV_ERR_IO);
  CHECK(pcrtv_pcr_parse_json(nullptr, &f) == PCRTV_ERR_ARGUMENT);
  CHECK(pcrtv_pcr_dims(nullptr, nullptr, nullptr) == PCRTV_ERR_ARGUMENT);
  pcrtv_pcr* u0 = load("cross_steps.json");
  pcrtv_pcr* out = nullptr;
  CHECK(pcrtv_minimize(u0, "x", &out) == PCRTV_ERR_VALIDATION);
  CHECK(pcrtv_minimize(u0, "-1", &out) == PCRTV_ERR_VALIDATION);
  pcrtv_timeline* tl = nullptr;
  CHECK(pcrtv_flow(u0, "-1", &tl) == PCRTV_ERR_VALIDATION);
  pcrtv_pcr_free(u0);

  pcrtv_pcr* neg = nullptr;
  const char* doc = R"({"version":1,"mode":"plane","xs":["0","1"],"ys":["0","1"],"values":["-1"]})";
  CHECK(pcrtv_pcr_parse_json(doc, &neg) == PCRTV_ERR_VALIDATION);
  REQUIRE(pcrtv_pcr_parse_json(R"({"version":1,"mode":"bounded","xs":["0","1"],"ys":["0","1"],"values":["-1"]})", &neg) ==
          PCRTV_OK);
  CHECK(pcrtv_pcr_set_mode(neg, PCRTV_MODE_PLANE) == PCRTV_ERR_VALIDATION);
  CHECK(pcrtv_minimize(neg, "1", &out) == PCRTV_OK);
  CHECK(value(out, 0, 0) == "-1");
  pcrtv_pcr_free(out);
  pcrtv_pcr_free(neg);
}

TEST_CASE("minimize and certificates") {
  pcrtv_pcr* u0 = load("cross_steps.json");
  pcrtv_pcr* u = nullptr;
  REQUIRE(pcrtv_minimize(u0, "1/10", &u) == PCRTV_OK);
  CHECK(value(u, 2, 0) == "13/5");
  CHECK(value(u, 2, 2) == "221/90");
  pcrtv_pcr_free(u);

  pcrtv_rof* sol = nullptr;
  REQUIRE(pcrtv_rof_solve(u0, "1/2", &sol) == PCRTV_OK);
  size_t stages = 0;
  CHECK(pcrtv_rof_stage_count(sol, &stages) == PCRTV_OK);
  CHECK(stages == 2);
  REQUIRE(pcrtv_rof_result(sol, &u) == PCRTV_OK);
  CHECK(value(u, 0, 2) == "49/26");
  int passed = 0;
  char* report = nullptr;
  CHECK(pcrtv_rof_verify(sol, u0, &passed, &report) == PCRTV_OK);
  CHECK(passed == 1);
  CHECK(take(report).find("\"passed\": true") != std::string::npos);

  pcrtv_pcr* other = load("cross.json");
  CHECK(pcrtv_rof_verify(sol, other, &passed, &report) == PCRTV_OK);
  CHECK(passed == 0);
  take(report);
  pcrtv_pcr_free(other);
  pcrtv_pcr_free(u);
  pcrtv_rof_free(sol);
  pcrtv_pcr_free(u0);
}

TEST_CASE("flow") {
  pcrtv_pcr* u0 = load("cross_steps.json");
  pcrtv_timeline* tl = nullptr;
  REQUIRE(pcrtv_flow(u0, nullptr, &tl) == PCRTV_OK);
  size_t n = 0;
  CHECK(pcrtv_timeline_event_count(tl, &n) == PCRTV_OK);
  CHECK(n == 3);
  char* s = nullptr;
  CHECK(pcrtv_timeline_horizon(tl, &s) == PCRTV_OK);
  CHECK(take(s) == "63/32");
  CHECK(pcrtv_timeline_equivalence_window(tl, &s) == PCRTV_OK);
  CHECK(take(s) == "9/64");
  CHECK(pcrtv_timeline_events_json(tl, &s) == PCRTV_OK);
  CHECK(take(s).find("\"9/64\"") != std::string::npos);
  pcrtv_pcr* at = nullptr;
  REQUIRE(pcrtv_timeline_solution_at(tl, "9/64", &at) == PCRTV_OK);
  CHECK(value(at, 2, 2) == "39/16");
  CHECK(value(at, 2, 4) == "39/16");
  pcrtv_pcr_free(at);
  CHECK(pcrtv_extinction_bound(u0, &s) == PCRTV_OK);
  CHECK(take(s) == "15/4");
  pcrtv_timeline_free(tl);

  REQUIRE(pcrtv_flow(u0, "1/10", &tl) == PCRTV_OK);
  CHECK(pcrtv_timeline_event_count(tl, &n) == PCRTV_OK);
  CHECK(n == 0);
  CHECK(pcrtv_timeline_solution_at(tl, "1/2", &at) == PCRTV_ERR_VALIDATION);
  pcrtv_timeline_free(tl);
  pcrtv_pcr_free(u0);
}

TEST_CASE("oracle and files") {
  pcrtv_pcr* u0 = load("cross_steps.json");
  double dev = 1, gap = 1;
  CHECK(pcrtv_oracle_check(u0, "1/10", 1e-9, &dev, &gap) == PCRTV_OK);
  CHECK(dev < 1e-6);
  CHECK(gap >= 0);

  auto out = scratch("round.json");
  CHECK(pcrtv_pcr_write(u0, out.c_str()) == PCRTV_OK);
  pcrtv_pcr* back = nullptr;
  REQUIRE(pcrtv_pcr_read(out.c_str(), &back) == PCRTV_OK);
  CHECK(value(back, 4, 2) == "3");
  pcrtv_pcr_free(back);

  auto img = scratch("frame.pgm");
  CHECK(pcrtv_pcr_render_pgm(u0, img.c_str(), 2, "0", nullptr) == PCRTV_ERR_VALIDATION);
  CHECK(pcrtv_pcr_render_pgm(u0, img.c_str(), 2, "0", "4") == PCRTV_OK);
  CHECK(std::filesystem::file_size(img) > 200);
  CHECK(pcrtv_pcr_render_pgm(u0, img.c_str(), 0, nullptr, nullptr) == PCRTV_ERR_VALIDATION);

  auto pgm = scratch("in.pgm");
  std::ofstream(pgm) << "P2 2 1 255 0 200\n";
  pcrtv_pcr* im = nullptr;
  REQUIRE(pcrtv_pcr_import_pgm(pgm.c_str(), 0, &im) == PCRTV_OK);
  CHECK(value(im, 1, 0) == "200");
  pcrtv_pcr_free(im);
  REQUIRE(pcrtv_pcr_import_pgm(pgm.c_str(), 2, &im) == PCRTV_OK);
  CHECK(value(im, 1, 0) == "192");
  pcrtv_pcr_free(im);
  std::filesystem::remove_all(out.parent_path());
  pcrtv_pcr_free(u0);
}
