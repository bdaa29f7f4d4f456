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

#ifndef PCRTV_IO_HPP
#define PCRTV_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "pcrtv/flow.hpp"
#include "pcrtv/geometry.hpp"
#include "pcrtv/rof.hpp"

namespace pcrtv {

std::string mode_name(Mode mode);
Mode parse_mode(std::string_view name);

// PCR JSON, schema version 1:
//   {"version": 1, "mode": "bounded" | "plane", "xs": [...], "ys": [...],
//    "values": [...]}
// Coordinates and values are exact strings; values are row-major with
// row 0 at the bottom (lowest y).
struct PcrDocument {
  Mode mode;
  PcrFunction function;
};

PcrDocument parse_pcr(std::string_view text);
std::string write_pcr(const PcrDocument& doc);
PcrDocument read_pcr_file(const std::filesystem::path& path);
void write_pcr_file(const PcrDocument& doc, const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

// P2 or P5. Pixels become unit cells, the top image row being the highest
// row of cells. With `levels`, values are quantized to the midpoints of
// `levels` uniform bins over [0, maxval + 1).
PcrFunction parse_pgm(std::string_view bytes, std::optional<int> levels = std::nullopt);
PcrFunction import_pgm(const std::filesystem::path& path, std::optional<int> levels = std::nullopt);

struct GrayRange {
  Rational min;
  Rational max;
};

// 16-bit P5 raster sampled at pixel centres, `scale` pixels per shortest
// cell side. Without a range, the min and max of u are used.
std::string encode_pgm(const PcrFunction& u, int scale, const std::optional<GrayRange>& range = std::nullopt);
void render_pgm(const PcrFunction& u, const std::filesystem::path& path, int scale,
                const std::optional<GrayRange>& range = std::nullopt);

// Event log JSON, schema version 1.
std::string event_log_json(const FlowTimeline& tl);

std::string certificate_json(const CertificateReport& report);

}  // namespace pcrtv

#endif  // PCRTV_IO_HPP
