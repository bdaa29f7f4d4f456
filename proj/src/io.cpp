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

#include "pcrtv/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"
#include "pcrtv/error.hpp"

namespace pcrtv {

using json = nlohmann::ordered_json;

std::string mode_name(Mode mode) { return mode == Mode::plane ? "plane" : "bounded"; }

Mode parse_mode(std::string_view name) {
  if (name == "bounded") return Mode::bounded;
  if (name == "plane") return Mode::plane;
  throw ValidationError("unknown mode '" + std::string(name) + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

namespace {

Rational json_rational(const json& v, const char* field) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(mpz_class(v.dump(), 10));
  throw ValidationError(std::string("field '") + field + "' must hold exact strings or integers");
}

std::vector<Rational> rational_list(const json& doc, const char* field) {
  if (!doc.contains(field) || !doc[field].is_array()) throw ValidationError(std::string("missing array '") + field + "'");
  std::vector<Rational> out;
  for (const auto& v : doc[field]) out.push_back(json_rational(v, field));
  return out;
}

json rational_array(const std::vector<Rational>& v) {
  json a = json::array();
  for (const Rational& r : v) a.push_back(to_string(r));
  return a;
}

}  // namespace

PcrDocument parse_pcr(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("PCR document must be a JSON object");
  if (!doc.contains("version") || doc["version"] != 1) throw ValidationError("unsupported PCR schema version");
  Mode mode = Mode::bounded;
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) throw ValidationError("mode must be a string");
    mode = parse_mode(doc["mode"].get<std::string>());
  }
  std::vector<Rational> xs = rational_list(doc, "xs"), ys = rational_list(doc, "ys");
  std::vector<Rational> values = rational_list(doc, "values");
  auto grid = std::make_shared<const Grid>(std::move(xs), std::move(ys));
  if (static_cast<int>(values.size()) != grid->cell_count())
    throw ValidationError("value count " + std::to_string(values.size()) + " does not match " +
                          std::to_string(grid->cell_count()) + " cells");
  PcrFunction f(std::move(grid), std::move(values));
  if (mode == Mode::plane)
    for (const Rational& v : f.values()) require(v >= 0, "plane mode needs non-negative data");
  return {mode, std::move(f)};
}

std::string write_pcr(const PcrDocument& doc) {
  json j;
  j["version"] = 1;
  j["mode"] = mode_name(doc.mode);
  j["xs"] = rational_array(doc.function.grid().xs());
  j["ys"] = rational_array(doc.function.grid().ys());
  j["values"] = rational_array(doc.function.values());
  return j.dump(2) + "\n";
}

PcrDocument read_pcr_file(const std::filesystem::path& path) { return parse_pcr(read_file(path)); }

void write_pcr_file(const PcrDocument& doc, const std::filesystem::path& path) { write_file(path, write_pcr(doc)); }

namespace {

class PgmReader {
 public:
  explicit PgmReader(std::string_view b) : b_(b) {}

  std::string token() {
    skip();
    std::size_t start = pos_;
    while (pos_ < b_.size() && !std::isspace(static_cast<unsigned char>(b_[pos_])) && b_[pos_] != '#') ++pos_;
    if (start == pos_) throw ValidationError("truncated PGM header");
    return std::string(b_.substr(start, pos_ - start));
  }

  long number() {
    std::string t = token();
    if (!std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) || t.size() > 9)
      throw ValidationError("bad number in PGM: '" + t + "'");
    return std::stol(t);
  }

  // Single whitespace byte separating the header from binary data.
  void end_header() {
    if (pos_ >= b_.size() || !std::isspace(static_cast<unsigned char>(b_[pos_]))) throw ValidationError("truncated PGM header");
    ++pos_;
  }

  std::string_view rest() const { return b_.substr(pos_); }

 private:
  void skip() {
    while (pos_ < b_.size()) {
      if (b_[pos_] == '#') {
        while (pos_ < b_.size() && b_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(b_[pos_]))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view b_;
  std::size_t pos_ = 0;
};

}  // namespace

PcrFunction parse_pgm(std::string_view bytes, std::optional<int> levels) {
  if (levels) require(*levels >= 1, "levels must be at least 1");
  PgmReader rd(bytes);
  std::string magic = rd.token();
  if (magic != "P2" && magic != "P5") throw ValidationError("unsupported PGM magic number '" + magic + "'");
  const long w = rd.number(), h = rd.number(), maxval = rd.number();
  require(w >= 1 && h >= 1, "PGM dimensions must be positive");
  require(maxval >= 1 && maxval <= 65535, "PGM maxval must lie in [1, 65535]");
  require(w * h <= (1L << 26), "PGM image too large");

  std::vector<long> px(static_cast<std::size_t>(w * h));
  if (magic == "P2") {
    for (long& v : px) {
      v = rd.number();
      require(v <= maxval, "PGM sample exceeds maxval");
    }
  } else {
    rd.end_header();
    std::string_view data = rd.rest();
    const std::size_t width = maxval < 256 ? 1 : 2;
    if (data.size() < px.size() * width) throw ValidationError("truncated PGM payload");
    for (std::size_t k = 0; k < px.size(); ++k) {
      auto byte = [&](std::size_t q) { return static_cast<long>(static_cast<unsigned char>(data[q])); };
      px[k] = width == 1 ? byte(k) : (byte(2 * k) << 8 | byte(2 * k + 1));
      require(px[k] <= maxval, "PGM sample exceeds maxval");
    }
  }

  std::vector<Rational> xs, ys;
  for (long i = 0; i <= w; ++i) xs.push_back(Rational(i));
  for (long j = 0; j <= h; ++j) ys.push_back(Rational(j));
  auto grid = std::make_shared<const Grid>(std::move(xs), std::move(ys));
  std::vector<Rational> values(grid->cell_count());
  for (long r = 0; r < h; ++r)
    for (long c = 0; c < w; ++c) {
      long v = px[static_cast<std::size_t>(r * w + c)];
      Rational val = v;
      if (levels) {
        long bin = v * *levels / (maxval + 1);
        val = Rational(mpz_class((2 * bin + 1) * (maxval + 1)), mpz_class(2L * *levels));
        val.canonicalize();
      }
      values[grid->cell(static_cast<int>(c), static_cast<int>(h - 1 - r))] = val;
    }
  return PcrFunction(std::move(grid), std::move(values));
}

PcrFunction import_pgm(const std::filesystem::path& path, std::optional<int> levels) {
  return parse_pgm(read_file(path), levels);
}

std::string encode_pgm(const PcrFunction& u, int scale, const std::optional<GrayRange>& range) {
  require(scale >= 1, "scale must be at least 1");
  const Grid& g = u.grid();
  Rational unit = g.width(0);
  for (int i = 0; i < g.nx(); ++i) unit = std::min(unit, g.width(i));
  for (int j = 0; j < g.ny(); ++j) unit = std::min(unit, g.height(j));
  const Rational pix = unit / scale;

  auto count = [&](const Rational& extent) {
    Rational q = extent / pix;
    mpz_class n = q.get_num() / q.get_den();
    if (n * q.get_den() != q.get_num()) n += 1;
    require(n <= 65536, "raster too large");
    return static_cast<int>(n.get_si());
  };
  const int width = count(g.xs().back() - g.xs().front());
  const int height = count(g.ys().back() - g.ys().front());
  require(static_cast<long>(width) * height <= (1L << 26), "raster too large");

  auto axis_cells = [&](const std::vector<Rational>& lines, int n) {
    std::vector<int> idx(n);
    for (int k = 0; k < n; ++k) {
      Rational centre = lines.front() + pix * (2 * k + 1) / 2;
      int i = static_cast<int>(std::upper_bound(lines.begin(), lines.end(), centre) - lines.begin()) - 1;
      idx[k] = std::min(i, static_cast<int>(lines.size()) - 2);
    }
    return idx;
  };
  const std::vector<int> cols = axis_cells(g.xs(), width), rows = axis_cells(g.ys(), height);

  GrayRange gr;
  if (range) {
    gr = *range;
  } else {
    gr.min = *std::min_element(u.values().begin(), u.values().end());
    gr.max = *std::max_element(u.values().begin(), u.values().end());
  }
  std::vector<unsigned> gray(u.values().size());
  for (std::size_t c = 0; c < gray.size(); ++c) {
    if (gr.max <= gr.min) continue;
    Rational q = (u.values()[c] - gr.min) * 65535 / (gr.max - gr.min) + Rational(1, 2);
    mpz_class z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    long v = z < 0 ? 0 : (z > 65535 ? 65535 : z.get_si());
    gray[c] = static_cast<unsigned>(v);
  }

  std::ostringstream os;
  os << "P5\n# min=" << to_string(gr.min) << " max=" << to_string(gr.max) << "\n" << width << " " << height << "\n65535\n";
  std::string out = os.str();
  out.reserve(out.size() + 2 * static_cast<std::size_t>(width) * height);
  for (int r = height - 1; r >= 0; --r)
    for (int k = 0; k < width; ++k) {
      unsigned v = gray[g.cell(cols[k], rows[r])];
      out.push_back(static_cast<char>(v >> 8));
      out.push_back(static_cast<char>(v & 0xff));
    }
  return out;
}

void render_pgm(const PcrFunction& u, const std::filesystem::path& path, int scale, const std::optional<GrayRange>& range) {
  write_file(path, encode_pgm(u, scale, range));
}

namespace {

json exact(const Rational& r) { return json{{"exact", to_string(r)}, {"float", to_double(r)}}; }

json facet_json(const Grid& g, const FacetState& f) {
  json j;
  j["cells"] = f.cells.count();
  j["unbounded"] = f.unbounded;
  if (f.unbounded) {
    j["bbox"] = nullptr;
  } else {
    int i0 = g.nx(), i1 = -1, j0 = g.ny(), j1 = -1;
    for (int c : f.cells.cells()) {
      i0 = std::min(i0, g.col(c));
      i1 = std::max(i1, g.col(c));
      j0 = std::min(j0, g.row(c));
      j1 = std::max(j1, g.row(c));
    }
    j["bbox"] = json::array({to_string(g.xs()[i0]), to_string(g.ys()[j0]), to_string(g.xs()[i1 + 1]), to_string(g.ys()[j1 + 1])});
  }
  j["value"] = exact(f.value);
  j["speed"] = exact(f.speed);
  j["plus_length"] = exact(total_length(g, f.signature.plus));
  j["minus_length"] = exact(total_length(g, f.signature.minus));
  return j;
}

json facets_json(const Grid& g, const std::vector<FacetState>& facets) {
  json a = json::array();
  for (const auto& f : facets) a.push_back(facet_json(g, f));
  return a;
}

}  // namespace

std::string event_log_json(const FlowTimeline& tl) {
  const Grid& g = *tl.grid;
  json j;
  j["version"] = 1;
  j["mode"] = mode_name(tl.mode);
  j["steady"] = tl.steady;
  j["horizon"] = exact(tl.horizon);
  const std::vector<FacetState>& initial = tl.segments.empty() ? tl.final_facets : tl.segments.front().facets;
  j["initial"] = json{{"facet_count", initial.size()}, {"facets", facets_json(g, initial)}};
  json events = json::array();
  for (const FlowEvent& e : tl.events) {
    const std::vector<FacetState>* facets = &tl.final_facets;
    for (const auto& s : tl.segments)
      if (s.t_start == e.t) facets = &s.facets;
    json ev;
    ev["t"] = exact(e.t);
    ev["merging"] = e.merging;
    ev["breaking"] = e.breaking;
    ev["facet_count"] = facets->size();
    ev["facets"] = facets_json(g, *facets);
    events.push_back(std::move(ev));
  }
  j["events"] = std::move(events);
  return j.dump(2) + "\n";
}

std::string certificate_json(const CertificateReport& report) {
  json j;
  j["passed"] = report.passed();
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

}  // namespace pcrtv
