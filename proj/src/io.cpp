#include "windcorr/io.hpp"

#include "windcorr/errors.hpp"
#include "windcorr/time_format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace windcorr {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double parse_double_field(const std::string& field, const std::string& path, long line) {
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(path, line, "malformed number '" + field + "'");
  }
  return value;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file: " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + path.string());
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

// ---------------------------------------------------------------------------
// Panels
// ---------------------------------------------------------------------------

void write_panel(const SignalPanel& panel, const std::filesystem::path& path) {
  auto out = open_output(path);
  out << "timestamp";
  for (const auto& id : panel.turbine_ids) out << ',' << id;
  out << '\n';
  const Eigen::Index n = panel.turbines();
  const Eigen::Index t = panel.samples();
  for (Eigen::Index k = 0; k < t; ++k) {
    out << format_iso8601(panel.time_at(k));
    for (Eigen::Index i = 0; i < n; ++i) {
      out << ',';
      if (panel.mask(i, k)) {
        out << format_double(panel.values(i, k));
      } else {
        out << "NA";
      }
    }
    out << '\n';
  }
  if (!out) throw Error("write failed: " + path.string());
}

SignalPanel read_panel(const std::filesystem::path& path, Observable obs,
                       std::int64_t step_hint) {
  auto in = open_input(path);
  const std::string pathname = path.string();
  std::string line;
  long line_no = 0;

  if (!std::getline(in, line)) throw ParseError(pathname, 1, "empty file");
  ++line_no;
  auto header = split_csv(strip(line));
  if (header.size() < 2 || header[0] != "timestamp") {
    throw ParseError(pathname, line_no, "expected header 'timestamp,<id>,...'");
  }
  std::vector<std::string> ids(header.begin() + 1, header.end());
  const Eigen::Index n = static_cast<Eigen::Index>(ids.size());

  std::vector<std::int64_t> times;
  std::vector<double> cells;       // column-major growth: per time step, n values
  std::vector<char> present;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = strip(line);
    if (stripped.empty()) continue;
    auto fields = split_csv(stripped);
    if (static_cast<Eigen::Index>(fields.size()) != n + 1) {
      throw ParseError(pathname, line_no,
                       "expected " + std::to_string(n + 1) + " fields, got " +
                           std::to_string(fields.size()));
    }
    std::int64_t ts;
    try {
      ts = parse_iso8601(fields[0]);
    } catch (const Error& e) {
      throw ParseError(pathname, line_no, e.what());
    }
    times.push_back(ts);
    for (Eigen::Index i = 0; i < n; ++i) {
      const std::string& f = fields[static_cast<std::size_t>(i) + 1];
      if (f == "NA") {
        cells.push_back(kMissingSentinel);
        present.push_back(0);
      } else {
        cells.push_back(parse_double_field(f, pathname, line_no));
        present.push_back(1);
      }
    }
  }
  if (times.empty()) throw ParseError(pathname, line_no, "no data rows");

  std::int64_t step = step_hint;
  if (times.size() >= 2) {
    step = times[1] - times[0];
    if (step <= 0) throw ParseError(pathname, 3, "timestamps must strictly increase");
    for (std::size_t k = 1; k < times.size(); ++k) {
      if (times[k] - times[k - 1] != step) {
        throw ParseError(pathname, static_cast<long>(k) + 2,
                         "non-uniform timestamp spacing (expected step " +
                             std::to_string(step) + "s)");
      }
    }
  } else if (step <= 0) {
    throw Error(pathname + ": single-row panel needs an explicit step");
  }

  SignalPanel panel;
  panel.turbine_ids = std::move(ids);
  panel.t0 = times.front();
  panel.step = step;
  panel.observable = obs;
  const Eigen::Index t = static_cast<Eigen::Index>(times.size());
  panel.values.resize(n, t);
  panel.mask.resize(n, t);
  for (Eigen::Index k = 0; k < t; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const std::size_t idx = static_cast<std::size_t>(k) * static_cast<std::size_t>(n) +
                              static_cast<std::size_t>(i);
      panel.values(i, k) = cells[idx];
      panel.mask(i, k) = present[idx] != 0;
    }
  }
  return panel;
}

// ---------------------------------------------------------------------------
// Layout
// ---------------------------------------------------------------------------

namespace {

std::filesystem::path sibling_cfg(const std::filesystem::path& csv_path) {
  std::filesystem::path cfg = csv_path;
  cfg.replace_extension(".cfg");
  return cfg;
}

}  // namespace

FarmLayout read_layout(const std::filesystem::path& csv_path, std::filesystem::path cfg_path) {
  auto in = open_input(csv_path);
  const std::string pathname = csv_path.string();
  std::string line;
  long line_no = 0;

  if (!std::getline(in, line)) throw ParseError(pathname, 1, "empty file");
  ++line_no;
  if (strip(line) != "id,easting_m,northing_m,row") {
    throw ParseError(pathname, 1, "expected header 'id,easting_m,northing_m,row'");
  }
  FarmLayout layout;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = strip(line);
    if (stripped.empty()) continue;
    auto fields = split_csv(stripped);
    if (fields.size() != 4) {
      throw ParseError(pathname, line_no, "expected 4 fields, got " +
                                              std::to_string(fields.size()));
    }
    layout.turbine_ids.push_back(fields[0]);
    layout.positions.emplace_back(parse_double_field(fields[1], pathname, line_no),
                                  parse_double_field(fields[2], pathname, line_no));
    layout.row_of.push_back(static_cast<int>(parse_double_field(fields[3], pathname, line_no)));
  }

  if (cfg_path.empty()) cfg_path = sibling_cfg(csv_path);
  const auto cfg = KeyValueConfig::load(cfg_path);
  layout.rotor_diameter = cfg.get_double("rotor_diameter_m");
  layout.row_orthogonal_bearing = cfg.get_double("row_orthogonal_bearing_deg", 0.0);

  const auto violations = validate_layout(layout);
  if (!violations.empty()) {
    throw Error(pathname + ": invalid layout: " + violations.front());
  }
  return layout;
}

void write_layout(const FarmLayout& layout, const std::filesystem::path& csv_path,
                  std::filesystem::path cfg_path) {
  auto out = open_output(csv_path);
  out << "id,easting_m,northing_m,row\n";
  for (std::size_t i = 0; i < layout.turbine_ids.size(); ++i) {
    out << layout.turbine_ids[i] << ',' << format_double(layout.positions[i].x()) << ','
        << format_double(layout.positions[i].y()) << ',' << layout.row_of[i] << '\n';
  }
  if (cfg_path.empty()) cfg_path = sibling_cfg(csv_path);
  auto cfg = open_output(cfg_path);
  cfg << "rotor_diameter_m = " << format_double(layout.rotor_diameter) << '\n'
      << "row_orthogonal_bearing_deg = " << format_double(layout.row_orthogonal_bearing)
      << '\n';
}

// ---------------------------------------------------------------------------
// Key-value config
// ---------------------------------------------------------------------------

KeyValueConfig KeyValueConfig::load(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path.string());
}

KeyValueConfig KeyValueConfig::parse(const std::string& text, const std::string& origin) {
  KeyValueConfig cfg;
  cfg.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = strip(line);
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ParseError(origin, line_no, "expected 'key = value'");
    }
    const std::string key = strip(stripped.substr(0, eq));
    const std::string value = strip(stripped.substr(eq + 1));
    if (key.empty()) throw ParseError(origin, line_no, "empty key");
    cfg.entries_.emplace_back(key, value);
  }
  return cfg;
}

bool KeyValueConfig::has(const std::string& key) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const auto& e) { return e.first == key; });
}

std::string KeyValueConfig::get_string(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  throw Error(origin_ + ": missing required key '" + key + "'");
}

std::string KeyValueConfig::get_string(const std::string& key, const std::string& fallback) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return fallback;
}

double KeyValueConfig::get_double(const std::string& key) const {
  const std::string v = get_string(key);
  try {
    return parse_double_field(v, origin_, 0);
  } catch (const ParseError&) {
    throw Error(origin_ + ": key '" + key + "' is not a number: '" + v + "'");
  }
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

std::int64_t KeyValueConfig::get_int(const std::string& key, std::int64_t fallback) const {
  if (!has(key)) return fallback;
  const std::string v = get_string(key);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw Error(origin_ + ": key '" + key + "' is not an integer: '" + v + "'");
  }
  return value;
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const std::string v = get_string(key);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw Error(origin_ + ": key '" + key + "' is not a boolean: '" + v + "'");
}

std::int64_t KeyValueConfig::get_duration(const std::string& key, std::int64_t fallback) const {
  if (!has(key)) return fallback;
  try {
    return parse_duration(get_string(key));
  } catch (const Error& e) {
    throw Error(origin_ + ": key '" + key + "': " + e.what());
  }
}

std::vector<std::string> KeyValueConfig::get_all(const std::string& key) const {
  std::vector<std::string> values;
  for (const auto& [k, v] : entries_) {
    if (k == key) values.push_back(v);
  }
  return values;
}

void KeyValueConfig::set(const std::string& key, const std::string& value) {
  entries_.emplace_back(key, value);
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

namespace {

std::string format_15g(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

std::filesystem::path meta_path_for(const std::filesystem::path& csv_path) {
  std::filesystem::path meta = csv_path;
  meta.replace_extension(".meta");
  return meta;
}

}  // namespace

void write_matrix(const CorrelationMatrix& matrix, const std::filesystem::path& csv_path) {
  auto out = open_output(csv_path);
  out << "id";
  for (const auto& id : matrix.ids) out << ',' << id;
  out << '\n';
  const Eigen::Index n = matrix.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    out << matrix.ids[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < n; ++j) out << ',' << format_15g(matrix.entries(i, j));
    out << '\n';
  }
  auto meta = open_output(meta_path_for(csv_path));
  meta << "window_start = " << format_iso8601(matrix.window_start) << '\n'
       << "window_len = " << matrix.window_len << '\n'
       << "samples = " << matrix.samples << '\n'
       << "source = " << matrix_source_name(matrix.source) << '\n'
       << "full_rank = " << (matrix.full_rank ? "true" : "false") << '\n';
}

CorrelationMatrix read_matrix(const std::filesystem::path& csv_path) {
  auto in = open_input(csv_path);
  const std::string pathname = csv_path.string();
  std::string line;
  if (!std::getline(in, line)) throw ParseError(pathname, 1, "empty file");
  auto header = split_csv(strip(line));
  if (header.size() < 2 || header[0] != "id") {
    throw ParseError(pathname, 1, "expected header 'id,<id>,...'");
  }
  CorrelationMatrix matrix;
  matrix.ids.assign(header.begin() + 1, header.end());
  const Eigen::Index n = static_cast<Eigen::Index>(matrix.ids.size());
  matrix.entries.resize(n, n);
  long line_no = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw ParseError(pathname, line_no, "truncated matrix");
    ++line_no;
    auto fields = split_csv(strip(line));
    if (static_cast<Eigen::Index>(fields.size()) != n + 1) {
      throw ParseError(pathname, line_no, "expected " + std::to_string(n + 1) + " fields");
    }
    if (fields[0] != matrix.ids[static_cast<std::size_t>(i)]) {
      throw ParseError(pathname, line_no, "row id '" + fields[0] + "' does not match header");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      matrix.entries(i, j) =
          parse_double_field(fields[static_cast<std::size_t>(j) + 1], pathname, line_no);
    }
  }
  const auto meta_path = meta_path_for(csv_path);
  if (std::filesystem::exists(meta_path)) {
    const auto meta = KeyValueConfig::load(meta_path);
    if (meta.has("window_start")) matrix.window_start = parse_iso8601(meta.get_string("window_start"));
    matrix.window_len = meta.get_int("window_len", 0);
    matrix.samples = meta.get_int("samples", 0);
    matrix.source = matrix_source_from_name(meta.get_string("source", "raw"));
    matrix.full_rank = meta.get_bool("full_rank", true);
  }
  return matrix;
}

void write_eigen(const EigenDecomposition& eig, const std::vector<std::string>& ids,
                 const std::filesystem::path& path) {
  auto out = open_output(path);
  out << "eigenvalue";
  for (const auto& id : ids) out << ',' << id;
  out << '\n';
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    out << format_15g(eig.eigenvalues(k));
    for (Eigen::Index i = 0; i < eig.eigenvectors.rows(); ++i) {
      out << ',' << format_15g(eig.eigenvectors(i, k));
    }
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// Figure-data export
// ---------------------------------------------------------------------------

void write_heatmap_long(const CorrelationMatrix& matrix, const std::filesystem::path& path) {
  auto out = open_output(path);
  out << "row_id,col_id,value\n";
  const Eigen::Index n = matrix.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out << matrix.ids[static_cast<std::size_t>(i)] << ','
          << matrix.ids[static_cast<std::size_t>(j)] << ',' << format_15g(matrix.entries(i, j))
          << '\n';
    }
  }
}

void write_heatmap_ppm(const CorrelationMatrix& matrix, const std::filesystem::path& path) {
  auto out = open_output(path);
  const Eigen::Index n = matrix.size();
  out << "P6\n" << n << ' ' << n << "\n255\n";
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double v = std::clamp(matrix.entries(i, j), -1.0, 1.0);
      // Linear diverging map: -1 blue, 0 white, +1 red.
      unsigned char rgb[3];
      if (v < 0) {
        const auto fade = static_cast<unsigned char>(std::lround(255.0 * (1.0 + v)));
        rgb[0] = fade;
        rgb[1] = fade;
        rgb[2] = 255;
      } else {
        const auto fade = static_cast<unsigned char>(std::lround(255.0 * (1.0 - v)));
        rgb[0] = 255;
        rgb[1] = fade;
        rgb[2] = fade;
      }
      out.write(reinterpret_cast<const char*>(rgb), 3);
    }
  }
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace windcorr
