#pragma once

#include "windcorr/matrices.hpp"
#include "windcorr/panel.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace windcorr {

// ---------------------------------------------------------------------------
// Panel CSV. Header `timestamp,<id1>,<id2>,...`; one row per timestamp in
// ISO-8601 UTC at uniform spacing; missing cells are the literal NA; decimal
// point '.', no thousands separators. Values are written with the shortest
// representation that round-trips bit-exactly.
// ---------------------------------------------------------------------------

void write_panel(const SignalPanel& panel, const std::filesystem::path& path);

// The observable is not stored in the file and must be supplied. step_hint
// is only consulted for single-row files, where spacing cannot be inferred.
SignalPanel read_panel(const std::filesystem::path& path, Observable obs,
                       std::int64_t step_hint = 0);

// ---------------------------------------------------------------------------
// Layout. CSV `id,easting_m,northing_m,row` plus a key-value config holding
// rotor_diameter_m and row_orthogonal_bearing_deg. When cfg_path is empty the
// config is looked up next to the CSV with extension .cfg.
// ---------------------------------------------------------------------------

FarmLayout read_layout(const std::filesystem::path& csv_path,
                       std::filesystem::path cfg_path = {});
void write_layout(const FarmLayout& layout, const std::filesystem::path& csv_path,
                  std::filesystem::path cfg_path = {});

// ---------------------------------------------------------------------------
// Key-value config: `key = value` lines, '#' comments, blank lines ignored.
// Repeated keys are preserved in order (used for episode lists).
// ---------------------------------------------------------------------------

class KeyValueConfig {
 public:
  KeyValueConfig() = default;
  static KeyValueConfig load(const std::filesystem::path& path);
  static KeyValueConfig parse(const std::string& text, const std::string& origin);

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::int64_t get_duration(const std::string& key, std::int64_t fallback) const;
  std::vector<std::string> get_all(const std::string& key) const;

  void set(const std::string& key, const std::string& value);
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  std::string origin_ = "<memory>";
};

// ---------------------------------------------------------------------------
// Matrix CSV: header `id,<id1>,...`, one row per turbine, 15 significant
// digits. A sidecar `<stem>.meta` key-value file carries window start/length,
// sample count, source mode and rank notes.
// ---------------------------------------------------------------------------

void write_matrix(const CorrelationMatrix& matrix, const std::filesystem::path& csv_path);
CorrelationMatrix read_matrix(const std::filesystem::path& csv_path);

// Eigen-decomposition CSV: header `eigenvalue,<id1>,...`; row k holds the
// k-th eigenvalue followed by its eigenvector components.
void write_eigen(const EigenDecomposition& eig, const std::vector<std::string>& ids,
                 const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Figure-data export. Long-format CSV `row_id,col_id,value` and an optional
// PPM bitmap with a linear diverging map: -1 blue, 0 white, +1 red.
// ---------------------------------------------------------------------------

void write_heatmap_long(const CorrelationMatrix& matrix, const std::filesystem::path& path);
void write_heatmap_ppm(const CorrelationMatrix& matrix, const std::filesystem::path& path);

// Shortest decimal form that parses back to the same double ("NA" handled by
// panel IO, not here).
std::string format_double(double value);

}  // namespace windcorr
