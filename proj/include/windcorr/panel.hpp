#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace windcorr {

enum class Observable { active_power, wind_speed, wind_direction, power_deviation };

const char* observable_name(Observable obs);
Observable observable_from_name(std::string_view name);

using MaskArray = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

// Stored in masked-out cells. Kernels must consult the mask, never the value.
inline constexpr double kMissingSentinel = std::numeric_limits<double>::quiet_NaN();

// N x T panel of one observable for N turbines on a uniform time grid.
// Treated as immutable after construction: every transformation returns a
// new panel, so panels can be shared freely across workers.
struct SignalPanel {
  std::vector<std::string> turbine_ids;  // length N, ordered, unique
  std::int64_t t0 = 0;                   // epoch seconds, UTC
  std::int64_t step = 0;                 // seconds, > 0
  Eigen::MatrixXd values;                // N x T
  MaskArray mask;                        // N x T, true = present
  Observable observable = Observable::active_power;

  Eigen::Index turbines() const { return values.rows(); }
  Eigen::Index samples() const { return values.cols(); }
  std::int64_t time_at(Eigen::Index t) const { return t0 + step * t; }
  bool all_present() const { return mask.all(); }
};

// Empty iff every SignalPanel invariant holds; each violation names the
// offending turbine/time indices.
std::vector<std::string> validate_panel(const SignalPanel& panel);

// Bit-exact comparison (values compared as raw doubles, so sentinel cells
// compare equal). Used by round-trip and determinism checks.
bool panels_identical(const SignalPanel& a, const SignalPanel& b);

// Turbine positions and row structure; ordering fixes the row/column order
// of every panel and matrix in a run.
struct FarmLayout {
  std::vector<std::string> turbine_ids;
  std::vector<Eigen::Vector2d> positions;  // easting, northing in meters
  double rotor_diameter = 0.0;             // meters
  std::vector<int> row_of;                 // row index per turbine, contiguous from 0
  double row_orthogonal_bearing = 0.0;     // compass degrees, perpendicular to rows

  Eigen::Index turbines() const { return static_cast<Eigen::Index>(turbine_ids.size()); }
};

std::vector<std::string> validate_layout(const FarmLayout& layout);

}  // namespace windcorr
