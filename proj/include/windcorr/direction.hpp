#pragma once

#include "windcorr/matrices.hpp"
#include "windcorr/panel.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace windcorr {

struct CircularMean {
  double degrees = 0.0;    // in [0, 360)
  double resultant = 0.0;  // mean resultant length in [0, 1]
};

// atan2 of the mean sine and cosine. Throws DegenerateMeanError when the
// resultant length drops below 1e-9.
CircularMean circular_mean(std::span<const double> angles_deg);
CircularMean circular_mean(std::span<const double> angles_deg,
                           std::span<const double> weights);

// Eight half-open 45-degree bins; bin k covers
// [center0 + 45k - 22.5, center0 + 45k + 22.5) mod 360, lower edge inclusive.
// center0 defaults to the layout's row-orthogonal bearing.
struct DirectionBins {
  double center0 = 0.0;
  static constexpr double width = 45.0;
  static constexpr int count = 8;
};

const char* bin_label(int bin);  // N, NE, E, SE, S, SW, W, NW
int bin_of(double angle_deg, const DirectionBins& bins);

// Circular mean over all turbines and all times in [start, start+len),
// present cells only. Throws when every cell is missing or the mean is
// degenerate.
CircularMean window_direction(const SignalPanel& wind_dir, Eigen::Index start,
                              Eigen::Index len);

// A correlation matrix plus the wind statistics of its window. direction is
// empty when the window's circular mean was degenerate (or all cells were
// missing); such windows are excluded from binning and counted.
struct DirectedWindow {
  CorrelationMatrix matrix;
  std::optional<double> direction_deg;
  double mean_speed = std::numeric_limits<double>::quiet_NaN();
};

struct BinnedMatrices {
  DirectionBins bins;
  std::array<std::optional<CorrelationMatrix>, DirectionBins::count> mean_matrix;
  std::array<long, DirectionBins::count> window_count{};
  std::array<double, DirectionBins::count> mean_speed{};      // NaN when unavailable
  std::array<double, DirectionBins::count> mean_direction{};  // circular, NaN when empty
  long degenerate_windows = 0;
};

// Elementwise arithmetic mean per bin. All matrices must share turbine ids
// and source mode.
BinnedMatrices bin_average(const std::vector<DirectedWindow>& windows,
                           const DirectionBins& bins);

// Turbines with no other turbine upwind of them within a lateral corridor of
// one rotor diameter around the upwind ray. bearing is the compass direction
// the wind comes from.
std::vector<std::string> front_line(const FarmLayout& layout, double bearing_deg);

}  // namespace windcorr
