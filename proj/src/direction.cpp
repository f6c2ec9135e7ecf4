#include "windcorr/direction.hpp"

#include "windcorr/errors.hpp"

#include <cmath>
#include <numbers>

namespace windcorr {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;
constexpr double kDegenerateResultant = 1e-9;

double wrap_degrees(double deg) {
  double wrapped = std::fmod(deg, 360.0);
  if (wrapped < 0) wrapped += 360.0;
  return wrapped;
}

CircularMean mean_from_components(double sum_sin, double sum_cos, double total_weight) {
  const double resultant =
      std::sqrt(sum_sin * sum_sin + sum_cos * sum_cos) / total_weight;
  if (resultant < kDegenerateResultant) throw DegenerateMeanError();
  CircularMean mean;
  mean.resultant = resultant;
  mean.degrees = wrap_degrees(std::atan2(sum_sin, sum_cos) * kRadToDeg);
  return mean;
}

}  // namespace

CircularMean circular_mean(std::span<const double> angles_deg) {
  if (angles_deg.empty()) throw Error("circular_mean: no angles");
  double sum_sin = 0.0, sum_cos = 0.0;
  for (double a : angles_deg) {
    sum_sin += std::sin(a * kDegToRad);
    sum_cos += std::cos(a * kDegToRad);
  }
  return mean_from_components(sum_sin, sum_cos, static_cast<double>(angles_deg.size()));
}

CircularMean circular_mean(std::span<const double> angles_deg,
                           std::span<const double> weights) {
  if (angles_deg.empty()) throw Error("circular_mean: no angles");
  if (angles_deg.size() != weights.size()) {
    throw Error("circular_mean: angle/weight size mismatch");
  }
  double sum_sin = 0.0, sum_cos = 0.0, total = 0.0;
  for (std::size_t i = 0; i < angles_deg.size(); ++i) {
    if (weights[i] < 0) throw Error("circular_mean: negative weight");
    sum_sin += weights[i] * std::sin(angles_deg[i] * kDegToRad);
    sum_cos += weights[i] * std::cos(angles_deg[i] * kDegToRad);
    total += weights[i];
  }
  if (total <= 0) throw Error("circular_mean: zero total weight");
  return mean_from_components(sum_sin, sum_cos, total);
}

const char* bin_label(int bin) {
  static constexpr const char* kLabels[] = {"N", "NE", "E", "SE", "S", "SW", "W", "NW"};
  if (bin < 0 || bin >= DirectionBins::count) throw Error("bin index out of range");
  return kLabels[bin];
}

int bin_of(double angle_deg, const DirectionBins& bins) {
  const double offset = wrap_degrees(angle_deg - bins.center0 + DirectionBins::width / 2.0);
  int bin = static_cast<int>(offset / DirectionBins::width);
  if (bin >= DirectionBins::count) bin = 0;  // offset == 360 after rounding
  return bin;
}

CircularMean window_direction(const SignalPanel& wind_dir, Eigen::Index start,
                              Eigen::Index len) {
  if (start < 0 || len < 1 || start + len > wind_dir.samples()) {
    throw Error("window_direction: window outside panel");
  }
  double sum_sin = 0.0, sum_cos = 0.0;
  long present = 0;
  for (Eigen::Index t = start; t < start + len; ++t) {
    for (Eigen::Index i = 0; i < wind_dir.turbines(); ++i) {
      if (!wind_dir.mask(i, t)) continue;
      sum_sin += std::sin(wind_dir.values(i, t) * kDegToRad);
      sum_cos += std::cos(wind_dir.values(i, t) * kDegToRad);
      ++present;
    }
  }
  if (present == 0) throw Error("window_direction: all cells missing");
  return mean_from_components(sum_sin, sum_cos, static_cast<double>(present));
}

BinnedMatrices bin_average(const std::vector<DirectedWindow>& windows,
                           const DirectionBins& bins) {
  BinnedMatrices out;
  out.bins = bins;
  out.mean_speed.fill(std::numeric_limits<double>::quiet_NaN());
  out.mean_direction.fill(std::numeric_limits<double>::quiet_NaN());

  std::array<Eigen::MatrixXd, DirectionBins::count> sums;
  std::array<double, DirectionBins::count> speed_sum{};
  std::array<long, DirectionBins::count> speed_count{};
  std::array<double, DirectionBins::count> dir_sin{}, dir_cos{};
  const std::vector<std::string>* ids = nullptr;
  std::optional<MatrixSource> source;

  for (const auto& window : windows) {
    if (ids == nullptr) {
      ids = &window.matrix.ids;
      source = window.matrix.source;
    } else if (window.matrix.ids != *ids) {
      throw Error("bin_average: windows mix different turbine sets");
    } else if (window.matrix.source != *source) {
      throw Error("bin_average: windows mix matrix source modes");
    }
    if (!window.direction_deg.has_value()) {
      ++out.degenerate_windows;
      continue;
    }
    const int bin = bin_of(*window.direction_deg, bins);
    if (sums[bin].size() == 0) {
      sums[bin] = window.matrix.entries;
    } else {
      sums[bin] += window.matrix.entries;
    }
    ++out.window_count[bin];
    if (std::isfinite(window.mean_speed)) {
      speed_sum[bin] += window.mean_speed;
      ++speed_count[bin];
    }
    dir_sin[bin] += std::sin(*window.direction_deg * kDegToRad);
    dir_cos[bin] += std::cos(*window.direction_deg * kDegToRad);
  }

  for (int bin = 0; bin < DirectionBins::count; ++bin) {
    if (out.window_count[bin] == 0) continue;
    CorrelationMatrix mean;
    mean.ids = *ids;
    mean.source = *source;
    mean.entries = sums[bin] / static_cast<double>(out.window_count[bin]);
    mean.samples = 0;  // aggregate of many windows
    out.mean_matrix[bin] = std::move(mean);
    if (speed_count[bin] > 0) {
      out.mean_speed[bin] = speed_sum[bin] / static_cast<double>(speed_count[bin]);
    }
    out.mean_direction[bin] =
        wrap_degrees(std::atan2(dir_sin[bin], dir_cos[bin]) * kRadToDeg);
  }
  return out;
}

std::vector<std::string> front_line(const FarmLayout& layout, double bearing_deg) {
  const double bearing = wrap_degrees(bearing_deg);
  // Unit vector pointing upwind (toward the source of the wind).
  const Eigen::Vector2d upwind(std::sin(bearing * kDegToRad), std::cos(bearing * kDegToRad));
  const double half_width = layout.rotor_diameter / 2.0;

  std::vector<std::string> front;
  const Eigen::Index n = layout.turbines();
  for (Eigen::Index i = 0; i < n; ++i) {
    bool shadow_free = true;
    for (Eigen::Index j = 0; j < n && shadow_free; ++j) {
      if (i == j) continue;
      const Eigen::Vector2d d = layout.positions[static_cast<std::size_t>(j)] -
                                layout.positions[static_cast<std::size_t>(i)];
      const double along = d.dot(upwind);
      if (along <= 0) continue;
      const double lateral = (d - along * upwind).norm();
      if (lateral < half_width) shadow_free = false;
    }
    if (shadow_free) front.push_back(layout.turbine_ids[static_cast<std::size_t>(i)]);
  }
  return front;
}

}  // namespace windcorr
