#pragma once

#include "windcorr/cleaning.hpp"
#include "windcorr/panel.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace windcorr {

struct FailureEpisode {
  std::string turbine_id;
  std::int64_t start = 0;     // seconds from panel start
  std::int64_t duration = 0;  // seconds
};

struct LullEpisode {
  std::int64_t start = 0;
  std::int64_t duration = 0;
};

// Synthetic SCADA scenario: a common mean-reverting wind-speed process, a
// slowly drifting wind direction, Jensen top-hat wake deficits combined by
// root-sum-square, a cubic power curve, white idiosyncratic noise, and
// injected failure / farm-lull episodes with ground-truth labels.
struct SimulationConfig {
  FarmLayout layout;
  std::int64_t duration = 86400;  // s
  std::int64_t step = 10;         // s

  double mean_speed = 8.0;              // m/s
  double speed_volatility = 0.02;       // m/s per sqrt(s)
  double speed_reversion_time = 3600;   // s
  double initial_direction = 270.0;     // compass deg the wind comes from
  double direction_drift = 0.0;         // deg per hour
  double direction_volatility = 3.0;    // deg per sqrt(hour)

  double thrust_coefficient = 0.8;  // 0 < Ct < 1
  double wake_decay = 0.05;         // k > 0

  double cut_in = 4.0;        // m/s
  double rated_speed = 13.0;  // m/s
  double rated_power = 3600;  // kW
  double cut_out = 25.0;      // m/s

  double noise_std = 50.0;      // kW, white per turbine
  double vane_noise_std = 1.0;  // deg, per-turbine direction sensor scatter
  bool turbine_drift = false;   // adds slow per-turbine power drifts
  double drift_std = 100.0;     // kW, scale of the slow drifts

  double lull_speed = 2.0;               // m/s the lull forcing pulls toward
  std::int64_t lull_response_time = 300; // s
  std::int64_t outlier_period = 3600;    // s between erroneous readings inside failures

  std::vector<FailureEpisode> failures;
  std::vector<LullEpisode> lulls;

  std::uint64_t seed = 0;
};

std::vector<std::string> validate_config(const SimulationConfig& config);

struct SimulationResult {
  SignalPanel power;           // kW, failure/lull cells blanked
  SignalPanel wind_speed;      // m/s, effective (waked) speed per turbine
  SignalPanel wind_direction;  // deg, vane readings
  NaLabels truth;              // injected ground-truth labels
};

// Deterministic for a given config and seed: one logical random stream,
// drawn in documented order (per step: speed shock, direction shock, then
// per turbine vane noise, then per turbine power noise, then drift shocks
// when enabled). Identical config and seed give identical output bytes.
SimulationResult simulate(const SimulationConfig& config);

// 0 below cut-in, cubic ramp rated*(u^3-u_in^3)/(u_r^3-u_in^3) up to rated
// speed, rated up to cut-out, 0 above.
double power_curve(double u, const SimulationConfig& config);

// Jensen top-hat deficit of a single wake at downwind distance x:
// (1 - sqrt(1-Ct)) * (D / (D + 2 k x))^2.
double jensen_deficit(double distance, double rotor_diameter, double ct, double k);

// Regular grid of `rows` x `per_row` turbines with rows running west-east,
// row 0 northernmost, ids T01, T02, ... row-major west-to-east. The
// row-orthogonal bearing is north (0 deg).
FarmLayout make_grid_layout(int rows, int per_row, double row_spacing_m,
                            double col_spacing_m, double rotor_diameter_m);

// Loads a SimulationConfig from a key-value file. The layout comes either
// from layout_csv (+ optional layout_cfg) or from grid_* keys.
SimulationConfig read_simulation_config(const std::filesystem::path& path);

}  // namespace windcorr
