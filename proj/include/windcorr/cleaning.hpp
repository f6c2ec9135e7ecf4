#pragma once

#include "windcorr/panel.hpp"
#include "windcorr/report.hpp"

#include <filesystem>
#include <vector>

namespace windcorr {

enum class CellLabel : char {
  present = 'P',
  failure = 'F',
  shutdown = 'S',
  unassigned = 'U',
};

// N x T grid of classification labels aligned with a power panel.
struct NaLabels {
  std::vector<std::string> turbine_ids;
  Eigen::Index n = 0;
  Eigen::Index t = 0;
  std::vector<CellLabel> cells;  // row-major

  CellLabel operator()(Eigen::Index i, Eigen::Index time) const {
    return cells[static_cast<std::size_t>(i * t + time)];
  }
  CellLabel& operator()(Eigen::Index i, Eigen::Index time) {
    return cells[static_cast<std::size_t>(i * t + time)];
  }
  static NaLabels make(std::vector<std::string> ids, Eigen::Index n, Eigen::Index t);
};

void write_labels(const NaLabels& labels, std::int64_t t0, std::int64_t step,
                  const std::filesystem::path& path);
NaLabels read_labels(const std::filesystem::path& path);

// Classification thresholds. Defaults follow the Thanet recipe; a key-value
// config overrides any of them.
struct Thresholds {
  double dens_min = 0.6;
  double dens_dev_min = 0.1;
  double psi10_max = -1000.0;      // kW
  double shutdown_wind_max = 4.0;  // m/s
  int shutdown_farm_min = 20;      // strict: NA_farm > 20
  std::int64_t dens_window = 12 * 3600;  // s
  std::int64_t psi_window = 600;         // s
};

Thresholds read_thresholds(const std::filesystem::path& cfg_path);

// Sliding statistics driving the classification. Time windows are centered
// on the cell and truncated at the panel edges.
//   na_dens     per-turbine missing density over the 12 h window
//   na_dens_dev cross-turbine-mean-removed density, 12 h averaged
//   na_farm     simultaneous missing count per time
//   psi10       10-minute average of psi(i,t) = x_i(t) - mean of the other
//               turbines' present values; NaN where undefined
struct NaStatistics {
  Eigen::MatrixXd na_dens;
  Eigen::MatrixXd na_dens_dev;
  Eigen::VectorXi na_farm;
  Eigen::MatrixXd psi10;
};

NaStatistics na_statistics(const SignalPanel& power, const SignalPanel& wind,
                           const Thresholds& th);

// Failure where (na_dens > dens_min and na_dens_dev > dens_dev_min) or
// psi10 < psi10_max; the psi clause also fires on present cells (the
// failure-override). Shutdown where missing, wind < shutdown_wind_max or
// wind missing, na_farm > shutdown_farm_min and not failure. Remaining
// missing cells are unassigned.
NaLabels classify(const SignalPanel& power, const SignalPanel& wind,
                  const NaStatistics& stats, const Thresholds& th);

enum class FillStrategy { zero, last_value };

FillStrategy fill_strategy_from_name(std::string_view name);

// Fills shutdown cells (and the unassigned remainder, which has no cause of
// its own) with 0 kW or the last present-or-filled value; leading cells with
// no predecessor fall back to 0 kW.
SignalPanel fill_shutdowns(const SignalPanel& power, const NaLabels& labels,
                           FillStrategy strategy);

// Replaces every failure cell (including overridden present values) with the
// mean over the other turbines not in failure at that time. Expects shutdowns
// to be filled already. A column where all turbines fail gets 0 kW and bumps
// report->all_fail_columns.
SignalPanel fill_failures(const SignalPanel& power, const NaLabels& labels,
                          CleaningReport* report = nullptr);

// Counts per label with the partition identity
//   failure + shutdown + unassigned = missing + overrides.
CleaningReport classification_report(const SignalPanel& power, const NaLabels& labels);

}  // namespace windcorr
