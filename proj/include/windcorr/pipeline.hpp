#pragma once

#include "windcorr/cleaning.hpp"
#include "windcorr/correlation.hpp"

#include <filesystem>
#include <set>
#include <string>
#include <vector>

namespace windcorr {

// Full-run configuration: which stages to execute and with what inputs.
// Loaded from a key-value file; every referenced input must exist before
// execution starts.
struct RunConfig {
  std::vector<std::string> stages;  // subset of classify, corr, eigen, binavg
  std::filesystem::path power_panel;
  std::filesystem::path wind_panel;
  std::filesystem::path wind_dir_panel;
  std::filesystem::path wind_speed_panel;  // optional, bin summary speeds
  std::filesystem::path layout_csv;
  std::filesystem::path layout_cfg;
  std::filesystem::path thresholds_cfg;  // optional
  std::filesystem::path out_dir;
  WindowSpec window{43200, 43200};
  CorrelationMode mode = CorrelationMode::raw;
  std::set<int> drop_ranks = {1};
  FillStrategy fill = FillStrategy::last_value;
  std::string center0 = "auto";  // "auto" or degrees
  int jobs = 1;
  bool verbose = false;
};

RunConfig read_run_config(const std::filesystem::path& path);

// Executes the configured stages in order, writing artifacts and a manifest
// into out_dir. Any stage error is rethrown with the stage name prepended
// after partial outputs of this run are removed. Returns the manifest path.
std::filesystem::path run_pipeline(const RunConfig& config);

}  // namespace windcorr
