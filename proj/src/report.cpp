#include "windcorr/report.hpp"

#include <json.hpp>

namespace windcorr {

std::string CleaningReport::to_json() const {
  nlohmann::ordered_json j;
  j["total_points"] = total_points;
  j["missing_raw"] = missing_raw;
  j["missing_raw_pct"] = percent(missing_raw);
  j["failure_overrides"] = failure_overrides;
  if (all_fail_columns > 0) j["all_fail_columns"] = all_fail_columns;
  nlohmann::ordered_json causes;
  for (const auto& [name, count] : by_cause) {
    causes[name] = {{"count", count}, {"pct", percent(count)}};
  }
  j["by_cause"] = causes;
  nlohmann::ordered_json turbines;
  for (const auto& [id, rules] : per_turbine) {
    nlohmann::ordered_json entry;
    for (const auto& [name, count] : rules) entry[name] = count;
    turbines[id] = entry;
  }
  j["per_turbine"] = turbines;
  return j.dump(2) + "\n";
}

}  // namespace windcorr
