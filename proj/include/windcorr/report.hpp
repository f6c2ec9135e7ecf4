#pragma once

#include <map>
#include <string>

namespace windcorr {

// Per-cause accounting of removed or classified data points. The Riffgat
// sanity filters report causes consecutive_equal / zero_stddev / over_speed;
// the failure-shutdown classification reports failure / shutdown / unassigned.
struct CleaningReport {
  long long total_points = 0;
  long long missing_raw = 0;        // missing cells before the operation
  long long failure_overrides = 0;  // present cells reclassified as failures
  long long all_fail_columns = 0;   // fill_failures fallback events
  std::map<std::string, long long> by_cause;
  std::map<std::string, std::map<std::string, long long>> per_turbine;

  long long cause(const std::string& name) const {
    auto it = by_cause.find(name);
    return it == by_cause.end() ? 0 : it->second;
  }
  long long classified_failure() const { return cause("failure"); }
  long long classified_shutdown() const { return cause("shutdown"); }
  long long unassigned() const { return cause("unassigned"); }

  double percent(long long n) const {
    return total_points > 0 ? 100.0 * static_cast<double>(n) / static_cast<double>(total_points) : 0.0;
  }

  // JSON text with stable key order (counts plus percentages of total).
  std::string to_json() const;
};

}  // namespace windcorr
