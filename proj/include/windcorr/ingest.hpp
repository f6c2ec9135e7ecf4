#pragma once

#include "windcorr/panel.hpp"
#include "windcorr/report.hpp"

#include <filesystem>
#include <optional>

namespace windcorr {

// Result of parsing a raw SCADA export: the mean-value panel and, when the
// file carries the interval-stddev column, the matching stddev panel.
struct ScadaPanels {
  SignalPanel values;
  std::optional<SignalPanel> stddevs;
};

// Raw SCADA CSV schema: header `timestamp,turbine,observable,value[,stddev]`,
// long format, one record per row. Rows whose observable differs from the
// requested one are ignored. The time grid is the GCD of all gaps from the
// earliest timestamp; absent (turbine, time) cells are masked out.
// Rejects malformed timestamps, duplicate (turbine, time, observable) pairs
// and unknown observable tags, naming the offending line.
ScadaPanels parse_scada(const std::filesystem::path& path, Observable obs);

// Arithmetic mean over left-aligned buckets of target_step/step cells.
// A bucket with no present value stays masked. target_step must be an
// integer multiple of the panel step.
SignalPanel resample_mean(const SignalPanel& panel, std::int64_t target_step);

// Same bucketing with the circular mean; a bucket whose resultant vanishes
// is masked.
SignalPanel resample_circular_mean(const SignalPanel& panel, std::int64_t target_step);

struct RiffgatResult {
  SignalPanel panel;
  CleaningReport report;
};

// Riffgat-style sanity filters, applied in order with first-rule attribution:
//  1. consecutive_equal: the second of two adjacent present cells with
//     bit-identical values is masked (a run of k equal values loses k-1);
//  2. zero_stddev: cells whose interval stddev is exactly 0 are masked;
//  3. over_speed: wind-speed cells above 30 m/s are masked.
// Never unmasks a cell; idempotent.
RiffgatResult riffgat_clean(const SignalPanel& panel,
                            const SignalPanel* stddev_panel = nullptr);

// Every masked cell unmasked and set to `value`; mask all true afterwards.
SignalPanel fill_constant(const SignalPanel& panel, double value);

// Last observation carried forward per turbine; leading gaps stay masked.
// Reconstruction step for event-driven observables before resampling.
SignalPanel fill_last_observation(const SignalPanel& panel);

}  // namespace windcorr
