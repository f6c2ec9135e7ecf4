#include "windcorr/ingest.hpp"

#include "windcorr/direction.hpp"
#include "windcorr/errors.hpp"
#include "windcorr/time_format.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

namespace windcorr {

namespace {

constexpr double kMaxPlausibleWindSpeed = 30.0;  // m/s

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

bool bitwise_equal(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

SignalPanel empty_like(const SignalPanel& panel, Eigen::Index t_out, std::int64_t step) {
  SignalPanel out;
  out.turbine_ids = panel.turbine_ids;
  out.t0 = panel.t0;
  out.step = step;
  out.observable = panel.observable;
  out.values = Eigen::MatrixXd::Constant(panel.turbines(), t_out, kMissingSentinel);
  out.mask = MaskArray::Constant(panel.turbines(), t_out, false);
  return out;
}

Eigen::Index bucket_count(Eigen::Index t, Eigen::Index k) { return (t + k - 1) / k; }

Eigen::Index check_resample_step(const SignalPanel& panel, std::int64_t target_step) {
  if (panel.step <= 0) throw Error("resample: nonpositive panel step");
  if (target_step <= 0 || target_step % panel.step != 0) {
    throw Error("resample: target step " + std::to_string(target_step) +
                "s is not a positive integer multiple of the panel step " +
                std::to_string(panel.step) + "s");
  }
  return target_step / panel.step;
}

}  // namespace

ScadaPanels parse_scada(const std::filesystem::path& path, Observable obs) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file: " + path.string());
  const std::string pathname = path.string();

  std::string line;
  long line_no = 0;
  if (!std::getline(in, line)) throw ParseError(pathname, 1, "empty file");
  ++line_no;
  const auto header = split_csv(strip(line));
  bool has_stddev = false;
  if (header.size() == 5 && header[4] == "stddev") {
    has_stddev = true;
  } else if (header.size() != 4) {
    throw ParseError(pathname, 1,
                     "expected header 'timestamp,turbine,observable,value[,stddev]'");
  }
  if (header[0] != "timestamp" || header[1] != "turbine" || header[2] != "observable" ||
      header[3] != "value") {
    throw ParseError(pathname, 1,
                     "expected header 'timestamp,turbine,observable,value[,stddev]'");
  }

  struct Record {
    std::int64_t time;
    std::size_t turbine;
    double value;
    double stddev;
    bool has_value;
    bool has_stddev;
  };
  std::vector<Record> records;
  std::vector<std::string> ids;                 // in order of first appearance
  std::map<std::string, std::size_t> id_index;
  std::set<std::pair<std::size_t, std::int64_t>> seen;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = strip(line);
    if (stripped.empty()) continue;
    const auto fields = split_csv(stripped);
    if (fields.size() != header.size()) {
      throw ParseError(pathname, line_no, "expected " + std::to_string(header.size()) +
                                              " fields, got " + std::to_string(fields.size()));
    }
    std::int64_t ts;
    try {
      ts = parse_iso8601(fields[0]);
    } catch (const Error& e) {
      throw ParseError(pathname, line_no, e.what());
    }
    Observable row_obs;
    try {
      row_obs = observable_from_name(fields[2]);
    } catch (const Error& e) {
      throw ParseError(pathname, line_no, e.what());
    }
    if (row_obs != obs) continue;

    auto [it, inserted] = id_index.try_emplace(fields[1], ids.size());
    if (inserted) ids.push_back(fields[1]);
    const std::size_t turbine = it->second;
    if (!seen.emplace(turbine, ts).second) {
      throw ParseError(pathname, line_no,
                       "duplicate (turbine, time, observable) record for '" + fields[1] +
                           "' at " + fields[0]);
    }

    Record rec{ts, turbine, kMissingSentinel, kMissingSentinel, false, false};
    if (fields[3] != "NA") {
      double v = 0.0;
      const auto [p, ec] = std::from_chars(fields[3].data(), fields[3].data() + fields[3].size(), v);
      if (ec != std::errc() || p != fields[3].data() + fields[3].size()) {
        throw ParseError(pathname, line_no, "malformed number '" + fields[3] + "'");
      }
      rec.value = v;
      rec.has_value = true;
    }
    if (has_stddev && fields[4] != "NA") {
      double v = 0.0;
      const auto [p, ec] = std::from_chars(fields[4].data(), fields[4].data() + fields[4].size(), v);
      if (ec != std::errc() || p != fields[4].data() + fields[4].size()) {
        throw ParseError(pathname, line_no, "malformed number '" + fields[4] + "'");
      }
      rec.stddev = v;
      rec.has_stddev = true;
    }
    records.push_back(rec);
  }
  if (records.empty()) {
    throw Error(pathname + ": no records for observable " +
                std::string(observable_name(obs)));
  }

  // Time grid: earliest timestamp, step = GCD of all offsets.
  std::int64_t t0 = records.front().time;
  for (const auto& r : records) t0 = std::min(t0, r.time);
  std::int64_t step = 0;
  for (const auto& r : records) step = std::gcd(step, r.time - t0);
  if (step == 0) step = 1;  // all records share one timestamp
  std::int64_t t_max = t0;
  for (const auto& r : records) t_max = std::max(t_max, r.time);
  const Eigen::Index t_count = static_cast<Eigen::Index>((t_max - t0) / step) + 1;
  const Eigen::Index n = static_cast<Eigen::Index>(ids.size());

  ScadaPanels out;
  out.values.turbine_ids = ids;
  out.values.t0 = t0;
  out.values.step = step;
  out.values.observable = obs;
  out.values.values = Eigen::MatrixXd::Constant(n, t_count, kMissingSentinel);
  out.values.mask = MaskArray::Constant(n, t_count, false);
  if (has_stddev) {
    out.stddevs = out.values;  // same empty shape and metadata
  }
  for (const auto& r : records) {
    const Eigen::Index col = static_cast<Eigen::Index>((r.time - t0) / step);
    const Eigen::Index row = static_cast<Eigen::Index>(r.turbine);
    if (r.has_value) {
      out.values.values(row, col) = r.value;
      out.values.mask(row, col) = true;
    }
    if (has_stddev && r.has_stddev) {
      out.stddevs->values(row, col) = r.stddev;
      out.stddevs->mask(row, col) = true;
    }
  }
  return out;
}

SignalPanel resample_mean(const SignalPanel& panel, std::int64_t target_step) {
  const Eigen::Index k = check_resample_step(panel, target_step);
  if (k == 1) return panel;
  const Eigen::Index t_out = bucket_count(panel.samples(), k);
  SignalPanel out = empty_like(panel, t_out, target_step);
  for (Eigen::Index i = 0; i < panel.turbines(); ++i) {
    for (Eigen::Index b = 0; b < t_out; ++b) {
      const Eigen::Index lo = b * k;
      const Eigen::Index hi = std::min(lo + k, panel.samples());
      double sum = 0.0;
      long count = 0;
      for (Eigen::Index t = lo; t < hi; ++t) {
        if (!panel.mask(i, t)) continue;
        sum += panel.values(i, t);
        ++count;
      }
      if (count > 0) {
        out.values(i, b) = sum / static_cast<double>(count);
        out.mask(i, b) = true;
      }
    }
  }
  return out;
}

SignalPanel resample_circular_mean(const SignalPanel& panel, std::int64_t target_step) {
  const Eigen::Index k = check_resample_step(panel, target_step);
  if (k == 1) return panel;
  const Eigen::Index t_out = bucket_count(panel.samples(), k);
  SignalPanel out = empty_like(panel, t_out, target_step);
  std::vector<double> bucket;
  for (Eigen::Index i = 0; i < panel.turbines(); ++i) {
    for (Eigen::Index b = 0; b < t_out; ++b) {
      const Eigen::Index lo = b * k;
      const Eigen::Index hi = std::min(lo + k, panel.samples());
      bucket.clear();
      for (Eigen::Index t = lo; t < hi; ++t) {
        if (panel.mask(i, t)) bucket.push_back(panel.values(i, t));
      }
      if (bucket.empty()) continue;
      try {
        out.values(i, b) = circular_mean(bucket).degrees;
        out.mask(i, b) = true;
      } catch (const DegenerateMeanError&) {
        // zero resultant: bucket stays masked
      }
    }
  }
  return out;
}

RiffgatResult riffgat_clean(const SignalPanel& panel, const SignalPanel* stddev_panel) {
  if (stddev_panel != nullptr) {
    if (stddev_panel->values.rows() != panel.values.rows() ||
        stddev_panel->values.cols() != panel.values.cols()) {
      throw Error("riffgat_clean: stddev panel shape mismatch");
    }
  }
  RiffgatResult result;
  result.panel = panel;
  auto& report = result.report;
  report.total_points = static_cast<long long>(panel.values.size());
  report.missing_raw = static_cast<long long>((panel.mask == false).count());
  report.by_cause["consecutive_equal"] = 0;
  report.by_cause["zero_stddev"] = 0;
  report.by_cause["over_speed"] = 0;

  const Eigen::Index n = panel.turbines();
  const Eigen::Index t_count = panel.samples();
  auto remove_cell = [&](Eigen::Index i, Eigen::Index t, const char* rule) {
    result.panel.mask(i, t) = false;
    result.panel.values(i, t) = kMissingSentinel;
    ++report.by_cause[rule];
    ++report.per_turbine[panel.turbine_ids[static_cast<std::size_t>(i)]][rule];
  };

  for (Eigen::Index i = 0; i < n; ++i) {
    // Rule 1: adjacent present cells with bit-identical values, evaluated on
    // the input mask so a run of k equal values loses its k-1 repeats.
    for (Eigen::Index t = 1; t < t_count; ++t) {
      if (panel.mask(i, t) && panel.mask(i, t - 1) &&
          bitwise_equal(panel.values(i, t), panel.values(i, t - 1))) {
        remove_cell(i, t, "consecutive_equal");
      }
    }
    // Rule 2: interval stddev exactly zero.
    if (stddev_panel != nullptr) {
      for (Eigen::Index t = 0; t < t_count; ++t) {
        if (!result.panel.mask(i, t)) continue;
        if (stddev_panel->mask(i, t) && stddev_panel->values(i, t) == 0.0) {
          remove_cell(i, t, "zero_stddev");
        }
      }
    }
    // Rule 3: implausible wind speeds.
    if (panel.observable == Observable::wind_speed) {
      for (Eigen::Index t = 0; t < t_count; ++t) {
        if (result.panel.mask(i, t) && result.panel.values(i, t) > kMaxPlausibleWindSpeed) {
          remove_cell(i, t, "over_speed");
        }
      }
    }
  }
  return result;
}

SignalPanel fill_constant(const SignalPanel& panel, double value) {
  SignalPanel out = panel;
  out.values = panel.mask.select(panel.values, value);
  out.mask.setConstant(true);
  return out;
}

SignalPanel fill_last_observation(const SignalPanel& panel) {
  SignalPanel out = panel;
  for (Eigen::Index i = 0; i < panel.turbines(); ++i) {
    bool have_last = false;
    double last = 0.0;
    for (Eigen::Index t = 0; t < panel.samples(); ++t) {
      if (panel.mask(i, t)) {
        last = panel.values(i, t);
        have_last = true;
      } else if (have_last) {
        out.values(i, t) = last;
        out.mask(i, t) = true;
      }
    }
  }
  return out;
}

}  // namespace windcorr
