#include "windcorr/panel.hpp"

#include "windcorr/errors.hpp"

#include <cmath>
#include <cstring>
#include <set>

namespace windcorr {

const char* observable_name(Observable obs) {
  switch (obs) {
    case Observable::active_power: return "active_power";
    case Observable::wind_speed: return "wind_speed";
    case Observable::wind_direction: return "wind_direction";
    case Observable::power_deviation: return "power_deviation";
  }
  return "unknown";
}

Observable observable_from_name(std::string_view name) {
  if (name == "active_power" || name == "power") return Observable::active_power;
  if (name == "wind_speed" || name == "speed") return Observable::wind_speed;
  if (name == "wind_direction" || name == "direction") return Observable::wind_direction;
  if (name == "power_deviation" || name == "deviation") return Observable::power_deviation;
  throw Error("unknown observable tag '" + std::string(name) + "'");
}

std::vector<std::string> validate_panel(const SignalPanel& panel) {
  std::vector<std::string> violations;
  const Eigen::Index n = panel.values.rows();
  const Eigen::Index t = panel.values.cols();
  if (n < 1 || t < 1) {
    violations.push_back("empty panel: values are " + std::to_string(n) + "x" +
                         std::to_string(t) + ", need N >= 1 and T >= 1");
  }
  if (panel.mask.rows() != n || panel.mask.cols() != t) {
    violations.push_back("shape mismatch: values " + std::to_string(n) + "x" +
                         std::to_string(t) + " vs mask " + std::to_string(panel.mask.rows()) +
                         "x" + std::to_string(panel.mask.cols()));
  }
  if (static_cast<Eigen::Index>(panel.turbine_ids.size()) != n) {
    violations.push_back("turbine id count " + std::to_string(panel.turbine_ids.size()) +
                         " does not match row count " + std::to_string(n));
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < panel.turbine_ids.size(); ++i) {
    if (panel.turbine_ids[i].empty()) {
      violations.push_back("turbine " + std::to_string(i) + ": empty id");
    }
    if (!seen.insert(panel.turbine_ids[i]).second) {
      violations.push_back("duplicate turbine id '" + panel.turbine_ids[i] + "'");
    }
  }
  if (panel.step <= 0) {
    violations.push_back("nonpositive step: " + std::to_string(panel.step));
  }
  if (panel.mask.rows() == n && panel.mask.cols() == t) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index k = 0; k < t; ++k) {
        if (panel.mask(i, k) && !std::isfinite(panel.values(i, k))) {
          violations.push_back("turbine " + std::to_string(i) + ", t " + std::to_string(k) +
                               ": present cell is not finite");
        }
      }
    }
  }
  return violations;
}

bool panels_identical(const SignalPanel& a, const SignalPanel& b) {
  if (a.turbine_ids != b.turbine_ids || a.t0 != b.t0 || a.step != b.step ||
      a.observable != b.observable) {
    return false;
  }
  if (a.values.rows() != b.values.rows() || a.values.cols() != b.values.cols()) return false;
  if ((a.mask != b.mask).any()) return false;
  // Raw byte comparison so sentinel NaNs compare equal.
  return std::memcmp(a.values.data(), b.values.data(),
                     sizeof(double) * static_cast<std::size_t>(a.values.size())) == 0;
}

std::vector<std::string> validate_layout(const FarmLayout& layout) {
  std::vector<std::string> violations;
  const std::size_t n = layout.turbine_ids.size();
  if (n == 0) violations.push_back("empty layout");
  if (layout.positions.size() != n) {
    violations.push_back("position count does not match turbine count");
  }
  if (layout.row_of.size() != n) {
    violations.push_back("row_of size does not match turbine count");
  }
  if (!(layout.rotor_diameter > 0)) {
    violations.push_back("rotor_diameter must be positive");
  }
  for (std::size_t i = 0; i + 1 < layout.positions.size(); ++i) {
    for (std::size_t j = i + 1; j < layout.positions.size(); ++j) {
      if ((layout.positions[i] - layout.positions[j]).norm() == 0.0) {
        violations.push_back("turbines " + layout.turbine_ids[i] + " and " +
                             layout.turbine_ids[j] + " share a position");
      }
    }
  }
  if (!layout.row_of.empty()) {
    int max_row = 0;
    std::set<int> rows;
    for (int r : layout.row_of) {
      if (r < 0) violations.push_back("negative row index");
      rows.insert(r);
      max_row = std::max(max_row, r);
    }
    if (static_cast<int>(rows.size()) != max_row + 1) {
      violations.push_back("row indices are not contiguous from 0");
    }
  }
  return violations;
}

}  // namespace windcorr
