#include "windcorr/correlation.hpp"

#include "windcorr/errors.hpp"
#include "windcorr/parallel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace windcorr {

namespace {

// sigma_i counts as zero when it vanishes relative to the turbine's value
// scale; catches both exact zeros (constant fills) and the rounding residue
// a constant series leaves after centering.
constexpr double kZeroVarianceRel = 1e-12;

void fix_column_signs(Eigen::MatrixXd& u, Eigen::MatrixXd* v = nullptr) {
  for (Eigen::Index k = 0; k < u.cols(); ++k) {
    Eigen::Index argmax = 0;
    u.col(k).cwiseAbs().maxCoeff(&argmax);
    if (u(argmax, k) < 0) {
      u.col(k) = -u.col(k);
      if (v && k < v->cols()) v->col(k) = -v->col(k);
    }
  }
}

}  // namespace

CenteredPanel center(const SignalPanel& panel) {
  if (!panel.all_present()) {
    Eigen::Index bad_i = -1, bad_t = -1;
    for (Eigen::Index i = 0; i < panel.turbines() && bad_i < 0; ++i) {
      for (Eigen::Index t = 0; t < panel.samples(); ++t) {
        if (!panel.mask(i, t)) {
          bad_i = i;
          bad_t = t;
          break;
        }
      }
    }
    throw Error("center: panel has masked cells (first at turbine " + std::to_string(bad_i) +
                ", t " + std::to_string(bad_t) + "); fill before correlating");
  }
  CenteredPanel centered;
  centered.ids = panel.turbine_ids;
  centered.window_start = panel.t0;
  centered.step = panel.step;
  centered.row_means = panel.values.rowwise().mean();
  centered.m = panel.values.colwise() - centered.row_means;
  return centered;
}

CovarianceMatrix covariance(const CenteredPanel& centered) {
  const Eigen::Index t = centered.samples();
  CovarianceMatrix cov;
  cov.ids = centered.ids;
  cov.window_start = centered.window_start;
  cov.window_len = centered.window_len();
  cov.samples = t;
  cov.entries = (centered.m * centered.m.transpose()) / static_cast<double>(t);
  cov.entries = ((cov.entries + cov.entries.transpose()) * 0.5).eval();
  cov.stddevs = cov.entries.diagonal().cwiseMax(0.0).cwiseSqrt();
  cov.scales = centered.row_means.cwiseAbs().cwiseMax(
      centered.m.cwiseAbs().rowwise().maxCoeff());
  return cov;
}

CorrelationMatrix correlation(const CovarianceMatrix& cov) {
  const Eigen::Index n = cov.size();
  std::vector<std::string> zero_ids;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (cov.stddevs(i) <= kZeroVarianceRel * cov.scales(i)) {
      zero_ids.push_back(cov.ids[static_cast<std::size_t>(i)]);
    }
  }
  if (!zero_ids.empty()) throw ZeroVarianceError(std::move(zero_ids));

  CorrelationMatrix corr;
  corr.ids = cov.ids;
  corr.window_start = cov.window_start;
  corr.window_len = cov.window_len;
  corr.samples = cov.samples;
  const Eigen::VectorXd inv_sigma = cov.stddevs.cwiseInverse();
  corr.entries = inv_sigma.asDiagonal() * cov.entries * inv_sigma.asDiagonal();
  corr.entries = ((corr.entries + corr.entries.transpose()) * 0.5).eval();
  corr.entries.diagonal().setOnes();
  corr.full_rank = cov.samples - 1 >= n;
  return corr;
}

EigenDecomposition eigen_decompose(const Eigen::MatrixXd& symmetric) {
  if (symmetric.rows() != symmetric.cols()) {
    throw Error("eigen_decompose: matrix is not square");
  }
  const double scale = std::max(1.0, symmetric.cwiseAbs().maxCoeff());
  const double asymmetry = (symmetric - symmetric.transpose()).cwiseAbs().maxCoeff();
  if (asymmetry > 1e-8 * scale) {
    throw Error("eigen_decompose: input not symmetric (max asymmetry " +
                std::to_string(asymmetry) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      (symmetric + symmetric.transpose()) * 0.5);
  if (solver.info() != Eigen::Success) throw Error("eigen_decompose: solver failed");

  // Eigen returns ascending order; flip to descending.
  EigenDecomposition out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  fix_column_signs(out.eigenvectors);
  return out;
}

EigenDecomposition eigen_decompose(const CorrelationMatrix& matrix) {
  return eigen_decompose(matrix.entries);
}

SvdFactors svd_decompose(const Eigen::MatrixXd& m) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU | Eigen::ComputeThinV);
  SvdFactors factors;
  factors.u = svd.matrixU();
  factors.singular_values = svd.singularValues();
  factors.v = svd.matrixV();
  fix_column_signs(factors.u, &factors.v);
  return factors;
}

SvdFactors svd_decompose(const CenteredPanel& centered) { return svd_decompose(centered.m); }

CenteredPanel reduce_modes(const CenteredPanel& centered, const SvdFactors& factors,
                           const std::set<int>& drop_ranks) {
  const Eigen::Index rank_bound = factors.rank_bound();
  for (int rank : drop_ranks) {
    if (rank < 1 || rank > rank_bound) {
      throw Error("reduce_modes: rank " + std::to_string(rank) + " outside 1.." +
                  std::to_string(rank_bound));
    }
  }
  Eigen::VectorXd kept = factors.singular_values;
  for (int rank : drop_ranks) kept(rank - 1) = 0.0;

  CenteredPanel reduced;
  reduced.ids = centered.ids;
  reduced.window_start = centered.window_start;
  reduced.step = centered.step;
  reduced.row_means = centered.row_means;
  reduced.m = factors.u.leftCols(rank_bound) * kept.asDiagonal() * factors.v.transpose();
  // Zero row-means hold analytically; enforce them against rounding.
  reduced.m.colwise() -= reduced.m.rowwise().mean().eval();
  return reduced;
}

CorrelationMatrix reduced_correlation(const SignalPanel& panel,
                                      const std::set<int>& drop_ranks) {
  const CenteredPanel centered = center(panel);
  const SvdFactors factors = svd_decompose(centered);
  const CenteredPanel reduced = reduce_modes(centered, factors, drop_ranks);
  CorrelationMatrix corr = correlation(covariance(reduced));
  corr.source = MatrixSource::reduced;
  return corr;
}

SignalPanel deviation_series(const SignalPanel& panel) {
  if (!panel.all_present()) {
    throw Error("deviation_series: panel has masked cells; fill before use");
  }
  SignalPanel out = panel;
  out.observable = Observable::power_deviation;
  const Eigen::RowVectorXd farm_mean = panel.values.colwise().mean();
  out.values = panel.values.rowwise() - farm_mean;
  return out;
}

CorrelationMode correlation_mode_from_name(std::string_view name) {
  if (name == "raw") return CorrelationMode::raw;
  if (name == "reduced") return CorrelationMode::reduced;
  if (name == "deviation") return CorrelationMode::deviation;
  throw Error("unknown correlation mode '" + std::string(name) + "'");
}

const char* correlation_mode_name(CorrelationMode mode) {
  switch (mode) {
    case CorrelationMode::raw: return "raw";
    case CorrelationMode::reduced: return "reduced";
    case CorrelationMode::deviation: return "deviation";
  }
  return "unknown";
}

std::vector<WindowCorrelation> sliding_correlations(const SignalPanel& panel,
                                                    const WindowSpec& spec,
                                                    CorrelationMode mode,
                                                    const std::set<int>& drop_ranks,
                                                    int jobs) {
  if (panel.step <= 0) throw Error("sliding_correlations: nonpositive panel step");
  if (spec.length <= 0 || spec.stride <= 0) {
    throw Error("sliding_correlations: window length and stride must be positive");
  }
  if (spec.length % panel.step != 0 || spec.stride % panel.step != 0) {
    throw Error("sliding_correlations: window length and stride must be multiples of the panel step");
  }
  const Eigen::Index len = spec.length / panel.step;
  const Eigen::Index stride = spec.stride / panel.step;
  if (len < 2) throw Error("sliding_correlations: window must span at least 2 steps");
  if (len > panel.samples()) {
    throw Error("sliding_correlations: window (" + std::to_string(len) +
                " samples) longer than panel (" + std::to_string(panel.samples()) + ")");
  }

  const SignalPanel* source = &panel;
  SignalPanel deviations;
  if (mode == CorrelationMode::deviation) {
    deviations = deviation_series(panel);
    source = &deviations;
  } else if (!panel.all_present()) {
    throw Error("sliding_correlations: panel has masked cells; fill before correlating");
  }

  const Eigen::Index window_count = (panel.samples() - len) / stride + 1;
  std::vector<WindowCorrelation> results(static_cast<std::size_t>(window_count));
  parallel_for(window_count, jobs, [&](std::ptrdiff_t w) {
    const Eigen::Index start = static_cast<Eigen::Index>(w) * stride;
    SignalPanel window;
    window.turbine_ids = source->turbine_ids;
    window.t0 = source->time_at(start);
    window.step = source->step;
    window.observable = source->observable;
    window.values = source->values.middleCols(start, len);
    window.mask = source->mask.middleCols(start, len);

    WindowCorrelation& result = results[static_cast<std::size_t>(w)];
    result.window_start = window.t0;
    result.start_index = start;
    try {
      CorrelationMatrix matrix = (mode == CorrelationMode::reduced)
                                     ? reduced_correlation(window, drop_ranks)
                                     : correlation(covariance(center(window)));
      if (mode == CorrelationMode::deviation) matrix.source = MatrixSource::deviation;
      result.matrix = std::move(matrix);
    } catch (const ZeroVarianceError& e) {
      result.zero_variance_ids = e.turbine_ids();
    }
  });
  return results;
}

}  // namespace windcorr
