#pragma once

#include "windcorr/matrices.hpp"
#include "windcorr/panel.hpp"

#include <optional>
#include <set>
#include <vector>

namespace windcorr {

// N x T matrix with zero time-mean per row, plus the subtracted means.
struct CenteredPanel {
  std::vector<std::string> ids;
  Eigen::MatrixXd m;
  Eigen::VectorXd row_means;
  std::int64_t window_start = 0;  // epoch seconds
  std::int64_t step = 0;          // seconds

  Eigen::Index turbines() const { return m.rows(); }
  Eigen::Index samples() const { return m.cols(); }
  std::int64_t window_len() const { return step * m.cols(); }
};

// Requires a fully present panel (cleaning completed).
CenteredPanel center(const SignalPanel& panel);

// Sigma = (1/T) M M^T.
CovarianceMatrix covariance(const CenteredPanel& centered);

// C_ij = Sigma_ij / (sigma_i sigma_j). Throws ZeroVarianceError listing every
// turbine whose sigma vanishes relative to its value scale.
CorrelationMatrix correlation(const CovarianceMatrix& cov);

// Symmetric eigendecomposition, eigenvalues descending, eigenvector signs
// fixed (largest-magnitude component positive). Rejects inputs that are not
// symmetric within 1e-8 relative tolerance.
EigenDecomposition eigen_decompose(const Eigen::MatrixXd& symmetric);
EigenDecomposition eigen_decompose(const CorrelationMatrix& matrix);

SvdFactors svd_decompose(const Eigen::MatrixXd& m);
SvdFactors svd_decompose(const CenteredPanel& centered);

// Reconstructs with the given singular values zeroed and re-centers the rows.
// drop_ranks are 1-based: rank 1 is the largest singular value.
CenteredPanel reduce_modes(const CenteredPanel& centered, const SvdFactors& factors,
                           const std::set<int>& drop_ranks);

// correlation(covariance(reduce(center(panel)))) tagged `reduced`.
CorrelationMatrix reduced_correlation(const SignalPanel& panel,
                                      const std::set<int>& drop_ranks);

// psi_i(t) = x_i(t) - farm mean at t; output tagged power_deviation.
SignalPanel deviation_series(const SignalPanel& panel);

// Window length/stride in seconds; both positive integer multiples of the
// panel step, length at least two steps.
struct WindowSpec {
  std::int64_t length = 0;
  std::int64_t stride = 0;
};

enum class CorrelationMode { raw, reduced, deviation };

CorrelationMode correlation_mode_from_name(std::string_view name);
const char* correlation_mode_name(CorrelationMode mode);

// One sliding-window result: either a matrix or an error placeholder naming
// the zero-variance turbines. Windows are never silently dropped.
struct WindowCorrelation {
  std::int64_t window_start = 0;
  Eigen::Index start_index = 0;
  std::optional<CorrelationMatrix> matrix;
  std::vector<std::string> zero_variance_ids;

  bool ok() const { return matrix.has_value(); }
};

// One result per window position t0 + k*stride, ordered by start time.
// Windows run concurrently when jobs > 1; output order is unaffected.
std::vector<WindowCorrelation> sliding_correlations(const SignalPanel& panel,
                                                    const WindowSpec& spec,
                                                    CorrelationMode mode,
                                                    const std::set<int>& drop_ranks = {1},
                                                    int jobs = 1);

}  // namespace windcorr
