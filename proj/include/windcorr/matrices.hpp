#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace windcorr {

enum class MatrixSource { raw, reduced, deviation };

const char* matrix_source_name(MatrixSource source);
MatrixSource matrix_source_from_name(std::string_view name);

// N x N Pearson correlation matrix with window metadata. Symmetric, unit
// diagonal, entries in [-1, 1] and PSD within numerical tolerance.
struct CorrelationMatrix {
  std::vector<std::string> ids;
  Eigen::MatrixXd entries;
  std::int64_t window_start = 0;  // epoch seconds
  std::int64_t window_len = 0;    // seconds
  Eigen::Index samples = 0;       // T inside the window
  MatrixSource source = MatrixSource::raw;
  bool full_rank = true;          // false for degenerate T <= N windows

  Eigen::Index size() const { return entries.rows(); }
};

// N x N covariance matrix in (kW)^2 plus the per-turbine standard deviations.
// `scales` records max(|row mean|, max |centered value|) per turbine and is
// what the zero-variance test measures sigma against.
struct CovarianceMatrix {
  std::vector<std::string> ids;
  Eigen::MatrixXd entries;
  Eigen::VectorXd stddevs;
  Eigen::VectorXd scales;
  std::int64_t window_start = 0;
  std::int64_t window_len = 0;
  Eigen::Index samples = 0;

  Eigen::Index size() const { return entries.rows(); }
};

// Factors of M = U S V^T for an N x T matrix M. U is the full N x N
// orthogonal factor; V is the thin T x min(N,T) variant with orthonormal
// columns. Singular values are non-increasing and non-negative. Signs are
// fixed so each column of U has its largest-magnitude component positive.
struct SvdFactors {
  Eigen::MatrixXd u;                // N x N
  Eigen::VectorXd singular_values;  // min(N, T)
  Eigen::MatrixXd v;                // T x min(N, T)

  Eigen::Index rank_bound() const { return singular_values.size(); }
};

// Eigenvalues in descending order with orthonormal eigenvector columns
// aligned to them. Same sign convention as SvdFactors.
struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
};

}  // namespace windcorr
