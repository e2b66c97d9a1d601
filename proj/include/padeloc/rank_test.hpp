#pragma once

// Affine-invariant one-sample location tests for bivariate data (H0: the
// sample is centred at the origin).
//
// The rank tests combine pseudo-Mahalanobis ranks (norms after Tyler
// standardization) with either Randles' interdirections or the cosines of
// the Tyler-standardized directions:
//
//   Q = 2 / (m E[J^2]) * sum_{i,j} J(R_i / (m+1)) J(R_j / (m+1)) cos_ij,
//
// rejected against the chi-square(2) quantile. Hotelling's T^2 with exact F
// calibration is the parametric baseline.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "padeloc/radial.hpp"

namespace padeloc {

using Point2 = Eigen::Vector2d;

/// m finite points in the plane, none at the origin.
class BivariateSample {
 public:
  /// Throws DomainError on non-finite coordinates, DegeneracyError on a point
  /// at the origin.
  explicit BivariateSample(std::vector<Point2> points);
  static BivariateSample from_complex(std::span<const std::complex<double>> z);

  std::size_t size() const { return points_.size(); }
  std::span<const Point2> points() const { return points_; }
  const Point2& operator[](std::size_t i) const { return points_[i]; }

 private:
  std::vector<Point2> points_;
};

enum class CosineMode { interdirection, sign_cosine };
std::string_view to_string(CosineMode mode);

struct LocationTestResult {
  double statistic = 0.0;
  double threshold = 0.0;
  bool reject = false;
  double p_value = 1.0;
  std::string test_label;
  std::string score_label;
};

struct TylerOptions {
  double tol = 1e-10;
  int max_iter = 500;
};

/// Tyler's M-estimator of scatter: fixed point of
///   S <- (2/m) sum_i x_i x_i^T / (x_i^T S^-1 x_i),
/// started from I and normalized to trace 2 after each step. Only the
/// directions x_i / |x_i| enter, so the magnitude of the data is irrelevant.
/// Throws SampleSizeError (m < 3), DegeneracyError when a single line
/// through the origin carries more than m/2 points, EstimationError when the
/// step size is still >= tol after max_iter steps.
Eigen::Matrix2d tyler_scatter(const BivariateSample& sample, TylerOptions options = {});

/// Spectral norm of F(S) - S for the trace-normalized Tyler map F.
double tyler_fixed_point_residual(const BivariateSample& sample, const Eigen::Matrix2d& scatter);

/// Ranks 1..m of d_i = sqrt(x_i^T S^-1 x_i), ascending, ties by index.
/// Throws DomainError unless `scatter` is symmetric positive definite.
std::vector<std::size_t> pseudo_mahalanobis_ranks(const BivariateSample& sample,
                                                  const Eigen::Matrix2d& scatter);

/// Normalized interdirection counts p_ij: the fraction of the other m-2
/// points x_t whose line through the origin strictly separates x_i and x_j.
/// Points collinear with x_t (through the origin) are assigned to a side as
/// if that line were turned by an infinitesimal positive angle.
/// Throws SampleSizeError for m < 3.
Eigen::MatrixXd interdirections(const BivariateSample& sample);

/// cos(pi p_ij) elementwise.
Eigen::MatrixXd interdirection_cosines(const Eigen::MatrixXd& p);

/// x_i^T S^-1 x_j / (d_i d_j): cosines between Tyler-standardized points.
Eigen::MatrixXd sign_cosines(const BivariateSample& sample, const Eigen::Matrix2d& scatter);

/// Q from ranks and a cosine matrix (m = ranks.size()).
double q_statistic(std::span<const std::size_t> ranks, const Eigen::MatrixXd& cosines,
                   const ScoreFunction& score);

/// Tyler -> ranks -> interdirections (or sign cosines) -> Q, rejecting when
/// Q > -2 log(beta). p-value exp(-Q/2).
LocationTestResult location_test(const BivariateSample& sample, const ScoreFunction& score,
                                 double beta, CosineMode mode = CosineMode::interdirection);

/// T^2 = m xbar^T S^-1 xbar with the unbiased covariance S, calibrated by
/// (m-2) / (2(m-1)) T^2 ~ F(2, m-2). Threshold is reported on the T^2 scale.
/// Throws DegeneracyError when S is numerically singular.
LocationTestResult hotelling_test(const BivariateSample& sample, double beta);

/// Exact power of hotelling_test for Gaussian data with mean `mu` and
/// covariance sigma^2 I: noncentral F(2, m-2) with noncentrality
/// m |mu|^2 / sigma^2.
double hotelling_gaussian_power(const Point2& mu, double sigma, std::size_t m, double beta);

/// Same, parameterized directly by the noncentrality.
double hotelling_power_from_noncentrality(double noncentrality, std::size_t m, double beta);

/// Point minimizing sum_i |x_i - c| (Weiszfeld iteration with the
/// Vardi-Zhang correction at data points).
Point2 spatial_median(std::span<const Point2> points, double tol = 1e-12, int max_iter = 1000);

}  // namespace padeloc
