#pragma once

// Goodness-of-fit tests used by the simulation diagnostics.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace padeloc {

struct KsResult {
  double statistic = 0.0;  ///< sup |F_n - F|
  double p_value = 1.0;    ///< asymptotic, Stephens-corrected
};

/// P(K > lambda) for the limiting Kolmogorov distribution,
/// 2 sum_{k>=1} (-1)^(k-1) exp(-2 k^2 lambda^2).
double kolmogorov_survival(double lambda);

/// One-sample KS test of `sample` against the continuous CDF `cdf`.
KsResult ks_one_sample(std::span<const double> sample, const std::function<double(double)>& cdf);

/// One-sample KS test against Uniform(0, 1).
KsResult ks_uniform(std::span<const double> sample);

/// Two-sample KS test.
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

struct ChiSquareResult {
  double statistic = 0.0;
  double dof = 0.0;
  double p_value = 1.0;
};

/// Pearson chi-square test of independence on an r x c table of counts
/// (row-major, `rows` rows).
ChiSquareResult chi_square_independence(std::span<const std::size_t> counts, std::size_t rows);

}  // namespace padeloc
