#include "padeloc/gof.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>

#include "padeloc/errors.hpp"

namespace padeloc {

namespace {

double corrected_p_value(double d, double effective_n) {
  const double rn = std::sqrt(effective_n);
  return kolmogorov_survival((rn + 0.12 + 0.11 / rn) * d);
}

}  // namespace

double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 0.2) return 1.0;  // series converges too slowly; value is 1 to 1e-16
  double sum = 0.0;
  for (int k = 1; k <= 200; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? term : -term);
    if (term < 1e-18) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_one_sample(std::span<const double> sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw SampleSizeError("KS test of an empty sample");
  std::vector<double> x(sample.begin(), sample.end());
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = cdf(x[i]);
    d = std::max({d, (i + 1.0) / n - f, f - i / n});
  }
  return {d, corrected_p_value(d, n)};
}

KsResult ks_uniform(std::span<const double> sample) {
  return ks_one_sample(sample, [](double u) { return std::clamp(u, 0.0, 1.0); });
}

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw SampleSizeError("KS test of an empty sample");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(i / nx - j / ny));
  }
  return {d, corrected_p_value(d, nx * ny / (nx + ny))};
}

ChiSquareResult chi_square_independence(std::span<const std::size_t> counts, std::size_t rows) {
  if (rows < 2 || counts.size() % rows != 0 || counts.size() / rows < 2) {
    throw ShapeError("contingency table must be at least 2 x 2");
  }
  const std::size_t cols = counts.size() / rows;
  std::vector<double> row_sum(rows, 0.0);
  std::vector<double> col_sum(cols, 0.0);
  double total = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = static_cast<double>(counts[r * cols + c]);
      row_sum[r] += v;
      col_sum[c] += v;
      total += v;
    }
  }
  if (total == 0.0) throw SampleSizeError("empty contingency table");
  double stat = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const double expected = row_sum[r] * col_sum[c] / total;
      if (expected == 0.0) continue;
      const double diff = static_cast<double>(counts[r * cols + c]) - expected;
      stat += diff * diff / expected;
    }
  }
  const double dof = static_cast<double>((rows - 1) * (cols - 1));
  const boost::math::chi_squared_distribution<double> chi2(dof);
  return {stat, dof, boost::math::cdf(boost::math::complement(chi2, stat))};
}

}  // namespace padeloc
