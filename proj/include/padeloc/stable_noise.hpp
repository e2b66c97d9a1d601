#pragma once

// Isotropic alpha-stable noise.
//
// Convention used throughout the library: a spherical stable vector X in
// R^dim has characteristic function
//
//   E exp(i <t, X>) = exp(-(gamma |t|)^alpha),
//
// so alpha = 2 is a Gaussian vector with per-coordinate variance 2 gamma^2.
// Vectors are drawn sub-Gaussian style, X = sqrt(A) G, where G is that
// Gaussian and A > 0 is totally skewed (alpha/2)-stable with Laplace
// transform E exp(-s A) = exp(-s^(alpha/2)).

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "padeloc/rng.hpp"

namespace padeloc {

using Complex = std::complex<double>;

struct StableNoiseSpec {
  double alpha = 2.0;  ///< stability index in (0, 2]
  double gamma = 1.0;  ///< characteristic-function scale, > 0 (0 allowed: no noise)
  std::size_t dim = 4; ///< even, >= 2

  /// Throws DomainError on invalid fields.
  void validate() const;
};

/// One replicate of the observation model a_k = c xi^k + noise_k, k < n.
///
/// The 2n real noise coordinates (Re e_0..Re e_{n-1}, Im e_0..Im e_{n-1})
/// are one isotropic stable vector with gamma = sigma / sqrt(2): the noise is
/// jointly spherical across time points, not independent per sample.
struct SignalNoiseModel {
  double alpha = 2.0;
  double sigma = 1.0;  ///< noise scale; 0 gives the noiseless series
  Complex c{0.0, 0.0};
  Complex xi{1.0, 0.0};
  std::size_t n = 2;

  /// c = sigma * sqrt(rho) * exp(i c_phase).
  static SignalNoiseModel from_snr(double alpha, double sigma, double rho, Complex xi,
                                   std::size_t n = 2, double c_phase = 0.0);

  /// |c|^2 / sigma^2 (infinite when sigma = 0 and c != 0).
  double rho() const;
  StableNoiseSpec noise_spec() const;
  void validate() const;
};

/// Positive (alpha/2)-stable multiplier; exactly 1 when alpha = 2.
double sample_positive_stable(double alpha, Rng& rng);

/// Fills `out` (size spec.dim) with one isotropic stable vector.
void sample_isotropic_stable(const StableNoiseSpec& spec, Rng& rng, std::span<double> out);
std::vector<double> sample_isotropic_stable(const StableNoiseSpec& spec, Rng& rng);

/// Complex noise e_0..e_{n-1} of one replicate.
std::vector<Complex> sample_noise(const SignalNoiseModel& model, Rng& rng);

/// Signal plus noise. Consumes the stream exactly like sample_noise, so a
/// copied Rng reproduces the noise that went into a series.
std::vector<Complex> sample_series(const SignalNoiseModel& model, Rng& rng);

/// Density of |X| for the 4-dimensional isotropic stable law,
///
///   g(r) = 1/2 * int_0^inf (r t)^2 J_1(r t) exp(-(gamma t)^alpha) dt,
///
/// by quadrature between zeros of J_1. Throws NumericalError when the
/// oscillatory tail does not die out within the panel budget.
double amplitude_density(double r, double alpha, double gamma);

/// E[|X|^-2] for the 4-dimensional law: Gamma(1 + 2/alpha) / (4 gamma^2).
/// Equals Gamma(1 + 2/alpha)/2 at gamma = 1/sqrt(2).
double amplitude_inverse_square_moment(double alpha, double gamma);

/// Leading tail constant K of P(|X| > r) ~ K r^-alpha (alpha < 2),
/// K = (2 gamma)^alpha Gamma(2 + alpha/2) / Gamma(1 - alpha/2).
double amplitude_tail_constant(double alpha, double gamma);

}  // namespace padeloc
