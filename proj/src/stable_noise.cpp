#include "padeloc/stable_noise.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "padeloc/errors.hpp"
#include "padeloc/quadrature.hpp"

namespace padeloc {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw DomainError("stability index alpha must lie in (0, 2], got " + std::to_string(alpha));
  }
}

// Zeros of J_1: exact for the first few, McMahon's expansion afterwards
// (absolute error < 1e-9 from k = 20 on; only used as panel breaks).
double bessel_j1_zero(unsigned k) {
  if (k <= 20) return boost::math::cyl_bessel_j_zero(1.0, static_cast<int>(k));
  const double b = (k + 0.25) * std::numbers::pi;
  const double b8 = 8.0 * b;
  return b - 3.0 / b8 + 36.0 / (b8 * b8 * b8);
}

}  // namespace

void StableNoiseSpec::validate() const {
  check_alpha(alpha);
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw DomainError("noise scale gamma must be finite and >= 0");
  }
  if (dim < 2 || dim % 2 != 0) {
    throw DomainError("noise dimension must be even and >= 2, got " + std::to_string(dim));
  }
}

SignalNoiseModel SignalNoiseModel::from_snr(double alpha, double sigma, double rho, Complex xi,
                                            std::size_t n, double c_phase) {
  if (!(rho >= 0.0)) throw DomainError("SNR rho must be >= 0");
  SignalNoiseModel m;
  m.alpha = alpha;
  m.sigma = sigma;
  m.c = std::polar(sigma * std::sqrt(rho), c_phase);
  m.xi = xi;
  m.n = n;
  m.validate();
  return m;
}

double SignalNoiseModel::rho() const {
  const double c2 = std::norm(c);
  if (sigma == 0.0) return c2 == 0.0 ? 0.0 : HUGE_VAL;
  return c2 / (sigma * sigma);
}

StableNoiseSpec SignalNoiseModel::noise_spec() const {
  return {alpha, sigma / std::numbers::sqrt2, 2 * n};
}

void SignalNoiseModel::validate() const {
  noise_spec().validate();
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag()) || !std::isfinite(xi.real()) ||
      !std::isfinite(xi.imag())) {
    throw DomainError("signal amplitude and pole must be finite");
  }
}

double sample_positive_stable(double alpha, Rng& rng) {
  check_alpha(alpha);
  if (alpha == 2.0) return 1.0;
  // Kanter's representation of the totally skewed a-stable law, a = alpha/2:
  //   A = sin(aU) / sin(U)^(1/a) * (sin((1-a)U) / E)^((1-a)/a),
  // U ~ Uniform(0, pi), E ~ Exp(1). Evaluated in logs: at alpha = 0.1 the
  // powers reach 20 and the factors individually leave double range.
  const double a = 0.5 * alpha;
  const double u = rng.uniform(0.0, std::numbers::pi);
  const double e = rng.exponential();
  const double log_a = std::log(std::sin(a * u)) - std::log(std::sin(u)) / a +
                       (1.0 - a) / a * (std::log(std::sin((1.0 - a) * u)) - std::log(e));
  return std::exp(log_a);
}

void sample_isotropic_stable(const StableNoiseSpec& spec, Rng& rng, std::span<double> out) {
  spec.validate();
  if (out.size() != spec.dim) throw ShapeError("output span does not match noise dimension");
  const double mult = std::sqrt(sample_positive_stable(spec.alpha, rng));
  const double sd = std::numbers::sqrt2 * spec.gamma;
  for (auto& x : out) x = mult * sd * rng.normal();
}

std::vector<double> sample_isotropic_stable(const StableNoiseSpec& spec, Rng& rng) {
  std::vector<double> out(spec.dim);
  sample_isotropic_stable(spec, rng, out);
  return out;
}

std::vector<Complex> sample_noise(const SignalNoiseModel& model, Rng& rng) {
  const auto spec = model.noise_spec();
  std::vector<double> coords(spec.dim);
  sample_isotropic_stable(spec, rng, coords);
  std::vector<Complex> e(model.n);
  for (std::size_t k = 0; k < model.n; ++k) e[k] = {coords[k], coords[model.n + k]};
  return e;
}

std::vector<Complex> sample_series(const SignalNoiseModel& model, Rng& rng) {
  auto a = sample_noise(model, rng);
  Complex xi_k{1.0, 0.0};
  for (auto& ak : a) {
    ak += model.c * xi_k;
    xi_k *= model.xi;
  }
  return a;
}

double amplitude_density(double r, double alpha, double gamma) {
  check_alpha(alpha);
  if (!(gamma > 0.0)) throw DomainError("amplitude_density needs gamma > 0");
  if (!(r >= 0.0)) throw DomainError("amplitude_density needs r >= 0");
  if (r == 0.0) return 0.0;

  // Substituting x = r t:  g(r) = 1/(2r) int_0^inf x^2 J_1(x) phi(x / r) dx.
  const double scale = r / gamma;
  auto damping = [=](double x) { return std::exp(-std::pow(x / scale, alpha)); };
  auto f = [&](double x) { return x * x * boost::math::cyl_bessel_j(1, x) * damping(x); };
  auto envelope = [&](double x) {
    return std::numbers::pi * std::sqrt(2.0 / std::numbers::pi) * std::pow(x, 1.5) * damping(x);
  };

  // Below the first zero the damping may vary on a much finer scale than
  // the oscillation (small r): refine geometrically around x = scale.
  const double first_zero = bessel_j1_zero(1);
  // Fixed Gauss-Legendre per doubling panel: the adaptive rule stalls on the
  // tiny values near 0, and the x^alpha cusp of the damping there only
  // affects the first panel, whose share is ~1e-12 of the total.
  double sum = 0.0;
  double a = 0.0;
  for (double x = std::min(scale, first_zero) / 4096.0; x < first_zero; x *= 2.0) {
    sum += quad::gauss_legendre(f, a, x);
    a = x;
  }
  sum += quad::gauss_legendre(f, a, first_zero);

  const double envelope_peak = scale * std::pow(1.5 / alpha, 1.0 / alpha);
  double max_panel = std::abs(sum);
  constexpr unsigned kMaxPanels = 5'000'000;
  double lo = first_zero;
  for (unsigned k = 2;; ++k) {
    if (k > kMaxPanels) {
      std::ostringstream msg;
      msg << "amplitude_density(r=" << r << ", alpha=" << alpha << ", gamma=" << gamma
          << "): oscillatory tail not converged after " << kMaxPanels
          << " panels; partial sum " << sum << ", envelope " << envelope(lo);
      throw NumericalError(msg.str());
    }
    const double hi = bessel_j1_zero(k);
    const double panel = quad::gauss_legendre(f, lo, hi);
    sum += panel;
    max_panel = std::max(max_panel, std::abs(panel));
    lo = hi;
    if (lo > envelope_peak) {
      const double env = envelope(lo);
      if (env < 1e-12 * std::abs(sum) || env < 1e-16 * max_panel) break;
    }
  }
  return std::max(0.0, sum / (2.0 * r));
}

double amplitude_inverse_square_moment(double alpha, double gamma) {
  check_alpha(alpha);
  // |X|^2 = A |G|^2 with independent factors; E[A^-1] = Gamma(1 + 2/alpha) and
  // E[|G|^-2] = 1 / (2 * 2 gamma^2) for the 4-dim Gaussian.
  return boost::math::tgamma(1.0 + 2.0 / alpha) / (4.0 * gamma * gamma);
}

double amplitude_tail_constant(double alpha, double gamma) {
  check_alpha(alpha);
  if (alpha == 2.0) return 0.0;
  return std::pow(2.0 * gamma, alpha) * boost::math::tgamma(2.0 + 0.5 * alpha) /
         boost::math::tgamma(1.0 - 0.5 * alpha);
}

}  // namespace padeloc
