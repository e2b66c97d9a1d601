#include "padeloc/radial.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "padeloc/errors.hpp"
#include "padeloc/quadrature.hpp"

namespace padeloc {

namespace {

void check_open_unit(double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw DomainError("score argument must lie in (0, 1), got " + std::to_string(u));
  }
}

// int_0^inf h(r) dr via r = t / (1 - t).
template <class F>
double half_line_integral(F&& h) {
  auto mapped = [&](double t) {
    const double s = 1.0 - t;
    return h(t / s) / (s * s);
  };
  constexpr std::array<double, 6> breaks{0.0, 0.25, 0.5, 0.75, 0.9, 1.0};
  return quad::integrate_panels(mapped, breaks, 1e-12).value;
}

}  // namespace

// ---------------------------------------------------------------- scores

std::string_view ScoreFunction::label() const {
  return kind_ == ScoreKind::pole ? "pole_score" : "vdw";
}

double ScoreFunction::operator()(double u) const {
  check_open_unit(u);
  if (kind_ == ScoreKind::pole) return 4.0 * std::sqrt(u * (1.0 - u));
  return std::sqrt(-2.0 * std::log1p(-u));
}

double ScoreFunction::at_log_survival(double v) const {
  if (!(v >= 0.0)) throw DomainError("log-survival coordinate must be >= 0");
  if (kind_ == ScoreKind::pole) return 4.0 * std::sqrt(-std::expm1(-v) * std::exp(-v));
  return std::sqrt(2.0 * v);
}

double score_eval(const ScoreFunction& score, double u) { return score(u); }

double cross_constant(const ScoreFunction& s1, const ScoreFunction& s2) {
  // u = 1 - exp(-w^2): du = 2 w exp(-w^2) dw; both scores are smooth in w.
  auto integrand = [&](double w) {
    const double v = w * w;
    return s1.at_log_survival(v) * s2.at_log_survival(v) * 2.0 * w * std::exp(-v);
  };
  constexpr std::array<double, 10> breaks{0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 6.0, 9.0};
  return quad::integrate_panels(integrand, breaks, 1e-14).value;
}

double asymptotic_relative_efficiency(const ScoreFunction& tested, const ScoreFunction& reference,
                                      const ScoreFunction& truth) {
  const double ct = cross_constant(tested, truth);
  const double cr = cross_constant(reference, truth);
  return (ct * ct / cross_constant(tested, tested)) *
         (cross_constant(reference, reference) / (cr * cr));
}

double are_pole_vs_vdw() {
  return asymptotic_relative_efficiency(ScoreFunction::pole(), ScoreFunction::vdw(),
                                        ScoreFunction::pole());
}

// ---------------------------------------------------------------- families

std::string_view RadialFamily::label() const {
  return kind_ == RadialKind::pole ? "pole" : "gaussian";
}

double RadialFamily::radial_function(double r) const {
  if (kind_ == RadialKind::pole) {
    const double s = 1.0 + r * r;
    return 1.0 / (s * s);
  }
  return std::exp(-0.5 * r * r);
}

double RadialFamily::sqrt_radial_derivative(double r) const {
  if (kind_ == RadialKind::pole) {
    const double s = 1.0 + r * r;
    return -2.0 * r / (s * s);
  }
  return -0.5 * r * std::exp(-0.25 * r * r);
}

double RadialFamily::location_score(double r) const {
  if (kind_ == RadialKind::pole) return 4.0 * r / (1.0 + r * r);
  return r;
}

double RadialFamily::first_moment() const { return kind_ == RadialKind::pole ? 0.5 : 1.0; }

double RadialFamily::modulus_density(double r) const {
  if (r < 0.0) return 0.0;
  return r * radial_function(r) / first_moment();
}

double RadialFamily::modulus_cdf(double r) const {
  if (r <= 0.0) return 0.0;
  if (kind_ == RadialKind::pole) return pole_modulus_cdf(r);
  return -std::expm1(-0.5 * r * r);
}

double RadialFamily::modulus_quantile(double u) const {
  if (kind_ == RadialKind::pole) return pole_modulus_quantile(u);
  if (!(u >= 0.0 && u < 1.0)) throw DomainError("quantile level must lie in [0, 1)");
  return std::sqrt(-2.0 * std::log1p(-u));
}

ScoreFunction RadialFamily::score() const {
  return kind_ == RadialKind::pole ? ScoreFunction::pole() : ScoreFunction::vdw();
}

double pole_density(Complex z) {
  const double s = 1.0 + std::norm(z);
  return 1.0 / (std::numbers::pi * s * s);
}

double pole_modulus_cdf(double r) {
  if (r <= 0.0) return 0.0;
  const double r2 = r * r;
  return r2 / (1.0 + r2);
}

double pole_modulus_quantile(double u) {
  if (!(u >= 0.0 && u < 1.0)) {
    throw DomainError("quantile level must lie in [0, 1), got " + std::to_string(u));
  }
  return std::sqrt(u / (1.0 - u));
}

// ---------------------------------------------------------------- signal

Complex shifted_pole_center(double rho, double alpha, Complex xi) {
  if (!(rho >= 0.0)) throw DomainError("SNR rho must be >= 0");
  if (!(alpha > 0.0 && alpha <= 2.0)) throw DomainError("alpha must lie in (0, 2]");
  return rho * boost::math::tgamma(1.0 + 2.0 / alpha) * xi;
}

ShiftedPoleDensity shifted_pole_density(Complex z, double rho, double alpha, Complex xi) {
  const Complex centre = shifted_pole_center(rho, alpha, xi);
  const double gain = rho * boost::math::tgamma(1.0 + 2.0 / alpha);
  const double s = 1.0 + std::norm(z);
  const double k1 = (std::norm(1.0 + std::conj(z) * xi) - std::norm(z - xi)) / (s * s * s);
  const double k2 = 1.0 / (std::numbers::pi * s * s);
  return {pole_density(z - centre), k2 + gain * k1 / std::numbers::pi};
}

// ---------------------------------------------------------------- quadrature checks

double radial_first_moment_quadrature(const RadialFamily& family) {
  return half_line_integral([&](double r) { return r * family.radial_function(r); });
}

double radial_fisher_integral_quadrature(const RadialFamily& family) {
  return half_line_integral([&](double r) {
    const double d = family.sqrt_radial_derivative(r);
    return d * d * r;
  });
}

double score_abs_moment_quadrature(const ScoreFunction& score, double power) {
  auto integrand = [&](double w) {
    const double v = w * w;
    return std::pow(std::abs(score.at_log_survival(v)), power) * 2.0 * w * std::exp(-v);
  };
  constexpr std::array<double, 10> breaks{0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 6.0, 9.0};
  return quad::integrate_panels(integrand, breaks, 1e-14).value;
}

double pole_score_abs_moment(double delta) {
  using boost::math::tgamma;
  return std::sqrt(std::numbers::pi) * std::pow(2.0, delta + 1.0) * tgamma(0.5 * delta + 2.0) /
         tgamma(0.5 * (delta + 5.0));
}

}  // namespace padeloc
