#pragma once

// Radial families, rank scores and their efficiency constants for bivariate
// spherical location problems.
//
// A spherical law on R^2 with radial function f has modulus density
// g(r) = r f(r) / nu_1, nu_1 = int_0^inf r f(r) dr, and CDF G(r). Its optimal
// rank score is J(u) = phi(G^-1(u)) with phi = -2 (f^{1/2})' / f^{1/2}.
//
//   pole family      f(r) = (1 + r^2)^-2   J(u) = 4 sqrt(u (1 - u))
//   Gaussian family  f(r) = exp(-r^2/2)   J(u) = sqrt(2 log(1 / (1 - u)))

#include <complex>
#include <string_view>

namespace padeloc {

using Complex = std::complex<double>;

enum class ScoreKind { pole, vdw };

class ScoreFunction {
 public:
  static constexpr ScoreFunction pole() { return ScoreFunction(ScoreKind::pole); }
  static constexpr ScoreFunction vdw() { return ScoreFunction(ScoreKind::vdw); }

  constexpr ScoreKind kind() const { return kind_; }
  /// "pole_score" or "vdw".
  std::string_view label() const;

  /// J(u) for u in (0, 1); DomainError otherwise. Not monotone for the pole
  /// score (J(u) = J(1 - u)).
  double operator()(double u) const;

  /// J at u = 1 - exp(-v), v >= 0. Keeps full precision where u rounds to 1.
  double at_log_survival(double v) const;

  /// int_0^1 J^2 du: 8/3 (pole), 2 (vdw).
  constexpr double second_moment() const { return kind_ == ScoreKind::pole ? 8.0 / 3.0 : 2.0; }

  friend constexpr bool operator==(ScoreFunction, ScoreFunction) = default;

 private:
  constexpr explicit ScoreFunction(ScoreKind kind) : kind_(kind) {}
  ScoreKind kind_;
};

enum class RadialKind { pole, gaussian };

class RadialFamily {
 public:
  static constexpr RadialFamily pole() { return RadialFamily(RadialKind::pole); }
  static constexpr RadialFamily gaussian() { return RadialFamily(RadialKind::gaussian); }

  constexpr RadialKind kind() const { return kind_; }
  std::string_view label() const;

  double radial_function(double r) const;           ///< f(r)
  double sqrt_radial_derivative(double r) const;    ///< (f^{1/2})'(r)
  double location_score(double r) const;            ///< -2 (f^{1/2})' / f^{1/2}
  double first_moment() const;                      ///< nu_1, closed form
  double modulus_density(double r) const;           ///< g(r)
  double modulus_cdf(double r) const;               ///< G(r)
  double modulus_quantile(double u) const;          ///< G^-1(u), u in [0, 1)
  ScoreFunction score() const;

 private:
  constexpr explicit RadialFamily(RadialKind kind) : kind_(kind) {}
  RadialKind kind_;
};

/// Null density of a pole of the [0, 1] approximant: 1 / (pi (1 + |z|^2)^2).
double pole_density(Complex z);
/// r^2 / (1 + r^2).
double pole_modulus_cdf(double r);
/// sqrt(u / (1 - u)); DomainError unless 0 <= u < 1.
double pole_modulus_quantile(double u);

/// J(u) with domain checking; same as score(u).
double score_eval(const ScoreFunction& score, double u);

/// C(J1, J2) = int_0^1 J1(u) J2(u) du, by Gauss-Kronrod after the change of
/// variable u = 1 - exp(-w^2), which removes the logarithmic endpoint of the
/// van der Waerden score. Absolute accuracy ~1e-13.
double cross_constant(const ScoreFunction& s1, const ScoreFunction& s2);

/// Pitman ARE of the test scored by `tested` against the one scored by
/// `reference` when the data follow the family whose optimal score is
/// `truth`: [C(t,f)^2 / C(t,t)] * [C(r,r) / C(r,f)^2].
double asymptotic_relative_efficiency(const ScoreFunction& tested, const ScoreFunction& reference,
                                      const ScoreFunction& truth);

/// ARE of the pole-score test against the van der Waerden test on pole data,
/// (8/3) * 2 / C(vdw, pole)^2 with C(vdw, pole) from quadrature.
double are_pole_vs_vdw();

/// Centre of the small-SNR approximation of the pole law under signal,
/// rho * Gamma(1 + 2/alpha) * xi, with rho = |c|^2 / E|e_k|^2 (complex noise power).
Complex shifted_pole_center(double rho, double alpha, Complex xi);

struct ShiftedPoleDensity {
  double approx;       ///< 1 / (pi (1 + |z - centre|^2)^2)
  double first_order;  ///< K2 + rho Gamma(1 + 2/alpha) K1 / pi
};

/// Both small-SNR approximations of the pole density at z, where
/// K1 = (|1 + conj(z) xi|^2 - |z - xi|^2) / (1 + |z|^2)^3 and
/// K2 = 1 / (pi (1 + |z|^2)^2).
ShiftedPoleDensity shifted_pole_density(Complex z, double rho, double alpha, Complex xi);

// Quadrature checks of the closed-form constants above.

/// int_0^inf r f(r) dr.
double radial_first_moment_quadrature(const RadialFamily& family);
/// int_0^inf [(f^{1/2})'(r)]^2 r dr; 1/3 for the pole family.
double radial_fisher_integral_quadrature(const RadialFamily& family);
/// int_0^1 |J(u)|^power du.
double score_abs_moment_quadrature(const ScoreFunction& score, double power);
/// sqrt(pi) 2^(delta+1) Gamma(delta/2 + 2) / Gamma((delta + 5)/2) = int |J_pole|^(2+delta).
double pole_score_abs_moment(double delta);

}  // namespace padeloc
