#include "padeloc/pade.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "padeloc/errors.hpp"

namespace padeloc {

namespace {

constexpr double kMaxCondition = 1e12;
constexpr double kTieTolerance = 1e-12;

// Principal argument in (-pi, pi]; values within rounding of the negative
// real axis from below count as +pi.
double principal_arg(const Complex& z) {
  const double a = std::arg(z);
  return a < -std::numbers::pi + kTieTolerance ? std::numbers::pi : a;
}

void sort_roots(std::vector<Complex>& roots) {
  std::sort(roots.begin(), roots.end(), [](const Complex& x, const Complex& y) {
    const double ax = std::abs(x);
    const double ay = std::abs(y);
    if (std::abs(ax - ay) > kTieTolerance * std::max(ax, ay)) return ax > ay;
    return principal_arg(x) < principal_arg(y);
  });
}

void check_conditioning(const Eigen::MatrixXcd& m0) {
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m0);
  const auto& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (!(smin > 0.0) || smax / smin > kMaxCondition) {
    throw DegeneratePencilError("pencil matrix M0 is singular or ill-conditioned (condition " +
                                std::to_string(smin > 0.0 ? smax / smin : HUGE_VAL) + ")");
  }
}

// Roots of det(M1 - lambda M0) for 2x2 blocks:
// det(M0) lambda^2 - t lambda + det(M1) = 0.
std::vector<Complex> quadratic_pencil_roots(const Eigen::MatrixXcd& m1,
                                            const Eigen::MatrixXcd& m0) {
  const Complex qa = m0(0, 0) * m0(1, 1) - m0(0, 1) * m0(1, 0);
  const Complex qb = m1(0, 0) * m0(1, 1) + m1(1, 1) * m0(0, 0) - m1(0, 1) * m0(1, 0) -
                     m1(1, 0) * m0(0, 1);
  const Complex qc = m1(0, 0) * m1(1, 1) - m1(0, 1) * m1(1, 0);
  const Complex disc = std::sqrt(qb * qb - 4.0 * qa * qc);
  // Pick the sign that avoids cancellation, then use Vieta for the other root.
  const Complex q = 0.5 * (std::real(std::conj(qb) * disc) >= 0.0 ? qb + disc : qb - disc);
  if (q == Complex{}) return {Complex{}, Complex{}};
  return {q / qa, qc / q};
}

double vector_norm(std::span<const Complex> v) {
  double scale = 0.0;
  for (const auto& x : v) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x / scale);
  return scale * std::sqrt(s);
}

std::vector<Complex> normalized(std::span<const Complex> v) {
  const double nrm = vector_norm(v);
  std::vector<Complex> out(v.begin(), v.end());
  if (nrm > 0.0) {
    for (auto& x : out) x /= nrm;
  }
  return out;
}

}  // namespace

std::vector<Complex> toeplitz_inverse_series(std::span<const Complex> a) {
  if (a.empty()) return {};
  if (a[0] == Complex{}) {
    throw SingularSeriesError("leading coefficient a_0 is zero; 1/F has no power series");
  }
  const Complex inv0 = 1.0 / a[0];
  std::vector<Complex> b(a.size());
  b[0] = inv0;
  for (std::size_t k = 1; k < a.size(); ++k) {
    Complex acc{};
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * b[k - j];
    b[k] = -inv0 * acc;
  }
  return b;
}

HankelPencil build_hankel_pencil(std::span<const Complex> series, PencilKind kind) {
  const std::size_t n = series.size();
  if (n < 2 || n % 2 != 0) {
    throw ShapeError("Hankel pencil needs an even series length >= 2, got " + std::to_string(n));
  }
  const std::size_t p = n / 2;
  std::size_t order = p;
  std::size_t offset = 0;
  if (kind == PencilKind::zeros) {
    if (p < 2) throw ShapeError("zero pencil needs order p >= 2");
    order = p - 1;
    offset = 2;
  }
  const auto dim = static_cast<Eigen::Index>(order);
  HankelPencil pencil{Eigen::MatrixXcd(dim, dim), Eigen::MatrixXcd(dim, dim)};
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const auto k = offset + static_cast<std::size_t>(i + j);
      pencil.m0(i, j) = series[k];
      pencil.m1(i, j) = series[k + 1];
    }
  }
  return pencil;
}

std::vector<Complex> pencil_eigenvalues(const HankelPencil& pencil) {
  const auto& m0 = pencil.m0;
  const auto& m1 = pencil.m1;
  if (m0.rows() != m0.cols() || m1.rows() != m0.rows() || m1.cols() != m0.cols() ||
      m0.rows() == 0) {
    throw ShapeError("pencil matrices must be square, non-empty and of equal size");
  }
  check_conditioning(m0);

  std::vector<Complex> roots;
  switch (m0.rows()) {
    case 1:
      roots = {m1(0, 0) / m0(0, 0)};
      break;
    case 2:
      roots = quadratic_pencil_roots(m1, m0);
      break;
    default: {
      const Eigen::MatrixXcd reduced = m0.partialPivLu().solve(m1);
      const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(reduced, false);
      if (solver.info() != Eigen::Success) {
        throw NumericalError("complex eigensolver did not converge on the reduced pencil");
      }
      const auto& ev = solver.eigenvalues();
      roots.assign(ev.data(), ev.data() + ev.size());
    }
  }
  for (const auto& r : roots) {
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) {
      throw DegeneratePencilError("pencil produced a non-finite eigenvalue");
    }
  }
  sort_roots(roots);
  return roots;
}

std::vector<Complex> vandermonde_residuals(std::span<const Complex> nodes,
                                           std::span<const Complex> rhs) {
  const std::size_t q = nodes.size();
  if (rhs.size() != q) {
    throw ShapeError("Vandermonde system needs as many right-hand values as nodes");
  }
  if (q == 0) return {};
  double max_node = 0.0;
  for (const auto& z : nodes) max_node = std::max(max_node, std::abs(z));
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = i + 1; j < q; ++j) {
      if (std::abs(nodes[i] - nodes[j]) <= 1e-12 * max_node) {
        throw DegenerateNodesError("Vandermonde nodes " + std::to_string(i) + " and " +
                                   std::to_string(j) + " coalesce");
      }
    }
  }
  if (q == 1) return {rhs[0]};

  const auto dim = static_cast<Eigen::Index>(q);
  Eigen::MatrixXcd v(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    Complex power{1.0, 0.0};
    for (Eigen::Index k = 0; k < dim; ++k) {
      v(k, j) = power;
      power *= nodes[static_cast<std::size_t>(j)];
    }
  }
  const Eigen::VectorXcd b = Eigen::Map<const Eigen::VectorXcd>(rhs.data(), dim);
  const Eigen::VectorXcd x = v.fullPivLu().solve(b);
  return {x.data(), x.data() + x.size()};
}

PadeParameters extract_pade_parameters(std::span<const Complex> series) {
  const std::size_t n = series.size();
  if (n < 2 || n % 2 != 0) {
    throw ShapeError("series length must be even and >= 2, got " + std::to_string(n));
  }
  double max_abs = 0.0;
  for (const auto& x : series) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
      throw DomainError("series contains a non-finite entry");
    }
    max_abs = std::max(max_abs, std::abs(x));
  }
  if (max_abs == 0.0) throw DegeneratePencilError("series is identically zero");

  int exponent = 0;
  std::frexp(max_abs, &exponent);
  std::vector<Complex> a(series.begin(), series.end());
  for (auto& x : a) x = {std::ldexp(x.real(), -exponent), std::ldexp(x.imag(), -exponent)};

  const std::size_t p = n / 2;
  PadeParameters out;
  out.poles = pencil_eigenvalues(build_hankel_pencil(a, PencilKind::poles));

  const std::span<const Complex> head(a.data(), p);
  std::vector<Complex> c = vandermonde_residuals(out.poles, head);
  out.normalized_residuals = normalized(c);
  for (auto& x : c) x = {std::ldexp(x.real(), exponent), std::ldexp(x.imag(), exponent)};
  out.residuals = std::move(c);

  if (p >= 2) {
    const auto b = toeplitz_inverse_series(a);
    out.zeros = pencil_eigenvalues(build_hankel_pencil(b, PencilKind::zeros));
    // Zero residuals follow b_{k+2} = sum_j d_j zeta_j^k, k = 0..p-2.
    const std::span<const Complex> b_tail(b.data() + 2, p - 1);
    std::vector<Complex> d = vandermonde_residuals(out.zeros, b_tail);
    out.normalized_zero_residuals = normalized(d);
    for (auto& x : d) x = {std::ldexp(x.real(), -exponent), std::ldexp(x.imag(), -exponent)};
    out.zero_residuals = std::move(d);
  }
  return out;
}

std::string_view to_string(PadeStatistic s) {
  switch (s) {
    case PadeStatistic::pole: return "pole";
    case PadeStatistic::zero: return "zero";
    case PadeStatistic::res_pole: return "res_pole";
    case PadeStatistic::res_zero: return "res_zero";
  }
  return "?";
}

std::string_view to_string(SelectionRule r) {
  return r == SelectionRule::largest_modulus ? "largest_modulus" : "first";
}

Eigen::Vector2d select_statistic(const PadeParameters& params, PadeStatistic kind,
                                 SelectionRule rule) {
  const bool on_zeros = kind == PadeStatistic::zero || kind == PadeStatistic::res_zero;
  const auto& nodes = on_zeros ? params.zeros : params.poles;
  if (nodes.empty()) {
    throw UnavailableStatisticError(std::string(to_string(kind)) +
                                    " statistic needs Pade order p >= 2");
  }
  std::size_t idx = 0;  // entries are stored by descending modulus
  if (rule == SelectionRule::first) {
    for (std::size_t j = 1; j < nodes.size(); ++j) {
      if (principal_arg(nodes[j]) < principal_arg(nodes[idx])) idx = j;
    }
  }
  Complex z;
  switch (kind) {
    case PadeStatistic::pole:
    case PadeStatistic::zero:
      z = nodes[idx];
      break;
    case PadeStatistic::res_pole:
      z = params.normalized_residuals.at(idx);
      break;
    case PadeStatistic::res_zero:
      z = params.normalized_zero_residuals.at(idx);
      break;
  }
  return {z.real(), z.imag()};
}

}  // namespace padeloc
