#pragma once

// Pade parameters of the Z-transform F(z) = sum_k a_k z^-k of a complex
// series of length n = 2p: the p poles of the [p-1, p] approximant, its
// p-1 zeros, residuals at both, and the residual directions c/|c|, d/|d|.
//
// Poles are the generalized eigenvalues of the Hankel pencil (U1, U0) built
// from a_0..a_{2p-1}. Zeros are the poles of the [p-2, p-1] approximant of
// 1/F, whose coefficients b solve the lower-triangular Toeplitz system
// T(a) b = e_1; their pencil is built from b_2..b_{2p-1}.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace padeloc {

using Complex = std::complex<double>;

struct HankelPencil {
  Eigen::MatrixXcd m1;  ///< shifted Hankel matrix (U1)
  Eigen::MatrixXcd m0;  ///< leading Hankel matrix (U0)

  std::size_t order() const { return static_cast<std::size_t>(m0.rows()); }
};

enum class PencilKind { poles, zeros };

struct PadeParameters {
  std::vector<Complex> poles;          ///< p entries
  std::vector<Complex> zeros;          ///< p-1 entries
  std::vector<Complex> residuals;      ///< c, paired with poles
  std::vector<Complex> zero_residuals; ///< d, paired with zeros
  std::vector<Complex> normalized_residuals;
  std::vector<Complex> normalized_zero_residuals;

  std::size_t order() const { return poles.size(); }
};

/// Coefficients of 1/F by forward substitution:
///   b_0 = 1/a_0,  b_k = -(1/a_0) sum_{j=1..k} a_j b_{k-j}.
/// Throws SingularSeriesError when a_0 == 0.
std::vector<Complex> toeplitz_inverse_series(std::span<const Complex> a);

/// kind == poles: `series` is a_0..a_{2p-1}, result is p x p.
/// kind == zeros: `series` is b_0..b_{2p-1} (p >= 2), result is (p-1) x (p-1)
/// with U0 = [b_{2+i+j}], U1 = [b_{3+i+j}].
HankelPencil build_hankel_pencil(std::span<const Complex> series, PencilKind kind);

/// Roots of det(M1 - lambda M0) = 0, sorted by descending modulus, ties
/// (relative 1e-12) by ascending principal argument. Closed forms for orders
/// 1 and 2; from order 3 on, eigenvalues of M0^-1 M1 (partial-pivot LU, then
/// Eigen's complex Schur-based eigensolver).
/// Throws DegeneratePencilError if cond_2(M0) > 1e12.
std::vector<Complex> pencil_eigenvalues(const HankelPencil& pencil);

/// x with sum_j x_j node_j^k = rhs_k for k = 0..q-1.
/// Throws DegenerateNodesError when two nodes are closer than
/// 1e-12 * max |node|.
std::vector<Complex> vandermonde_residuals(std::span<const Complex> nodes,
                                           std::span<const Complex> rhs);

/// Full pipeline. The input is first rescaled by a power of two so the
/// largest |a_k| lies in [0.5, 1); residuals are mapped back afterwards.
/// Poles, zeros and normalized residuals are therefore unaffected by the
/// magnitude of the data, which for alpha-stable noise spans hundreds of
/// decades.
PadeParameters extract_pade_parameters(std::span<const Complex> series);

enum class PadeStatistic { pole, zero, res_pole, res_zero };
enum class SelectionRule { largest_modulus, first };

std::string_view to_string(PadeStatistic s);
std::string_view to_string(SelectionRule r);

/// One bivariate point (Re, Im) per replicate.
///
/// largest_modulus takes the entry with the largest |.| and commutes with
/// rotations of the plane, so sphericity under the null carries over.
/// first takes the entry with the smallest principal argument; it is kept
/// as a contrast and is not rotation-equivariant.
/// Residual kinds return the normalized residual paired with the selected
/// pole (zero). Throws UnavailableStatisticError for zero kinds at p = 1.
Eigen::Vector2d select_statistic(const PadeParameters& params, PadeStatistic kind,
                                 SelectionRule rule);

}  // namespace padeloc
