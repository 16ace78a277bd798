#pragma once

// su(1,1) generator algebra in the (O1, O2, O3) basis,
//
//   [O1, O2] = -i O3,   [O1, O3] = -i O2,   [O2, O3] = +i O1,
//
// together with a faithful 2x2 matrix representation that serves as an
// exact oracle for group-element composition, and truncated
// Baker-Campbell-Hausdorff combination of exponents.

#include <Eigen/Dense>

#include <array>
#include <complex>

namespace su11 {

using Complex = std::complex<double>;
using LieVector = Eigen::Vector3d;   // coefficients of (O1, O2, O3)
using RepMatrix = Eigen::Matrix2cd;  // 2x2 representation

// Structure constants f_IJ^K defined by [O_I, O_J] = i f_IJ^K O_K,
// antisymmetric in (I, J); indexed as f[I][J][K].
using StructureConstants = std::array<std::array<std::array<double, 3>, 3>, 3>;
const StructureConstants& structure_constants();

// Coefficients of -i[A, B] in the generator basis: c^K = f_IJ^K a^I b^J.
LieVector bracket(const LieVector& a, const LieVector& b);

// Representation matrices M_I satisfying [M_I, M_J] = i f_IJ^K M_K.
const std::array<RepMatrix, 3>& rep_matrices();

// Hyperbolic directions of sl(2,R) grow like exp(|x|/2); exponents with
// ||x|| beyond this documented bound are rejected with std::range_error.
inline constexpr double kRepExpRange = 50.0;

// exp(-i x^I M_I) via the closed form for traceless 2x2 exponents.
RepMatrix rep_exponential(const LieVector& x);

// Principal matrix logarithm: eigendecomposition when the eigenvalues are
// separated, inverse scaling-and-squaring otherwise.
RepMatrix rep_log(const RepMatrix& u);

// Inverts A = -i z^I M_I for z (real parts; exact when A lies in the algebra).
LieVector lie_coefficients(const RepMatrix& a);

// Coefficients z of the truncated Z in e^X e^Y = e^Z, where X = -i x.O and
// Y = -i y.O.  order 1 gives x + y; order 2 adds bracket(x, y)/2.
LieVector bch_compose(const LieVector& x, const LieVector& y, int order);

// Frobenius norm of rep_exponential(bch_compose(x, y, order)) minus the
// exact product rep_exponential(x) * rep_exponential(y).
double bch_residual(const LieVector& x, const LieVector& y, int order);

}  // namespace su11
