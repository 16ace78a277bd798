#pragma once

// Euler-Arnold geodesics on the su(1,1) group manifold with a penalty
// metric, the boundary-condition inversion for squeeze/rotation targets,
// and the geodesic-length functional.  Closed forms assume the identity
// penalty matrix; the RK4 propagator handles generic symmetric
// positive-definite metrics for experimentation.

#include "su11/algebra.hpp"

#include <vector>

namespace su11 {

using PenaltyMatrix = Eigen::Matrix3d;

inline constexpr double kThetaSwitch = 1e-4;  // analytic theta -> 0 branch
inline constexpr double kSinTol = 1e-8;       // |sin 2theta| below this is flagged singular

// dV/ds solved from G_IJ dV^J/ds = f_IJ^K V^J G_KL V^L.
// G must be symmetric positive definite.
LieVector euler_arnold_rhs(const LieVector& v, const PenaltyMatrix& g);

// Closed-form tangent vector along the identity-metric geodesic:
//   V1(s) = v1 cos(2 v3 s) - v2 sin(2 v3 s)
//   V2(s) = v1 sin(2 v3 s) + v2 cos(2 v3 s)
//   V3(s) = v3
struct TangentSolution {
  LieVector v0;
  LieVector operator()(double s) const;
};
TangentSolution tangent_solution(const LieVector& v0);

// Target group element exp(-2ir(sin(phi) O1 + cos(phi) O2)) exp(2i theta O3).
struct BoundaryTarget {
  double r = 0.0;      // squeeze magnitude, >= 0
  double phi = 0.0;    // squeeze angle (radians)
  double theta = 0.0;  // rotation angle (radians)
};

struct BoundaryInversion {
  LieVector v = LieVector::Zero();
  bool singular_theta = false;  // |sin 2theta| < kSinTol away from theta = 0
  bool small_theta = false;     // theta -> 0 limit branch was used
};

// Initial tangent vector whose leading-order curve reaches the target at s=1:
//   v3 = -2 theta
//   v1 = -4 theta r csc(2 theta) sin(2 theta - phi)
//   v2 = +4 theta r csc(2 theta) cos(2 theta - phi)
// For |theta| < kThetaSwitch the analytic limit v1 = 2r sin(phi),
// v2 = 2r cos(phi) is used.  Near theta = +-pi/2 the inversion is not valid;
// the evaluated (possibly infinite) value is returned with the flag set.
BoundaryInversion invert_boundary(const BoundaryTarget& target);

// sqrt(v.G.v): the length of the constant-speed curve from the identity.
double geodesic_complexity(const LieVector& v0,
                           const PenaltyMatrix& g = PenaltyMatrix::Identity());

// Exponent coefficients u^I(s) of the leading-order unitary
// U(s) = exp(-i u^I(s) O_I) obtained by dropping path ordering:
//   u1 = v1 sin(2 s v3)/(2 v3) - v2 sin^2(s v3)/v3
//   u2 = v2 sin(2 s v3)/(2 v3) + v1 sin^2(s v3)/v3
//   u3 = s v3
// with the v3 -> 0 limit (s v1, s v2, s v3).
LieVector dyson_leading_unitary(const LieVector& v0, double s);

// Fixed-step RK4 propagation of the Euler-Arnold equation over s in [0,1]
// for a generic penalty matrix; returns steps+1 samples including both
// endpoints.  No closed-form counterpart is claimed for non-identity G.
std::vector<LieVector> integrate_euler_arnold(const LieVector& v0,
                                              const PenaltyMatrix& g,
                                              int steps);

}  // namespace su11
