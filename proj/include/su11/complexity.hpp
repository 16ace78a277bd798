#pragma once

// Closed-form complexity measures for the squeeze/rotation target unitary:
// the leading-order geodesic upper bound C1, the commutator-corrected bound
// C2, and gate-counting depths for the two gate sets of the construction.
// Gate depths are reported as eps*D; the gate scale eps is never fixed.
//
// The bounds are even in theta and invariant under theta -> theta + pi
// windings only through the principal choice below, so every measure first
// reduces the rotation angle to (-pi/2, pi/2].  Larger windings carry a
// strictly larger v3 and hence a longer leading-order curve.

#include "su11/bogoliubov.hpp"
#include "su11/geodesic.hpp"

namespace su11 {

// Principal winding: theta modulo pi, mapped into (-pi/2, pi/2].
double reduce_rotation_angle(double theta);

struct ComplexityReport {
  double c1_bound = 0.0;
  double c2_bound = 0.0;
  double gate_depth_set1 = 0.0;  // eps*D for gates {g1, g2, g3}
  double gate_depth_set2 = 0.0;  // eps*D for the product-gate set
  bool singular_theta = false;   // |sin 2theta| < kSinTol with theta away from 0
  bool small_theta_used = false; // theta -> 0 closed-form limit used (theta != 0)
  // Leading-order reliability, r << theta, taken as r < 0.1 |theta|
  // (or r < 0.1 when theta is below the switch).
  bool leading_order_reliable = false;
};

// 2 sqrt(theta^2 (1 + 4 r^2 csc^2(2 theta))); 2 sqrt(theta^2 + r^2) below
// the theta switch.  Singular points evaluate to the (possibly infinite)
// closed-form value; nothing is clamped.
double c1_bound(const SqueezeRotationParams& p);

// Same bound written in Bogoliubov variables,
// 2 sqrt(arg(alpha)^2 (1 + 4 arsinh^2|beta| csc^2(2 arg alpha))).
double c1_bound_bogoliubov(const BogoliubovPair& b);

// Commutator-corrected bound: 4 r^2 -> 4 r^2 (1 + theta^2).  Satisfies
// c2 >= c1 with equality only at theta = 0 or r = 0.
double c2_bound(const SqueezeRotationParams& p);

// |2 r sin phi| + |2 r cos phi| + |2 theta|
double gate_depth_set1(const SqueezeRotationParams& p);

// |4 r sin phi| + |2 r cos phi| + |2 theta|; exceeds set 1 by |2 r sin phi|.
double gate_depth_set2(const SqueezeRotationParams& p);

ComplexityReport report_from_params(const SqueezeRotationParams& p);
ComplexityReport full_report(const BogoliubovPair& b);

}  // namespace su11
