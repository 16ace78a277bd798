#pragma once

// Truncated Fock-space oracle: dense matrices for a, a^dag and the
// generators
//
//   O1 = (a^2 + a^dag^2)/4,  O2 = i(a^2 - a^dag^2)/4,  O3 = (a a^dag + a^dag a)/4,
//
// with operator-level checks of the squeeze and rotation transformation
// laws and of the combined squeeze-rotation exponent.
//
// Truncation error lives at the top of the ladder.  Commutator checks drop
// the top 4 levels.  Squeeze-law checks keep only the bottom third: the
// squeezed image of level m has number spread ~ sinh(2r) m, so a two-thirds
// buffer is required before the interior residual reaches the truncation
// floor.  (A one-third buffer leaves an O(1) reflection error already at
// r = 0.3.)  Judge validity at larger r with truncation_tail_weight.

#include "su11/algebra.hpp"
#include "su11/bogoliubov.hpp"

#include <Eigen/Dense>

namespace su11 {

struct FockConfig {
  int dim = 60;            // truncation dimension, >= 8
  double tail_tol = 1e-6;  // admissible weight in the top 10% of levels
};

struct FockOperators {
  Eigen::MatrixXcd a, adag, o1, o2, o3;
};

FockOperators fock_operators(const FockConfig& cfg);

int commutator_interior(int dim);  // dim - 4
int squeeze_interior(int dim);     // dim / 3

// Operator-norm residual of commutator pair `pair_index` on the interior
// block: 0 -> [O1,O2]+iO3, 1 -> [O1,O3]+iO2, 2 -> [O2,O3]-iO1.
double commutator_residual(const FockOperators& ops, int pair_index);

// || P (S^dag a S - (a cosh r - e^{i phi} a^dag sinh r)) P ||, P projecting
// onto the bottom squeeze_interior(dim) levels and S = exp(J) built by a
// dense matrix exponential of J = (r/2)(e^{-i phi} a^2 - e^{i phi} a^dag^2).
double verify_squeeze_law(double r, double phi, const FockConfig& cfg);

// || P (R^dag a R - e^{i theta} a) P || with R = exp(2 i theta O3).
double verify_rotation_law(double theta, const FockConfig& cfg);

// || P (S R - exp(-i z.O)) P || with z the BCH combination (at `order`) of
// the squeeze exponent x = (2r sin phi, 2r cos phi, 0) and the rotation
// exponent y = (0, 0, -2 theta).
double verify_target_factorization(const SqueezeRotationParams& p,
                                   const FockConfig& cfg, int order = 2);

// Weight of S(r, 0)|m>, m the top interior level, inside the top 10% of
// levels; values above cfg.tail_tol mean truncation dominates the residuals.
double truncation_tail_weight(double r, const FockConfig& cfg);

}  // namespace su11
