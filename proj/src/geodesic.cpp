#include "su11/geodesic.hpp"

#include <cmath>
#include <stdexcept>

namespace su11 {

namespace {

Eigen::LLT<PenaltyMatrix> checked_factorization(const PenaltyMatrix& g) {
  if (!g.isApprox(g.transpose(), 1e-12)) {
    throw std::domain_error("penalty matrix must be symmetric");
  }
  Eigen::LLT<PenaltyMatrix> llt(g);
  if (llt.info() != Eigen::Success) {
    throw std::domain_error("penalty matrix must be positive definite");
  }
  return llt;
}

LieVector rhs_lowered(const LieVector& v, const PenaltyMatrix& g) {
  const LieVector w = g * v;
  const auto& f = structure_constants();
  LieVector out = LieVector::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i] += f[i][j][k] * v[j] * w[k];
  return out;
}

}  // namespace

LieVector euler_arnold_rhs(const LieVector& v, const PenaltyMatrix& g) {
  return checked_factorization(g).solve(rhs_lowered(v, g));
}

LieVector TangentSolution::operator()(double s) const {
  const double c = std::cos(2.0 * v0[2] * s);
  const double sn = std::sin(2.0 * v0[2] * s);
  return {v0[0] * c - v0[1] * sn, v0[0] * sn + v0[1] * c, v0[2]};
}

TangentSolution tangent_solution(const LieVector& v0) { return {v0}; }

BoundaryInversion invert_boundary(const BoundaryTarget& target) {
  if (target.r < 0.0) {
    throw std::domain_error("invert_boundary: r must be >= 0");
  }
  BoundaryInversion out;
  const double th = target.theta;
  out.v[2] = -2.0 * th;
  if (target.r == 0.0) {
    out.singular_theta = std::abs(th) >= kThetaSwitch &&
                         std::abs(std::sin(2.0 * th)) < kSinTol;
    return out;
  }
  if (std::abs(th) < kThetaSwitch) {
    out.small_theta = th != 0.0;  // at theta == 0 the limit form is exact
    out.v[0] = 2.0 * target.r * std::sin(target.phi);
    out.v[1] = 2.0 * target.r * std::cos(target.phi);
    return out;
  }
  const double s2 = std::sin(2.0 * th);
  out.singular_theta = std::abs(s2) < kSinTol;
  const double c = 4.0 * th * target.r / s2;  // diverges on the singular set
  out.v[0] = -c * std::sin(2.0 * th - target.phi);
  out.v[1] = c * std::cos(2.0 * th - target.phi);
  return out;
}

double geodesic_complexity(const LieVector& v0, const PenaltyMatrix& g) {
  return std::sqrt(v0.dot(g * v0));
}

LieVector dyson_leading_unitary(const LieVector& v0, double s) {
  if (s < 0.0 || s > 1.0) {
    throw std::domain_error("dyson_leading_unitary: s must lie in [0,1]");
  }
  const double v1 = v0[0], v2 = v0[1], v3 = v0[2];
  if (std::abs(v3) < 1e-7) {
    // sin(2 s v3)/(2 v3) -> s and sin^2(s v3)/v3 -> s^2 v3 + O(v3^3)
    const double q = s * s * v3;
    return {s * v1 - v2 * q, s * v2 + v1 * q, s * v3};
  }
  const double half = std::sin(2.0 * s * v3) / (2.0 * v3);
  const double sq = std::sin(s * v3);
  const double w = sq * sq / v3;
  return {v1 * half - v2 * w, v2 * half + v1 * w, s * v3};
}

std::vector<LieVector> integrate_euler_arnold(const LieVector& v0,
                                              const PenaltyMatrix& g,
                                              int steps) {
  if (steps < 1) throw std::invalid_argument("integrate_euler_arnold: steps must be >= 1");
  const auto llt = checked_factorization(g);
  const auto rhs = [&](const LieVector& v) { return llt.solve(rhs_lowered(v, g)).eval(); };
  const double h = 1.0 / steps;
  std::vector<LieVector> out;
  out.reserve(steps + 1);
  LieVector v = v0;
  out.push_back(v);
  for (int i = 0; i < steps; ++i) {
    const LieVector k1 = rhs(v);
    const LieVector k2 = rhs(v + 0.5 * h * k1);
    const LieVector k3 = rhs(v + 0.5 * h * k2);
    const LieVector k4 = rhs(v + h * k3);
    v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    out.push_back(v);
  }
  return out;
}

}  // namespace su11
