#include "su11/complexity.hpp"

#include <cmath>
#include <numbers>

namespace su11 {

namespace {

constexpr double kPi = std::numbers::pi;

struct BoundEval {
  double value = 0.0;
  bool singular = false;
  bool small_theta = false;
};

// Shared evaluator for C1 (corrected = false) and C2 (corrected = true);
// the correction multiplies 4 r^2 by (1 + theta^2).
BoundEval evaluate_bound(double r, double theta_raw, bool corrected) {
  BoundEval out;
  const double th = reduce_rotation_angle(theta_raw);
  const double factor = corrected ? 1.0 + th * th : 1.0;
  if (std::abs(th) < kThetaSwitch) {
    out.small_theta = th != 0.0;
    out.value = 2.0 * std::sqrt(th * th + r * r * factor);
    return out;
  }
  const double s2 = std::sin(2.0 * th);
  out.singular = std::abs(s2) < kSinTol;
  const double term = r == 0.0 ? 0.0 : 4.0 * r * r * factor / (s2 * s2);
  out.value = 2.0 * std::abs(th) * std::sqrt(1.0 + term);
  return out;
}

double depth_terms(double r, double phi, double theta_raw, double sin_weight) {
  const double two_r_sin = std::abs(2.0 * r * std::sin(phi));
  const double two_r_cos = std::abs(2.0 * r * std::cos(phi));
  const double rot = std::abs(2.0 * reduce_rotation_angle(theta_raw));
  return sin_weight * two_r_sin + two_r_cos + rot;
}

}  // namespace

double reduce_rotation_angle(double theta) {
  double t = std::remainder(theta, kPi);
  if (t <= -0.5 * kPi) t += kPi;
  return t;
}

double c1_bound(const SqueezeRotationParams& p) {
  return evaluate_bound(p.r, p.theta, false).value;
}

double c1_bound_bogoliubov(const BogoliubovPair& b) {
  return evaluate_bound(std::asinh(std::abs(b.beta)), -std::arg(b.alpha), false).value;
}

double c2_bound(const SqueezeRotationParams& p) {
  return evaluate_bound(p.r, p.theta, true).value;
}

double gate_depth_set1(const SqueezeRotationParams& p) {
  return depth_terms(p.r, p.phi, p.theta, 1.0);
}

double gate_depth_set2(const SqueezeRotationParams& p) {
  return depth_terms(p.r, p.phi, p.theta, 2.0);
}

ComplexityReport report_from_params(const SqueezeRotationParams& p) {
  ComplexityReport rep;
  const BoundEval c1 = evaluate_bound(p.r, p.theta, false);
  rep.c1_bound = c1.value;
  rep.c2_bound = evaluate_bound(p.r, p.theta, true).value;
  rep.gate_depth_set1 = gate_depth_set1(p);
  rep.gate_depth_set2 = gate_depth_set2(p);
  rep.singular_theta = c1.singular;
  rep.small_theta_used = c1.small_theta;
  const double th = std::abs(reduce_rotation_angle(p.theta));
  rep.leading_order_reliable =
      th < kThetaSwitch ? p.r < 0.1 : p.r < 0.1 * th;
  return rep;
}

ComplexityReport full_report(const BogoliubovPair& b) {
  return report_from_params(params_from_bogoliubov(b));
}

}  // namespace su11
