#include "su11/bogoliubov.hpp"

#include <cmath>

namespace su11 {

namespace {
const Complex kImag(0.0, 1.0);
}

Complex wronskian_residual(const ModeState& m) {
  return m.f * std::conj(m.g) - std::conj(m.f) * m.g - kImag;
}

double normalization_residual(const BogoliubovPair& b) {
  return std::norm(b.alpha) - std::norm(b.beta) - 1.0;
}

BogoliubovPair bogoliubov_from_modes(const ModeState& in_mode,
                                     const ModeState& out_mode, double tol) {
  if (std::abs(in_mode.t - out_mode.t) >
      1e-9 * std::max(1.0, std::abs(in_mode.t))) {
    throw std::invalid_argument("bogoliubov_from_modes: mode states must be at equal times");
  }
  if (std::abs(wronskian_residual(in_mode)) > tol) {
    throw WronskianError("bogoliubov_from_modes: in mode violates the Wronskian condition");
  }
  if (std::abs(wronskian_residual(out_mode)) > tol) {
    throw WronskianError("bogoliubov_from_modes: out mode violates the Wronskian condition");
  }
  BogoliubovPair b;
  b.alpha = -kImag * (out_mode.f * std::conj(in_mode.g) -
                      std::conj(in_mode.f) * out_mode.g);
  b.beta = kImag * (out_mode.f * in_mode.g - in_mode.f * out_mode.g);
  return b;
}

SqueezeRotationParams params_from_bogoliubov(const BogoliubovPair& b) {
  SqueezeRotationParams p;
  const double ab = std::abs(b.beta);
  p.r = std::asinh(ab);
  p.theta = -std::arg(b.alpha);
  p.phi = ab == 0.0 ? 0.0 : -std::arg(b.alpha * b.beta);
  return p;
}

BogoliubovPair bogoliubov_from_params(const SqueezeRotationParams& p) {
  if (p.r < 0.0) {
    throw std::domain_error("bogoliubov_from_params: r must be >= 0");
  }
  BogoliubovPair b;
  b.alpha = std::polar(std::cosh(p.r), -p.theta);
  b.beta = std::polar(std::sinh(p.r), -(p.phi - p.theta));
  return b;
}

double particle_number(const BogoliubovPair& b) { return std::norm(b.beta); }

}  // namespace su11
