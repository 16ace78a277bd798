#pragma once

// Fixed-step classical RK4 integration of the mode equation
//
//   f''(t) + omega^2(t) f(t) = 0
//
// as a first-order system in (f, g = f'), four real components, with
// Wronskian-drift reporting and an optional step-halving (Richardson)
// global error estimate.  The step count is fixed up front from the
// config, so identical configs give identical trajectories.

#include "su11/bogoliubov.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace su11 {

struct StepSizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// step * |omega| above this aborts the run: the oscillation would be
// under-resolved and the result untrustworthy.
inline constexpr double kStepGuard = 0.1;

struct IntegratorConfig {
  double t_start = 0.0;
  double t_end = 1.0;
  double step = 1e-3;       // upper bound; the actual step divides the span
  bool richardson = false;  // also run at half step for an error estimate
};

struct IntegrationResult {
  ModeState state;
  double wronskian_drift = 0.0;                // |f g* - f* g - i| at t_end
  std::optional<double> error_estimate;        // ~ global error of `state`
};

namespace detail {

template <class F>
ModeState rk4_run(F&& omega_sq, double t0, double t1, long n, ModeState m) {
  const double h = (t1 - t0) / double(n);
  const double guard = kStepGuard * kStepGuard / (h * h);
  Complex f = m.f;
  Complex g = m.g;
  for (long i = 0; i < n; ++i) {
    const double t = t0 + double(i) * h;
    const double w1 = omega_sq(t);
    const double w2 = omega_sq(t + 0.5 * h);
    const double w3 = omega_sq(t + h);
    if (std::abs(w1) > guard || std::abs(w2) > guard || std::abs(w3) > guard) {
      throw StepSizeError("integrate_mode: step * |omega| exceeds the resolution guard");
    }
    const Complex kf1 = g, kg1 = -w1 * f;
    const Complex kf2 = g + 0.5 * h * kg1, kg2 = -w2 * (f + 0.5 * h * kf1);
    const Complex kf3 = g + 0.5 * h * kg2, kg3 = -w2 * (f + 0.5 * h * kf2);
    const Complex kf4 = g + h * kg3, kg4 = -w3 * (f + h * kf3);
    f += (h / 6.0) * (kf1 + 2.0 * kf2 + 2.0 * kf3 + kf4);
    g += (h / 6.0) * (kg1 + 2.0 * kg2 + 2.0 * kg3 + kg4);
  }
  return {f, g, t1};
}

}  // namespace detail

template <class F>
IntegrationResult integrate_mode(F&& omega_sq, const IntegratorConfig& cfg,
                                 const ModeState& init) {
  if (!(cfg.t_start < cfg.t_end)) {
    throw std::invalid_argument("integrate_mode: t_start must precede t_end");
  }
  const double span = cfg.t_end - cfg.t_start;
  if (!(cfg.step > 0.0) || cfg.step > span) {
    throw std::invalid_argument("integrate_mode: step must lie in (0, t_end - t_start]");
  }
  if (std::abs(init.t - cfg.t_start) > 1e-9 * std::max(1.0, std::abs(cfg.t_start))) {
    throw std::invalid_argument("integrate_mode: initial state is not at t_start");
  }
  if (std::abs(wronskian_residual(init)) > kWronskianTol) {
    throw WronskianError("integrate_mode: initial state violates the Wronskian condition");
  }
  const long n = static_cast<long>(std::ceil(span / cfg.step - 1e-12));
  IntegrationResult out;
  out.state = detail::rk4_run(omega_sq, cfg.t_start, cfg.t_end, n, init);
  out.wronskian_drift = std::abs(wronskian_residual(out.state));
  if (cfg.richardson) {
    const ModeState fine = detail::rk4_run(omega_sq, cfg.t_start, cfg.t_end, 2 * n, init);
    const double diff = std::hypot(std::abs(out.state.f - fine.f),
                                   std::abs(out.state.g - fine.g));
    // |x_h - x_{h/2}| ~ (1 - 1/16) err_h for a 4th-order method.
    out.error_estimate = diff * 16.0 / 15.0;
  }
  return out;
}

// Evolves `init` through the profile and expands the result in the
// reference "out" basis at t_end.
// The RK4 transfer matrix has determinant 1 - O((omega h)^6), so the evolved
// state carries a small Wronskian drift; the default tolerance budgets it.
inline constexpr double kOdeWronskianTol = 1e-8;

template <class F>
BogoliubovPair numeric_bogoliubov(F&& omega_sq, const IntegratorConfig& cfg,
                                  const ModeState& init,
                                  const ModeState& out_reference,
                                  double wronskian_tol = kOdeWronskianTol) {
  const IntegrationResult res = integrate_mode(omega_sq, cfg, init);
  return bogoliubov_from_modes(res.state, out_reference, wronskian_tol);
}

// de Sitter validation run: Bunch-Davies data propagated from
// tau = -100/k down to tau = -y_end/k and expanded with the Minkowski
// plane wave as the "in" mode, matching the closed-form coefficient roles.
// step_scale is the dimensionless step * max|omega| of the run.
BogoliubovPair desitter_numeric_bogoliubov(double k, double y_end,
                                           double step_scale = 0.005);

}  // namespace su11
