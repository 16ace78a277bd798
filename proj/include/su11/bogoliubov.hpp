#pragma once

// Mode-function bookkeeping and Bogoliubov-coefficient extraction for the
// time-dependent oscillator, plus the hyperbolic parametrization
//
//   alpha = e^{-i theta} cosh(r),   beta = e^{-i(phi - theta)} sinh(r),
//
// that links the dynamics to the geodesic boundary target.

#include <complex>
#include <stdexcept>

namespace su11 {

using Complex = std::complex<double>;

inline constexpr double kWronskianTol = 1e-10;

struct WronskianError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Position mode function f and its derivative g = df/dt at time t, subject
// to the Wronskian condition f g* - f* g = i.
struct ModeState {
  Complex f{0.0, 0.0};
  Complex g{0.0, 0.0};
  double t = 0.0;
};

// f g* - f* g - i; vanishes for a canonical mode pair.
Complex wronskian_residual(const ModeState& m);

struct BogoliubovPair {
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};
};

// |alpha|^2 - |beta|^2 - 1; vanishes for a canonical pair.  The residual of
// a double-precision pair scales like eps * |beta|^2, so large-|beta| checks
// should be read relative to 1 + |beta|^2.
double normalization_residual(const BogoliubovPair& b);

// alpha = -i(ft g* - f* gt), beta = i(ft g - f gt) with (f, g) the "in" and
// (ft, gt) the "out" mode pair, both at the same time.  Inputs violating the
// Wronskian condition beyond tol are rejected with WronskianError.
BogoliubovPair bogoliubov_from_modes(const ModeState& in_mode,
                                     const ModeState& out_mode,
                                     double tol = kWronskianTol);

struct SqueezeRotationParams {
  double r = 0.0;      // squeeze magnitude, >= 0
  double theta = 0.0;  // rotation angle, principal value in (-pi, pi]
  double phi = 0.0;    // squeeze angle, principal value in (-pi, pi]
};

// r = arsinh|beta|, theta = -arg(alpha), phi = -arg(alpha beta), all on
// principal branches; phi = 0 by convention when beta = 0.
SqueezeRotationParams params_from_bogoliubov(const BogoliubovPair& b);

// Reconstruction through the hyperbolic parametrization (round-trip oracle).
BogoliubovPair bogoliubov_from_params(const SqueezeRotationParams& p);

// n = |beta|^2.
double particle_number(const BogoliubovPair& b);

}  // namespace su11
