#pragma once

// Concrete oscillator models: a frequency that jumps between two constant
// plateaus (sudden or smoothed) and the massless scalar-field mode on an
// expanding de Sitter background (conformal time tau < 0, y = -k tau > 0),
// as closed-form Bogoliubov generators.  Frequency-squared callables and
// closed-form mode states back the ODE oracle.

#include "su11/bogoliubov.hpp"
#include "su11/complexity.hpp"

#include <functional>
#include <vector>

namespace su11 {

struct SwitchedProfile {
  double omega_in = 1.0;
  double omega_out = 1.0;
};

// alpha = (s + 1/s)/2, beta = (s - 1/s)/2 with s = sqrt(omega_in/omega_out);
// both real, normalization exact.
BogoliubovPair switched_bogoliubov(const SwitchedProfile& p);

// 2 arsinh|beta| = 2 arsinh(sqrt(n)).
double switched_complexity(const SwitchedProfile& p);

struct DeSitterPoint {
  double y = 1.0;  // y = -k tau > 0
};

// csc^2(2 arg alpha) diverges here; the complexity peak location.
inline constexpr double kDeSitterPeak = 0.70710678118654752440;  // 1/sqrt(2)

// alpha(y) = 1 - 1/(2y^2) + i/y, beta(y) = e^{2iy}/(2y^2).
BogoliubovPair desitter_bogoliubov(const DeSitterPoint& pt);

double desitter_alpha_abs(const DeSitterPoint& pt);  // sqrt(1 + 1/(4y^4))
double desitter_beta_abs(const DeSitterPoint& pt);   // 1/(2y^2)

// (4y^4 + 1)^2 / (16 y^2 (1 - 2y^2)^2); +infinity within 1e-12 of the pole.
double desitter_csc_sq_arg_alpha(const DeSitterPoint& pt);

// Super-Hubble asymptote 4 |ln y|.
double desitter_ir_asymptote(const DeSitterPoint& pt);

struct DeSitterSample {
  double y = 0.0;
  BogoliubovPair bogoliubov;
  double arg_alpha = 0.0;  // principal value
  ComplexityReport report;
};

DeSitterSample desitter_sample(double y);

// Per-point reports over a strictly positive, strictly increasing grid.
std::vector<DeSitterSample> desitter_curves(const std::vector<double>& y_grid);

// 400 log-spaced points on [1e-3, 1e3] with the peak inserted.
std::vector<double> default_desitter_grid();

// Monotone tanh interpolation of omega^2 between the plateaus, exact outside
// [t0, t1]; steepness -> infinity recovers the sudden jump.
struct SmoothProfile {
  double omega_in = 1.0;
  double omega_out = 1.0;
  double t0 = -0.5;
  double t1 = 0.5;
  double steepness = 3.0;
};

double smooth_profile_omega_sq(const SmoothProfile& p, double t);

// omega^2(t) callables for the ODE oracle.
std::function<double(double)> switched_omega_sq(const SwitchedProfile& p);  // jump at t = 0
std::function<double(double)> smooth_omega_sq(const SmoothProfile& p);
std::function<double(double)> desitter_omega_sq(double k);  // k^2 - 2/tau^2
// Massive variant k^2 + (m^2/H^2 - 2)/tau^2, exposed for ODE exploration only.
std::function<double(double)> desitter_omega_sq_massive(double k, double m_over_h);

// Closed-form mode states.
ModeState plane_wave_mode(double omega, double t);  // e^{-i omega t}/sqrt(2 omega)
ModeState minkowski_mode(double k, double tau);
ModeState desitter_mode(double k, double tau);      // Bunch-Davies, tau < 0

}  // namespace su11
