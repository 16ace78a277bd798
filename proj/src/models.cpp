#include "su11/models.hpp"

#include "su11/grid.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace su11 {

namespace {

const Complex kImag(0.0, 1.0);

void check_frequencies(double omega_in, double omega_out) {
  if (!(omega_in > 0.0) || !(omega_out > 0.0)) {
    throw std::domain_error("frequencies must be strictly positive");
  }
}

void check_y(double y) {
  if (!(y > 0.0)) throw std::domain_error("de Sitter point requires y > 0");
}

}  // namespace

BogoliubovPair switched_bogoliubov(const SwitchedProfile& p) {
  check_frequencies(p.omega_in, p.omega_out);
  const double s = std::sqrt(p.omega_in / p.omega_out);
  BogoliubovPair b;
  b.alpha = 0.5 * (s + 1.0 / s);
  b.beta = 0.5 * (s - 1.0 / s);
  return b;
}

double switched_complexity(const SwitchedProfile& p) {
  return 2.0 * std::asinh(std::abs(switched_bogoliubov(p).beta));
}

BogoliubovPair desitter_bogoliubov(const DeSitterPoint& pt) {
  check_y(pt.y);
  const double u = 0.5 / (pt.y * pt.y);
  BogoliubovPair b;
  b.alpha = Complex(1.0 - u, 1.0 / pt.y);
  b.beta = std::polar(u, 2.0 * pt.y);
  return b;
}

double desitter_alpha_abs(const DeSitterPoint& pt) {
  check_y(pt.y);
  return std::hypot(1.0, 0.5 / (pt.y * pt.y));
}

double desitter_beta_abs(const DeSitterPoint& pt) {
  check_y(pt.y);
  return 0.5 / (pt.y * pt.y);
}

double desitter_csc_sq_arg_alpha(const DeSitterPoint& pt) {
  check_y(pt.y);
  if (std::abs(pt.y - kDeSitterPeak) < 1e-12) {
    return std::numeric_limits<double>::infinity();
  }
  const double y2 = pt.y * pt.y;
  const double num = 4.0 * y2 * y2 + 1.0;
  const double den = 1.0 - 2.0 * y2;
  return num * num / (16.0 * y2 * den * den);
}

double desitter_ir_asymptote(const DeSitterPoint& pt) {
  check_y(pt.y);
  return 4.0 * std::abs(std::log(pt.y));
}

DeSitterSample desitter_sample(double y) {
  DeSitterSample s;
  s.y = y;
  s.bogoliubov = desitter_bogoliubov({y});
  s.arg_alpha = std::arg(s.bogoliubov.alpha);
  s.report = full_report(s.bogoliubov);
  return s;
}

std::vector<DeSitterSample> desitter_curves(const std::vector<double>& y_grid) {
  if (y_grid.empty()) throw std::invalid_argument("desitter_curves: empty grid");
  std::vector<DeSitterSample> out;
  out.reserve(y_grid.size());
  double prev = 0.0;
  for (double y : y_grid) {
    if (!(y > prev)) {
      throw std::invalid_argument("desitter_curves: grid must be positive and strictly increasing");
    }
    prev = y;
    out.push_back(desitter_sample(y));
  }
  return out;
}

std::vector<double> default_desitter_grid() {
  return with_point(log_spaced(1e-3, 1e3, 400), kDeSitterPeak);
}

double smooth_profile_omega_sq(const SmoothProfile& p, double t) {
  check_frequencies(p.omega_in, p.omega_out);
  if (!(p.t0 < p.t1)) throw std::domain_error("smooth profile requires t0 < t1");
  if (!(p.steepness > 0.0)) throw std::domain_error("smooth profile requires positive steepness");
  const double w2_in = p.omega_in * p.omega_in;
  const double w2_out = p.omega_out * p.omega_out;
  if (t <= p.t0) return w2_in;
  if (t >= p.t1) return w2_out;
  // Normalized so the plateau values are reached exactly at t0 and t1.
  const double xh = (2.0 * t - p.t0 - p.t1) / (p.t1 - p.t0);
  const double th_hi = std::tanh(p.steepness);
  const double u = (std::tanh(p.steepness * xh) + th_hi) / (2.0 * th_hi);
  return w2_in + (w2_out - w2_in) * u;
}

std::function<double(double)> switched_omega_sq(const SwitchedProfile& p) {
  check_frequencies(p.omega_in, p.omega_out);
  const double w2_in = p.omega_in * p.omega_in;
  const double w2_out = p.omega_out * p.omega_out;
  return [w2_in, w2_out](double t) { return t < 0.0 ? w2_in : w2_out; };
}

std::function<double(double)> smooth_omega_sq(const SmoothProfile& p) {
  smooth_profile_omega_sq(p, p.t0);  // validate once
  return [p](double t) { return smooth_profile_omega_sq(p, t); };
}

std::function<double(double)> desitter_omega_sq(double k) {
  if (!(k > 0.0)) throw std::domain_error("desitter_omega_sq: k must be > 0");
  return [k](double tau) { return k * k - 2.0 / (tau * tau); };
}

std::function<double(double)> desitter_omega_sq_massive(double k, double m_over_h) {
  if (!(k > 0.0)) throw std::domain_error("desitter_omega_sq_massive: k must be > 0");
  const double c = m_over_h * m_over_h - 2.0;
  return [k, c](double tau) { return k * k + c / (tau * tau); };
}

ModeState plane_wave_mode(double omega, double t) {
  if (!(omega > 0.0)) throw std::domain_error("plane_wave_mode: omega must be > 0");
  ModeState m;
  m.f = std::polar(1.0 / std::sqrt(2.0 * omega), -omega * t);
  m.g = -kImag * omega * m.f;
  m.t = t;
  return m;
}

ModeState minkowski_mode(double k, double tau) { return plane_wave_mode(k, tau); }

ModeState desitter_mode(double k, double tau) {
  if (!(k > 0.0)) throw std::domain_error("desitter_mode: k must be > 0");
  if (!(tau < 0.0)) throw std::domain_error("desitter_mode: expanding branch requires tau < 0");
  const double kt = k * tau;
  const Complex phase = std::polar(1.0, -kt);
  ModeState m;
  m.f = phase / std::sqrt(2.0 * k) * (1.0 - kImag / kt);
  m.g = -kImag * std::sqrt(0.5 * k) * phase * (1.0 - kImag / kt - 1.0 / (kt * kt));
  m.t = tau;
  return m;
}

}  // namespace su11
