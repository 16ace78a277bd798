#include "su11/mode_ode.hpp"

#include "su11/models.hpp"

#include "doctest.h"

#include <cmath>

using namespace su11;

namespace {

// final-state deviation from the analytic constant-frequency evolution
double constant_omega_error(double omega, double t_end, double step) {
  IntegratorConfig cfg{0.0, t_end, step};
  const auto res = integrate_mode([&](double) { return omega * omega; }, cfg,
                                  plane_wave_mode(omega, 0.0));
  const ModeState exact = plane_wave_mode(omega, t_end);
  return std::hypot(std::abs(res.state.f - exact.f), std::abs(res.state.g - exact.g));
}

}  // namespace

TEST_CASE("constant frequency matches the analytic phase evolution") {
  CHECK(constant_omega_error(1.0, 20.0, 0.005) < 1e-9);
  CHECK(constant_omega_error(3.0, 5.0, 0.0015) < 1e-9);
}

TEST_CASE("fourth-order convergence") {
  const double e1 = constant_omega_error(1.0, 10.0, 0.02);
  const double e2 = constant_omega_error(1.0, 10.0, 0.01);
  CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.2));
}

TEST_CASE("Wronskian drift stays at the determinant floor") {
  // at step * omega = 0.01 the per-step drift must be below 1e-12
  IntegratorConfig cfg{0.0, 100.0, 0.01};
  const auto res = integrate_mode([](double) { return 1.0; }, cfg,
                                  plane_wave_mode(1.0, 0.0));
  const double per_step = res.wronskian_drift / 1e4;
  CHECK(per_step < 1e-12);
}

TEST_CASE("input validation and the resolution guard") {
  const ModeState init = plane_wave_mode(1.0, 0.0);
  CHECK_THROWS_AS(integrate_mode([](double) { return 1.0; },
                                 IntegratorConfig{1.0, 0.0, 0.01}, init),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate_mode([](double) { return 1.0; },
                                 IntegratorConfig{0.0, 1.0, -0.1}, init),
                  std::invalid_argument);
  ModeState bad = init;
  bad.f *= 1.1;
  CHECK_THROWS_AS(integrate_mode([](double) { return 1.0; },
                                 IntegratorConfig{0.0, 1.0, 0.01}, bad),
                  WronskianError);
  // step * |omega| = 0.5 trips the guard
  CHECK_THROWS_AS(integrate_mode([](double) { return 25.0; },
                                 IntegratorConfig{0.0, 10.0, 0.1}, init),
                  StepSizeError);
}

TEST_CASE("Richardson estimate tracks the true global error") {
  const double omega = 1.0, t_end = 10.0, step = 0.05;
  IntegratorConfig cfg{0.0, t_end, step, true};
  const auto res = integrate_mode([&](double) { return omega * omega; }, cfg,
                                  plane_wave_mode(omega, 0.0));
  REQUIRE(res.error_estimate.has_value());
  const ModeState exact = plane_wave_mode(omega, t_end);
  const double true_err =
      std::hypot(std::abs(res.state.f - exact.f), std::abs(res.state.g - exact.g));
  CHECK(*res.error_estimate / true_err == doctest::Approx(1.0).epsilon(0.25));
}

TEST_CASE("de Sitter propagation reproduces the Bunch-Davies mode") {
  const double k = 1.0;
  const double tau0 = -100.0 / k, tau1 = -0.01 / k;
  const double omega_max = std::sqrt(k * k + 2.0 / (tau1 * tau1));
  IntegratorConfig cfg{tau0, tau1, 0.02 / omega_max};
  const auto res =
      integrate_mode(desitter_omega_sq(k), cfg, desitter_mode(k, tau0));
  const ModeState exact = desitter_mode(k, tau1);
  CHECK(std::abs(res.state.f - exact.f) / std::abs(exact.f) < 1e-6);
  CHECK(std::abs(res.state.g - exact.g) / std::abs(exact.g) < 1e-6);
}

TEST_CASE("trivial profile projects to the identity pair") {
  IntegratorConfig cfg{0.0, 7.0, 0.0025};
  const BogoliubovPair b =
      numeric_bogoliubov([](double) { return 4.0; }, cfg, plane_wave_mode(2.0, 0.0),
                         plane_wave_mode(2.0, 7.0));
  CHECK(std::abs(b.alpha - 1.0) < 1e-9);
  CHECK(std::abs(b.beta) < 1e-9);
}

TEST_CASE("steep smooth profile approaches the sudden-jump coefficients") {
  const SmoothProfile prof{1.0, 0.25, -0.005, 0.005, 3.0};
  IntegratorConfig cfg{-2.0, 2.0, 2.5e-4};
  const BogoliubovPair b = numeric_bogoliubov(smooth_omega_sq(prof), cfg,
                                              plane_wave_mode(1.0, -2.0),
                                              plane_wave_mode(0.25, 2.0));
  CHECK(std::abs(std::abs(b.beta) - 0.75) / 0.75 < 1e-4);
  CHECK(std::abs(std::abs(b.alpha) - 1.25) / 1.25 < 1e-4);
}

TEST_CASE("de Sitter numeric coefficients match the closed forms") {
  const BogoliubovPair num = desitter_numeric_bogoliubov(1.0, 1.0);
  const BogoliubovPair exact = desitter_bogoliubov({1.0});
  CHECK(std::abs(num.alpha - exact.alpha) / std::abs(exact.alpha) < 1e-6);
  CHECK(std::abs(num.beta - exact.beta) / std::abs(exact.beta) < 1e-6);
  CHECK_THROWS_AS(desitter_numeric_bogoliubov(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(desitter_numeric_bogoliubov(1.0, 200.0), std::domain_error);
}

TEST_CASE("finite start time: plane-wave data is contaminated, exact data is not") {
  // Initializing with the asymptotic plane wave instead of the exact mode at
  // tau = -100/k leaves an O(1/(k tau0)) imprint on the coefficients.
  const double k = 1.0, y_end = 1.0;
  const double tau0 = -100.0 / k, tau1 = -y_end / k;
  const double omega_max = std::sqrt(k * k + 2.0 / (tau1 * tau1));
  IntegratorConfig cfg{tau0, tau1, 0.005 / omega_max};

  const auto evolved_exact =
      integrate_mode(desitter_omega_sq(k), cfg, desitter_mode(k, tau0));
  const auto evolved_plane =
      integrate_mode(desitter_omega_sq(k), cfg, minkowski_mode(k, tau0));

  const BogoliubovPair exact = desitter_bogoliubov({y_end});
  const BogoliubovPair from_exact =
      bogoliubov_from_modes(minkowski_mode(k, tau1), evolved_exact.state);
  const BogoliubovPair from_plane =
      bogoliubov_from_modes(minkowski_mode(k, tau1), evolved_plane.state);

  const double dev_exact = std::abs(from_exact.beta - exact.beta);
  const double dev_plane = std::abs(from_plane.beta - exact.beta);
  CHECK(dev_exact < 1e-8);
  CHECK(dev_plane > 1e-4);   // the cutoff is measurable ...
  CHECK(dev_plane < 5e-2);   // ... but stays at the 1/(k|tau0|) scale
  CHECK(dev_plane > 100.0 * dev_exact);
}
