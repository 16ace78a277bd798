#include "su11/models.hpp"

#include "su11/grid.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace su11;

TEST_CASE("switched oscillator closed forms") {
  SUBCASE("no jump") {
    const BogoliubovPair b = switched_bogoliubov({1.3, 1.3});
    CHECK(b.alpha == Complex(1.0, 0.0));
    CHECK(b.beta == Complex(0.0, 0.0));
    CHECK(switched_complexity({1.3, 1.3}) == 0.0);
  }
  SUBCASE("ratio four") {
    const BogoliubovPair b = switched_bogoliubov({4.0, 1.0});
    CHECK(std::abs(b.alpha - 1.25) < 1e-15);
    CHECK(std::abs(b.beta - 0.75) < 1e-15);
    CHECK(switched_complexity({4.0, 1.0}) ==
          doctest::Approx(1.3862943611198906).epsilon(1e-14));  // 2 arsinh(3/4) = 2 ln 2
  }
  SUBCASE("swap flips beta only") {
    const BogoliubovPair b = switched_bogoliubov({4.0, 1.0});
    const BogoliubovPair s = switched_bogoliubov({1.0, 4.0});
    CHECK(std::abs(s.alpha - b.alpha) < 1e-15);
    CHECK(std::abs(s.beta + b.beta) < 1e-15);
    CHECK(switched_complexity({1.0, 4.0}) ==
          doctest::Approx(switched_complexity({4.0, 1.0})).epsilon(1e-14));
  }
  SUBCASE("invalid frequencies") {
    CHECK_THROWS_AS(switched_bogoliubov({0.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(switched_bogoliubov({1.0, -2.0}), std::domain_error);
  }
  SUBCASE("complexity equals 2 arsinh sqrt(n)") {
    for (double ratio : {0.02, 0.4, 1.0, 2.5, 60.0}) {
      const SwitchedProfile p{ratio, 1.0};
      const double n = particle_number(switched_bogoliubov(p));
      CHECK(switched_complexity(p) ==
            doctest::Approx(2.0 * std::asinh(std::sqrt(n))).epsilon(1e-12));
    }
  }
  SUBCASE("small n approximation") {
    const SwitchedProfile p{1.004, 1.0};
    const double n = particle_number(switched_bogoliubov(p));
    CHECK(n < 1e-4);
    CHECK(std::abs(switched_complexity(p) / (2.0 * std::sqrt(n)) - 1.0) < 0.01);
  }
}

TEST_CASE("de Sitter closed forms") {
  SUBCASE("UV limit: moduli approach (1, 0)") {
    const DeSitterPoint pt{1e6};
    CHECK(std::abs(desitter_alpha_abs(pt) - 1.0) < 1e-11);
    CHECK(desitter_beta_abs(pt) < 1e-11);
  }
  SUBCASE("y = 1") {
    const BogoliubovPair b = desitter_bogoliubov({1.0});
    CHECK(std::abs(b.alpha - Complex(0.5, 1.0)) < 1e-15);
    CHECK(std::abs(std::abs(b.beta) - 0.5) < 1e-15);
  }
  SUBCASE("normalization across the full range (relative)") {
    for (double y : log_spaced(1e-3, 1e3, 200)) {
      const BogoliubovPair b = desitter_bogoliubov({y});
      const double scale = 1.0 + std::norm(b.beta);
      CHECK(std::abs(normalization_residual(b)) < 1e-12 * scale);
      CHECK(std::abs(std::abs(b.alpha) - desitter_alpha_abs({y})) < 1e-12 * std::abs(b.alpha));
      CHECK(std::abs(std::abs(b.beta) - desitter_beta_abs({y})) < 1e-12 * std::max(1.0, std::abs(b.beta)));
    }
  }
  SUBCASE("domain errors") {
    CHECK_THROWS_AS(desitter_bogoliubov({0.0}), std::domain_error);
    CHECK_THROWS_AS(desitter_bogoliubov({-1.0}), std::domain_error);
  }
}

TEST_CASE("de Sitter angle identities") {
  for (double y : log_spaced(1e-2, 1e2, 60)) {
    const BogoliubovPair b = desitter_bogoliubov({y});
    const double y2 = y * y;
    // tan(arg alpha) = 2y/(2y^2 - 1)
    if (std::abs(2 * y2 - 1) > 1e-3) {
      CHECK(std::tan(std::arg(b.alpha)) ==
            doctest::Approx(2 * y / (2 * y2 - 1)).epsilon(1e-10));
    }
    // tan(arg(alpha beta)) closed form
    const double num = 2 * y * std::cos(2 * y) + (2 * y2 - 1) * std::sin(2 * y);
    const double den = (2 * y2 - 1) * std::cos(2 * y) - 2 * y * std::sin(2 * y);
    if (std::abs(den) > 1e-3) {
      CHECK(std::tan(std::arg(b.alpha * b.beta)) ==
            doctest::Approx(num / den).epsilon(1e-10));
    }
  }
}

TEST_CASE("csc^2 of the alpha phase") {
  CHECK(desitter_csc_sq_arg_alpha({1.0}) == doctest::Approx(25.0 / 16.0).epsilon(1e-13));
  CHECK(std::isinf(desitter_csc_sq_arg_alpha({kDeSitterPeak})));

  // agrees with the direct evaluation away from the poles
  for (double y : log_spaced(0.05, 50.0, 40)) {
    if (std::abs(y - kDeSitterPeak) < 1e-2) continue;
    const double direct =
        1.0 / std::pow(std::sin(2.0 * std::arg(desitter_bogoliubov({y}).alpha)), 2);
    const double rel_tol = y <= 5.0 ? 1e-10 : 1e-8;  // sin 2arg loses digits as arg -> 0
    CHECK(std::abs(desitter_csc_sq_arg_alpha({y}) / direct - 1.0) < rel_tol);
  }
}

TEST_CASE("IR asymptote") {
  CHECK(desitter_ir_asymptote({std::exp(-1.0)}) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(desitter_ir_asymptote({1e-2}) == doctest::Approx(18.420680743952367).epsilon(1e-14));
}

TEST_CASE("IR decomposition at y = 0.01") {
  const double y = 1e-2;
  const DeSitterSample s = desitter_sample(y);
  const double theta = reduce_rotation_angle(-s.arg_alpha);
  // C(y) = |theta csc(2 theta)| = 1/2 + O(y^2)
  const double big_c = std::abs(theta / std::sin(2 * theta));
  CHECK(std::abs(big_c - 0.5) < 5e-4);
  // D(y) = |2 theta| = 4|y| + O(y^3)
  CHECK(std::abs(std::abs(2 * theta) - 4 * y) < 1e-5);
  // 4 C(y) arsinh|beta| reproduces the bound to O(y^2)
  const double r = std::asinh(desitter_beta_abs({y}));
  CHECK(std::abs(4.0 * big_c * r / s.report.c1_bound - 1.0) < 1e-3);
}

TEST_CASE("de Sitter curves on the default grid") {
  const auto grid = default_desitter_grid();
  CHECK(grid.size() == 401);
  CHECK(std::is_sorted(grid.begin(), grid.end()));
  const auto curves = desitter_curves(grid);

  // the inserted peak point carries the singular flag, neighbours do not
  std::size_t peak_idx = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] == kDeSitterPeak) peak_idx = i;
  }
  CHECK(curves[peak_idx].report.singular_theta);
  CHECK_FALSE(curves[peak_idx - 1].report.singular_theta);
  CHECK_FALSE(curves[peak_idx + 1].report.singular_theta);

  // IR end: both measures follow 4|ln y| and agree with each other
  const DeSitterSample& ir = curves.front();
  CHECK(ir.y == 1e-3);
  const double asym = desitter_ir_asymptote({ir.y});
  CHECK(ir.report.c1_bound / asym > 0.95);
  CHECK(ir.report.c1_bound / asym < 1.05);
  CHECK(std::abs(ir.report.gate_depth_set1 / ir.report.c1_bound - 1.0) < 0.1);

  // UV end: the bound decays like 2/y (phase of alpha), gate depth likewise
  const DeSitterSample& uv = curves.back();
  CHECK(uv.y == 1e3);
  CHECK(uv.report.c1_bound * uv.y / 2.0 == doctest::Approx(1.0).epsilon(1e-2));
  CHECK(uv.report.c1_bound < 2.1e-3);
  CHECK(uv.report.gate_depth_set1 < 2.2e-3);

  CHECK_THROWS_AS(desitter_curves({0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(desitter_curves({-1.0, 0.5}), std::invalid_argument);
}

TEST_CASE("grid maxima bracket the peak") {
  std::mt19937_64 rng(301);
  std::uniform_real_distribution<double> lo_dist(0.1, 0.3);
  std::uniform_real_distribution<double> hi_dist(2.0, 10.0);
  std::uniform_int_distribution<int> n_dist(200, 900);
  for (int trial = 0; trial < 5; ++trial) {
    const auto grid = log_spaced(lo_dist(rng), hi_dist(rng), n_dist(rng));
    const auto curves = desitter_curves(grid);
    std::size_t argmax = 0, nearest = 0;
    for (std::size_t i = 0; i < curves.size(); ++i) {
      if (curves[i].report.c1_bound > curves[argmax].report.c1_bound) argmax = i;
      if (std::abs(grid[i] - kDeSitterPeak) < std::abs(grid[nearest] - kDeSitterPeak)) {
        nearest = i;
      }
    }
    CHECK(argmax == nearest);
  }
}

TEST_CASE("IR growth rate approaches 4 per e-fold") {
  const auto grid = log_spaced(1e-5, 1e-2, 30);
  const auto curves = desitter_curves(grid);
  for (std::size_t i = 1; i < curves.size(); ++i) {
    const double dc = curves[i - 1].report.c1_bound - curves[i].report.c1_bound;
    const double dlog = std::log(grid[i]) - std::log(grid[i - 1]);  // d ln(1/y) = -d ln y
    CHECK(dc / dlog == doctest::Approx(4.0).epsilon(0.05));
  }
}

TEST_CASE("smooth profile") {
  const SmoothProfile p{2.0, 0.5, -0.4, 0.6, 3.0};
  SUBCASE("plateaus are exact") {
    CHECK(smooth_profile_omega_sq(p, -0.4) == 4.0);
    CHECK(smooth_profile_omega_sq(p, -5.0) == 4.0);
    CHECK(smooth_profile_omega_sq(p, 0.6) == 0.25);
    CHECK(smooth_profile_omega_sq(p, 3.0) == 0.25);
  }
  SUBCASE("symmetric midpoint") {
    CHECK(smooth_profile_omega_sq(p, 0.1) ==
          doctest::Approx(0.5 * (4.0 + 0.25)).epsilon(1e-12));
  }
  SUBCASE("monotone in between") {
    double prev = smooth_profile_omega_sq(p, -0.4);
    for (double t = -0.39; t < 0.6; t += 0.01) {
      const double cur = smooth_profile_omega_sq(p, t);
      CHECK(cur <= prev + 1e-15);
      prev = cur;
    }
  }
  SUBCASE("validation") {
    CHECK_THROWS_AS(smooth_profile_omega_sq({1.0, 1.0, 0.5, -0.5, 3.0}, 0.0),
                    std::domain_error);
    CHECK_THROWS_AS(smooth_profile_omega_sq({1.0, 1.0, -0.5, 0.5, 0.0}, 0.0),
                    std::domain_error);
  }
}

TEST_CASE("frequency profiles for the oracle") {
  const auto sw = switched_omega_sq({2.0, 0.5});
  CHECK(sw(-1e-9) == 4.0);
  CHECK(sw(0.0) == 0.25);

  const auto ds = desitter_omega_sq(1.0);
  CHECK(ds(-1.0) == doctest::Approx(-1.0).epsilon(1e-15));  // k^2 - 2/tau^2
  CHECK(ds(-100.0) == doctest::Approx(1.0 - 2e-4).epsilon(1e-12));

  // massless limit of the massive profile
  const auto dsm = desitter_omega_sq_massive(1.0, 0.0);
  for (double tau : {-10.0, -1.0, -0.2}) {
    CHECK(dsm(tau) == doctest::Approx(ds(tau)).epsilon(1e-15));
  }
}

TEST_CASE("closed-form mode states satisfy their Wronskians") {
  CHECK(std::abs(wronskian_residual(plane_wave_mode(0.7, 2.2))) < 1e-14);
  CHECK(std::abs(wronskian_residual(minkowski_mode(1.0, -3.0))) < 1e-14);
  for (double tau : {-100.0, -1.0, -0.01}) {
    CHECK(std::abs(wronskian_residual(desitter_mode(1.0, tau))) < 1e-10);
  }
  CHECK_THROWS_AS(desitter_mode(1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(plane_wave_mode(0.0, 0.0), std::domain_error);
}
