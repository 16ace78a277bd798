#include "su11/mode_ode.hpp"

#include "su11/models.hpp"

namespace su11 {

BogoliubovPair desitter_numeric_bogoliubov(double k, double y_end,
                                           double step_scale) {
  if (!(k > 0.0)) throw std::domain_error("desitter_numeric_bogoliubov: k must be > 0");
  if (!(y_end > 0.0) || y_end >= 100.0) {
    throw std::domain_error("desitter_numeric_bogoliubov: y_end must lie in (0, 100)");
  }
  const double tau_start = -100.0 / k;
  const double tau_end = -y_end / k;
  const double omega_max = std::sqrt(k * k + 2.0 / (tau_end * tau_end));
  IntegratorConfig cfg;
  cfg.t_start = tau_start;
  cfg.t_end = tau_end;
  cfg.step = step_scale / omega_max;
  const IntegrationResult res =
      integrate_mode(desitter_omega_sq(k), cfg, desitter_mode(k, tau_start));
  return bogoliubov_from_modes(minkowski_mode(k, tau_end), res.state);
}

}  // namespace su11
