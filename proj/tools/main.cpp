// Command-line front end: parameter sweeps for the switched-frequency and
// de Sitter models, numerical validation suites, and free-form mode-equation
// integration.  Emits plot-ready CSV or JSON tables.

#include "su11/complexity.hpp"
#include "su11/fock.hpp"
#include "su11/format.hpp"
#include "su11/grid.hpp"
#include "su11/mode_ode.hpp"
#include "su11/models.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>

using json = nlohmann::ordered_json;
using namespace su11;

namespace {

constexpr const char* kVersion = "0.1.0";

// ---------------------------------------------------------------------------
// output plumbing

std::string cell_text(const json& v) {
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void write_table(const json& meta, const std::vector<std::string>& columns,
                 const std::vector<json>& rows, const std::string& format,
                 const std::string& path) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!path.empty()) {
    file.open(path, std::ios::binary);  // LF line endings everywhere
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    os = &file;
  }
  if (format == "json") {
    json doc;
    doc["meta"] = meta;
    doc["rows"] = rows;
    *os << doc.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    *os << (i ? "," : "") << columns[i];
  }
  *os << "\n";
  for (const json& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      *os << (i ? "," : "") << cell_text(row.at(columns[i]));
    }
    *os << "\n";
  }
}

struct GridOptions {
  double min = 0.0;
  double max = 0.0;
  int count = 0;
  std::string scale = "log";
  std::vector<double> values;  // explicit points override the range
};

void add_grid_options(CLI::App* cmd, GridOptions& g, double def_min,
                      double def_max, int def_count) {
  g.min = def_min;
  g.max = def_max;
  g.count = def_count;
  cmd->add_option("--min", g.min, "grid minimum");
  cmd->add_option("--max", g.max, "grid maximum");
  cmd->add_option("--count", g.count, "number of grid points (>= 2)");
  cmd->add_option("--scale", g.scale, "grid spacing: log or linear")
      ->check(CLI::IsMember({"log", "linear"}));
  cmd->add_option("--values", g.values,
                  "explicit comma-separated grid points (overrides the range)")
      ->delimiter(',');
}

std::vector<double> build_grid(const GridOptions& g) {
  if (!g.values.empty()) {
    std::vector<double> v = g.values;
    std::sort(v.begin(), v.end());
    return v;
  }
  if (g.count < 2) throw std::invalid_argument("grid count must be >= 2");
  if (!(g.min < g.max)) throw std::invalid_argument("grid needs min < max");
  if (g.scale == "log") {
    if (!(g.min > 0.0)) throw std::invalid_argument("log grid needs min > 0");
    return log_spaced(g.min, g.max, g.count);
  }
  return linear_spaced(g.min, g.max, g.count);
}

json grid_meta(const GridOptions& g) {
  json m;
  if (g.values.empty()) {
    m["min"] = g.min;
    m["max"] = g.max;
    m["count"] = g.count;
    m["scale"] = g.scale;
  } else {
    m["values"] = g.values;
  }
  return m;
}

json make_meta(const std::string& command, json config) {
  json meta;
  meta["version"] = kVersion;
  meta["command"] = command;
  meta["config"] = std::move(config);
  return meta;
}

// ---------------------------------------------------------------------------
// sweep commands

int run_switch(const GridOptions& grid_opts, const std::string& format,
               const std::string& output) {
  const std::vector<double> grid = build_grid(grid_opts);
  std::vector<json> rows;
  rows.reserve(grid.size());
  for (double ratio : grid) {
    const SwitchedProfile p{ratio, 1.0};
    const BogoliubovPair b = switched_bogoliubov(p);
    json row;
    row["ratio"] = ratio;
    row["alpha"] = b.alpha.real();
    row["beta"] = b.beta.real();
    row["n"] = particle_number(b);
    row["c1"] = switched_complexity(p);
    rows.push_back(std::move(row));
  }
  write_table(make_meta("switch", grid_meta(grid_opts)),
              {"ratio", "alpha", "beta", "n", "c1"}, rows, format, output);
  return 0;
}

int run_desitter(const GridOptions& grid_opts, bool insert_peak,
                 const std::string& format, const std::string& output) {
  std::vector<double> grid = build_grid(grid_opts);
  if (insert_peak && grid.front() < kDeSitterPeak && grid.back() > kDeSitterPeak) {
    grid = with_point(std::move(grid), kDeSitterPeak);
  }
  const auto curves = desitter_curves(grid);
  std::vector<json> rows;
  rows.reserve(curves.size());
  for (const DeSitterSample& s : curves) {
    json row;
    row["y"] = s.y;
    row["abs_alpha"] = std::abs(s.bogoliubov.alpha);
    row["abs_beta"] = std::abs(s.bogoliubov.beta);
    row["arg_alpha"] = s.arg_alpha;
    row["c1"] = s.report.c1_bound;
    row["c2"] = s.report.c2_bound;
    row["gate_set1"] = s.report.gate_depth_set1;
    row["gate_set2"] = s.report.gate_depth_set2;
    row["ir_asymptote"] = desitter_ir_asymptote({s.y});
    row["singular_theta"] = s.report.singular_theta;
    row["small_theta"] = s.report.small_theta_used;
    row["reliable"] = s.report.leading_order_reliable;
    rows.push_back(std::move(row));
  }
  json cfg = grid_meta(grid_opts);
  cfg["insert_peak"] = insert_peak;
  write_table(make_meta("desitter", cfg),
              {"y", "abs_alpha", "abs_beta", "arg_alpha", "c1", "c2",
               "gate_set1", "gate_set2", "ir_asymptote", "singular_theta",
               "small_theta", "reliable"},
              rows, format, output);
  return 0;
}

// ---------------------------------------------------------------------------
// validation suites

struct Check {
  std::string name;
  double value;
  double threshold;
};

void algebra_checks(std::vector<Check>& out) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const auto rand_vec = [&](double s) {
    return LieVector(s * dist(rng), s * dist(rng), s * dist(rng));
  };

  double jacobi = 0.0;
  for (int i = 0; i < 100; ++i) {
    const LieVector a = rand_vec(1.0), b = rand_vec(1.0), c = rand_vec(1.0);
    jacobi = std::max(jacobi, (bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) +
                               bracket(c, bracket(a, b)))
                                  .cwiseAbs()
                                  .maxCoeff());
  }
  out.push_back({"algebra/jacobi_identity_max", jacobi, 1e-12});

  const auto& m = rep_matrices();
  const auto& f = structure_constants();
  double faith = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      RepMatrix lhs = m[i] * m[j] - m[j] * m[i];
      for (int k = 0; k < 3; ++k) lhs -= Complex(0.0, 1.0) * f[i][j][k] * m[k];
      faith = std::max(faith, lhs.norm());
    }
  }
  out.push_back({"algebra/representation_commutators", faith, 1e-14});

  double roundtrip = 0.0;
  for (int i = 0; i < 50; ++i) {
    const LieVector x = rand_vec(0.055);
    roundtrip = std::max(
        roundtrip, (lie_coefficients(rep_log(rep_exponential(x))) - x).norm());
  }
  out.push_back({"algebra/log_exp_roundtrip_max", roundtrip, 1e-10});

  out.push_back({"algebra/bch_commuting_residual",
                 bch_residual({0, 0, 0.3}, {0, 0, 0.9}, 2), 1e-12});

  const LieVector x(0.35, 0.21, 0.0), y(0.0, 0.0, -0.52);
  const double ratio =
      bch_residual(0.1 * x, 0.1 * y, 1) / bch_residual(0.05 * x, 0.05 * y, 1);
  out.push_back({"algebra/bch_order1_quadratic_ratio_dev", std::abs(ratio - 4.0), 0.01});
}

void desitter_ode_checks(std::vector<Check>& out) {
  double alpha_dev = 0.0, beta_dev = 0.0, norm_res = 0.0;
  for (double y : log_spaced(0.1, 50.0, 20)) {
    const BogoliubovPair num = desitter_numeric_bogoliubov(1.0, y);
    const BogoliubovPair exact = desitter_bogoliubov({y});
    alpha_dev = std::max(alpha_dev,
                         std::abs(num.alpha - exact.alpha) / std::abs(exact.alpha));
    beta_dev = std::max(beta_dev,
                        std::abs(num.beta - exact.beta) / std::abs(exact.beta));
    norm_res = std::max(norm_res, std::abs(normalization_residual(num)));
  }
  out.push_back({"desitter-ode/alpha_rel_dev_max", alpha_dev, 1e-6});
  out.push_back({"desitter-ode/beta_rel_dev_max", beta_dev, 1e-6});
  out.push_back({"desitter-ode/normalization_residual_max", norm_res, 1e-8});
}

void fock_checks(std::vector<Check>& out, int dim) {
  const FockConfig cfg{dim, 1e-6};
  const FockOperators ops = fock_operators(cfg);
  double comm = 0.0;
  for (int pair = 0; pair < 3; ++pair) {
    comm = std::max(comm, commutator_residual(ops, pair));
  }
  out.push_back({"fock/commutator_residual_max", comm, 1e-12});
  out.push_back({"fock/squeeze_law_r0.3", verify_squeeze_law(0.3, 0.7, cfg), 1e-6});
  out.push_back({"fock/rotation_law_theta0.9", verify_rotation_law(0.9, cfg), 1e-10});
  out.push_back({"fock/squeeze_tail_weight_r0.3", truncation_tail_weight(0.3, cfg),
                 cfg.tail_tol});
}

int run_validate(const std::string& suite, int dim, const std::string& format,
                 const std::string& output) {
  std::vector<Check> checks;
  if (suite == "algebra" || suite == "all") algebra_checks(checks);
  if (suite == "desitter-ode" || suite == "all") desitter_ode_checks(checks);
  if (suite == "fock" || suite == "all") fock_checks(checks, dim);

  bool pass = true;
  std::vector<json> rows;
  for (const Check& c : checks) {
    const bool ok = c.value <= c.threshold;
    pass = pass && ok;
    json row;
    row["name"] = c.name;
    row["value"] = c.value;
    row["threshold"] = c.threshold;
    row["pass"] = ok;
    rows.push_back(std::move(row));
    std::cerr << (ok ? "[PASS] " : "[FAIL] ") << c.name << " = "
              << format_double(c.value) << " (threshold " << format_double(c.threshold)
              << ")\n";
  }
  json cfg;
  cfg["suite"] = suite;
  cfg["dim"] = dim;
  json meta = make_meta("validate", cfg);
  meta["pass"] = pass;
  write_table(meta, {"name", "value", "threshold", "pass"}, rows, format, output);
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// free-form oracle runs

struct OracleOptions {
  std::string profile;
  double omega = 1.0;
  double omega_in = 1.0;
  double omega_out = 1.0;
  double t0 = -0.5;
  double t1 = 0.5;
  double steepness = 3.0;
  double k = 1.0;
  double m_over_h = 0.0;
  bool massive = false;
  double t_start = 0.0;
  double t_end = 1.0;
  double step = 1e-3;
  bool richardson = false;
  std::string trace_path;
  int trace_points = 200;
};

// Integrates segment by segment so intermediate states can be traced; the
// switched profile is split at t = 0 to keep each segment smooth.
IntegrationResult integrate_traced(const std::function<double(double)>& omega_sq,
                                   const OracleOptions& opt, const ModeState& init,
                                   std::ostream* trace) {
  std::vector<double> breaks{opt.t_start};
  if (opt.profile == "switched" && opt.t_start < 0.0 && opt.t_end > 0.0) {
    breaks.push_back(0.0);
  }
  breaks.push_back(opt.t_end);

  if (trace) *trace << "t,f_re,f_im,g_re,g_im,wronskian_drift\n";
  const auto emit = [&](const ModeState& m, double drift) {
    if (!trace) return;
    *trace << format_double(m.t) << ',' << format_double(m.f.real()) << ','
           << format_double(m.f.imag()) << ',' << format_double(m.g.real()) << ','
           << format_double(m.g.imag()) << ',' << format_double(drift) << "\n";
  };

  ModeState state = init;
  double worst_drift = std::abs(wronskian_residual(init));
  double err_sum = 0.0;
  emit(state, worst_drift);

  for (std::size_t seg = 0; seg + 1 < breaks.size(); ++seg) {
    const double a = breaks[seg], b = breaks[seg + 1];
    const double span = b - a;
    int pieces = trace ? std::max(1, int(opt.trace_points * span /
                                         (opt.t_end - opt.t_start)))
                       : 1;
    pieces = std::min<int>(pieces, std::max(1, int(span / opt.step)));
    for (int i = 0; i < pieces; ++i) {
      IntegratorConfig cfg;
      cfg.t_start = a + span * i / pieces;
      cfg.t_end = (i + 1 == pieces) ? b : a + span * (i + 1) / pieces;
      cfg.step = opt.step;
      cfg.richardson = opt.richardson;
      state.t = cfg.t_start;  // segment boundaries are exact by construction
      if (std::abs(wronskian_residual(state)) > 1e-6) {
        throw WronskianError("oracle-run: accumulated Wronskian drift exceeds 1e-6");
      }
      IntegrationResult res = integrate_mode(omega_sq, cfg, state);
      state = res.state;
      worst_drift = std::max(worst_drift, res.wronskian_drift);
      if (res.error_estimate) err_sum += *res.error_estimate;
      emit(state, res.wronskian_drift);
    }
  }
  IntegrationResult out;
  out.state = state;
  out.wronskian_drift = worst_drift;
  if (opt.richardson) out.error_estimate = err_sum;
  return out;
}

int run_oracle(const OracleOptions& opt, const std::string& format,
               const std::string& output) {
  if (!(opt.t_start < opt.t_end)) throw std::invalid_argument("need t_start < t_end");

  std::function<double(double)> omega_sq;
  ModeState init;
  bool project_desitter_roles = false;
  ModeState out_ref;
  bool have_ref = true;

  if (opt.profile == "constant") {
    const double w2 = opt.omega * opt.omega;
    if (!(opt.omega > 0.0)) throw std::invalid_argument("need omega > 0");
    omega_sq = [w2](double) { return w2; };
    init = plane_wave_mode(opt.omega, opt.t_start);
    out_ref = plane_wave_mode(opt.omega, opt.t_end);
  } else if (opt.profile == "switched") {
    omega_sq = switched_omega_sq({opt.omega_in, opt.omega_out});
    if (!(opt.t_start < 0.0) || !(opt.t_end > 0.0)) {
      throw std::invalid_argument("switched profile needs t_start < 0 < t_end");
    }
    init = plane_wave_mode(opt.omega_in, opt.t_start);
    out_ref = plane_wave_mode(opt.omega_out, opt.t_end);
  } else if (opt.profile == "smooth") {
    const SmoothProfile prof{opt.omega_in, opt.omega_out, opt.t0, opt.t1,
                             opt.steepness};
    omega_sq = smooth_omega_sq(prof);
    if (opt.t_start > prof.t0 || opt.t_end < prof.t1) {
      throw std::invalid_argument("smooth profile needs t_start <= t0 and t_end >= t1");
    }
    init = plane_wave_mode(opt.omega_in, opt.t_start);
    out_ref = plane_wave_mode(opt.omega_out, opt.t_end);
  } else if (opt.profile == "desitter") {
    if (!(opt.t_end < 0.0)) throw std::invalid_argument("de Sitter runs need t_end < 0");
    if (opt.massive) {
      // exploratory: instantaneous plane-wave data on both ends
      omega_sq = desitter_omega_sq_massive(opt.k, opt.m_over_h);
      const double w2s = omega_sq(opt.t_start), w2e = omega_sq(opt.t_end);
      if (!(w2s > 0.0)) throw std::invalid_argument("omega^2(t_start) must be positive");
      init = plane_wave_mode(std::sqrt(w2s), opt.t_start);
      if (w2e > 0.0) {
        out_ref = plane_wave_mode(std::sqrt(w2e), opt.t_end);
      } else {
        have_ref = false;
      }
    } else {
      omega_sq = desitter_omega_sq(opt.k);
      init = desitter_mode(opt.k, opt.t_start);
      out_ref = minkowski_mode(opt.k, opt.t_end);
      project_desitter_roles = true;  // Minkowski "in", evolved mode "out"
    }
  } else {
    throw std::invalid_argument("unknown profile: " + opt.profile);
  }

  std::ofstream trace_file;
  std::ostream* trace = nullptr;
  if (!opt.trace_path.empty()) {
    trace_file.open(opt.trace_path, std::ios::binary);
    if (!trace_file) throw std::runtime_error("cannot open trace file: " + opt.trace_path);
    trace = &trace_file;
  }

  const IntegrationResult res = integrate_traced(omega_sq, opt, init, trace);

  json row;
  row["t_end"] = res.state.t;
  row["f_re"] = res.state.f.real();
  row["f_im"] = res.state.f.imag();
  row["g_re"] = res.state.g.real();
  row["g_im"] = res.state.g.imag();
  row["wronskian_drift"] = res.wronskian_drift;
  row["error_estimate"] = res.error_estimate ? json(*res.error_estimate) : json();
  if (have_ref) {
    const BogoliubovPair b =
        project_desitter_roles
            ? bogoliubov_from_modes(out_ref, res.state, kOdeWronskianTol)
            : bogoliubov_from_modes(res.state, out_ref, kOdeWronskianTol);
    row["alpha_re"] = b.alpha.real();
    row["alpha_im"] = b.alpha.imag();
    row["beta_re"] = b.beta.real();
    row["beta_im"] = b.beta.imag();
    row["n"] = particle_number(b);
    row["c1"] = c1_bound_bogoliubov(b);
  } else {
    for (const char* name : {"alpha_re", "alpha_im", "beta_re", "beta_im", "n", "c1"}) {
      row[name] = json();
    }
  }

  json cfg;
  cfg["profile"] = opt.profile;
  cfg["t_start"] = opt.t_start;
  cfg["t_end"] = opt.t_end;
  cfg["step"] = opt.step;
  cfg["richardson"] = opt.richardson;
  write_table(make_meta("oracle-run", cfg),
              {"t_end", "f_re", "f_im", "g_re", "g_im", "wronskian_drift",
               "error_estimate", "alpha_re", "alpha_im", "beta_re", "beta_im",
               "n", "c1"},
              {row}, format, output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodesic and gate-counting complexity bounds for the "
               "time-dependent oscillator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  app.set_config("--config", "",
                 "flat key=value config file (keys carry the subcommand "
                 "prefix, e.g. switch.min=0.5); flags win on conflict");

  std::string format = "csv";
  std::string output;
  const auto add_io = [&](CLI::App* cmd) {
    cmd->fallthrough(true);
    cmd->add_option("--format", format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output,-o", output, "output path (default stdout)");
  };

  GridOptions switch_grid;
  CLI::App* sw = app.add_subcommand(
      "switch", "sweep the switched-frequency oscillator over omega_in/omega_out");
  add_grid_options(sw, switch_grid, 0.01, 100.0, 201);
  add_io(sw);

  GridOptions ds_grid;
  bool no_peak = false;
  CLI::App* ds = app.add_subcommand(
      "desitter", "sweep the massless de Sitter mode over y = |k tau|");
  add_grid_options(ds, ds_grid, 1e-3, 1e3, 400);
  ds->add_flag("--no-peak", no_peak, "do not insert the 1/sqrt(2) peak point");
  add_io(ds);

  std::string suite = "all";
  int fock_dim = 60;
  CLI::App* val = app.add_subcommand("validate", "run the numerical cross-check suites");
  val->add_option("--suite", suite, "algebra, desitter-ode, fock, or all")
      ->check(CLI::IsMember({"algebra", "desitter-ode", "fock", "all"}));
  val->add_option("--dim", fock_dim, "Fock truncation dimension");
  add_io(val);

  OracleOptions oracle;
  CLI::App* orc = app.add_subcommand("oracle-run", "free-form mode-equation integration");
  orc->add_option("--profile", oracle.profile, "constant, switched, smooth, or desitter")
      ->required()
      ->check(CLI::IsMember({"constant", "switched", "smooth", "desitter"}));
  orc->add_option("--omega", oracle.omega, "constant profile frequency");
  orc->add_option("--omega-in", oracle.omega_in, "in-plateau frequency");
  orc->add_option("--omega-out", oracle.omega_out, "out-plateau frequency");
  orc->add_option("--t0", oracle.t0, "smooth transition start");
  orc->add_option("--t1", oracle.t1, "smooth transition end");
  orc->add_option("--steepness", oracle.steepness, "smooth transition steepness");
  orc->add_option("--k", oracle.k, "de Sitter mode wavenumber");
  orc->add_option("--m-over-h", oracle.m_over_h, "de Sitter mass in Hubble units");
  orc->add_flag("--massive", oracle.massive,
                "use the massive de Sitter profile (exploratory)");
  orc->add_option("--t-start", oracle.t_start, "integration start time")->required();
  orc->add_option("--t-end", oracle.t_end, "integration end time")->required();
  orc->add_option("--step", oracle.step, "RK4 step upper bound")->required();
  orc->add_flag("--richardson", oracle.richardson, "attach a step-halving error estimate");
  orc->add_option("--trace", oracle.trace_path, "write a CSV trajectory to this path");
  orc->add_option("--trace-points", oracle.trace_points, "trace resolution");
  add_io(orc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2; --help/--version exit 0
  }

  try {
    if (sw->parsed()) return run_switch(switch_grid, format, output);
    if (ds->parsed()) return run_desitter(ds_grid, !no_peak, format, output);
    if (val->parsed()) return run_validate(suite, fock_dim, format, output);
    if (orc->parsed()) return run_oracle(oracle, format, output);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
