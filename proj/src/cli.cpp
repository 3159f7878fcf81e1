#include "heatlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "heatlab/ansatz.hpp"
#include "heatlab/numerics.hpp"
#include "heatlab/series.hpp"

namespace heatlab::cli {

namespace {

using Clock = std::chrono::steady_clock;

void field(std::ostream& os, const char* key, double value) { os << key << '=' << csv::format_real(value) << '\n'; }
void field(std::ostream& os, const char* key, std::string_view value) { os << key << '=' << value << '\n'; }
void field(std::ostream& os, const char* key, std::size_t value) { os << key << '=' << value << '\n'; }

void report_elapsed(std::ostream& err, Clock::time_point start) {
  const std::chrono::duration<double, std::milli> ms = Clock::now() - start;
  err << "elapsed_ms=" << csv::format_real(ms.count()) << '\n';
}

ModelId model_from_number(int n) {
  switch (n) {
    case 1:
      return ModelId::Model1;
    case 2:
      return ModelId::Model2;
    case 3:
      return ModelId::Model3;
    default:
      throw std::invalid_argument("--model must be 1, 2 or 3");
  }
}

Epsilon positive_eps(double value) {
  if (!(value > 0.0) || !std::isfinite(value)) throw std::invalid_argument("--eps must be a positive finite number");
  return Epsilon(value);
}

Method require_method(ModelId model, std::string_view label) {
  const auto method = parse_method(label);
  if (!method) throw std::invalid_argument("unknown method '" + std::string(label) + "'");
  const auto allowed = methods_for(model);
  if (std::find(allowed.begin(), allowed.end(), *method) == allowed.end()) {
    throw std::invalid_argument("method '" + std::string(label) + "' is not available for " +
                                std::string(to_string(model)));
  }
  return *method;
}

// Step count for a grid-aligned RK4 run of at least the default resolution.
std::size_t aligned_steps(std::size_t grid_n) {
  const std::size_t cells = grid_n - 1;
  return cells * ((oracle::kDefaultSteps + cells - 1) / cells);
}

std::vector<double> unit_grid(std::size_t n) {
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = i + 1 == n ? 1.0 : static_cast<double>(i) / static_cast<double>(n - 1);
  return xs;
}

void emit(const csv::Table& table, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    csv::write(out, table);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
  csv::write(file, table);
}

void solve_model1(Epsilon eps, Method method, std::size_t order, std::ostream& out) {
  if (method == Method::Exact) {
    field(out, "slope", models::model1_slope_at_0(eps));
    double lo = INFINITY;
    double hi = -INFINITY;
    for (double x : unit_grid(101)) {
      const double flux =
          models::model1_flux(models::model1_exact(x, eps), models::model1_exact_derivative(x, eps), eps);
      lo = std::min(lo, flux);
      hi = std::max(hi, flux);
    }
    field(out, "flux", lo);
    field(out, "flux_relative_spread", (hi - lo) / std::abs(lo));
    return;
  }
  const auto shot = series::shoot_model1(eps, order);
  field(out, "order", shot.order);
  field(out, "slope", shot.free_param);
  field(out, "boundary_residual", shot.boundary_residual);
  field(out, "slope_exact", models::model1_slope_at_0(eps));
}

void solve_model2(Epsilon eps, Method method, std::size_t order, std::ostream& out) {
  switch (method) {
    case Method::Taylor: {
      const auto shot = series::shoot_model2(eps, order);
      field(out, "order", shot.order);
      field(out, "u0", shot.free_param);
      field(out, "boundary_residual", shot.boundary_residual);
      return;
    }
    case Method::Virial:
    case Method::Hypervirial: {
      const auto w = method == Method::Virial ? ansatz::WeightChoice::Virial : ansatz::WeightChoice::Hypervirial;
      const auto f = ansatz::fit(eps, w);
      field(out, "weight", ansatz::to_string(w));
      field(out, "b", f.b);
      field(out, "u0", f.u0_app);
      field(out, "closed_residual", f.closed_residual);
      field(out, "quad_residual", f.quad_residual);
      return;
    }
    case Method::Rk4:
      field(out, "steps", oracle::kDefaultSteps);
      field(out, "u0", oracle::rk4_shoot_model2(eps));
      return;
    case Method::Lie:
      field(out, "u0", models::model2_lie_claimed(0.0, eps));
      field(out, "derivative_at_0", models::model2_lie_claimed_derivative(0.0, eps));
      return;
    case Method::Exact:
      break;
  }
  throw std::invalid_argument("method not available for model2");
}

void solve_model3(Epsilon eps, Method method, std::ostream& out) {
  const double u1 = method == Method::Exact ? models::model3_implicit_solve(1.0, eps)
                                            : oracle::rk4_model3(eps).samples.back().u;
  field(out, "u_at_1", u1);
  field(out, "implicit_residual", models::model3_implicit_residual(1.0, u1, eps));
}

int cmd_solve(int model_number, double eps_value, const std::string& method_label, std::size_t order,
              std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const ModelId model = model_from_number(model_number);
  const Epsilon eps = positive_eps(eps_value);
  const Method method = require_method(model, method_label);

  field(out, "model", to_string(model));
  field(out, "method", to_string(method));
  field(out, "eps", eps.value());
  switch (model) {
    case ModelId::Model1:
      solve_model1(eps, method, order, out);
      break;
    case ModelId::Model2:
      solve_model2(eps, method, order, out);
      break;
    case ModelId::Model3:
      solve_model3(eps, method, out);
      break;
  }
  report_elapsed(err, start);
  return kSuccess;
}

int cmd_audit_lie(double eps_value, std::size_t grid_n, std::ostream& out) {
  const Epsilon eps = positive_eps(eps_value);
  const auto report = models::lie_claim_audit(eps, grid_n);
  field(out, "epsilon", report.epsilon);
  field(out, "bc_at_1_residual", report.bc_at_1_residual);
  field(out, "derivative_at_0", report.derivative_at_0);
  field(out, "max_ode_residual", report.max_ode_residual);
  field(out, "singular_at_origin", report.singular_at_origin ? "true" : "false");

  constexpr double kOdeTol = 1e-10;
  constexpr double kSlopeTol = 1e-8;
  std::string_view verdict;
  if (report.singular_at_origin) {
    verdict = "SINGULAR-AT-ORIGIN";
  } else if (report.max_ode_residual >= kOdeTol) {
    verdict = "FAIL-ODE";
  } else {
    verdict = std::abs(report.derivative_at_0) > kSlopeTol ? "PASS-ODE/FAIL-BC" : "PASS-ODE/PASS-BC";
  }
  field(out, "verdict", verdict);
  return kSuccess;
}

}  // namespace

std::vector<Method> methods_for(ModelId model) {
  switch (model) {
    case ModelId::Model1:
      return {Method::Exact, Method::Taylor};
    case ModelId::Model2:
      return {Method::Taylor, Method::Virial, Method::Hypervirial, Method::Lie, Method::Rk4};
    case ModelId::Model3:
      return {Method::Exact, Method::Rk4};
  }
  return {};
}

std::vector<double> sweep_grid(const SweepConfig& cfg) {
  if (!(cfg.eps_min > 0.0) || !(cfg.eps_min <= cfg.eps_max) || cfg.eps_steps < 1) {
    throw std::invalid_argument("sweep requires 0 < eps-min <= eps-max and eps-steps >= 1");
  }
  std::vector<double> grid(cfg.eps_steps);
  for (std::size_t i = 0; i < cfg.eps_steps; ++i) {
    grid[i] = cfg.eps_steps == 1 || i == 0 ? cfg.eps_min
              : i + 1 == cfg.eps_steps
                  ? cfg.eps_max
                  : cfg.eps_min + (cfg.eps_max - cfg.eps_min) * static_cast<double>(i) /
                                      static_cast<double>(cfg.eps_steps - 1);
  }
  return grid;
}

csv::Table sweep_table(const SweepConfig& cfg, std::ostream& diag) {
  csv::Table table;
  table.header.assign(std::begin(kSweepHeader), std::end(kSweepHeader));
  for (double e : sweep_grid(cfg)) {
    const Epsilon eps(e);
    std::vector<csv::Cell> row(table.header.size());
    row[0] = e;
    try {
      row[1] = series::shoot_model2(eps, cfg.order).free_param;
    } catch (const std::exception& ex) {
      diag << "warning: taylor failed at eps=" << csv::format_real(e) << ": " << ex.what() << '\n';
    }
    try {
      const auto f = ansatz::fit(eps, ansatz::WeightChoice::Virial);
      row[2] = f.u0_app;
      row[4] = f.b;
    } catch (const std::exception& ex) {
      diag << "warning: virial fit failed at eps=" << csv::format_real(e) << ": " << ex.what() << '\n';
    }
    try {
      const auto f = ansatz::fit(eps, ansatz::WeightChoice::Hypervirial);
      row[3] = f.u0_app;
      row[5] = f.b;
    } catch (const std::exception& ex) {
      diag << "warning: hypervirial fit failed at eps=" << csv::format_real(e) << ": " << ex.what() << '\n';
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

csv::Table profile_table(const ProfileConfig& cfg, std::ostream& diag) {
  if (cfg.grid_n < 2) throw std::invalid_argument("profile requires --grid >= 2");
  if (!(cfg.eps > 0.0)) throw std::invalid_argument("profile requires eps > 0");
  const Epsilon eps(cfg.eps);
  const auto allowed = methods_for(cfg.model);
  const auto methods = cfg.methods.empty() ? allowed : cfg.methods;
  for (Method m : methods) {
    if (std::find(allowed.begin(), allowed.end(), m) == allowed.end()) {
      throw std::invalid_argument("method '" + std::string(to_string(m)) + "' is not available for " +
                                  std::string(to_string(cfg.model)));
    }
  }

  const auto xs = unit_grid(cfg.grid_n);
  const std::size_t steps = aligned_steps(cfg.grid_n);
  const std::size_t stride = steps / (cfg.grid_n - 1);

  csv::Table table;
  table.header.emplace_back("x");
  table.rows.assign(xs.size(), std::vector<csv::Cell>{});
  for (std::size_t i = 0; i < xs.size(); ++i) table.rows[i].push_back(xs[i]);

  for (Method m : methods) {
    table.header.emplace_back(to_string(m));
    std::vector<csv::Cell> column(xs.size());
    try {
      switch (m) {
        case Method::Exact:
          for (std::size_t i = 0; i < xs.size(); ++i) {
            column[i] = cfg.model == ModelId::Model1 ? models::model1_exact(xs[i], eps)
                                                     : models::model3_implicit_solve(xs[i], eps);
          }
          break;
        case Method::Taylor: {
          const auto shot = cfg.model == ModelId::Model1 ? series::shoot_model1(eps, cfg.order)
                                                         : series::shoot_model2(eps, cfg.order);
          for (std::size_t i = 0; i < xs.size(); ++i) column[i] = shot.series(xs[i]);
          break;
        }
        case Method::Virial:
        case Method::Hypervirial: {
          const auto f = ansatz::fit(
              eps, m == Method::Virial ? ansatz::WeightChoice::Virial : ansatz::WeightChoice::Hypervirial);
          for (std::size_t i = 0; i < xs.size(); ++i) column[i] = ansatz::u_app(xs[i], f.b);
          break;
        }
        case Method::Lie:
          for (std::size_t i = 0; i < xs.size(); ++i) {
            try {
              column[i] = models::model2_lie_claimed(xs[i], eps);
            } catch (const SingularityError& ex) {
              diag << "warning: lie expression singular: " << ex.what() << '\n';
            }
          }
          break;
        case Method::Rk4: {
          const auto profile = cfg.model == ModelId::Model3
                                   ? oracle::rk4_model3(eps, steps)
                                   : oracle::rk4_model2(oracle::rk4_shoot_model2(eps, steps), eps, steps);
          for (std::size_t i = 0; i < xs.size(); ++i) column[i] = profile.samples[i * stride].u;
          break;
        }
      }
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception& ex) {
      column.assign(xs.size(), std::nullopt);
      diag << "warning: " << to_string(m) << " failed at eps=" << csv::format_real(cfg.eps) << ": " << ex.what()
           << '\n';
    }
    for (std::size_t i = 0; i < xs.size(); ++i) table.rows[i].push_back(column[i]);
  }
  return table;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"heatlab: nonlinear heat-transfer model solvers"};
  app.name("heatlab");
  app.require_subcommand(1);

  int model_number = 2;
  double eps = 0.7;
  std::string method = "taylor";
  std::size_t order = series::kDefaultOrder;
  std::size_t grid = 101;
  std::string out_path;
  SweepConfig sweep;
  std::vector<std::string> profile_methods;

  auto* solve_cmd = app.add_subcommand("solve", "Solve one model with one method and print a report");
  solve_cmd->add_option("--model", model_number, "Model number (1, 2 or 3)")->capture_default_str();
  solve_cmd->add_option("--eps", eps, "Model parameter epsilon")->capture_default_str();
  solve_cmd->add_option("--method", method, "exact|taylor|virial|hypervirial|lie|rk4")->capture_default_str();
  solve_cmd->add_option("--order", order, "Taylor truncation order N")->capture_default_str();

  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate u0 against epsilon for Model2");
  sweep_cmd->add_option("--eps-min", sweep.eps_min)->capture_default_str();
  sweep_cmd->add_option("--eps-max", sweep.eps_max)->capture_default_str();
  sweep_cmd->add_option("--eps-steps", sweep.eps_steps)->capture_default_str();
  sweep_cmd->add_option("--order", sweep.order)->capture_default_str();
  sweep_cmd->add_option("--out", sweep.output_path, "Output CSV (default: standard output)");

  auto* profile_cmd = app.add_subcommand("profile", "Tabulate u(x) on [0, 1] for several methods");
  profile_cmd->add_option("--model", model_number)->capture_default_str();
  profile_cmd->add_option("--eps", eps)->capture_default_str();
  profile_cmd->add_option("--method", profile_methods, "Comma-separated methods (default: all for the model)")
      ->delimiter(',');
  profile_cmd->add_option("--grid", grid)->capture_default_str();
  profile_cmd->add_option("--order", order)->capture_default_str();
  profile_cmd->add_option("--out", out_path, "Output CSV (default: standard output)");

  auto* audit_cmd = app.add_subcommand("audit-lie", "Check the proposed Model2 expression");
  audit_cmd->add_option("--eps", eps)->capture_default_str();
  audit_cmd->add_option("--grid", grid)->capture_default_str();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(model_number, eps, method, order, out, err);
    if (sweep_cmd->parsed()) {
      const auto start = Clock::now();
      const auto table = sweep_table(sweep, err);
      emit(table, sweep.output_path, out);
      report_elapsed(err, start);
      return kSuccess;
    }
    if (profile_cmd->parsed()) {
      const auto start = Clock::now();
      ProfileConfig cfg;
      cfg.model = model_from_number(model_number);
      cfg.eps = positive_eps(eps).value();
      cfg.grid_n = grid;
      cfg.order = order;
      cfg.output_path = out_path;
      for (const auto& label : profile_methods) cfg.methods.push_back(require_method(cfg.model, label));
      emit(profile_table(cfg, err), cfg.output_path, out);
      report_elapsed(err, start);
      return kSuccess;
    }
    if (audit_cmd->parsed()) {
      if (grid < 2) throw std::invalid_argument("--grid must be at least 2");
      return cmd_audit_lie(eps, grid, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kUsageError;
}

}  // namespace heatlab::cli
