#include "heatlab/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "heatlab/numerics.hpp"

namespace heatlab {

std::string_view to_string(ModelId model) {
  switch (model) {
    case ModelId::Model1:
      return "model1";
    case ModelId::Model2:
      return "model2";
    case ModelId::Model3:
      return "model3";
  }
  return "unknown";
}

Epsilon::Epsilon(double value) : value_(value) {
  if (!std::isfinite(value) || value < 0.0) throw DomainError("epsilon must be finite and non-negative");
}

namespace models {

namespace {

void require_unit_interval(double x, const char* where) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError(std::string(where) + ": x outside [0, 1]", x);
}

double lie_slope(Epsilon eps) { return std::sqrt(0.9 * eps.value()); }

double lie_base(double x, Epsilon eps, const char* where) {
  const double a = lie_slope(eps);
  const double base = a * x + (1.0 - a);
  if (!(base > 0.0)) throw SingularityError(where, x);
  return base;
}

}  // namespace

double model1_exact(double x, Epsilon eps) {
  require_unit_interval(x, "model1_exact");
  const double e = eps.value();
  if (eps.is_linear_limit()) return 1.0 - x;
  if (x == 0.0) return 1.0;
  const double radicand = 1.0 + e * (2.0 + e) * (1.0 - x);
  if (radicand < 0.0) throw DomainError("model1_exact: negative radicand", x);
  return (2.0 + e) * (1.0 - x) / (std::sqrt(radicand) + 1.0);
}

double model1_exact_derivative(double x, Epsilon eps) {
  require_unit_interval(x, "model1_exact_derivative");
  const double e = eps.value();
  const double radicand = 1.0 + e * (2.0 + e) * (1.0 - x);
  if (radicand <= 0.0) throw DomainError("model1_exact_derivative: non-positive radicand", x);
  return -(2.0 + e) / (2.0 * std::sqrt(radicand));
}

double model1_flux(double u, double uprime, Epsilon eps) { return (1.0 + eps.value() * u) * uprime; }

double model1_slope_at_0(Epsilon eps) {
  const double e = eps.value();
  return -(2.0 + e) / (2.0 * (1.0 + e));
}

double model3_implicit_residual(double x, double u, Epsilon eps) {
  return std::log(u) + eps.value() * (u - 1.0) + x;
}

double model3_implicit_solve(double x, Epsilon eps, double tol) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("model3_implicit_solve: requires x >= 0", x);
  if (!(tol > 0.0)) throw DomainError("model3_implicit_solve: tol must be positive");
  if (x == 0.0) return 1.0;
  if (eps.is_linear_limit()) return std::exp(-x);

  const double e = eps.value();
  // ln u >= -x - eps (1 - u) >= -x - eps on the solution.
  const double u_min = std::exp(-x - e);
  auto g = [&](double u) { return model3_implicit_residual(x, u, eps); };
  // g' = 1/u + eps, so a bracket of this width keeps |g| below tol.
  const double width_tol = tol / (1.0 / u_min + e);
  const auto res = numerics::find_root(g, numerics::make_bracket(g, u_min, 1.0), std::min(tol, width_tol));
  return res.root;
}

double model2_lie_claimed(double x, Epsilon eps) {
  return std::pow(lie_base(x, eps, "model2_lie_claimed"), -2.0 / 3.0);
}

double model2_lie_claimed_derivative(double x, Epsilon eps) {
  const double base = lie_base(x, eps, "model2_lie_claimed_derivative");
  return -(2.0 / 3.0) * lie_slope(eps) * std::pow(base, -5.0 / 3.0);
}

double model2_lie_claimed_second_derivative(double x, Epsilon eps) {
  const double base = lie_base(x, eps, "model2_lie_claimed_second_derivative");
  const double a = lie_slope(eps);
  return (10.0 / 9.0) * a * a * std::pow(base, -8.0 / 3.0);
}

bool lie_singular_at_origin(Epsilon eps) {
  return std::abs(1.0 - lie_slope(eps)) <= 4.0 * std::numeric_limits<double>::epsilon();
}

LieAuditReport lie_claim_audit(Epsilon eps, std::size_t grid_n) {
  if (!(eps.value() > 0.0)) throw DomainError("lie_claim_audit: requires eps > 0");
  if (grid_n < 2) throw DomainError("lie_claim_audit: requires grid_n >= 2");

  LieAuditReport report;
  report.epsilon = eps.value();
  report.singular_at_origin = lie_singular_at_origin(eps);
  report.bc_at_1_residual = model2_lie_claimed(1.0, eps) - 1.0;
  report.derivative_at_0 = report.singular_at_origin ? -std::numeric_limits<double>::infinity()
                                                     : model2_lie_claimed_derivative(0.0, eps);

  const double h = 1.0 / static_cast<double>(grid_n - 1);
  for (std::size_t i = report.singular_at_origin ? 1 : 0; i < grid_n; ++i) {
    const double x = i + 1 == grid_n ? 1.0 : h * static_cast<double>(i);
    const double r = ode_residual(ModelId::Model2, model2_lie_claimed(x, eps), model2_lie_claimed_derivative(x, eps),
                                  model2_lie_claimed_second_derivative(x, eps), eps);
    report.max_ode_residual = std::max(report.max_ode_residual, std::abs(r));
  }
  return report;
}

double ode_residual(ModelId model, double u, double uprime, double usecond, Epsilon eps) {
  const double e = eps.value();
  switch (model) {
    case ModelId::Model1:
      return (1.0 + e * u) * usecond + e * uprime * uprime;
    case ModelId::Model2:
      return usecond - e * (u * u) * (u * u);
    case ModelId::Model3:
      return (1.0 + e * u) * uprime + u;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace models
}  // namespace heatlab
