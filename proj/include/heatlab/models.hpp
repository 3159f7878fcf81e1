#pragma once

// The three heat-transfer models:
//
//   Model1  [1 + eps u] u'' + eps (u')^2 = 0,  u(0) = 1, u(1) = 0
//   Model2  u'' - eps u^4 = 0,                 u'(0) = 0, u(1) = 1
//   Model3  [1 + eps u] u' + u = 0,            u(0) = 1
//
// plus their closed or implicit solutions, and an audit of the proposed
// symmetry-reduction expression for Model2.

#include <cstddef>
#include <string_view>

#include "heatlab/errors.hpp"

namespace heatlab {

enum class ModelId { Model1, Model2, Model3 };

std::string_view to_string(ModelId model);

/// Dimensionless model parameter. Non-negative and finite; operations that
/// do not admit the linear limit reject zero themselves.
class Epsilon {
public:
  explicit Epsilon(double value);
  double value() const noexcept { return value_; }
  bool is_linear_limit() const noexcept { return value_ == 0.0; }

private:
  double value_;
};

namespace models {

/// u(x) = (sqrt((1+eps)^2 + [1-(1+eps)^2] x) - 1) / eps, evaluated in the
/// rationalized form (2+eps)(1-x) / (sqrt(...) + 1) so that eps -> 0 is
/// exact and the boundary values are reproduced bit for bit.
double model1_exact(double x, Epsilon eps);

/// u'(x) of the exact Model1 solution.
double model1_exact_derivative(double x, Epsilon eps);

/// (1 + eps u) u', conserved along every Model1 solution.
double model1_flux(double u, double uprime, Epsilon eps);

/// -(2 + eps) / (2 (1 + eps)).
double model1_slope_at_0(Epsilon eps);

/// Solves ln u + eps (u - 1) + x = 0 for u in (0, 1].
double model3_implicit_solve(double x, Epsilon eps, double tol = 1e-12);

/// Left-hand side ln u + eps (u - 1) + x of the implicit Model3 relation.
double model3_implicit_residual(double x, double u, Epsilon eps);

/// Proposed Model2 expression u = (a x + 1 - a)^(-2/3), a = sqrt(9 eps / 10).
/// Throws SingularityError where the base is not positive.
double model2_lie_claimed(double x, Epsilon eps);
double model2_lie_claimed_derivative(double x, Epsilon eps);
double model2_lie_claimed_second_derivative(double x, Epsilon eps);

struct LieAuditReport {
  double epsilon = 0.0;
  double bc_at_1_residual = 0.0;  // u(1) - 1
  double derivative_at_0 = 0.0;   // -inf when singular at the origin
  double max_ode_residual = 0.0;  // max |u'' - eps u^4| over the audit grid
  bool singular_at_origin = false;
};

/// True when 1 - sqrt(9 eps / 10) vanishes (eps = 10/9 up to rounding).
bool lie_singular_at_origin(Epsilon eps);

/// Checks the proposed expression against the Model2 ODE and both boundary
/// conditions on a uniform grid over [0, 1]. For eps = 10/9 the origin is
/// dropped from the grid and flagged. For eps > 10/9 the base turns negative
/// inside the interval and SingularityError is thrown.
LieAuditReport lie_claim_audit(Epsilon eps, std::size_t grid_n = 101);

/// Left-hand side of the model ODE at the given jet. Model3 is first order,
/// so `usecond` is ignored there.
double ode_residual(ModelId model, double u, double uprime, double usecond, Epsilon eps);

}  // namespace models
}  // namespace heatlab
