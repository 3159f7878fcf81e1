#pragma once

// Cosh trial function for Model2 fitted through the weighted integral
// identity
//
//   w(u(1)) u'(1) - w(u(0)) u'(0) = int_0^1 [w'(u) (u')^2 + w(u) f(u)] dx
//
// which holds for every solution of u'' = f(u).

#include <functional>
#include <string_view>

#include "heatlab/models.hpp"

namespace heatlab::ansatz {

enum class WeightChoice {
  Virial,       // w(u) = u
  Hypervirial,  // w(u) = 1
};

std::string_view to_string(WeightChoice w);

inline constexpr double kFitScanMin = 0.01;
inline constexpr double kFitScanMax = 10.0;
inline constexpr std::size_t kFitScanPoints = 500;
inline constexpr double kClosedFormMaxB = 60.0;

/// cosh(b x) / cosh(b). Satisfies u(1) = 1 and u'(0) = 0 for every b.
double u_app(double x, double b);
double u_app_derivative(double x, double b);

/// Closed-form fit equations in b as polynomials in (b, e^{2b}). Unnormalized;
/// b = 0 is always a root. Throws DomainError for b < 0 or b > 60.
double residual_closed(double b, Epsilon eps, WeightChoice w);

/// w(1) u'(1) - int_0^1 [w'(u)(u')^2 + eps w(u) u^4] dx with the cosh trial,
/// by adaptive quadrature.
double residual_quadrature(double b, Epsilon eps, WeightChoice w, double tol = 1e-12);

struct AnsatzFit {
  WeightChoice weight = WeightChoice::Hypervirial;
  double eps = 0.0;
  double b = 0.0;
  double u0_app = 1.0;  // 1 / cosh(b)
  double closed_residual = 0.0;
  double quad_residual = 0.0;
};

/// Smallest root of residual_closed on [b_min, b_max], located by a uniform
/// scan and refined to a bracket width of tol.
AnsatzFit fit(Epsilon eps, WeightChoice w, double tol = 1e-12, double b_max = kFitScanMax);

struct TrialFunction {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
};

/// Residual of the weighted identity for u'' = f(u), any weight and trial:
/// w(u(1)) u'(1) - w(u(0)) u'(0) - int_0^1 [w'(u)(u')^2 + w(u) f(u)] dx.
double general_hypervirial_residual(const std::function<double(double)>& f, const std::function<double(double)>& w,
                                    const std::function<double(double)>& w_deriv, const TrialFunction& trial,
                                    double tol = 1e-12);

}  // namespace heatlab::ansatz
