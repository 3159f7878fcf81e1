#include "heatlab/ansatz.hpp"

#include <cmath>
#include <sstream>

#include "heatlab/numerics.hpp"

namespace heatlab::ansatz {

std::string_view to_string(WeightChoice w) {
  switch (w) {
    case WeightChoice::Virial:
      return "virial";
    case WeightChoice::Hypervirial:
      return "hypervirial";
  }
  return "unknown";
}

double u_app(double x, double b) { return std::cosh(b * x) / std::cosh(b); }

double u_app_derivative(double x, double b) { return b * std::sinh(b * x) / std::cosh(b); }

double residual_closed(double b, Epsilon eps, WeightChoice w) {
  if (!(b >= 0.0)) throw DomainError("residual_closed: requires b >= 0", b);
  if (b > kClosedFormMaxB) throw DomainError("residual_closed: b beyond overflow guard", b);

  const double e = eps.value();
  const double b2 = b * b;
  const double b3 = b2 * b;
  const double y = std::exp(2.0 * b);
  const double y2 = y * y;
  const double y3 = y2 * y;
  const double y4 = y3 * y;
  const double y5 = y4 * y;

  // Terms grouped by powers of e^{2b}.
  if (w == WeightChoice::Virial) {
    return 3.0 * y5 * (5.0 * b2 - 2.0 * e) + 5.0 * y4 * (12.0 * b3 + 9.0 * b2 - 10.0 * e) +
           30.0 * y3 * (6.0 * b3 + b2 - 10.0 * e) + 30.0 * y2 * (6.0 * b3 - b2 + 10.0 * e) +
           5.0 * y * (12.0 * b3 - 9.0 * b2 + 10.0 * e) - 3.0 * (5.0 * b2 - 2.0 * e);
  }
  return 3.0 * y5 * (5.0 * b2 - e) + 5.0 * y4 * (9.0 * b2 - 5.0 * e) + 30.0 * y3 * (b2 - 5.0 * e) +
         30.0 * y2 * (5.0 * e - b2) + 5.0 * y * (5.0 * e - 9.0 * b2) - 3.0 * (5.0 * b2 - e);
}

namespace {

double weight(WeightChoice w, double u) { return w == WeightChoice::Virial ? u : 1.0; }
double weight_deriv(WeightChoice w) { return w == WeightChoice::Virial ? 1.0 : 0.0; }

}  // namespace

double residual_quadrature(double b, Epsilon eps, WeightChoice w, double tol) {
  if (!(b > 0.0)) throw DomainError("residual_quadrature: requires b > 0", b);
  const double e = eps.value();
  auto integrand = [&](double x) {
    const double u = u_app(x, b);
    const double du = u_app_derivative(x, b);
    return weight_deriv(w) * du * du + e * weight(w, u) * (u * u) * (u * u);
  };
  const double boundary = weight(w, u_app(1.0, b)) * u_app_derivative(1.0, b);
  return boundary - numerics::integrate(integrand, 0.0, 1.0, tol);
}

AnsatzFit fit(Epsilon eps, WeightChoice w, double tol, double b_max) {
  if (!(eps.value() > 0.0)) throw DomainError("ansatz fit: requires eps > 0");
  auto closed = [&](double b) { return residual_closed(b, eps, w); };
  const auto brackets = numerics::find_brackets(closed, kFitScanMin, b_max, kFitScanPoints);
  if (brackets.empty()) {
    std::ostringstream os;
    os << "ansatz fit (" << to_string(w) << ", eps = " << eps.value() << "): no sign change for b in [" << kFitScanMin
       << ", " << b_max << "]";
    throw BracketError(os.str());
  }
  const auto root = numerics::find_root(closed, brackets.front(), tol);

  AnsatzFit out;
  out.weight = w;
  out.eps = eps.value();
  out.b = root.root;
  out.u0_app = 1.0 / std::cosh(root.root);
  out.closed_residual = root.residual;
  out.quad_residual = residual_quadrature(root.root, eps, w);
  return out;
}

double general_hypervirial_residual(const std::function<double(double)>& f, const std::function<double(double)>& w,
                                    const std::function<double(double)>& w_deriv, const TrialFunction& trial,
                                    double tol) {
  auto integrand = [&](double x) {
    const double u = trial.value(x);
    const double du = trial.derivative(x);
    return w_deriv(u) * du * du + w(u) * f(u);
  };
  const double boundary =
      w(trial.value(1.0)) * trial.derivative(1.0) - w(trial.value(0.0)) * trial.derivative(0.0);
  return boundary - numerics::integrate(integrand, 0.0, 1.0, tol);
}

}  // namespace heatlab::ansatz
