#include "heatlab/oracle.hpp"

#include <cmath>
#include <sstream>

#include "heatlab/numerics.hpp"

namespace heatlab {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Exact:
      return "exact";
    case Method::Taylor:
      return "taylor";
    case Method::Virial:
      return "virial";
    case Method::Hypervirial:
      return "hypervirial";
    case Method::Lie:
      return "lie";
    case Method::Rk4:
      return "rk4";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view label) {
  for (Method m : {Method::Exact, Method::Taylor, Method::Virial, Method::Hypervirial, Method::Lie, Method::Rk4}) {
    if (label == to_string(m)) return m;
  }
  return std::nullopt;
}

namespace oracle {

namespace {

void require_steps(std::size_t steps, const char* where) {
  if (steps < 10) throw DomainError(std::string(where) + ": requires steps >= 10");
}

// Advances the Model2 system one step of size h.
IvpState step_model2(const IvpState& s, double h, double e) {
  auto accel = [e](double u) { return e * (u * u) * (u * u); };
  const double k1u = s.v;
  const double k1v = accel(s.u);
  const double k2u = s.v + 0.5 * h * k1v;
  const double k2v = accel(s.u + 0.5 * h * k1u);
  const double k3u = s.v + 0.5 * h * k2v;
  const double k3v = accel(s.u + 0.5 * h * k2u);
  const double k4u = s.v + h * k3v;
  const double k4v = accel(s.u + h * k3u);
  return {s.x + h, s.u + h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u),
          s.v + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)};
}

double node(std::size_t i, std::size_t steps) {
  return i == steps ? 1.0 : static_cast<double>(i) / static_cast<double>(steps);
}

}  // namespace

SolutionProfile rk4_model2(double u0, Epsilon eps, std::size_t steps) {
  if (!(u0 > 0.0)) throw DomainError("rk4_model2: requires u0 > 0");
  require_steps(steps, "rk4_model2");

  const double h = 1.0 / static_cast<double>(steps);
  SolutionProfile out{Method::Rk4, eps.value(), {}};
  out.samples.reserve(steps + 1);
  IvpState s{0.0, u0, 0.0};
  out.samples.push_back({0.0, u0});
  for (std::size_t i = 1; i <= steps; ++i) {
    s = step_model2(s, h, eps.value());
    if (!std::isfinite(s.u) || !std::isfinite(s.v)) throw NonFiniteError("rk4_model2", node(i, steps));
    out.samples.push_back({node(i, steps), s.u});
  }
  return out;
}

double rk4_model2_mismatch(double u0, Epsilon eps, std::size_t steps) {
  if (!(u0 > 0.0)) throw DomainError("rk4_model2_mismatch: requires u0 > 0");
  require_steps(steps, "rk4_model2_mismatch");
  const double h = 1.0 / static_cast<double>(steps);
  IvpState s{0.0, u0, 0.0};
  for (std::size_t i = 1; i <= steps; ++i) s = step_model2(s, h, eps.value());
  if (!std::isfinite(s.u)) throw NonFiniteError("rk4_model2_mismatch", 1.0);
  return s.u - 1.0;
}

double rk4_shoot_model2(Epsilon eps, std::size_t steps, double tol) {
  if (!(eps.value() > 0.0)) throw DomainError("rk4_shoot_model2: requires eps > 0");
  auto mismatch = [&](double u0) { return rk4_model2_mismatch(u0, eps, steps); };
  return numerics::find_root(mismatch, numerics::make_bracket(mismatch, 1e-6, 1.0), tol).root;
}

SolutionProfile rk4_model3(Epsilon eps, std::size_t steps) {
  require_steps(steps, "rk4_model3");
  const double e = eps.value();
  const double h = 1.0 / static_cast<double>(steps);
  auto rate = [e](double u) { return -u / (1.0 + e * u); };

  SolutionProfile out{Method::Rk4, e, {}};
  out.samples.reserve(steps + 1);
  double u = 1.0;
  out.samples.push_back({0.0, u});
  for (std::size_t i = 1; i <= steps; ++i) {
    const double k1 = rate(u);
    const double k2 = rate(u + 0.5 * h * k1);
    const double k3 = rate(u + 0.5 * h * k2);
    const double k4 = rate(u + h * k3);
    u += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    out.samples.push_back({node(i, steps), u});
  }
  return out;
}

}  // namespace oracle
}  // namespace heatlab
