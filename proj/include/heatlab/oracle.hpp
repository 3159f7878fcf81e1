#pragma once

// Fixed-step classical RK4 reference solutions, independent of the series
// and ansatz code paths.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "heatlab/models.hpp"

namespace heatlab {

enum class Method { Exact, Taylor, Virial, Hypervirial, Lie, Rk4 };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view label);

struct Sample {
  double x = 0.0;
  double u = 0.0;
};

/// Sampled u(x) on [0, 1] with strictly increasing x.
struct SolutionProfile {
  Method method = Method::Rk4;
  double eps = 0.0;
  std::vector<Sample> samples;
};

namespace oracle {

inline constexpr std::size_t kDefaultSteps = 10000;

struct IvpState {
  double x = 0.0;
  double u = 0.0;
  double v = 0.0;  // u'
};

/// u' = v, v' = eps u^4 from u(0) = u0, v(0) = 0; one sample per step.
SolutionProfile rk4_model2(double u0, Epsilon eps, std::size_t steps = kDefaultSteps);

/// u(1) - 1 of the Model2 initial value problem started at u0.
double rk4_model2_mismatch(double u0, Epsilon eps, std::size_t steps = kDefaultSteps);

/// u0 in (1e-6, 1] with rk4 u(1) = 1.
double rk4_shoot_model2(Epsilon eps, std::size_t steps = kDefaultSteps, double tol = 1e-12);

/// u' = -u / (1 + eps u) from u(0) = 1.
SolutionProfile rk4_model3(Epsilon eps, std::size_t steps = kDefaultSteps);

}  // namespace oracle
}  // namespace heatlab
