#pragma once

// Scalar root finding and 1-D quadrature shared by the solver modules.

#include <cstddef>
#include <functional>
#include <vector>

#include "heatlab/errors.hpp"

namespace heatlab::numerics {

using ScalarFn = std::function<double(double)>;

inline constexpr double kDefaultRootTol = 1e-12;
inline constexpr double kDefaultQuadTol = 1e-10;

/// Sign-change interval. Constructed only through `make_bracket` or
/// `find_brackets`, both of which check the invariant.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct RootResult {
  double root = 0.0;
  double residual = 0.0;
  std::size_t iterations = 0;
};

/// Validates lo < hi and a strict sign change of f; throws BracketError otherwise.
Bracket make_bracket(const ScalarFn& f, double lo, double hi);

/// Every cell of the uniform n_scan-point grid on [lo, hi] across which f
/// changes sign. A grid point where f is exactly zero is returned as a
/// bracket around it. Throws NonFiniteError at the first non-finite sample.
std::vector<Bracket> find_brackets(const ScalarFn& f, double lo, double hi, std::size_t n_scan);

/// Brent-Dekker: inverse quadratic / secant steps safeguarded by bisection.
/// Stops once |f(root)| <= tol or the enclosing interval is no wider than tol.
RootResult find_root(const ScalarFn& f, Bracket bracket, double tol = kDefaultRootTol);

/// Adaptive 15-point Gauss-Kronrod with interval halving against an
/// absolute error budget. a == b returns 0.
double integrate(const ScalarFn& f, double a, double b, double tol = kDefaultQuadTol);

}  // namespace heatlab::numerics
