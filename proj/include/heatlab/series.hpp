#pragma once

// Truncated Taylor series about x = 0 and power-series shooting for the
// two boundary value models.

#include <cstddef>
#include <span>
#include <vector>

#include "heatlab/models.hpp"

namespace heatlab::series {

inline constexpr std::size_t kDefaultOrder = 30;

/// Coefficients c[0..N] of c[0] + c[1] x + ... + c[N] x^N.
class PowerSeries {
public:
  PowerSeries() : coeffs_(1, 0.0) {}
  /// Throws DomainError on an empty list or non-finite coefficient.
  explicit PowerSeries(std::vector<double> coeffs);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double operator[](std::size_t k) const { return coeffs_[k]; }

  static PowerSeries zero(std::size_t order) { return PowerSeries(std::vector<double>(order + 1, 0.0)); }

  /// Horner evaluation of the partial sum.
  double operator()(double x) const;

private:
  std::vector<double> coeffs_;
};

/// Truncated product; the result has order min(a.order(), b.order()).
PowerSeries cauchy_product(const PowerSeries& a, const PowerSeries& b);

double series_eval(const PowerSeries& s, double x);

/// Term-by-term derivative, order N-1. Requires N >= 1.
PowerSeries series_derivative(const PowerSeries& s);

/// Model2 Taylor coefficients from u(0) = u0, u'(0) = 0 via
/// u_{n+2} = eps (u^4)_n / ((n+1)(n+2)).
PowerSeries model2_coeffs(double u0, Epsilon eps, std::size_t order);

/// Model1 Taylor coefficients from u(0) = 1, u'(0) = slope by solving the
/// order-n balance of (1 + eps u) u'' + eps (u')^2 = 0 for u_{n+2}.
PowerSeries model1_coeffs(double slope, Epsilon eps, std::size_t order);

struct ShootingResult {
  double free_param = 0.0;  // u(0) for Model2, u'(0) for Model1
  std::size_t order = 0;
  double boundary_residual = 0.0;
  PowerSeries series;
};

/// Root u0 in (1e-6, 1] of u^[N](1) = 1.
ShootingResult shoot_model2(Epsilon eps, std::size_t order = kDefaultOrder, double tol = 1e-12);

/// Root slope in [-(2+eps)/2 - 1, 0) of u^[N](1) = 0.
ShootingResult shoot_model1(Epsilon eps, std::size_t order = kDefaultOrder, double tol = 1e-12);

/// Ratio-test radius from the tail of the series: mean of the last three
/// |c_n / c_{n+1}|, or of |c_n / c_{n+2}|^(1/2) when all odd coefficients
/// vanish. Needs a trailing run of at least six nonzero coefficients in the
/// relevant parity class.
double radius_estimate(const PowerSeries& s);

}  // namespace heatlab::series
