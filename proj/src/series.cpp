#include "heatlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "heatlab/numerics.hpp"

namespace heatlab::series {

PowerSeries::PowerSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("PowerSeries: needs at least one coefficient");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!std::isfinite(coeffs_[k])) throw NonFiniteError("PowerSeries coefficient", static_cast<double>(k));
  }
}

double PowerSeries::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PowerSeries cauchy_product(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<double> out(n + 1, 0.0);
  for (std::size_t k = 0; k <= n; ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j <= k; ++j) acc += a[j] * b[k - j];
    out[k] = acc;
  }
  return PowerSeries(std::move(out));
}

double series_eval(const PowerSeries& s, double x) { return s(x); }

PowerSeries series_derivative(const PowerSeries& s) {
  if (s.order() < 1) throw DomainError("series_derivative: requires order >= 1");
  std::vector<double> out(s.order());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = static_cast<double>(k + 1) * s[k + 1];
  return PowerSeries(std::move(out));
}

PowerSeries model2_coeffs(double u0, Epsilon eps, std::size_t order) {
  if (!(u0 > 0.0)) throw DomainError("model2_coeffs: requires u0 > 0");
  if (order < 2) throw DomainError("model2_coeffs: requires order >= 2");
  const double e = eps.value();

  std::vector<double> u(order + 1, 0.0);
  std::vector<double> sq(order + 1, 0.0);    // (u^2)_n
  std::vector<double> quad(order + 1, 0.0);  // (u^4)_n
  u[0] = u0;
  for (std::size_t n = 0; n + 2 <= order; ++n) {
    double s = 0.0;
    for (std::size_t j = 0; j <= n; ++j) s += u[j] * u[n - j];
    sq[n] = s;
    double q = 0.0;
    for (std::size_t j = 0; j <= n; ++j) q += sq[j] * sq[n - j];
    quad[n] = q;
    u[n + 2] = e * q / static_cast<double>((n + 1) * (n + 2));
  }
  return PowerSeries(std::move(u));
}

PowerSeries model1_coeffs(double slope, Epsilon eps, std::size_t order) {
  if (order < 2) throw DomainError("model1_coeffs: requires order >= 2");
  const double e = eps.value();

  std::vector<double> u(order + 1, 0.0);
  u[0] = 1.0;
  u[1] = slope;
  for (std::size_t n = 0; n + 2 <= order; ++n) {
    // eps * (u * u'')_n without the k = 0 term, which moves to the left side.
    double curvature = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      const std::size_t m = n - k;
      curvature += u[k] * static_cast<double>((m + 1) * (m + 2)) * u[m + 2];
    }
    // ((u')^2)_n
    double slope_sq = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
      slope_sq += static_cast<double>(j + 1) * u[j + 1] * static_cast<double>(n - j + 1) * u[n - j + 1];
    }
    u[n + 2] = -e * (curvature + slope_sq) / ((1.0 + e) * static_cast<double>((n + 1) * (n + 2)));
  }
  return PowerSeries(std::move(u));
}

ShootingResult shoot_model2(Epsilon eps, std::size_t order, double tol) {
  if (!(eps.value() > 0.0)) throw DomainError("shoot_model2: requires eps > 0");
  if (order < 4) throw DomainError("shoot_model2: requires order >= 4");

  auto mismatch = [&](double u0) { return model2_coeffs(u0, eps, order)(1.0) - 1.0; };
  numerics::Bracket bracket;
  try {
    bracket = numerics::make_bracket(mismatch, 1e-6, 1.0);
  } catch (const BracketError& err) {
    std::ostringstream os;
    os << "shoot_model2: eps = " << eps.value() << ", N = " << order
       << ": u^[N](1) = 1 has no root in (1e-6, 1] (series diverging at x = 1?): " << err.what();
    throw BracketError(os.str());
  }
  const auto root = numerics::find_root(mismatch, bracket, tol);
  return {root.root, order, root.residual, model2_coeffs(root.root, eps, order)};
}

ShootingResult shoot_model1(Epsilon eps, std::size_t order, double tol) {
  if (!(eps.value() > 0.0)) throw DomainError("shoot_model1: requires eps > 0");
  if (order < 4) throw DomainError("shoot_model1: requires order >= 4");

  auto mismatch = [&](double slope) { return model1_coeffs(slope, eps, order)(1.0); };
  const double lo = -(2.0 + eps.value()) / 2.0 - 1.0;
  numerics::Bracket bracket;
  try {
    bracket = numerics::make_bracket(mismatch, lo, 0.0);
  } catch (const BracketError& err) {
    std::ostringstream os;
    os << "shoot_model1: eps = " << eps.value() << ", N = " << order << ": " << err.what();
    throw BracketError(os.str());
  }
  const auto root = numerics::find_root(mismatch, bracket, tol);
  return {root.root, order, root.residual, model1_coeffs(root.root, eps, order)};
}

double radius_estimate(const PowerSeries& s) {
  const auto c = s.coeffs();
  bool even_only = s.order() >= 1;
  for (std::size_t k = 1; k < c.size(); k += 2) even_only = even_only && c[k] == 0.0;
  const std::size_t step = even_only ? 2 : 1;

  std::size_t top = s.order();
  if (even_only && top % 2 == 1) --top;
  std::size_t run = 0;
  for (std::size_t k = top + step; k >= step && c[k - step] != 0.0; k -= step) ++run;
  if (run < 6) {
    std::ostringstream os;
    os << "radius_estimate: need 6 trailing nonzero coefficients, found " << run;
    throw DomainError(os.str());
  }

  double sum = 0.0;
  for (std::size_t p = 0; p < 3; ++p) {
    const std::size_t hi = top - p * step;
    const double ratio = std::abs(c[hi - step] / c[hi]);
    sum += step == 2 ? std::sqrt(ratio) : ratio;
  }
  return sum / 3.0;
}

}  // namespace heatlab::series
