#include "heatlab/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace heatlab {

namespace {

std::string with_abscissa(const std::string& what, double x) {
  std::ostringstream os;
  os.precision(17);
  os << what << " at x = " << x;
  return os.str();
}

}  // namespace

DomainError::DomainError(const std::string& what, double abscissa)
    : std::domain_error(with_abscissa(what, abscissa)), abscissa_(abscissa), has_abscissa_(true) {}

NonFiniteError::NonFiniteError(const std::string& where, double abscissa)
    : DomainError(where + ": non-finite function value", abscissa) {}

SingularityError::SingularityError(const std::string& where, double abscissa)
    : DomainError(where + ": non-positive base", abscissa) {}

namespace numerics {

namespace {

constexpr int kMaxRootIterations = 200;
constexpr int kMaxQuadDepth = 40;

// QUADPACK qk15 nodes on [0, 1]; Kronrod nodes at odd index are the 7-point
// Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

double checked(const ScalarFn& f, double x, const char* where) {
  const double y = f(x);
  if (!std::isfinite(y)) throw NonFiniteError(where, x);
  return y;
}

struct Panel {
  double value;
  double error;
};

Panel gauss_kronrod15(const ScalarFn& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked(f, center, "integrate");
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = checked(f, center - dx, "integrate") + checked(f, center + dx, "integrate");
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

double adapt(const ScalarFn& f, double a, double b, double tol, int depth) {
  const Panel p = gauss_kronrod15(f, a, b);
  if (p.error <= tol) return p.value;
  const double mid = 0.5 * (a + b);
  if (depth >= kMaxQuadDepth || mid <= a || mid >= b) {
    std::ostringstream os;
    os.precision(17);
    os << "integrate: tolerance " << tol << " not met on [" << a << ", " << b << "]";
    throw ConvergenceError(os.str());
  }
  return adapt(f, a, mid, 0.5 * tol, depth + 1) + adapt(f, mid, b, 0.5 * tol, depth + 1);
}

bool opposite(double fa, double fb) { return (fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0); }

}  // namespace

Bracket make_bracket(const ScalarFn& f, double lo, double hi) {
  if (!(lo < hi)) throw BracketError("bracket requires lo < hi");
  const double flo = checked(f, lo, "bracket");
  const double fhi = checked(f, hi, "bracket");
  if (!opposite(flo, fhi)) {
    std::ostringstream os;
    os.precision(17);
    os << "no sign change on [" << lo << ", " << hi << "]: f(lo) = " << flo << ", f(hi) = " << fhi;
    throw BracketError(os.str());
  }
  return {lo, hi};
}

std::vector<Bracket> find_brackets(const ScalarFn& f, double lo, double hi, std::size_t n_scan) {
  if (!(lo < hi)) throw DomainError("find_brackets: requires lo < hi");
  if (n_scan < 2) throw DomainError("find_brackets: requires n_scan >= 2");

  const double step = (hi - lo) / static_cast<double>(n_scan - 1);
  auto node = [&](std::size_t i) { return i + 1 == n_scan ? hi : lo + step * static_cast<double>(i); };

  std::vector<Bracket> out;
  double x_prev = node(0);
  double f_prev = checked(f, x_prev, "find_brackets");
  for (std::size_t i = 1; i < n_scan; ++i) {
    const double x = node(i);
    const double fx = checked(f, x, "find_brackets");
    if (opposite(f_prev, fx)) {
      out.push_back({x_prev, x});
    } else if (fx == 0.0 && i + 1 < n_scan) {
      // Exact zero on a grid node: only a root if the sign actually flips.
      const double x_next = node(i + 1);
      if (opposite(f_prev, checked(f, x_next, "find_brackets"))) out.push_back({x_prev, x_next});
    }
    x_prev = x;
    f_prev = fx;
  }
  return out;
}

RootResult find_root(const ScalarFn& f, Bracket bracket, double tol) {
  if (!(tol > 0.0)) throw DomainError("find_root: tol must be positive");
  double a = bracket.lo;
  double b = bracket.hi;
  double fa = checked(f, a, "find_root");
  double fb = checked(f, b, "find_root");
  if (fa == 0.0) return {a, 0.0, 0};
  if (fb == 0.0) return {b, 0.0, 0};
  if (!opposite(fa, fb)) throw BracketError("find_root: bracket endpoints have the same sign");

  // Brent-Dekker. b is the best iterate, c the contrapoint, so [b, c] always
  // brackets the root.
  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  for (int iter = 1; iter <= kMaxRootIterations; ++iter) {
    if (opposite(fb, fc) == false) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double half_width = 0.5 * (c - b);
    if (std::abs(fb) <= tol || std::abs(c - b) <= tol) {
      return {b, fb, static_cast<std::size_t>(iter)};
    }
    // Interval can no longer shrink in floating point.
    const double mid = b + half_width;
    if (mid == b || mid == c) return {b, fb, static_cast<std::size_t>(iter)};

    const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * tol;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p;
      double q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * half_width * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * half_width * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * half_width * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = half_width;
        e = d;
      }
    } else {
      d = half_width;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : (half_width > 0.0 ? tol1 : -tol1);
    fb = checked(f, b, "find_root");
  }
  throw ConvergenceError("find_root: iteration cap reached");
}

double integrate(const ScalarFn& f, double a, double b, double tol) {
  if (!(a <= b)) throw DomainError("integrate: requires a <= b");
  if (!(tol > 0.0)) throw DomainError("integrate: tol must be positive");
  if (a == b) return 0.0;
  return adapt(f, a, b, tol, 0);
}

}  // namespace numerics
}  // namespace heatlab
