#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "heatlab/models.hpp"
#include "oracles.hpp"

using namespace heatlab;
using namespace heatlab::models;

TEST_CASE("Epsilon rejects negative and non-finite values") {
  CHECK_THROWS_AS(Epsilon(-0.1), DomainError);
  CHECK_THROWS_AS(Epsilon(NAN), DomainError);
  CHECK(Epsilon(0.0).is_linear_limit());
}

TEST_CASE("model1_exact boundary values and linear limit") {
  for (double e : {0.1, 1.0, 7.5}) {
    CHECK(model1_exact(0.0, Epsilon(e)) == 1.0);
    CHECK(model1_exact(1.0, Epsilon(e)) == 0.0);
  }
  CHECK(model1_exact(0.5, Epsilon(0.0)) == 0.5);
  // Small-eps numeric limit of the printed form: u -> 1 - x.
  CHECK(std::abs(model1_exact(0.5, Epsilon(1e-9)) - 0.5) < 1e-9);
  CHECK_THROWS_AS(model1_exact(1.5, Epsilon(1.0)), DomainError);
}

TEST_CASE("model1_exact matches the printed expression") {
  for (double e : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    for (int i = 0; i <= 20; ++i) {
      const double x = i / 20.0;
      CHECK(std::abs(model1_exact(x, Epsilon(e)) - testing::model1_printed(x, e)) < 1e-14);
      CHECK(std::abs(model1_exact_derivative(x, Epsilon(e)) - testing::model1_printed_derivative(x, e)) < 1e-13);
    }
  }
}

TEST_CASE("model1_exact boundary values for random eps") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(1e-6, 10.0);
  for (int i = 0; i < 20; ++i) {
    const Epsilon eps(dist(rng));
    CHECK(model1_exact(0.0, eps) == 1.0);
    CHECK(model1_exact(1.0, eps) == 0.0);
  }
}

TEST_CASE("model1_flux") {
  CHECK(model1_flux(1.0, 0.0, Epsilon(1.0)) == 0.0);
  CHECK(model1_flux(0.3, -1.0, Epsilon(0.0)) == -1.0);
  const double e = 1.0;
  const double f0 = model1_flux(testing::model1_printed(0.0, e), testing::model1_printed_derivative(0.0, e), Epsilon(e));
  const double f5 = model1_flux(testing::model1_printed(0.5, e), testing::model1_printed_derivative(0.5, e), Epsilon(e));
  CHECK(std::abs(f0 - f5) < 1e-14);
}

TEST_CASE("model1 flux is constant along the exact solution") {
  for (double e : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const Epsilon eps(e);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i <= 100; ++i) {
      const double x = i / 100.0;
      const double f = model1_flux(model1_exact(x, eps), model1_exact_derivative(x, eps), eps);
      lo = std::min(lo, f);
      hi = std::max(hi, f);
    }
    CHECK((hi - lo) / std::abs(lo) < 1e-10);
  }
}

TEST_CASE("model1_slope_at_0") {
  CHECK(std::abs(model1_slope_at_0(Epsilon(1e-12)) + 1.0) < 1e-11);
  CHECK(model1_slope_at_0(Epsilon(1.0)) == doctest::Approx(-0.75));
  CHECK(model1_slope_at_0(Epsilon(2.0)) == doctest::Approx(-2.0 / 3.0));
  // Finite-difference oracle on the printed solution.
  for (double e : {1.0, 2.0}) {
    const double h = 1e-6;
    const double fd = (testing::model1_printed(h, e) - testing::model1_printed(0.0, e)) / h;
    CHECK(std::abs(fd - model1_slope_at_0(Epsilon(e))) < 1e-5);
  }
}

TEST_CASE("model3_implicit_solve") {
  CHECK(model3_implicit_solve(0.0, Epsilon(0.7)) == 1.0);
  CHECK(model3_implicit_solve(1.0, Epsilon(0.0)) == doctest::Approx(0.36787944117).epsilon(1e-11));

  const Epsilon eps(0.7);
  const double u = model3_implicit_solve(1.0, eps, 1e-13);
  const double oracle = testing::bisect([](double v) { return std::log(v) + 0.7 * (v - 1.0) + 1.0; }, 1e-3, 1.0);
  CHECK(std::abs(u - oracle) < 1e-12);
  CHECK(std::abs(u - 0.516170041858515181756) < 1e-12);
  CHECK(std::abs(model3_implicit_residual(1.0, u, eps)) <= 1e-13);
  CHECK_THROWS_AS(model3_implicit_solve(-1.0, eps), DomainError);
}

TEST_CASE("model3_implicit_solve is strictly decreasing in x") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> xs(0.0, 5.0);
  for (double e : {0.2, 0.7, 3.0}) {
    std::vector<double> grid(50);
    for (auto& x : grid) x = xs(rng);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    double prev = 2.0;
    for (double x : grid) {
      const double u = model3_implicit_solve(x, Epsilon(e));
      CHECK(u < prev);
      CHECK(u > 0.0);
      CHECK(std::abs(model3_implicit_residual(x, u, Epsilon(e))) <= 1e-12);
      prev = u;
    }
  }
}

TEST_CASE("model2_lie_claimed") {
  for (double e : {0.1, 0.7, 1.0}) CHECK(std::abs(model2_lie_claimed(1.0, Epsilon(e)) - 1.0) < 1e-15);

  // Two independent codings of the proposed expression at x = 0.
  const double a = std::sqrt(9.0 * 0.7 / 10.0);
  const double direct = std::pow(a * 0.0 + 1.0 - a, -2.0 / 3.0);
  const double via_cbrt = 1.0 / std::cbrt((1.0 - std::sqrt(0.63)) * (1.0 - std::sqrt(0.63)));
  CHECK(std::abs(model2_lie_claimed(0.0, Epsilon(0.7)) - direct) < 1e-14);
  CHECK(std::abs(model2_lie_claimed(0.0, Epsilon(0.7)) - via_cbrt) < 1e-13);
  CHECK(std::abs(direct - 2.86441642172768989868) < 1e-13);

  try {
    model2_lie_claimed(0.0, Epsilon(10.0 / 9.0));
    FAIL("expected SingularityError");
  } catch (const SingularityError& e) {
    CHECK(e.abscissa() == 0.0);
  }
}

TEST_CASE("model2_lie_claimed derivatives match finite differences") {
  const Epsilon eps(0.7);
  for (double x : {0.1, 0.4, 0.9}) {
    auto u = [&](double t) { return model2_lie_claimed(t, eps); };
    auto du = [&](double t) { return model2_lie_claimed_derivative(t, eps); };
    CHECK(std::abs(testing::central_difference(u, x, 1e-5) - du(x)) < 1e-7 * std::abs(du(x)));
    const double d2 = model2_lie_claimed_second_derivative(x, eps);
    CHECK(std::abs(testing::central_difference(du, x, 1e-5) - d2) < 1e-7 * std::abs(d2));
  }
}

TEST_CASE("lie_claim_audit at eps = 0.7") {
  const auto r = lie_claim_audit(Epsilon(0.7));
  CHECK(std::abs(r.bc_at_1_residual) < 1e-12);
  // -(2/3) a c^(-5/3), a = sqrt(0.63), c = 1 - a, evaluated in extended precision.
  CHECK(std::abs(r.derivative_at_0 - (-7.34800431829682571)) < 1e-12);
  CHECK(r.max_ode_residual < 1e-10);
  CHECK_FALSE(r.singular_at_origin);
}

TEST_CASE("lie_claim_audit: solves the ODE but violates u'(0) = 0") {
  for (double e : {0.3, 0.7, 1.0}) {
    const auto r = lie_claim_audit(Epsilon(e));
    CHECK(r.max_ode_residual < 1e-10);
    CHECK(std::abs(r.derivative_at_0) > 0.1);
    CHECK(r.bc_at_1_residual == doctest::Approx(0.0));
  }
}

TEST_CASE("lie_claim_audit flags the singular case") {
  const auto r = lie_claim_audit(Epsilon(10.0 / 9.0));
  CHECK(r.singular_at_origin);
  CHECK(std::isinf(r.derivative_at_0));
  CHECK(std::abs(r.bc_at_1_residual) < 1e-12);
  CHECK(lie_singular_at_origin(Epsilon(10.0 / 9.0)));
  CHECK_FALSE(lie_singular_at_origin(Epsilon(1.1)));
  CHECK_THROWS_AS(lie_claim_audit(Epsilon(2.0)), SingularityError);
  CHECK_THROWS_AS(lie_claim_audit(Epsilon(0.7), 1), DomainError);
}

TEST_CASE("ode_residual") {
  CHECK(ode_residual(ModelId::Model2, 1.0, 0.0, 0.7, Epsilon(0.7)) == 0.0);
  CHECK(ode_residual(ModelId::Model3, 1.0, -1.0 / 1.7, 0.0, Epsilon(0.7)) == doctest::Approx(0.0));
  const double x = 0.3;
  const double e = 1.0;
  const double r = ode_residual(ModelId::Model1, testing::model1_printed(x, e), testing::model1_printed_derivative(x, e),
                                testing::model1_printed_second_derivative(x, e), Epsilon(e));
  CHECK(std::abs(r) < 1e-12);
}
