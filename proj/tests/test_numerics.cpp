#include <cmath>
#include <random>

#include "doctest.h"
#include "heatlab/ansatz.hpp"
#include "heatlab/numerics.hpp"
#include "oracles.hpp"

using namespace heatlab;
using namespace heatlab::numerics;

TEST_CASE("find_brackets locates a simple sign change") {
  const auto brackets = find_brackets([](double x) { return x * x - 1.0; }, 0.0, 2.0, 21);
  REQUIRE(brackets.size() == 1);
  CHECK(brackets[0].lo <= 1.0);
  CHECK(brackets[0].hi >= 1.0);
}

TEST_CASE("find_brackets ignores tangent roots") {
  CHECK(find_brackets([](double x) { return x * x; }, -1.0, 1.0, 21).empty());
}

TEST_CASE("find_brackets reports a root sitting on a grid node once") {
  const auto brackets = find_brackets([](double x) { return x; }, -1.0, 1.0, 21);
  REQUIRE(brackets.size() == 1);
  CHECK(brackets[0].lo < 0.0);
  CHECK(brackets[0].hi > 0.0);
}

TEST_CASE("find_brackets rejects non-finite samples with the abscissa") {
  try {
    find_brackets([](double x) { return x > 0.5 ? NAN : 1.0; }, 0.0, 1.0, 11);
    FAIL("expected NonFiniteError");
  } catch (const NonFiniteError& e) {
    CHECK(e.has_abscissa());
    CHECK(e.abscissa() == doctest::Approx(0.6));
  }
  CHECK_THROWS_AS(find_brackets([](double x) { return x; }, 1.0, 0.0, 5), DomainError);
  CHECK_THROWS_AS(find_brackets([](double x) { return x; }, 0.0, 1.0, 1), DomainError);
}

TEST_CASE("find_brackets on the hypervirial fit equation at eps = 0.7") {
  const Epsilon eps(0.7);
  auto f = [&](double b) { return ansatz::residual_closed(b, eps, ansatz::WeightChoice::Hypervirial); };
  const auto brackets = find_brackets(f, 0.05, 10.0, 200);
  REQUIRE(!brackets.empty());
  CHECK(brackets.front().lo <= 0.657);
  CHECK(brackets.front().hi >= 0.657);
  const auto root = find_root(f, brackets.front(), 1e-12);
  CHECK(std::abs(root.root - 0.657) < 5e-4);
}

TEST_CASE("find_root: sqrt(2) and the identity") {
  auto r = find_root([](double x) { return x * x - 2.0; }, {1.0, 2.0}, 1e-12);
  CHECK(std::abs(r.root - 1.4142135623730951) <= 1e-12);
  CHECK(std::abs(r.residual) <= 1e-11);

  r = find_root([](double x) { return x; }, {-1.0, 1.0}, 1e-12);
  CHECK(std::abs(r.root) <= 1e-12);
}

TEST_CASE("find_root rejects bad input") {
  CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, {-1.0, 1.0}, 1e-12), BracketError);
  CHECK_THROWS_AS(find_root([](double x) { return x; }, {-1.0, 1.0}, 0.0), DomainError);
  CHECK_THROWS_AS(make_bracket([](double x) { return x * x + 1.0; }, -1.0, 1.0), BracketError);
  CHECK_THROWS_AS(make_bracket([](double x) { return x; }, 1.0, -1.0), BracketError);
}

TEST_CASE("find_root stays inside the bracket and is deterministic") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> shift(-5.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double c = shift(rng);
    auto f = [c](double x) { return std::tanh(x - c) + 0.1 * (x - c); };
    const Bracket b{c - 3.7, c + 1.3};
    const auto r1 = find_root(f, b, 1e-12);
    const auto r2 = find_root(f, b, 1e-12);
    CHECK(r1.root >= b.lo);
    CHECK(r1.root <= b.hi);
    CHECK(r1.root == r2.root);
    CHECK(r1.iterations == r2.iterations);
    CHECK(std::abs(r1.root - c) <= 1e-11);
  }
}

TEST_CASE("integrate: trivial cases") {
  CHECK(integrate([](double x) { return x; }, 0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(integrate([](double) { return NAN; }, 0.3, 0.3) == 0.0);
  CHECK_THROWS_AS(integrate([](double x) { return x; }, 1.0, 0.0), DomainError);
}

TEST_CASE("integrate agrees with a brute-force trapezoid sum") {
  auto f = [](double x) {
    const double c = std::cosh(2.0 * x);
    return c * c;
  };
  // Trapezoid with 1e6 panels; its own error is about 4.5e-12.
  const double brute = testing::trapezoid(f, 0.0, 1.0, 1000000);
  CHECK(std::abs(brute - 3.911239649645518) < 1e-12);
  CHECK(std::abs(integrate(f, 0.0, 1.0, 1e-10) - brute) < 1e-10);
}

TEST_CASE("integrate reports non-finite integrand values") {
  try {
    integrate([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0);
    FAIL("expected NonFiniteError");
  } catch (const NonFiniteError& e) {
    CHECK(e.abscissa() == 0.5);
  }
}

TEST_CASE("integrate is exact for polynomials of degree <= 5") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ends(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = testing::random_polynomial(rng, static_cast<std::size_t>(trial % 6));
    double a = ends(rng);
    double b = ends(rng);
    if (a > b) std::swap(a, b);
    const double tol = 1e-10;
    CHECK(std::abs(integrate(p, a, b, tol) - (p.antiderivative(b) - p.antiderivative(a))) <= tol);
  }
}

TEST_CASE("integrate is linear") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> scalar(-4.0, 4.0);
  const double tol = 1e-10;
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = testing::random_polynomial(rng, 7);
    const auto g = testing::random_polynomial(rng, 9);
    const double alpha = scalar(rng);
    const double beta = scalar(rng);
    const double lhs = integrate([&](double x) { return alpha * f(x) + beta * g(x); }, -1.0, 1.5, tol);
    const double rhs = alpha * integrate(f, -1.0, 1.5, tol) + beta * integrate(g, -1.0, 1.5, tol);
    CHECK(std::abs(lhs - rhs) <= 10.0 * tol);
  }
}

TEST_CASE("integrate refines steep integrands") {
  // Integrand peaked near x = 0.3; exact value from the arctangent.
  const double k = 200.0;
  auto f = [k](double x) { return 1.0 / (1.0 + k * k * (x - 0.3) * (x - 0.3)); };
  const double exact = (std::atan(k * 0.7) + std::atan(k * 0.3)) / k;
  CHECK(std::abs(integrate(f, 0.0, 1.0, 1e-10) - exact) <= 1e-10);
}
