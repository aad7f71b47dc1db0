#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polymod/quadrature.hpp"

using namespace polymod;

TEST_CASE("Gauss-Legendre rule is symmetric and integrates constants") {
  const auto& r = gauss_legendre_32();
  double wsum = 0.0;
  for (std::size_t i = 0; i < kGaussNodes; ++i) {
    wsum += r.weights[i];
    CHECK(r.nodes[i] == doctest::Approx(-r.nodes[kGaussNodes - 1 - i]).epsilon(1e-15));
  }
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("polynomials up to degree 63 are exact on one panel") {
  const auto& r = gauss_legendre_32();
  for (int deg : {0, 1, 10, 31, 62}) {
    double s = 0.0;
    for (std::size_t i = 0; i < kGaussNodes; ++i) s += r.weights[i] * std::pow(r.nodes[i], deg);
    const double exact = deg % 2 ? 0.0 : 2.0 / (deg + 1);
    CHECK(s == doctest::Approx(exact).epsilon(1e-14));
  }
}

TEST_CASE("adaptive integration of smooth and peaked integrands") {
  auto f = [](double x) { return std::complex<double>(std::exp(x), std::sin(x)); };
  const auto v = integrate(f, 0.0, 2.0);
  CHECK(v.real() == doctest::Approx(std::exp(2.0) - 1.0).epsilon(1e-14));
  CHECK(v.imag() == doctest::Approx(1.0 - std::cos(2.0)).epsilon(1e-14));

  auto peak = [](double x) { return std::complex<double>(1.0 / (1e-4 + x * x), 0.0); };
  const double exact = 2.0 * std::atan(1.0 / 1e-2) / 1e-2;
  CHECK(integrate(peak, -1.0, 1.0).real() == doctest::Approx(exact).epsilon(1e-11));
}

TEST_CASE("square-root endpoint singularity after t = s^2") {
  // int_0^1 dt / sqrt(t (2 - t)) = pi/2, with t = s^2: int_0^1 2 ds / sqrt(2 - s^2).
  auto g = [](double s) { return std::complex<double>(2.0 / std::sqrt(2.0 - s * s), 0.0); };
  CHECK(integrate(g, 0.0, 1.0).real() == doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
}

TEST_CASE("panel doubling changes nothing beyond 1e-9") {
  auto g = [](double s) { return std::complex<double>(std::cos(30.0 * s) / (1.1 - s), 0.0); };
  QuadratureOptions one;
  QuadratureOptions two;
  two.initial_panels = 2;
  QuadratureOptions four;
  four.initial_panels = 4;
  const double a = integrate(g, 0.0, 1.0, one).real();
  CHECK(std::abs(a - integrate(g, 0.0, 1.0, two).real()) <= 1e-9 * std::abs(a));
  CHECK(std::abs(a - integrate(g, 0.0, 1.0, four).real()) <= 1e-9 * std::abs(a));
  CHECK(integrate(g, 0.5, 0.5) == std::complex<double>(0.0));
}
