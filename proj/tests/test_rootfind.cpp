#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polymod/errors.hpp"
#include "polymod/rootfind.hpp"

using namespace polymod;

TEST_CASE("bracketed_root finds simple roots to full precision") {
  CHECK(bracketed_root([](double x) { return x * x - 2.0; }, 0.0, 2.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-16));
  CHECK(bracketed_root([](double x) { return std::cos(x); }, 0.0, 3.0) ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-16));
  const double r = bracketed_root([](double x) { return std::exp(x) - 1e-20; }, -100.0, 0.0);
  CHECK(std::abs(r - std::log(1e-20)) <= 4e-16 * std::abs(r));
}

TEST_CASE("roots at tiny scales are not cut short") {
  // f is ~1 at the bracket ends but ~1e-30 near the root.
  const double root = 3e-11;
  const double r = bracketed_root([&](double x) { return (x - root) * (x * x + 1e-20); }, -1.0, 1.0);
  CHECK(std::abs(r - root) <= 1e-15 * root);
}

TEST_CASE("endpoint zeros are returned exactly") {
  CHECK(bracketed_root([](double x) { return x - 1.0; }, 1.0, 2.0) == 1.0);
  CHECK(bracketed_root([](double x) { return x - 2.0; }, 1.0, 2.0) == 2.0);
}

TEST_CASE("bracket errors") {
  CHECK_THROWS_AS(bracketed_root([](double x) { return x * x + 1.0; }, -1.0, 1.0), BracketError);
  CHECK_THROWS_AS(bracketed_root([](double x) { return x; }, 1.0, -1.0), BracketError);
  CHECK_THROWS_AS(Bracket::make([](double) { return std::nan(""); }, 0.0, 1.0), BracketError);
  const Bracket b = Bracket::make([](double x) { return x; }, -1.0, 1.0);
  CHECK(b.lo_sign == -1);
  CHECK(b.hi_sign == 1);
  CHECK(b.contains(0.5));
  CHECK_FALSE(b.contains(1.5));
  // Signs recorded for one function do not fit another.
  CHECK_THROWS_AS(bracketed_root([](double x) { return -x; }, b), BracketError);
}

TEST_CASE("a loose tolerance stops earlier but stays in the bracket") {
  int calls_tight = 0;
  int calls_loose = 0;
  bracketed_root([&](double x) { ++calls_tight; return std::tanh(x - 0.3); }, -2.0, 2.0);
  const double r = bracketed_root([&](double x) { ++calls_loose; return std::tanh(x - 0.3); }, -2.0, 2.0, 1e-4);
  CHECK(calls_loose <= calls_tight);
  CHECK(std::abs(r - 0.3) < 1e-3);
}

TEST_CASE("newton_polish improves a rough root and respects the guard") {
  auto f = [](double x) { return x * x * x - 2.0; };
  auto df = [](double x) { return 3.0 * x * x; };
  const Bracket g = Bracket::make(f, 1.0, 2.0);
  const double x = newton_polish(f, df, 1.3, g);
  CHECK(x == doctest::Approx(std::cbrt(2.0)).epsilon(1e-15));
  // Zero slope leaves the start point untouched.
  CHECK(newton_polish([](double) { return 1.0; }, [](double) { return 0.0; }, 0.5, g) == 0.5);
}
