#include <doctest.h>

#include <cmath>
#include <random>

#include "polymod/errors.hpp"
#include "polymod/tetromino.hpp"
#include "reference_values.hpp"

using namespace polymod;

namespace {

struct Table {
  double H, lambda, alpha0, alpha1, beta1, alpha2, beta2, alpha3, beta3, A, mu, module;
};

constexpr Table kH1{1.0,
                    0.171572875253809,
                    0.245789017659106,
                    -0.464160413208352,
                    0.133934441008549,
                    0.162705672169886,
                    1.928338552532678,
                    0.163434755042730,
                    1.934124519781231,
                    0.014941124900985,
                    0.970557651996923,
                    3.558625812230538};
constexpr Table kH2{2.0,
                    0.707106781186547,
                    0.570342096440027,
                    -0.872092067525734,
                    0.004668104309033,
                    0.362162999160609,
                    4.560775977283309,
                    0.401188235613446,
                    5.475355432587552,
                    0.013080991981584,
                    0.974175821903443,
                    3.643277348370991};

bool close_rel(double x, double ref, double tol) { return std::abs(x - ref) <= tol * std::abs(ref); }

void check_table(const Table& t) {
  const TetrominoSolution s = solve_tetromino(t.H);
  CHECK(std::abs(s.lambda.k() - t.lambda) <= 1e-12);
  CHECK(std::abs(s.alpha0 - t.alpha0) <= 1e-12);
  CHECK(std::abs(s.alpha1 - t.alpha1) <= 1e-12);
  CHECK(std::abs(s.beta1 - t.beta1) <= 1e-12);
  CHECK(std::abs(s.alpha2 - t.alpha2) <= 1e-12);
  CHECK(std::abs(s.beta2 - t.beta2) <= 1e-12);
  CHECK(std::abs(s.alpha3 - t.alpha3) <= 1e-12);
  CHECK(std::abs(s.beta3 - t.beta3) <= 1e-12);
  CHECK(std::abs(s.A - t.A) <= 1e-12);
  CHECK(std::abs(s.mu.k() - t.mu) <= 1e-12);
  CHECK(std::abs(s.module - t.module) <= 1e-12);
}

}  // namespace

TEST_CASE("component operations at the tabulated inputs") {
  for (const Table& t : {kH1, kH2}) {
    CAPTURE(t.H);
    const double a0 = solve_alpha0_tet(t.lambda);
    CHECK(std::abs(a0 - t.alpha0) <= 1e-14);
    CHECK(std::abs(tetromino_r(t.lambda, a0)) <= 1e-13);
    CHECK(std::abs(h_tet_logderiv(t.alpha0, t.alpha2)) <= 1e-12);
    CHECK(std::abs(h_tet(t.alpha0, t.alpha2).real() - t.lambda) <= 1e-12);
    CHECK(std::abs(compute_c_tet(t.lambda, t.alpha0) - t.alpha2) <= 1e-13);
    CHECK(c_at_critical_point_tet(t.lambda, t.alpha0) == doctest::Approx(t.alpha2).epsilon(1e-12));
    const TetrominoAlphas al = solve_alphas_tet(t.lambda, t.alpha2, t.alpha0);
    CHECK(std::abs(al.alpha1 - t.alpha1) <= 1e-12);
    CHECK(std::abs(al.alpha3 - t.alpha3) <= 1e-12);
    CHECK(std::abs(h_tet(al.alpha1, t.alpha2).real() / t.lambda - 1.0) <= 1e-11);
    CHECK(std::abs(h_tet(al.alpha3, t.alpha2).real() * t.lambda - 1.0) <= 1e-11);
    CHECK(std::abs(betas_tet(t.alpha1) - t.beta1) <= 1e-12);
    CHECK(std::abs(betas_tet(t.alpha3) - t.beta3) <= 1e-12);
    const CrossRatio cr = mu_tet(t.beta1, t.beta2, t.beta3);
    CHECK(std::abs(cr.A - t.A) <= 1e-12);
    CHECK(std::abs(cr.mu.k() - t.mu) <= 1e-12);
  }
  CHECK_THROWS_AS(compute_c_tet(0.5, 0.1), InconsistentInputError);
  CHECK_THROWS_AS(solve_alphas_tet(0.5, 0.99, 0.6), InconsistentInputError);
  CHECK_THROWS_AS(betas_tet(1.0), DomainError);
  CHECK_THROWS_AS(mu_tet(1.0, 0.5, 2.0), DomainError);
}

TEST_CASE("H = 1 and H = 2 full tables") {
  check_table(kH1);
  check_table(kH2);
}

TEST_CASE("agreement with the 100-digit reference over H in [1/16, 30]") {
  for (const auto& r : reference::kTetrominoReferences) {
    CAPTURE(r.H);
    const TetrominoSolution s = solve_tetromino(r.H);
    const double tol = 5e-14;
    CHECK(close_rel(s.lambda.k(), r.lambda, tol));
    CHECK(close_rel(s.lambda.complement(), r.lambda_prime, tol));
    CHECK(close_rel(s.alpha0, r.alpha0, tol));
    CHECK(close_rel(s.alpha1, r.alpha1, tol));
    CHECK(close_rel(s.alpha2, r.alpha2, tol));
    CHECK(close_rel(s.alpha3, r.alpha3, tol));
    CHECK(close_rel(s.beta1, r.beta1, tol));
    CHECK(close_rel(s.beta2, r.beta2, tol));
    CHECK(close_rel(s.beta3, r.beta3, tol));
    CHECK(close_rel(s.A, r.A, tol));
    CHECK(close_rel(s.mu.k(), r.mu, tol));
    CHECK(close_rel(s.mu.complement(), r.mu_prime, 1e-12));
    CHECK(close_rel(s.module, r.module, tol));
  }
}

TEST_CASE("property: symmetries of h, 1000 random cases") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> uc(0.01, 0.99);
  std::uniform_real_distribution<double> th(0.0, 6.283185307179586);
  double inv = 0.0, conj = 0.0, circle = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double c = uc(rng);
    const std::complex<double> z(u(rng), u(rng));
    const auto hz = h_tet(z, c);
    inv = std::max(inv, std::abs(h_tet(1.0 / z, c) * hz - 1.0));
    conj = std::max(conj, std::abs(h_tet(std::conj(z), c) - std::conj(hz)) / std::abs(hz));
    circle = std::max(circle, std::abs(std::abs(h_tet(std::polar(1.0, th(rng)), c)) - 1.0));
  }
  CHECK(inv <= 1e-12);
  CHECK(conj <= 1e-12);
  CHECK(circle <= 1e-12);
  CHECK_THROWS_AS(h_tet(0.3, 0.3), PoleError);
}

TEST_CASE("property: ordering chain, residuals and cross ratio over 50 H in [1/8, 20]") {
  for (int i = 0; i < 50; ++i) {
    const double H = 0.125 * std::pow(160.0, i / 49.0);
    CAPTURE(H);
    const TetrominoSolution s = solve_tetromino(H);
    CHECK(-1.0 < s.alpha1);
    CHECK(s.alpha1 < 0.0);
    CHECK(0.0 < s.alpha2);
    // For H below ~0.2, alpha3 - c is under one ulp of c, so the strict
    // inequality is carried by the solved offset.
    CHECK(s.pole_gap3 > 0.0);
    CHECK(s.alpha2 <= s.alpha3);
    CHECK(s.alpha3 < s.alpha0);
    CHECK(s.alpha0 < 1.0);
    CHECK(s.beta1 < s.beta2);
    CHECK(s.beta2 <= s.beta3);
    CHECK(std::abs(tetromino_r(s.lambda.k(), s.alpha0)) <= 1e-13);
    const TetrominoResiduals r = root_residuals(s);
    CHECK(r.alpha1 <= 1e-13);
    CHECK(r.alpha3 <= 1e-13);
    CHECK(std::abs(s.mu.k() - (1.0 - s.A) / (1.0 + s.A)) <= 1e-13);
  }
}

TEST_CASE("large-H limits") {
  const TetrominoSolution s = solve_tetromino(20.0);
  CHECK(std::abs(s.alpha2 - 0.5) < 0.02);
  CHECK(s.beta1 < 1e-3);
  CHECK(s.A < 1e-3);
  const double d = solve_tetromino(14.0).module - solve_tetromino(10.0).module;
  CHECK(std::abs(d - 4.0) <= 1e-4);
}

TEST_CASE("range errors") {
  CHECK_THROWS_WITH_AS(solve_tetromino(0.0), "H must be positive", DomainError);
  CHECK_THROWS_AS(solve_tetromino(0.01), DomainError);
  CHECK_THROWS_AS(solve_tetromino(40.0), DomainError);
  CHECK_NOTHROW(solve_tetromino(kTetrominoMinH));
  CHECK_NOTHROW(solve_tetromino(kTetrominoMaxH));
}
