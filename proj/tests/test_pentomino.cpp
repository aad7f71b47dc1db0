#include <doctest.h>

#include <cmath>
#include <random>

#include "polymod/errors.hpp"
#include "polymod/pentomino.hpp"
#include "reference_values.hpp"

using namespace polymod;

namespace {

constexpr double kA1 = 0.414213562373095;
constexpr double kAlpha0_1 = 0.277046760238506;
constexpr double kA2 = 0.840896415253714;
constexpr double kAlpha0_2 = 0.601898824534568;
constexpr double kC2_2 = 0.113643234509673;

bool close_rel(double x, double ref, double tol) { return std::abs(x - ref) <= tol * std::abs(ref); }

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo * std::pow(hi / lo, i / double(n - 1)));
  return out;
}

}  // namespace

TEST_CASE("alpha0 and c2 at the tabulated inputs") {
  CHECK(std::abs(solve_alpha0_pent(kA1) - kAlpha0_1) <= 1e-14);
  CHECK(std::abs(solve_alpha0_pent(kA2) - kAlpha0_2) <= 1e-14);
  CHECK(std::abs(pentomino_g(kA1, solve_alpha0_pent(kA1))) <= 1e-13);
  CHECK(std::abs(pentomino_g(kA2, solve_alpha0_pent(kA2))) <= 1e-13);
  CHECK(std::abs(compute_c2(kA2, kAlpha0_2) - kC2_2) <= 1e-13);
  // The tabulated H = 1 value 0.025524633877222 does not satisfy
  // h(alpha0) = a; the consistent value is below.
  CHECK(std::abs(compute_c2(kA1, kAlpha0_1) - 0.025517935088801877) <= 1e-13);
  CHECK(std::abs(h_pent(kAlpha0_1, 0.025517935088801877).real() - kA1) <= 1e-13);
  CHECK(c2_at_critical_point(kA2, kAlpha0_2) == doctest::Approx(kC2_2).epsilon(1e-12));
  CHECK_THROWS_AS(compute_c2(0.5, 0.2), InconsistentInputError);
}

TEST_CASE("solve_alphas_pent reproduces the H = 2 table") {
  const PentominoAlphas al = solve_alphas_pent(kA2, kC2_2, kAlpha0_2);
  CHECK(std::abs(al.alpha1 - 0.415838661746455) <= 1e-12);
  CHECK(std::abs(al.alpha2 - 0.301418612412185) <= 1e-12);
  CHECK(std::abs(al.alpha3 - 0.290931295908172) <= 1e-12);
  CHECK(std::abs(h_pent(al.alpha1, kC2_2).real() * kA2 - 1.0) <= 1e-11);
  CHECK(std::abs(h_pent(al.alpha2, kC2_2).real() * kA2 + 1.0) <= 1e-11);
  CHECK(std::abs(h_pent(al.alpha3, kC2_2).real() / kA2 + 1.0) <= 1e-11);
  CHECK(al.alpha3 + al.gap23 == doctest::Approx(al.alpha2).epsilon(1e-15));
  // c2 far too large for alpha0 leaves no root in (c, alpha0).
  CHECK_THROWS_AS(solve_alphas_pent(kA2, 0.9, kAlpha0_2), InconsistentInputError);
}

TEST_CASE("betas and mu from tabulated alphas") {
  CHECK(std::abs(betas_pent(0.165536032447626) - 0.896160135941632) <= 1e-13);
  CHECK(std::abs(betas_pent(0.290931295908172) - 0.712214555130066) <= 1e-13);
  CHECK(std::abs(mu_pent(0.154876549226231, 0.138335266800084).k() - 0.990342209151293) <= 1e-13);
  CHECK(std::abs(mu_pent(0.301418612412185, 0.290931295908172).k() - 0.987557290912592) <= 1e-13);
  CHECK_THROWS_AS(mu_pent(0.1, 0.2), DomainError);
  CHECK_THROWS_AS(mu_pent(0.3, 0.3), DomainError);
  CHECK(mu_pent(0.3, 0.3, 1e-17).complement() > 0.0);
}

TEST_CASE("H = 2 full table") {
  const PentominoSolution s = solve_pentomino(2.0);
  CHECK(std::abs(s.lambda.k() - 0.707106781186547) <= 1e-12);
  CHECK(std::abs(s.a - kA2) <= 1e-12);
  CHECK(std::abs(s.alpha0 - kAlpha0_2) <= 1e-12);
  CHECK(std::abs(s.c2 - kC2_2) <= 1e-12);
  CHECK(std::abs(s.alpha1 - 0.415838661746455) <= 1e-12);
  CHECK(std::abs(s.beta1 - 0.497227390863205) <= 1e-12);
  CHECK(std::abs(s.alpha2 - 0.301418612412185) <= 1e-12);
  CHECK(std::abs(s.beta2 - 0.694601063871823) <= 1e-12);
  CHECK(std::abs(s.alpha3 - 0.290931295908172) <= 1e-12);
  CHECK(std::abs(s.beta3 - 0.712214555130066) <= 1e-12);
  CHECK(std::abs(s.mu.k() - 0.987557290912592) <= 1e-12);
  CHECK(std::abs(s.module - 2.056221831167256) <= 1e-12);
}

TEST_CASE("H = 1: modulus and critical point match the table") {
  const PentominoSolution s = solve_pentomino(1.0);
  CHECK(std::abs(s.lambda.k() - 0.171572875253809) <= 1e-12);
  CHECK(std::abs(s.a - kA1) <= 1e-12);
  CHECK(std::abs(s.alpha0 - kAlpha0_1) <= 1e-12);
}

TEST_CASE("agreement with the 100-digit reference over H in [1/16, 30]") {
  for (const auto& r : reference::kPentominoReferences) {
    CAPTURE(r.H);
    const PentominoSolution s = solve_pentomino(r.H);
    const double tol = 5e-14;
    CHECK(close_rel(s.lambda.k(), r.lambda, tol));
    CHECK(close_rel(s.lambda.complement(), r.lambda_prime, tol));
    CHECK(close_rel(s.a, r.a, tol));
    CHECK(close_rel(s.alpha0, r.alpha0, tol));
    CHECK(close_rel(s.c2, r.c2, tol));
    CHECK(close_rel(s.alpha1, r.alpha1, tol));
    CHECK(close_rel(s.alpha2, r.alpha2, tol));
    CHECK(close_rel(s.alpha3, r.alpha3, tol));
    CHECK(close_rel(s.beta1, r.beta1, tol));
    CHECK(close_rel(s.beta2, r.beta2, tol));
    CHECK(close_rel(s.beta3, r.beta3, tol));
    CHECK(close_rel(s.mu.k(), r.mu, tol));
    CHECK(close_rel(s.mu.complement(), r.mu_prime, 1e-12));
    CHECK(close_rel(s.module, r.module, tol));
  }
}

TEST_CASE("property: symmetries of h, 1000 random cases") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> uc(0.01, 0.99);
  std::uniform_real_distribution<double> th(0.0, 6.283185307179586);
  double odd = 0.0, inv = 0.0, conj = 0.0, circle = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double c2 = uc(rng);
    const std::complex<double> z(u(rng), u(rng));
    const auto hz = h_pent(z, c2);
    const double scale = std::abs(hz);
    odd = std::max(odd, std::abs(h_pent(-z, c2) + hz) / scale);
    inv = std::max(inv, std::abs(h_pent(1.0 / z, c2) * hz - 1.0));
    conj = std::max(conj, std::abs(h_pent(std::conj(z), c2) - std::conj(hz)) / scale);
    circle = std::max(circle, std::abs(std::abs(h_pent(std::polar(1.0, th(rng)), c2)) - 1.0));
  }
  CHECK(odd <= 1e-12);
  CHECK(inv <= 1e-12);
  CHECK(conj <= 1e-12);
  CHECK(circle <= 1e-12);
}

TEST_CASE("h poles and log-derivative") {
  CHECK_THROWS_AS(h_pent(0.5, 0.25), PoleError);
  CHECK_THROWS_AS(h_pent_logderiv(0.0, 0.25), PoleError);
  const double c2 = 0.1;
  const std::complex<double> z(0.3, 0.4);
  const double e = 1e-6;
  const auto numeric = (h_pent(z + e, c2) - h_pent(z - e, c2)) / (2.0 * e) / h_pent(z, c2);
  CHECK(std::abs(numeric - h_pent_logderiv(z, c2)) <= 1e-8);
}

TEST_CASE("property: ordering chain, root residuals and mu consistency over 50 H in [1/8, 20]") {
  for (double H : log_spaced(0.125, 20.0, 50)) {
    CAPTURE(H);
    const PentominoSolution s = solve_pentomino(H);
    const double c = std::sqrt(s.c2);
    CHECK(0.0 < s.alpha3);
    CHECK(s.alpha3 < s.alpha2);
    CHECK(s.alpha2 < c);
    CHECK(c < s.alpha1);
    CHECK(s.alpha1 < s.alpha0);
    CHECK(s.alpha0 < 1.0);
    CHECK(std::abs(pentomino_g(s.a, s.alpha0)) <= 1e-13);
    const PentominoResiduals r = root_residuals(s);
    CHECK(r.alpha1 <= 1e-13);
    CHECK(r.alpha2 <= 1e-13);
    CHECK(r.alpha3 <= 1e-13);
    CHECK(std::abs(s.mu.k() - std::sqrt(s.beta2 / s.beta3)) <= 1e-13);
  }
}

TEST_CASE("large-H limits") {
  const PentominoSolution s = solve_pentomino(20.0);
  CHECK(std::abs(s.c2 - 0.2) < 0.01);
  // alpha2, alpha3 -> (3 - sqrt 5)/2, so beta2, beta3 -> 5/9.
  CHECK(std::abs(s.alpha2 - (3.0 - std::sqrt(5.0)) / 2.0) < 0.01);
  CHECK(std::abs(s.beta2 - 5.0 / 9.0) < 0.01);
  CHECK(std::abs(s.beta3 - 5.0 / 9.0) < 0.01);
  const double d = solve_pentomino(14.0).module - solve_pentomino(10.0).module;
  CHECK(std::abs(d - 2.0) <= 1e-4);
}

TEST_CASE("range and domain errors") {
  CHECK_THROWS_WITH_AS(solve_pentomino(0.0), "H must be positive", DomainError);
  CHECK_THROWS_AS(solve_pentomino(-3.0), DomainError);
  CHECK_THROWS_AS(solve_pentomino(0.05), DomainError);
  CHECK_THROWS_AS(solve_pentomino(31.0), DomainError);
  CHECK_NOTHROW(solve_pentomino(kPentominoMinH));
  CHECK_NOTHROW(solve_pentomino(kPentominoMaxH));
  CHECK_THROWS_AS(SlitEndpoint::from_a(1.0), DomainError);
}

TEST_CASE("determinism") {
  const PentominoSolution a = solve_pentomino(3.7);
  const PentominoSolution b = solve_pentomino(3.7);
  CHECK(a.module == b.module);
  CHECK(a.alpha3 == b.alpha3);
}
