#pragma once

#include <complex>

#include "polymod/elliptic.hpp"

namespace polymod {

// The slit endpoint a = sqrt(lambda) of the stretched P-pentomino, with
// 1 - a kept separately for the strongly stretched regime where a rounds to 1.
struct SlitEndpoint {
  double a = 0.0;
  double one_minus_a = 1.0;

  static SlitEndpoint from_a(double a);
  static SlitEndpoint from_lambda(const Modulus& lambda);
};

// Every accessory parameter of the half-plane map onto P_H together with
// the conformal module of P_H (sides AB and EF).
struct PentominoSolution {
  double H;
  Modulus lambda;
  double a;
  double alpha0;  // critical point of h, h(alpha0) = a
  double c2;      // square of the pole of h
  double alpha1;  // preimages of C, B, A
  double alpha2;
  double alpha3;
  double beta1;  // prevertices of C, B, A
  double beta2;
  double beta3;
  Modulus mu;
  double module;
  // alpha1 - c, c - alpha2 and alpha2 - alpha3 as solved. For small H the
  // roots sit within rounding of the pole, so only these resolve them.
  double pole_gap1;
  double pole_gap2;
  double gap23;
};

struct PentominoAlphas {
  double alpha1;
  double alpha2;
  double alpha3;
  // Offsets that the roots are actually solved for: alpha1 = c + pole_gap1,
  // alpha2 = c - pole_gap2, alpha3 = alpha2 - gap23.
  double pole_gap1;
  double pole_gap2;
  double gap23;
  double one_minus_alpha1;
};

inline constexpr double kPentominoMinH = 1.0 / 16.0;
inline constexpr double kPentominoMaxH = 30.0;

// h(z) = z^3 (1 - c^2 z^2) / (z^2 - c^2). Throws PoleError at z^2 = c^2.
std::complex<double> h_pent(std::complex<double> z, double c2);

// h'/h = 3/z - 2z/(z^2 - c^2) + 2z/(z^2 - 1/c^2). Throws PoleError at the
// zeros and poles of h.
std::complex<double> h_pent_logderiv(std::complex<double> z, double c2);

// g(x) = 2x^6 - 3a x^5 + 3a x - 2a^2, whose root in (0,1) is alpha0.
double pentomino_g(double a, double x);

// Unique root of g in (0,1), searched in (2a/3, 1).
double solve_alpha0_pent(double a);
double solve_alpha0_pent(const SlitEndpoint& slit);

// (3 alpha0 - 2a) / (5 alpha0^3). Throws InconsistentInputError when the
// numerator is not positive.
double compute_c2(double a, double alpha0);

// Same value as compute_c2 once g(alpha0) = 0, written as
// alpha0^2 (3a - 2 alpha0) / (5a) which does not cancel for small a.
double c2_at_critical_point(double a, double alpha0);

// alpha1 in (c, alpha0) with h = 1/a; alpha2, alpha3 in (0, c) with h = -1/a
// and h = -a. Throws InconsistentInputError if a bracket has no sign change.
PentominoAlphas solve_alphas_pent(double a, double c2, double alpha0);
PentominoAlphas solve_alphas_pent(const SlitEndpoint& slit, double c2, double alpha0);

// beta = ((1 - alpha^2) / (1 + alpha^2))^2.
double betas_pent(double alpha);

// mu = (1 + alpha3^2)/(1 - alpha3^2) * (1 - alpha2^2)/(1 + alpha2^2) = sqrt(beta2/beta3).
// Throws DomainError unless 0 < alpha3 < alpha2 < 1.
Modulus mu_pent(double alpha2, double alpha3);
// As above with alpha2 - alpha3 > 0 supplied, which fixes mu' when the two
// roots agree to most (or all) of their digits.
Modulus mu_pent(double alpha2, double alpha3, double gap23);

// Full pipeline for H in [1/16, 30]. The roots are verified against their
// defining values of h before returning; a mismatch above 1e-9 throws
// NumericalError.
PentominoSolution solve_pentomino(double H);

// |h(alpha_i)/target_i - 1| for the three roots, with x^2 - c^2 taken from
// the stored offsets.
struct PentominoResiduals {
  double alpha1;
  double alpha2;
  double alpha3;
};
PentominoResiduals root_residuals(const PentominoSolution& s);

}  // namespace polymod
