#pragma once

#include <complex>

#include "polymod/elliptic.hpp"

namespace polymod {

// Accessory parameters of the half-plane map onto R_H and its conformal
// module (sides [0, beta1] and [beta2, beta3] on the real axis).
struct TetrominoSolution {
  double H;
  Modulus lambda;
  double alpha0;  // critical point of h, h(alpha0) = lambda
  double alpha1;  // in (-1, 0), h = lambda
  double alpha2;  // the pole c of h
  double alpha3;  // in (c, alpha0), h = 1/lambda
  double beta1;
  double beta2;
  double beta3;
  double A;
  Modulus mu;
  double module;
  double pole_gap3;  // alpha3 - c as solved
};

struct TetrominoAlphas {
  double alpha1;
  double alpha3;
  // 1 + alpha1, alpha3 - c and 1 - alpha3, each obtained without
  // subtracting nearly equal numbers.
  double one_plus_alpha1;
  double pole_gap3;
  double one_minus_alpha3;
};

struct CrossRatio {
  double A;
  Modulus mu;  // (1 - A)/(1 + A)
};

inline constexpr double kTetrominoMinH = 1.0 / 16.0;
inline constexpr double kTetrominoMaxH = 30.0;

// h(z) = z^3 (1 - c z) / (z - c). Throws PoleError at z = c.
std::complex<double> h_tet(std::complex<double> z, double c);

// h'/h = 3/z - 1/(z - c) - c/(1 - c z). Throws PoleError at 0, c, 1/c.
std::complex<double> h_tet_logderiv(std::complex<double> z, double c);

// r(x) = x^6 - 3 lambda x^4 + 3 lambda x^2 - lambda^2.
double tetromino_r(double lambda, double x);

// Unique root of r in (0,1), searched in (sqrt(lambda/3), 1).
double solve_alpha0_tet(double lambda);
double solve_alpha0_tet(const Modulus& lambda);

// (3 alpha0^2 - lambda) / (4 alpha0^3). Throws InconsistentInputError when
// the numerator is not positive.
double compute_c_tet(double lambda, double alpha0);

// alpha0 (3 lambda - alpha0^2) / (4 lambda): equal to compute_c_tet once
// r(alpha0) = 0 and free of cancellation for small lambda.
double c_at_critical_point_tet(double lambda, double alpha0);

// alpha1: root of c x^4 - x^3 + lambda x - c lambda in (-1, 0).
// alpha3: root of lambda c x^4 - lambda x^3 + x - c in (c, alpha0).
TetrominoAlphas solve_alphas_tet(double lambda, double c, double alpha0);
TetrominoAlphas solve_alphas_tet(const Modulus& lambda, double c, double alpha0);

// beta = ((1 + alpha)/(1 - alpha))^2. Throws DomainError unless |alpha| < 1.
double betas_tet(double alpha);

// A = sqrt(beta1 (beta3 - beta2) / (beta2 (beta3 - beta1))), mu = (1-A)/(1+A).
// Throws DomainError unless 0 < beta1 < beta2 < beta3.
CrossRatio mu_tet(double beta1, double beta2, double beta3);

// Full pipeline for H in [1/16, 30]; roots are verified against h to 1e-9.
TetrominoSolution solve_tetromino(double H);

// |h(alpha_i)/target_i - 1| for alpha1 and alpha3, the latter with z - c
// taken from the stored offset.
struct TetrominoResiduals {
  double alpha1;
  double alpha3;
};
TetrominoResiduals root_residuals(const TetrominoSolution& s);

}  // namespace polymod
