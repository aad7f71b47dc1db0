#include "polymod/tetromino.hpp"

#include <cmath>
#include <string>

#include "polymod/errors.hpp"
#include "polymod/rootfind.hpp"

namespace polymod {

namespace {

constexpr double kVerifyTol = 1e-9;

double root_in(const RealFunction& f, double lo, double hi, const char* what) {
  try {
    return bracketed_root(f, lo, hi);
  } catch (const BracketError&) {
    throw InconsistentInputError(std::string("no root of the ") + what + " equation in its bracket");
  }
}

double rel_gap(double value, double target) { return std::abs(value - target) / std::abs(target); }

void verify(double residual, const char* what) {
  if (!(residual <= kVerifyTol)) {
    throw NumericalError(std::string("tetromino root check failed for ") + what);
  }
}

struct CriticalPoint {
  double x;
  double one_minus_x;
};

CriticalPoint critical_point(double lambda, double eps) {
  if (!(lambda > 0.0 && lambda <= 1.0 && eps > 0.0 && eps <= 1.0)) {
    throw DomainError("lambda must lie in (0,1)");
  }
  if (lambda < 0.5) {
    // In s = x^2 = lambda/3 + z: r = 3 lambda z + s^2 (s - 3 lambda).
    const double s0 = lambda / 3.0;
    auto r_of_z = [lambda, s0](double z) {
      const double s = s0 + z;
      return 3.0 * lambda * z + s * s * (s - 3.0 * lambda);
    };
    const double x = std::sqrt(s0 + root_in(r_of_z, 0.0, 1.0 - s0, "alpha0"));
    return {x, 1.0 - x};
  }
  // In w = 1 - x^2 with lambda = 1 - eps: r = -w^3 - 3 eps (1 - w) w + eps (2 - eps).
  auto r_of_w = [eps](double w) { return -w * w * w - 3.0 * eps * (1.0 - w) * w + eps * (2.0 - eps); };
  const double w = root_in(r_of_w, 0.0, 1.0 - lambda / 3.0, "alpha0");
  const double x = std::sqrt(1.0 - w);
  return {x, w / (1.0 + x)};
}

// gamma = c - 1/2 is passed in by the pipeline, where it is formed from
// 1 - alpha0 and 1 - lambda directly.
TetrominoAlphas solve_alphas_impl(double lambda, double eps, double c, double alpha0, double y0, double gamma) {
  if (!(c > 0.0 && c < alpha0 && alpha0 < 1.0)) throw InconsistentInputError("need 0 < c < alpha0 < 1");

  double x1;
  double y1;
  double gap3;
  double y3;
  if (lambda < 0.5) {
    auto p1 = [lambda, c](double x) { return ((c * x - 1.0) * x * x + lambda) * x - c * lambda; };
    x1 = root_in(p1, -1.0, 0.0, "alpha1");
    y1 = 1.0 + x1;
    // x - c = lambda x^3 (1 - c x) with x = c + d.
    gap3 = root_in(
        [lambda, c](double d) {
          const double x = c + d;
          return d - lambda * x * x * x * (1.0 - c * x);
        },
        0.0, alpha0 - c, "alpha3");
    y3 = (1.0 - c) - gap3;
  } else {
    // alpha1 -> -1: in y = 1 + x,
    //   -y (2 - y) (c (y^2 - 2y + 2) + 1 - y) + eps (c + 1 - y) = 0.
    auto p1 = [eps, c](double y) {
      return -y * (2.0 - y) * (c * ((y - 2.0) * y + 2.0) + 1.0 - y) + eps * (c + 1.0 - y);
    };
    y1 = root_in(p1, 0.0, 1.0, "alpha1");
    x1 = y1 - 1.0;
    // alpha3 -> 1 and c -> 1/2: in y = 1 - x with c = 1/2 + gamma,
    //   y (2 - y) (-y^2/2 - gamma (1 + x^2)) + eps x^3 (1 - c x) = 0.
    auto p3 = [eps, c, gamma](double y) {
      const double x = 1.0 - y;
      return y * (2.0 - y) * (-0.5 * y * y - gamma * (1.0 + x * x)) + eps * x * x * x * (1.0 - c * x);
    };
    y3 = root_in(p3, y0, 1.0 - c, "alpha3");
    gap3 = (1.0 - c) - y3;
  }
  return {x1, c + gap3, y1, gap3, y3};
}

// ((1 + alpha)/(1 - alpha)) from both 1 + alpha and 1 - alpha.
double b_of(double one_plus, double one_minus) { return one_plus / one_minus; }

CrossRatio cross_ratio(double beta1, double beta2, double d32, double d31) {
  const double A = std::sqrt(beta1 * d32 / (beta2 * d31));
  const double mu = (1.0 - A) / (1.0 + A);
  const double mu_c = 2.0 * std::sqrt(A) / (1.0 + A);
  return {A, mu_c < mu ? Modulus::from_complement(mu_c) : Modulus::from_k(mu)};
}

}  // namespace

std::complex<double> h_tet(std::complex<double> z, double c) {
  const std::complex<double> den = z - c;
  if (den == 0.0) throw PoleError("h_tet evaluated at its pole");
  return z * z * z * (1.0 - c * z) / den;
}

std::complex<double> h_tet_logderiv(std::complex<double> z, double c) {
  if (!(c > 0.0)) throw DomainError("c must be positive");
  if (z == 0.0 || z == c || z == 1.0 / c) throw PoleError("h_tet_logderiv evaluated at a zero or pole of h");
  return 3.0 / z - 1.0 / (z - c) - c / (1.0 - c * z);
}

double tetromino_r(double lambda, double x) {
  const double s = x * x;
  return ((s - 3.0 * lambda) * s + 3.0 * lambda) * s - lambda * lambda;
}

double solve_alpha0_tet(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw DomainError("lambda must lie in (0,1)");
  return critical_point(lambda, 1.0 - lambda).x;
}

double solve_alpha0_tet(const Modulus& lambda) { return critical_point(lambda.k(), lambda.one_minus_k()).x; }

double compute_c_tet(double lambda, double alpha0) {
  const double num = 3.0 * alpha0 * alpha0 - lambda;
  if (!(num > 0.0)) throw InconsistentInputError("compute_c_tet needs 3 alpha0^2 > lambda");
  return num / (4.0 * alpha0 * alpha0 * alpha0);
}

double c_at_critical_point_tet(double lambda, double alpha0) {
  const double factor = 3.0 * lambda - alpha0 * alpha0;
  if (!(factor > 0.0)) throw InconsistentInputError("c_at_critical_point_tet needs alpha0^2 < 3 lambda");
  return alpha0 * factor / (4.0 * lambda);
}

TetrominoAlphas solve_alphas_tet(double lambda, double c, double alpha0) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw DomainError("lambda must lie in (0,1)");
  return solve_alphas_impl(lambda, 1.0 - lambda, c, alpha0, 1.0 - alpha0, c - 0.5);
}

TetrominoAlphas solve_alphas_tet(const Modulus& lambda, double c, double alpha0) {
  return solve_alphas_impl(lambda.k(), lambda.one_minus_k(), c, alpha0, 1.0 - alpha0, c - 0.5);
}

double betas_tet(double alpha) {
  if (!(alpha > -1.0 && alpha < 1.0)) throw DomainError("betas_tet requires |alpha| < 1");
  const double b = (1.0 + alpha) / (1.0 - alpha);
  return b * b;
}

CrossRatio mu_tet(double beta1, double beta2, double beta3) {
  if (!(beta1 > 0.0 && beta1 < beta2 && beta2 < beta3)) {
    throw DomainError("mu_tet requires 0 < beta1 < beta2 < beta3");
  }
  return cross_ratio(beta1, beta2, beta3 - beta2, beta3 - beta1);
}

TetrominoSolution solve_tetromino(double H) {
  if (!(H > 0.0)) throw DomainError("H must be positive");
  if (H < kTetrominoMinH || H > kTetrominoMaxH) {
    throw DomainError("H outside the supported range [1/16, 30]");
  }
  const Modulus lambda = solve_modulus_from_ratio(H);
  const double lam = lambda.k();
  const double eps = lambda.one_minus_k();
  const CriticalPoint cp = critical_point(lam, eps);
  const double alpha0 = cp.x;
  const double c = c_at_critical_point_tet(lam, alpha0);
  // 4 lambda (c - 1/2) = y0^2 (y0 - 3) - eps (1 - 3 y0), y0 = 1 - alpha0.
  const double y0 = cp.one_minus_x;
  const double gamma = (y0 * y0 * (y0 - 3.0) - eps * (1.0 - 3.0 * y0)) / (4.0 * lam);
  const TetrominoAlphas al = solve_alphas_impl(lam, eps, c, alpha0, y0, gamma);


  // With b = (1 + alpha)/(1 - alpha) the beta differences factor as
  // (b_i - b_j)(b_i + b_j), and b_i - b_j = 2 (alpha_i - alpha_j)/((1 - alpha_i)(1 - alpha_j)).
  const double b1 = b_of(al.one_plus_alpha1, 2.0 - al.one_plus_alpha1);
  const double b2 = b_of(1.0 + c, 1.0 - c);
  const double b3 = b_of(2.0 - al.one_minus_alpha3, al.one_minus_alpha3);
  const double d32 = 2.0 * al.pole_gap3 / (al.one_minus_alpha3 * (1.0 - c)) * (b3 + b2);
  const double d31 = 2.0 * (al.alpha3 - al.alpha1) / (al.one_minus_alpha3 * (2.0 - al.one_plus_alpha1)) * (b3 + b1);
  const double beta1 = b1 * b1;
  const double beta2 = b2 * b2;
  const double beta3 = b3 * b3;
  const CrossRatio cr = cross_ratio(beta1, beta2, d32, d31);

  const TetrominoSolution sol{H,     lambda, alpha0, al.alpha1, c,     al.alpha3,
                              beta1, beta2,  beta3,  cr.A,      cr.mu, module_from_mu(cr.mu, 2.0),
                              al.pole_gap3};
  const TetrominoResiduals r = root_residuals(sol);
  verify(r.alpha1, "alpha1");
  verify(r.alpha3, "alpha3");
  return sol;
}

TetrominoResiduals root_residuals(const TetrominoSolution& s) {
  const double lam = s.lambda.k();
  const double x3 = s.alpha3;
  return {rel_gap(h_tet(s.alpha1, s.alpha2).real(), lam),
          rel_gap(x3 * x3 * x3 * (1.0 - s.alpha2 * x3) / s.pole_gap3, 1.0 / lam)};
}

}  // namespace polymod
