#include "polymod/pentomino.hpp"

#include <cmath>
#include <string>

#include "polymod/errors.hpp"
#include "polymod/rootfind.hpp"

namespace polymod {

namespace {

constexpr double kVerifyTol = 1e-9;

// Solves on (lo, hi) and converts a missing sign change into the error the
// pipeline reports for mutually inconsistent parameters.
double root_in(const RealFunction& f, double lo, double hi, const char* what) {
  try {
    return bracketed_root(f, lo, hi);
  } catch (const BracketError&) {
    throw InconsistentInputError(std::string("no root of the ") + what + " equation in its bracket");
  }
}

// h(x) for real x with x^2 - c^2 supplied separately.
double h_from_pole_offset(double x, double c2, double x2_minus_c2) {
  return x * x * x * (1.0 - c2 * x * x) / x2_minus_c2;
}

double rel_gap(double value, double target) { return std::abs(value - target) / std::abs(target); }

void verify(double residual, const char* what) {
  if (!(residual <= kVerifyTol)) {
    throw NumericalError(std::string("pentomino root check failed for ") + what);
  }
}

}  // namespace

SlitEndpoint SlitEndpoint::from_a(double a) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("slit endpoint a must lie in (0,1)");
  return {a, 1.0 - a};
}

SlitEndpoint SlitEndpoint::from_lambda(const Modulus& lambda) {
  const double a = std::sqrt(lambda.k());
  return {a, lambda.one_minus_k() / (1.0 + a)};
}

std::complex<double> h_pent(std::complex<double> z, double c2) {
  const std::complex<double> z2 = z * z;
  const std::complex<double> den = z2 - c2;
  if (den == 0.0) throw PoleError("h_pent evaluated at a pole");
  return z * z2 * (1.0 - c2 * z2) / den;
}

std::complex<double> h_pent_logderiv(std::complex<double> z, double c2) {
  if (!(c2 > 0.0)) throw DomainError("c^2 must be positive");
  const std::complex<double> z2 = z * z;
  if (z == 0.0 || z2 == c2 || z2 == 1.0 / c2) {
    throw PoleError("h_pent_logderiv evaluated at a zero or pole of h");
  }
  return 3.0 / z - 2.0 * z / (z2 - c2) + 2.0 * z / (z2 - 1.0 / c2);
}

double pentomino_g(double a, double x) {
  const double x2 = x * x;
  return x2 * x2 * x * (2.0 * x - 3.0 * a) + a * (3.0 * x - 2.0 * a);
}

double solve_alpha0_pent(double a) { return solve_alpha0_pent(SlitEndpoint::from_a(a)); }

namespace {

struct CriticalPoint {
  double x;
  double one_minus_x;
};

CriticalPoint critical_point(const SlitEndpoint& slit) {
  const double a = slit.a;
  const double ea = slit.one_minus_a;
  if (!(a > 0.0 && a <= 1.0 && ea > 0.0 && ea < 1.0)) {
    throw DomainError("slit endpoint a must lie in (0,1)");
  }
  if (a < 0.5) {
    // Solved for z = x - 2a/3: g = 3a z + x^5 (2x - 3a). For small a the
    // root sits just above 2a/3 and z carries its significant digits.
    const double x0 = 2.0 * a / 3.0;
    auto g_of_z = [a, x0](double z) {
      const double x = x0 + z;
      const double x2 = x * x;
      return 3.0 * a * z + x2 * x2 * x * (2.0 * x - 3.0 * a);
    };
    const double x = x0 + root_in(g_of_z, 0.0, 1.0 - x0, "alpha0");
    return {x, 1.0 - x};
  }
  // With y = 1 - x and a = 1 - ea:
  //   g = -y^3 (2x^3 + 3x^2 + 3x + 2) - 3 ea x y (1+x)(1+x^2) + ea (4 - 2 ea),
  // which keeps its relative accuracy when the root approaches x = 1.
  auto g_of_y = [ea](double y) {
    const double x = 1.0 - y;
    const double q = ((2.0 * x + 3.0) * x + 3.0) * x + 2.0;
    return -y * y * y * q - 3.0 * ea * x * y * (1.0 + x) * (1.0 + x * x) + ea * (4.0 - 2.0 * ea);
  };
  const double y = root_in(g_of_y, 0.0, (1.0 + 2.0 * ea) / 3.0, "alpha0");
  return {1.0 - y, y};
}

}  // namespace

double solve_alpha0_pent(const SlitEndpoint& slit) { return critical_point(slit).x; }

double compute_c2(double a, double alpha0) {
  const double num = 3.0 * alpha0 - 2.0 * a;
  if (!(num > 0.0)) throw InconsistentInputError("compute_c2 needs 3 alpha0 > 2a");
  return num / (5.0 * alpha0 * alpha0 * alpha0);
}

double c2_at_critical_point(double a, double alpha0) {
  const double factor = 3.0 * a - 2.0 * alpha0;
  if (!(factor > 0.0) || !(a > 0.0)) throw InconsistentInputError("c2_at_critical_point needs 2 alpha0 < 3a");
  return alpha0 * alpha0 * factor / (5.0 * a);
}

PentominoAlphas solve_alphas_pent(double a, double c2, double alpha0) {
  return solve_alphas_pent(SlitEndpoint::from_a(a), c2, alpha0);
}

namespace {

// y0 = 1 - alpha0 and gamma = c^2 - 1/5 are passed separately so the
// pipeline can hand in values that did not go through a subtraction.
PentominoAlphas solve_alphas_impl(const SlitEndpoint& slit, double c2, double alpha0, double y0, double gamma) {
  const double a = slit.a;
  if (!(c2 > 0.0)) throw InconsistentInputError("c^2 must be positive");
  const double c = std::sqrt(c2);
  if (!(c < alpha0 && alpha0 < 1.0)) throw InconsistentInputError("need 0 < c < alpha0 < 1");

  // h(x) = t  <=>  (x^2 - c^2) t = x^3 (1 - c^2 x^2); with x = c +- delta the
  // pole factor becomes +-delta (2c +- delta) and nothing cancels near c.
  auto x3_tail = [c2](double x) { return x * x * x * (1.0 - c2 * x * x); };

  // h(alpha1) = 1/a on (c, alpha0).
  double gap1;
  double y1;
  if (a < 0.5) {
    gap1 = root_in([&](double d) { return d * (2.0 * c + d) - a * x3_tail(c + d); }, 0.0, alpha0 - c, "alpha1");
    y1 = 1.0 - (c + gap1);
  } else {
    // alpha1 tends to 1 with c^2 -> 1/5. In y = 1 - x the equation reads
    //   -y (y^2 (x^2 + 3x + 1)/5 + gamma S4) + (1 - a)/a (x^2 - c^2) = 0,
    // S4 = 1 + x + x^2 + x^3 + x^4.
    const double ea_over_a = slit.one_minus_a / a;
    auto p1 = [&](double y) {
      const double x = 1.0 - y;
      const double s4 = (((x + 1.0) * x + 1.0) * x + 1.0) * x + 1.0;
      return -y * (y * y * ((x + 3.0) * x + 1.0) / 5.0 + gamma * s4) + ea_over_a * (x * x - c2);
    };
    y1 = root_in(p1, y0, 1.0 - c, "alpha1");
    gap1 = (1.0 - c) - y1;
  }
  // h(alpha2) = -1/a on (0, c).
  const double gap2 = root_in(
      [&](double d) { return d * (2.0 * c - d) - a * x3_tail(c - d); }, 0.0, c, "alpha2");
  const double alpha2 = c - gap2;

  // h(alpha3) = -a, solved for d = alpha2 - alpha3 using h(alpha2) = -1/a:
  //   p3(alpha2 - d) = Q (a - 1/a) - d (c^2 S5 - S3 - a (2 alpha2 - d)),
  // Q = c^2 - alpha2^2, S_n the divided differences of x^n. Only the factor
  // a - 1/a = -(1 - a)(1 + a)/a depends on how close a is to 1.
  const double q2 = gap2 * (2.0 * c - gap2);
  const double a_minus_inv = -slit.one_minus_a * (1.0 + a) / a;
  auto p3_shifted = [&](double d) {
    const double x = alpha2;
    const double y = x - d;
    const double s3 = x * x + x * y + y * y;
    const double s5 = (((x + y) * x + y * y) * x + y * y * y) * x + y * y * y * y;
    return q2 * a_minus_inv - d * (c2 * s5 - s3 - a * (2.0 * x - d));
  };
  const double gap23 = root_in(p3_shifted, 0.0, alpha2, "alpha3");

  return {c + gap1, alpha2, alpha2 - gap23, gap1, gap2, gap23, y1};
}

}  // namespace

PentominoAlphas solve_alphas_pent(const SlitEndpoint& slit, double c2, double alpha0) {
  return solve_alphas_impl(slit, c2, alpha0, 1.0 - alpha0, c2 - 0.2);
}

namespace {

double beta_from_complement(double alpha, double one_minus_alpha) {
  const double r = one_minus_alpha * (1.0 + alpha) / (1.0 + alpha * alpha);
  return r * r;
}

}  // namespace

double betas_pent(double alpha) {
  const double a2 = alpha * alpha;
  const double r = (1.0 - a2) / (1.0 + a2);
  return r * r;
}

Modulus mu_pent(double alpha2, double alpha3) { return mu_pent(alpha2, alpha3, alpha2 - alpha3); }

Modulus mu_pent(double alpha2, double alpha3, double gap23) {
  if (!(alpha3 > 0.0 && alpha3 <= alpha2 && alpha2 < 1.0 && gap23 > 0.0)) {
    throw DomainError("mu_pent requires 0 < alpha3 < alpha2 < 1");
  }
  const double s2 = 1.0 + alpha2 * alpha2;
  const double s3 = 1.0 + alpha3 * alpha3;
  const double u2 = (1.0 - alpha2 * alpha2) / s2;
  const double u3 = (1.0 - alpha3 * alpha3) / s3;
  const double mu = u2 / u3;
  const double du = 2.0 * gap23 * (alpha2 + alpha3) / (s2 * s3);
  const double mu_c = std::sqrt(du * (u3 + u2)) / u3;
  return mu_c < mu ? Modulus::from_complement(mu_c) : Modulus::from_k(mu);
}

PentominoSolution solve_pentomino(double H) {
  if (!(H > 0.0)) throw DomainError("H must be positive");
  if (H < kPentominoMinH || H > kPentominoMaxH) {
    throw DomainError("H outside the supported range [1/16, 30]");
  }
  const Modulus lambda = solve_modulus_from_ratio(H);
  const SlitEndpoint slit = SlitEndpoint::from_lambda(lambda);
  const CriticalPoint cp = critical_point(slit);
  const double alpha0 = cp.x;
  const double c2 = c2_at_critical_point(slit.a, alpha0);
  // 5c^2 - 1 = (alpha0^2 (3a - 2 alpha0) - a)/a, expanded in y0 = 1 - alpha0
  // and 1 - a so that nothing cancels as both approach 1.
  const double y0 = cp.one_minus_x;
  const double ea = slit.one_minus_a;
  const double gamma =
      (y0 * y0 * (2.0 * y0 - 3.0) - 2.0 * ea + 3.0 * ea * y0 * (2.0 - y0)) / (5.0 * slit.a);
  const PentominoAlphas al = solve_alphas_impl(slit, c2, alpha0, y0, gamma);

  const Modulus mu = mu_pent(al.alpha2, al.alpha3, al.gap23);
  const PentominoSolution sol{H,
                              lambda,
                              slit.a,
                              alpha0,
                              c2,
                              al.alpha1,
                              al.alpha2,
                              al.alpha3,
                              beta_from_complement(al.alpha1, al.one_minus_alpha1),
                              betas_pent(al.alpha2),
                              betas_pent(al.alpha3),
                              mu,
                              module_from_mu(mu, 1.0),
                              al.pole_gap1,
                              al.pole_gap2,
                              al.gap23};
  const PentominoResiduals r = root_residuals(sol);
  verify(r.alpha1, "alpha1");
  verify(r.alpha2, "alpha2");
  verify(r.alpha3, "alpha3");
  return sol;
}

PentominoResiduals root_residuals(const PentominoSolution& s) {
  const double c = std::sqrt(s.c2);
  const double a = s.a;
  const double c_minus_alpha3 = s.pole_gap2 + s.gap23;
  return {rel_gap(h_from_pole_offset(s.alpha1, s.c2, s.pole_gap1 * (2.0 * c + s.pole_gap1)), 1.0 / a),
          rel_gap(h_from_pole_offset(s.alpha2, s.c2, -s.pole_gap2 * (2.0 * c - s.pole_gap2)), -1.0 / a),
          rel_gap(h_from_pole_offset(s.alpha3, s.c2, -c_minus_alpha3 * (c + s.alpha3)), -a)};
}

}  // namespace polymod
