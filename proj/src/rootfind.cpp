#include "polymod/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "polymod/errors.hpp"

namespace polymod {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

Bracket Bracket::make(const RealFunction& f, double lo, double hi) {
  if (!(lo < hi)) {
    throw BracketError("bracket requires lo < hi");
  }
  const double flo = f(lo);
  const double fhi = f(hi);
  if (std::isnan(flo) || std::isnan(fhi)) {
    throw BracketError("function is NaN at a bracket endpoint");
  }
  Bracket b{lo, hi, sign_of(flo), sign_of(fhi)};
  if (b.lo_sign != 0 && b.hi_sign != 0 && b.lo_sign == b.hi_sign) {
    throw BracketError("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return b;
}

double bracketed_root(const RealFunction& f, const Bracket& br, double tol) {
  if (!(br.lo < br.hi)) {
    throw BracketError("bracket requires lo < hi");
  }
  double a = br.lo;
  double b = br.hi;
  double fa = f(a);
  double fb = f(b);
  if (sign_of(fa) != br.lo_sign || sign_of(fb) != br.hi_sign) {
    throw BracketError("bracket signs do not match the function");
  }
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (sign_of(fa) == sign_of(fb)) {
    throw BracketError("no sign change in bracket");
  }
  const double rel = std::max(tol, 2.0 * kEps);

  // Classic zeroin bookkeeping: b is the best estimate, c the contrapoint.
  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  for (int iter = 0; iter < kRootIterationCap; ++iter) {
    if (sign_of(fb) == sign_of(fc)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = rel * std::abs(b) + std::numeric_limits<double>::denorm_min();
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) {
      return std::min(std::max(b, br.lo), br.hi);
    }
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p;
      double q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) {
        q = -q;
      } else {
        p = -p;
      }
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : std::copysign(tol1, xm);
    fb = f(b);
  }
  throw NumericalError("bracketed_root: iteration cap exceeded");
}

double bracketed_root(const RealFunction& f, double lo, double hi, double tol) {
  return bracketed_root(f, Bracket::make(f, lo, hi), tol);
}

double newton_polish(const RealFunction& f, const RealFunction& df, double x0, const Bracket& guard) {
  double x = x0;
  double fx = f(x);
  for (int i = 0; i < 8 && fx != 0.0; ++i) {
    const double slope = df(x);
    if (slope == 0.0 || !std::isfinite(slope)) break;
    const double next = x - fx / slope;
    if (!guard.contains(next)) break;
    const double fnext = f(next);
    if (!(std::abs(fnext) < std::abs(fx))) break;
    x = next;
    fx = fnext;
  }
  return x;
}

}  // namespace polymod
