#pragma once

#include <functional>

namespace polymod {

using RealFunction = std::function<double(double)>;

// A closed interval on which a continuous function changes sign.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  int lo_sign = 0;  // sign of f(lo): -1, 0 or +1
  int hi_sign = 0;

  // Evaluates f at both ends. Throws BracketError unless lo < hi and the
  // signs differ (a zero at either end is accepted).
  static Bracket make(const RealFunction& f, double lo, double hi);

  bool contains(double x) const { return lo <= x && x <= hi; }
};

inline constexpr double kDefaultRootTol = 0.0;
inline constexpr int kRootIterationCap = 200;

// Brent's method (inverse quadratic / secant steps with bisection fallback).
// Stops once the enclosing interval is no wider than 2 max(tol, 2 eps) |x|,
// so the default runs to full double precision. The result always lies in [b.lo, b.hi].
// Throws BracketError if the recorded signs do not match f, NumericalError
// after kRootIterationCap iterations.
double bracketed_root(const RealFunction& f, const Bracket& b, double tol = kDefaultRootTol);

// Convenience overload that builds the bracket itself.
double bracketed_root(const RealFunction& f, double lo, double hi, double tol = kDefaultRootTol);

// A few Newton steps from x0 that are kept only while they stay inside the
// guard and reduce |f|. Returns x0 unchanged when df(x0) == 0.
double newton_polish(const RealFunction& f, const RealFunction& df, double x0, const Bracket& guard);

}  // namespace polymod
