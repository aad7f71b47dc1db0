#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace polymod {

inline constexpr std::size_t kGaussNodes = 32;

// Nodes and weights of the 32-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::array<double, kGaussNodes> nodes;
  std::array<double, kGaussNodes> weights;
};

const GaussLegendreRule& gauss_legendre_32();

struct QuadratureOptions {
  double rel_tol = 1e-11;
  // Uniform panels the interval is cut into before adaptive splitting.
  int initial_panels = 1;
  int max_depth = 48;
};

namespace detail {

template <class F>
std::complex<double> gauss_panel(const F& f, double a, double b) {
  const auto& rule = gauss_legendre_32();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < kGaussNodes; ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

template <class F>
std::complex<double> adapt(const F& f, double a, double b, std::complex<double> whole, double abs_tol,
                           double rel_tol, int depth) {
  const double mid = 0.5 * (a + b);
  const std::complex<double> left = gauss_panel(f, a, mid);
  const std::complex<double> right = gauss_panel(f, mid, b);
  const std::complex<double> refined = left + right;
  const double diff = std::abs(refined - whole);
  if (depth <= 0 || diff <= abs_tol || diff <= rel_tol * std::abs(refined) || mid == a || mid == b) {
    return refined;
  }
  return adapt(f, a, mid, left, 0.5 * abs_tol, rel_tol, depth - 1) +
         adapt(f, mid, b, right, 0.5 * abs_tol, rel_tol, depth - 1);
}

}  // namespace detail

// Adaptive Gauss-Legendre integral of a complex-valued f over [a, b]. A panel
// is accepted once it agrees with the sum of its two halves to rel_tol,
// relative either to itself or to its share of the whole integral.
template <class F>
std::complex<double> integrate(const F& f, double a, double b, const QuadratureOptions& opt = {}) {
  if (a == b) return 0.0;
  const int n = opt.initial_panels < 1 ? 1 : opt.initial_panels;
  const double w = (b - a) / n;
  auto panel_lo = [&](int i) { return a + i * w; };
  auto panel_hi = [&](int i) { return i + 1 == n ? b : a + (i + 1) * w; };

  std::vector<std::complex<double>> coarse(static_cast<std::size_t>(n));
  std::complex<double> total = 0.0;
  for (int i = 0; i < n; ++i) {
    coarse[i] = detail::gauss_panel(f, panel_lo(i), panel_hi(i));
    total += coarse[i];
  }
  const double abs_tol = opt.rel_tol * std::abs(total) / n;
  std::complex<double> result = 0.0;
  for (int i = 0; i < n; ++i) {
    result += detail::adapt(f, panel_lo(i), panel_hi(i), coarse[i], abs_tol, opt.rel_tol, opt.max_depth);
  }
  return result;
}

}  // namespace polymod
