#include "polymod/elliptic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "polymod/errors.hpp"
#include "polymod/rootfind.hpp"

namespace polymod {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double complement_of(double k) { return std::sqrt((1.0 - k) * (1.0 + k)); }

bool in_open_unit(double k) { return k > 0.0 && k < 1.0; }

}  // namespace

Modulus Modulus::from_k(double k) {
  if (!in_open_unit(k)) throw DomainError("modulus must lie in (0,1)");
  return Modulus(k, complement_of(k));
}

Modulus Modulus::from_complement(double kc) {
  if (!in_open_unit(kc)) throw DomainError("complementary modulus must lie in (0,1)");
  return Modulus(complement_of(kc), kc);
}

Modulus Modulus::from_pair(double k, double kc) {
  if (!(k > 0.0 && k <= 1.0 && kc > 0.0 && kc <= 1.0)) {
    throw DomainError("modulus pair must lie in (0,1]");
  }
  if (std::abs(k * k + kc * kc - 1.0) > 4.0 * kEps) {
    throw DomainError("modulus pair does not satisfy k^2 + k'^2 = 1");
  }
  return Modulus(k, kc);
}

double agm(double a, double b) {
  if (a < 0.0 || b < 0.0) throw DomainError("agm of a negative number");
  if (a == 0.0 || b == 0.0) return 0.0;
  for (int i = 0; i < 64; ++i) {
    if (std::abs(a - b) <= kEps * a) break;
    const double next = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next;
  }
  return 0.5 * (a + b);
}

double complete_elliptic_k(double k) {
  if (!(k >= 0.0 && k < 1.0)) throw DomainError("K(k) requires 0 <= k < 1");
  return std::numbers::pi / (2.0 * agm(1.0, complement_of(k)));
}

double complete_elliptic_k(const Modulus& m) {
  return std::numbers::pi / (2.0 * agm(1.0, m.complement()));
}

double k_ratio(const Modulus& m) {
  // K(k)/K(k') = AGM(1,k) / AGM(1,k').
  return agm(1.0, m.k()) / agm(1.0, m.complement());
}

double k_ratio(double k) { return k_ratio(Modulus::from_k(k)); }

Modulus solve_modulus_from_ratio(double H) {
  if (!(H > 0.0) || !std::isfinite(H)) throw DomainError("H must be positive");
  if (H == 2.0) {
    // K(k) = K(k') forces k = k'.
    return Modulus::from_pair(std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0);
  }
  // Solve for the small member of the pair. With s = that member the ratio
  // 2K/K' is nearly linear in log(s), so the search runs on log(s) first and
  // is then sharpened on s itself.
  const bool on_complement = H > 2.0;
  auto pair_from_small = [on_complement](double s) {
    const double big = complement_of(s);
    return on_complement ? Modulus::from_pair(big, s) : Modulus::from_pair(s, big);
  };
  auto residual = [&](double s) { return 2.0 * k_ratio(pair_from_small(s)) - H; };
  auto log_residual = [&](double t) { return residual(std::exp(t)); };

  const double log_lo = std::log(1e-300);
  const double log_hi = std::log(std::numbers::sqrt2 / 2.0);
  double t = 0.0;
  try {
    t = bracketed_root(log_residual, log_lo, log_hi, 0.0);
  } catch (const BracketError&) {
    throw DomainError("H outside the representable range of the modulus solver");
  }
  double s = std::exp(t);
  // Widen until the linear-variable bracket straddles the root, then refine.
  double lo = s * (1.0 - 1e-10);
  double hi = std::min(s * (1.0 + 1e-10), std::numbers::sqrt2 / 2.0);
  for (int i = 0; i < 40; ++i) {
    const double rlo = residual(lo);
    const double rhi = residual(hi);
    if ((rlo <= 0.0) != (rhi <= 0.0) || rlo == 0.0 || rhi == 0.0) break;
    lo *= 0.5;
    hi = std::min(2.0 * hi, std::numbers::sqrt2 / 2.0);
  }
  s = bracketed_root(residual, lo, hi, 0.0);
  return pair_from_small(s);
}

double module_from_mu(const Modulus& mu, double multiplier) {
  if (!(multiplier > 0.0)) throw DomainError("module multiplier must be positive");
  return multiplier * k_ratio(mu);
}

}  // namespace polymod
