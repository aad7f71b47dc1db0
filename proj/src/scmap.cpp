#include "polymod/scmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "polymod/errors.hpp"

namespace polymod {

namespace {

using cplx = std::complex<double>;

constexpr double kVertexSnap = 1e-8;

// (d)^e with arg d in [0, pi]. Rounding can leave a tiny negative imaginary
// part on the real axis; that is folded back onto the upper edge of the cut.
cplx branch_power(cplx d, double e) {
  if (!(d.imag() > 0.0)) d = {d.real(), 0.0};
  if (e == -0.5) return 1.0 / std::sqrt(d);
  if (e == 0.5) return std::sqrt(d);
  return std::pow(d, e);
}

std::size_t finite_count(const SCSpec& spec) { return spec.prevertices.size() - 1; }

// Product over the finite prevertices, leaving out index skip.
cplx integrand_excluding(const SCSpec& spec, cplx t, std::size_t skip) {
  cplx prod = 1.0;
  for (std::size_t k = 0; k < finite_count(spec); ++k) {
    if (k == skip) continue;
    prod *= branch_power(t - spec.prevertices[k].location, spec.prevertices[k].exponent);
  }
  return prod;
}

double far_scale(const SCSpec& spec) {
  const double lo = spec.prevertices.front().location;
  const double hi = spec.prevertices[finite_count(spec) - 1].location;
  return std::max(1.0, hi - lo);
}

// int_{w_a}^{w_b}, split at the midpoint with t = w_a + s^2 on the left and
// t = w_b - s^2 on the right so both endpoint singularities disappear.
cplx finite_side(const SCSpec& spec, std::size_t ia, std::size_t ib) {
  const double wa = spec.prevertices[ia].location;
  const double wb = spec.prevertices[ib].location;
  const double ea = spec.prevertices[ia].exponent;
  const double eb = spec.prevertices[ib].exponent;
  const double mid = 0.5 * (wa + wb);
  const cplx phase_b = branch_power(-1.0, eb);
  const cplx left = integrate(
      [&](double s) { return 2.0 * std::pow(s, 1.0 + 2.0 * ea) * integrand_excluding(spec, wa + s * s, ia); }, 0.0,
      std::sqrt(mid - wa), spec.quad);
  const cplx right = integrate(
      [&](double s) {
        return 2.0 * std::pow(s, 1.0 + 2.0 * eb) * phase_b * integrand_excluding(spec, wb - s * s, ib);
      },
      0.0, std::sqrt(wb - mid), spec.quad);
  return left + right;
}

// int_{w_last}^{+inf}: t = w_last + s^2 up to w_last + L, then t = w_last + L/v^2.
cplx right_unbounded(const SCSpec& spec) {
  const std::size_t il = finite_count(spec) - 1;
  const double wl = spec.prevertices[il].location;
  const double el = spec.prevertices[il].exponent;
  const double L = far_scale(spec);
  const cplx near = integrate(
      [&](double s) { return 2.0 * std::pow(s, 1.0 + 2.0 * el) * integrand_excluding(spec, wl + s * s, il); }, 0.0,
      std::sqrt(L), spec.quad);
  const cplx far = integrate(
      [&](double v) {
        cplx prod = 2.0 * L;
        for (std::size_t k = 0; k <= il; ++k) {
          prod *= branch_power(L + (wl - spec.prevertices[k].location) * v * v, spec.prevertices[k].exponent);
        }
        return prod;
      },
      0.0, 1.0, spec.quad);
  return near + far;
}

// int_{-inf}^{w_first}: t = w_first - s^2 down to w_first - L, then t = w_first - L/v^2.
cplx left_unbounded(const SCSpec& spec) {
  const double wf = spec.prevertices[0].location;
  const double ef = spec.prevertices[0].exponent;
  const double L = far_scale(spec);
  const cplx phase_f = branch_power(-1.0, ef);
  const cplx near = integrate(
      [&](double s) {
        return 2.0 * std::pow(s, 1.0 + 2.0 * ef) * phase_f * integrand_excluding(spec, wf - s * s, 0);
      },
      0.0, std::sqrt(L), spec.quad);
  cplx phase_all = 1.0;
  for (std::size_t k = 0; k < finite_count(spec); ++k) phase_all *= branch_power(-1.0, spec.prevertices[k].exponent);
  const cplx far = integrate(
      [&](double v) {
        cplx prod = 2.0 * L * phase_all;
        for (std::size_t k = 0; k < finite_count(spec); ++k) {
          prod *= branch_power(L + (spec.prevertices[k].location - wf) * v * v, spec.prevertices[k].exponent);
        }
        return prod;
      },
      0.0, 1.0, spec.quad);
  return near + far;
}

// Integral from prevertex i to the next one in increasing order, wrapping
// from infinity through -infinity to the first finite prevertex.
cplx edge_integral(const SCSpec& spec, std::size_t i) {
  const std::size_t n = spec.prevertices.size();
  if (i == n - 1) return left_unbounded(spec);
  if (i == n - 2) return right_unbounded(spec);
  return finite_side(spec, i, i + 1);
}

std::size_t index_of(const SCSpec& spec, char name) {
  for (std::size_t k = 0; k < spec.prevertices.size(); ++k) {
    if (spec.prevertices[k].name == name) return k;
  }
  throw SetupError(std::string("no prevertex for vertex ") + name);
}

// Edge between two prevertices that are neighbours on the extended real line.
cplx edge_between(const SCSpec& spec, std::size_t i, std::size_t j) {
  const std::size_t n = spec.prevertices.size();
  if (j == (i + 1) % n) return edge_integral(spec, i);
  if (i == (j + 1) % n) return -edge_integral(spec, j);
  throw SetupError("prevertices are not adjacent");
}

SCSpec finish(SCSpec spec, std::size_t anchor) {
  spec.anchor = anchor;
  spec.offset = spec.prevertices[anchor].target;
  const std::size_t next = (anchor + 1) % spec.prevertices.size();
  const cplx I = edge_integral(spec, anchor);
  spec.normalization = std::abs(I);
  spec.multiplier = (spec.prevertices[next].target - spec.offset) / I;
  return spec;
}

cplx from_nearest_prevertex(const SCSpec& spec, cplx zeta) {
  std::size_t j = 0;
  double best = kInfinity;
  for (std::size_t k = 0; k < finite_count(spec); ++k) {
    const double d = std::abs(zeta - spec.prevertices[k].location);
    if (d < best) {
      best = d;
      j = k;
    }
  }
  const Prevertex& p = spec.prevertices[j];
  const cplx delta = zeta - p.location;
  const cplx head = 2.0 * delta * branch_power(delta, p.exponent);
  // t = w_j + s^2 delta removes the endpoint singularity at w_j.
  const cplx I = integrate(
      [&](double s) { return head * std::pow(s, 1.0 + 2.0 * p.exponent) * integrand_excluding(spec, p.location + s * s * delta, j); },
      0.0, 1.0, spec.quad);
  return p.target + spec.multiplier * I;
}

// t = zeta / v^2 maps v in (0, 1] onto the ray from infinity to zeta:
// int_inf^zeta f dt = -2 zeta int_0^1 prod (zeta - w_k v^2)^{e_k} dv.
cplx from_infinity(const SCSpec& spec, cplx zeta) {
  const cplx I = integrate(
      [&](double v) {
        cplx prod = -2.0 * zeta;
        for (std::size_t k = 0; k < finite_count(spec); ++k) {
          prod *= branch_power(zeta - spec.prevertices[k].location * v * v, spec.prevertices[k].exponent);
        }
        return prod;
      },
      0.0, 1.0, spec.quad);
  return spec.prevertices.back().target + spec.multiplier * I;
}

}  // namespace

QuadratureOptions default_quadrature_options() {
  QuadratureOptions opt;
  if (const char* env = std::getenv("POLYMOD_QUAD_TOL")) {
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (end != env && tol > 0.0 && std::isfinite(tol)) opt.rel_tol = tol;
  }
  return opt;
}

SCSpec build_sc_pent(const PentominoSolution& sol, const QuadratureOptions& quad) {
  const std::vector<Point> poly = pentomino_polygon(sol.H);
  SCSpec spec;
  spec.prevertices = {{0.0, -0.5, poly[3], 'E'},       {sol.beta1, -0.5, poly[2], 'C'},
                      {sol.beta2, -0.5, poly[1], 'B'}, {sol.beta3, -0.5, poly[0], 'A'},
                      {1.0, 0.5, poly[5], 'L'},        {kInfinity, -0.5, poly[4], 'F'}};
  spec.polygon = poly;
  spec.shape = Shape::pentomino;
  spec.quad = quad;
  return finish(std::move(spec), 0);
}

SCSpec build_sc_tet(const TetrominoSolution& sol, const QuadratureOptions& quad) {
  const std::vector<Point> poly = tetromino_polygon(sol.H);
  SCSpec spec;
  spec.prevertices = {{0.0, -0.5, poly[1], 'B'},       {sol.beta1, -0.5, poly[0], 'A'},
                      {1.0, 0.5, poly[5], 'L'},        {sol.beta2, -0.5, poly[4], 'F'},
                      {sol.beta3, -0.5, poly[3], 'E'}, {kInfinity, -0.5, poly[2], 'C'}};
  spec.polygon = poly;
  spec.shape = Shape::tetromino;
  spec.quad = quad;
  return finish(std::move(spec), 4);
}

std::complex<double> sc_integrand(const SCSpec& spec, std::complex<double> zeta) {
  return integrand_excluding(spec, zeta, spec.prevertices.size());
}

std::complex<double> side_integral(const SCSpec& spec, double from, double to) {
  if (!(from < to)) throw DomainError("side_integral needs from < to");
  const std::size_t nf = finite_count(spec);
  if (from == -kInfinity) {
    if (to != spec.prevertices[0].location) throw DomainError("interval contains a prevertex");
    return left_unbounded(spec);
  }
  for (std::size_t k = 0; k < nf; ++k) {
    if (spec.prevertices[k].location != from) continue;
    if (k + 1 == nf) {
      if (to != kInfinity) throw DomainError("interval contains a prevertex");
      return right_unbounded(spec);
    }
    if (to != spec.prevertices[k + 1].location) throw DomainError("interval contains a prevertex");
    return finite_side(spec, k, k + 1);
  }
  throw DomainError("interval does not start at a prevertex");
}

double sc_side_length(const SCSpec& spec, double from, double to) { return std::abs(side_integral(spec, from, to)); }

std::vector<double> edge_lengths(const SCSpec& spec) {
  std::vector<double> out;
  const double scale = std::abs(spec.multiplier);
  for (int v = 0; v < 6; ++v) {
    const std::size_t i = index_of(spec, kVertexNames[v]);
    const std::size_t j = index_of(spec, kVertexNames[(v + 1) % 6]);
    out.push_back(scale * std::abs(edge_between(spec, i, j)));
  }
  return out;
}

std::vector<Point> integrated_vertices(const SCSpec& spec) {
  const std::size_t n = spec.prevertices.size();
  std::vector<Point> z(n);
  z[spec.anchor] = spec.offset;
  for (std::size_t s = 0; s + 1 < n; ++s) {
    const std::size_t i = (spec.anchor + s) % n;
    z[(i + 1) % n] = z[i] + spec.multiplier * edge_integral(spec, i);
  }
  return z;
}

double max_vertex_error(const SCSpec& spec) {
  const std::vector<Point> z = integrated_vertices(spec);
  double worst = 0.0;
  for (std::size_t k = 0; k < z.size(); ++k) worst = std::max(worst, std::abs(z[k] - spec.prevertices[k].target));
  return worst;
}

double closure_error(const SCSpec& spec) {
  const std::size_t n = spec.prevertices.size();
  Point z = spec.offset;
  for (std::size_t s = 0; s < n; ++s) z += spec.multiplier * edge_integral(spec, (spec.anchor + s) % n);
  return std::abs(z - spec.offset);
}

Point map_point(const SCSpec& spec, std::complex<double> zeta) {
  if (!std::isfinite(zeta.real()) || !std::isfinite(zeta.imag())) throw DomainError("zeta must be finite");
  if (zeta.imag() < 0.0) throw DomainError("zeta must lie in the closed upper half-plane");
  double reach = 1.0;
  for (std::size_t k = 0; k < finite_count(spec); ++k) {
    const Prevertex& p = spec.prevertices[k];
    if (zeta.imag() == 0.0 && std::abs(zeta.real() - p.location) <= kVertexSnap) return p.target;
    reach = std::max(reach, std::abs(p.location));
  }
  if (std::abs(zeta) > 2.0 * reach) return from_infinity(spec, zeta);
  return from_nearest_prevertex(spec, zeta);
}

std::complex<double> map_derivative(const SCSpec& spec, std::complex<double> zeta) {
  if (zeta.imag() < 0.0) throw DomainError("zeta must lie in the closed upper half-plane");
  return spec.multiplier * sc_integrand(spec, zeta);
}

std::vector<Point> trace_boundary(const SCSpec& spec, int samples_per_edge, Execution exec) {
  if (samples_per_edge < 2) throw DomainError("samples_per_edge must be at least 2");
  const int per = samples_per_edge - 1;
  const double L = far_scale(spec);
  std::vector<Point> out(static_cast<std::size_t>(6 * per));

  auto sample = [&](int idx) {
    const int edge = idx / per;
    const double u = static_cast<double>(idx % per) / per;
    const Prevertex& p = spec.prevertices[index_of(spec, kVertexNames[edge])];
    const Prevertex& q = spec.prevertices[index_of(spec, kVertexNames[(edge + 1) % 6])];
    if (u == 0.0) return p.target;
    double t;
    if (p.at_infinity()) {
      t = q.location + L * (1.0 - u) / u;
    } else if (q.at_infinity()) {
      t = p.location - L * u / (1.0 - u);
    } else {
      t = p.location + (q.location - p.location) * u;
    }
    return map_point(spec, t);
  };

  const int total = static_cast<int>(out.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < total; ++i) out[i] = sample(i);
  } else {
    for (int i = 0; i < total; ++i) out[i] = sample(i);
  }
  return out;
}

InverseMap::InverseMap(const SCSpec& spec) : spec_(spec) {
  const std::size_t nf = finite_count(spec_);
  double spacing = kInfinity;
  for (std::size_t k = 0; k + 1 < nf; ++k) {
    spacing = std::min(spacing, spec_.prevertices[k + 1].location - spec_.prevertices[k].location);
  }
  constexpr int kAngles = 6;
  constexpr int kMinPow = -12;
  constexpr int kMaxPow = 12;
  for (std::size_t k = 0; k < nf; ++k) {
    for (int m = kMinPow; m <= kMaxPow; ++m) {
      for (int a = 0; a < kAngles; ++a) {
        const double theta = std::numbers::pi * (a + 0.5) / kAngles;
        seeds_.push_back({spec_.prevertices[k].location + std::ldexp(spacing, m) * std::polar(1.0, theta), 0.0});
      }
    }
  }
  const int total = static_cast<int>(seeds_.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < total; ++i) seeds_[i].z = map_point(spec_, seeds_[i].zeta);
}

std::complex<double> InverseMap::operator()(Point z) const {
  const double scale = std::max(1.0, std::abs(z));
  if (!point_in_polygon(spec_.polygon, z) || distance_to_boundary(spec_.polygon, z) <= 1e-12 * scale) {
    throw DomainError("point is not strictly inside the polygon");
  }
  const Seed* best = &seeds_.front();
  for (const Seed& s : seeds_) {
    if (std::abs(s.z - z) < std::abs(best->z - z)) best = &s;
  }
  cplx zeta = best->zeta;
  cplx r = best->z - z;
  for (int iter = 0; iter < 100; ++iter) {
    if (std::abs(r) <= 1e-13 * scale) return zeta;
    const cplx step = r / map_derivative(spec_, zeta);
    bool accepted = false;
    double damp = 1.0;
    for (int h = 0; h < 60 && !accepted; ++h, damp *= 0.5) {
      const cplx cand = zeta - damp * step;
      if (!(cand.imag() > 0.0)) continue;
      const cplx rc = map_point(spec_, cand) - z;
      if (std::abs(rc) < std::abs(r)) {
        zeta = cand;
        r = rc;
        accepted = true;
      }
    }
    // No further decrease: accept once the residual is at quadrature noise.
    if (!accepted) {
      if (std::abs(r) <= 1e-10 * scale) return zeta;
      break;
    }
  }
  throw NumericalError("inverse map: Newton iteration did not converge");
}

std::complex<double> invert_point(const SCSpec& spec, Point z) { return InverseMap(spec)(z); }

}  // namespace polymod
