#pragma once

#include <complex>
#include <limits>
#include <vector>

#include "polymod/execution.hpp"
#include "polymod/geometry.hpp"
#include "polymod/pentomino.hpp"
#include "polymod/quadrature.hpp"
#include "polymod/tetromino.hpp"

namespace polymod {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Prevertex {
  double location;  // +infinity for the prevertex at infinity
  double exponent;  // interior angle / pi - 1
  Point target;
  char name;

  bool at_infinity() const { return location == kInfinity; }
};

// z(zeta) = offset + multiplier * int_{w_anchor}^{zeta} prod_k (t - w_k)^{e_k} dt,
// each factor on the branch with argument in [0, pi].
struct SCSpec {
  std::vector<Prevertex> prevertices;  // finite ones increasing, infinity last
  std::complex<double> multiplier;
  std::complex<double> offset;
  std::vector<Point> polygon;  // A, B, C, E, F, L
  Shape shape;
  std::size_t anchor;
  double normalization;  // |integral| over the edge following the anchor
  QuadratureOptions quad;
};

// Quadrature defaults, with rel_tol taken from POLYMOD_QUAD_TOL when that is
// set to a positive number.
QuadratureOptions default_quadrature_options();

SCSpec build_sc_pent(const PentominoSolution& sol, const QuadratureOptions& quad = default_quadrature_options());
SCSpec build_sc_tet(const TetrominoSolution& sol, const QuadratureOptions& quad = default_quadrature_options());

// prod_k (zeta - w_k)^{e_k} over the finite prevertices.
std::complex<double> sc_integrand(const SCSpec& spec, std::complex<double> zeta);

// int_from^to of the integrand along the real axis. from < to must be
// adjacent points of {w_k} u {-inf, +inf}; otherwise DomainError.
std::complex<double> side_integral(const SCSpec& spec, double from, double to);

// |side_integral|, i.e. the unscaled length of the image edge.
double sc_side_length(const SCSpec& spec, double from, double to);

// Image edge lengths |AB|, |BC|, |CE|, |EF|, |FL|, |LA|.
std::vector<double> edge_lengths(const SCSpec& spec);

// Images of the prevertices (in prevertex order) obtained by integrating
// edge by edge from the anchor. Used to verify the map.
std::vector<Point> integrated_vertices(const SCSpec& spec);
double max_vertex_error(const SCSpec& spec);
// |z after one full turn around the real axis - z at the anchor|.
double closure_error(const SCSpec& spec);

// Throws DomainError for Im zeta < 0. A real zeta within 1e-8 of a finite
// prevertex returns its vertex.
Point map_point(const SCSpec& spec, std::complex<double> zeta);
std::complex<double> map_derivative(const SCSpec& spec, std::complex<double> zeta);

// Closed polyline A -> B -> C -> E -> F -> L along the image of the real
// axis (traversed from right to left). Each edge contributes
// samples_per_edge - 1 points, its last sample being the next edge's first.
std::vector<Point> trace_boundary(const SCSpec& spec, int samples_per_edge, Execution exec = Execution::parallel);

// Newton inversion of map_point, seeded from forward images of points on
// small semicircles around every finite prevertex.
class InverseMap {
 public:
  explicit InverseMap(const SCSpec& spec);

  // Throws DomainError unless z is strictly inside the polygon and
  // NumericalError after 100 damped Newton steps without convergence.
  std::complex<double> operator()(Point z) const;

 private:
  struct Seed {
    std::complex<double> zeta;
    Point z;
  };
  SCSpec spec_;
  std::vector<Seed> seeds_;
};

std::complex<double> invert_point(const SCSpec& spec, Point z);

}  // namespace polymod
