#pragma once

#include <cstddef>
#include <vector>

#include "polymod/execution.hpp"
#include "polymod/geometry.hpp"

namespace polymod {

// A run of consecutive polygon edges; edge k joins vertex k to vertex k+1.
struct BoundaryArc {
  std::size_t first_edge = 0;
  std::size_t edge_count = 1;
};

// A rectilinear polygon with two marked boundary arcs. The module is the
// extremal length of the curves joining side_u0 to side_u1.
struct QuadrilateralSpec {
  std::vector<Point> polygon;
  BoundaryArc side_u0;
  BoundaryArc side_u1;
};

// Checks that the polygon is closed and axis-parallel and that the two arcs
// are disjoint and do not touch; throws SetupError otherwise.
QuadrilateralSpec make_quadrilateral(std::vector<Point> polygon, BoundaryArc u0, BoundaryArc u1);

QuadrilateralSpec pentomino_quadrilateral(double H);  // sides AB and EF of P_H
QuadrilateralSpec tetromino_quadrilateral(double H);  // sides AB and EF of R_H
// width x height rectangle with its two vertical sides marked (module width/height).
QuadrilateralSpec rectangle_quadrilateral(double width, double height = 1.0);

struct GridResult {
  double module = 0.0;
  double energy = 0.0;
  int n = 0;
  int iterations = 0;
  double relative_residual = 0.0;
  double snap_displacement = 0.0;  // largest vertex move when snapping to the grid
  std::size_t unknowns = 0;
};

// Discrete Dirichlet problem on the cells of mesh width 1/n whose centres lie
// inside the (snapped) polygon: u = 0 on side_u0, u = 1 on side_u1, natural
// boundary conditions elsewhere, solved by Jacobi-preconditioned CG to a
// relative residual of 1e-10. The module is 1/D for the discrete energy D;
// this is exact for rectangles. Throws DomainError for n < 8 and SetupError
// when a marked arc has no grid nodes.
GridResult grid_solve(const QuadrilateralSpec& q, int n, Execution exec = Execution::parallel);
double grid_module(const QuadrilateralSpec& q, int n, Execution exec = Execution::parallel);

struct RichardsonResult {
  double value = 0.0;
  double error = 0.0;
  double order = 0.0;    // observed (or assumed) convergence order
  bool warning = false;  // sequence not monotonically convergent
  std::vector<int> n;
  std::vector<double> modules;
};

// Reentrant-corner convergence rate used when only two levels are given.
inline constexpr double kAssumedOrder = 4.0 / 3.0;

// Richardson extrapolation over increasing resolutions (ratio 2 between the
// finest levels is assumed by the order estimate). Needs at least two levels.
RichardsonResult richardson(const QuadrilateralSpec& q, const std::vector<int>& n_list,
                            Execution exec = Execution::parallel);
// Same, on precomputed grid values.
RichardsonResult richardson_from_values(const std::vector<int>& n_list, const std::vector<double>& modules);

}  // namespace polymod
