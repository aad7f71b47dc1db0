#include "polymod/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "polymod/errors.hpp"

namespace polymod {

namespace {

constexpr double kCgTol = 1e-10;

struct IPoint {
  long x;
  long y;
};

bool arc_contains_edge(const BoundaryArc& arc, std::size_t edge, std::size_t n) {
  for (std::size_t k = 0; k < arc.edge_count; ++k) {
    if ((arc.first_edge + k) % n == edge) return true;
  }
  return false;
}

// Vertices touched by an arc: first_edge .. first_edge + edge_count.
bool arc_touches_vertex(const BoundaryArc& arc, std::size_t v, std::size_t n) {
  for (std::size_t k = 0; k <= arc.edge_count; ++k) {
    if ((arc.first_edge + k) % n == v) return true;
  }
  return false;
}

bool on_segment(IPoint a, IPoint b, long x, long y) {
  if (a.x == b.x) return x == a.x && y >= std::min(a.y, b.y) && y <= std::max(a.y, b.y);
  return y == a.y && x >= std::min(a.x, b.x) && x <= std::max(a.x, b.x);
}

// Matrix-free grid Laplacian over the active nodes of a snapped polygon.
class GridProblem {
 public:
  GridProblem(const QuadrilateralSpec& q, int n) {
    const std::size_t nv = q.polygon.size();
    std::vector<IPoint> pts(nv);
    for (std::size_t k = 0; k < nv; ++k) {
      const double sx = q.polygon[k].real() * n;
      const double sy = q.polygon[k].imag() * n;
      pts[k] = {std::lround(sx), std::lround(sy)};
      snap_ = std::max(snap_, std::hypot(sx - pts[k].x, sy - pts[k].y) / n);
    }
    for (std::size_t k = 0; k < nv; ++k) {
      const IPoint a = pts[k];
      const IPoint b = pts[(k + 1) % nv];
      if (a.x == b.x && a.y == b.y) throw SetupError("polygon edge collapses on this grid");
    }
    long x0 = pts[0].x, x1 = pts[0].x, y0 = pts[0].y, y1 = pts[0].y;
    for (const IPoint& p : pts) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
    nx_ = static_cast<int>(x1 - x0) + 1;
    ny_ = static_cast<int>(y1 - y0) + 1;

    std::vector<Point> snapped(nv);
    for (std::size_t k = 0; k < nv; ++k) snapped[k] = {double(pts[k].x - x0), double(pts[k].y - y0)};
    // Cell (i, j) has its lower-left corner at node (i, j).
    std::vector<char> cell(static_cast<std::size_t>(nx_) * ny_, 0);
    for (int j = 0; j + 1 < ny_; ++j) {
      for (int i = 0; i + 1 < nx_; ++i) {
        cell[cid(i, j)] = point_in_polygon(snapped, {i + 0.5, j + 0.5}) ? 1 : 0;
      }
    }
    auto inside = [&](int i, int j) {
      return i >= 0 && j >= 0 && i + 1 < nx_ && j + 1 < ny_ && cell[cid(i, j)] != 0;
    };

    const std::size_t size = static_cast<std::size_t>(nx_) * ny_;
    we_.assign(size, 0.0);
    wn_.assign(size, 0.0);
    diag_.assign(size, 0.0);
    free_.assign(size, 0);
    fixed_.assign(size, 0.0);
    std::vector<char> active(size, 0);
    for (int j = 0; j < ny_; ++j) {
      for (int i = 0; i < nx_; ++i) {
        const std::size_t id = nid(i, j);
        we_[id] = 0.5 * (inside(i, j - 1) + inside(i, j));
        wn_[id] = 0.5 * (inside(i - 1, j) + inside(i, j));
        active[id] = inside(i, j) || inside(i - 1, j) || inside(i, j - 1) || inside(i - 1, j - 1);
      }
    }
    for (int j = 0; j < ny_; ++j) {
      for (int i = 0; i < nx_; ++i) {
        const std::size_t id = nid(i, j);
        double d = we_[id] + wn_[id];
        if (i > 0) d += we_[nid(i - 1, j)];
        if (j > 0) d += wn_[nid(i, j - 1)];
        diag_[id] = d;
      }
    }

    auto mark = [&](const BoundaryArc& arc, double value) {
      std::size_t count = 0;
      for (std::size_t k = 0; k < arc.edge_count; ++k) {
        const std::size_t e = (arc.first_edge + k) % nv;
        const IPoint a{pts[e].x - x0, pts[e].y - y0};
        const IPoint b{pts[(e + 1) % nv].x - x0, pts[(e + 1) % nv].y - y0};
        for (long y = std::min(a.y, b.y); y <= std::max(a.y, b.y); ++y) {
          for (long x = std::min(a.x, b.x); x <= std::max(a.x, b.x); ++x) {
            if (!on_segment(a, b, x, y)) continue;
            const std::size_t id = nid(int(x), int(y));
            if (!active[id]) continue;
            fixed_[id] = value;
            active[id] = 2;
            ++count;
          }
        }
      }
      return count;
    };
    if (mark(q.side_u0, 0.0) == 0 || mark(q.side_u1, 1.0) == 0) {
      throw SetupError("a marked side has no grid nodes");
    }
    for (std::size_t id = 0; id < size; ++id) {
      free_[id] = active[id] == 1 ? 1 : 0;
      unknowns_ += free_[id];
    }
  }

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double snap() const { return snap_; }
  std::size_t unknowns() const { return unknowns_; }
  std::size_t size() const { return we_.size(); }
  const std::vector<double>& fixed() const { return fixed_; }
  const std::vector<double>& diag() const { return diag_; }
  const std::vector<char>& free_mask() const { return free_; }

  // (L x)_i = sum over links of w (x_i - x_j), evaluated at every node.
  double apply_at(const std::vector<double>& x, int i, int j) const {
    const std::size_t id = nid(i, j);
    const double xi = x[id];
    double s = 0.0;
    if (i + 1 < nx_) s += we_[id] * (xi - x[id + 1]);
    if (j + 1 < ny_) s += wn_[id] * (xi - x[id + nx_]);
    if (i > 0) s += we_[id - 1] * (xi - x[id - 1]);
    if (j > 0) s += wn_[id - nx_] * (xi - x[id - nx_]);
    return s;
  }

  double energy_row(const std::vector<double>& u, int j) const {
    double s = 0.0;
    for (int i = 0; i < nx_; ++i) {
      const std::size_t id = nid(i, j);
      if (i + 1 < nx_) s += we_[id] * (u[id] - u[id + 1]) * (u[id] - u[id + 1]);
      if (j + 1 < ny_) s += wn_[id] * (u[id] - u[id + nx_]) * (u[id] - u[id + nx_]);
    }
    return s;
  }

  std::size_t nid(int i, int j) const { return static_cast<std::size_t>(j) * nx_ + i; }

 private:
  std::size_t cid(int i, int j) const { return static_cast<std::size_t>(j) * nx_ + i; }

  int nx_ = 0;
  int ny_ = 0;
  double snap_ = 0.0;
  std::size_t unknowns_ = 0;
  std::vector<double> we_;
  std::vector<double> wn_;
  std::vector<double> diag_;
  std::vector<char> free_;
  std::vector<double> fixed_;
};

// Row-blocked kernels. Every reduction forms one partial per grid row and
// adds the rows in order, so serial and OpenMP runs agree bit for bit.
class Kernels {
 public:
  Kernels(const GridProblem& g, Execution exec) : g_(g), parallel_(exec == Execution::parallel), rows_(g.ny()) {}

  // y = L x restricted to free nodes (zero elsewhere).
  void apply(const std::vector<double>& x, std::vector<double>& y) const {
    const int nx = g_.nx();
    const auto& mask = g_.free_mask();
    auto row = [&](int j) {
      for (int i = 0; i < nx; ++i) {
        const std::size_t id = g_.nid(i, j);
        y[id] = mask[id] ? g_.apply_at(x, i, j) : 0.0;
      }
    };
    for_rows(row);
  }

  double dot(const std::vector<double>& a, const std::vector<double>& b) const {
    const int nx = g_.nx();
    return reduce_rows([&](int j) {
      double s = 0.0;
      for (int i = 0; i < nx; ++i) {
        const std::size_t id = g_.nid(i, j);
        s += a[id] * b[id];
      }
      return s;
    });
  }

  // y += alpha x
  void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) const {
    const int nx = g_.nx();
    for_rows([&](int j) {
      for (int i = 0; i < nx; ++i) {
        const std::size_t id = g_.nid(i, j);
        y[id] += alpha * x[id];
      }
    });
  }

  // p = z + beta p
  void xpby(const std::vector<double>& z, double beta, std::vector<double>& p) const {
    const int nx = g_.nx();
    for_rows([&](int j) {
      for (int i = 0; i < nx; ++i) {
        const std::size_t id = g_.nid(i, j);
        p[id] = z[id] + beta * p[id];
      }
    });
  }

  void precondition(const std::vector<double>& r, std::vector<double>& z) const {
    const int nx = g_.nx();
    const auto& mask = g_.free_mask();
    const auto& diag = g_.diag();
    for_rows([&](int j) {
      for (int i = 0; i < nx; ++i) {
        const std::size_t id = g_.nid(i, j);
        z[id] = mask[id] ? r[id] / diag[id] : 0.0;
      }
    });
  }

  double energy(const std::vector<double>& u) const {
    return reduce_rows([&](int j) { return g_.energy_row(u, j); });
  }

 private:
  template <class F>
  void for_rows(const F& row) const {
    if (parallel_) {
#pragma omp parallel for schedule(static)
      for (int j = 0; j < rows_; ++j) row(j);
    } else {
      for (int j = 0; j < rows_; ++j) row(j);
    }
  }

  template <class F>
  double reduce_rows(const F& row) const {
    std::vector<double> partial(static_cast<std::size_t>(rows_));
    for_rows([&](int j) { partial[j] = row(j); });
    double s = 0.0;
    for (double v : partial) s += v;
    return s;
  }

  const GridProblem& g_;
  bool parallel_;
  int rows_;
};

}  // namespace

QuadrilateralSpec make_quadrilateral(std::vector<Point> polygon, BoundaryArc u0, BoundaryArc u1) {
  const std::size_t n = polygon.size();
  if (n < 4) throw SetupError("polygon needs at least four vertices");
  for (std::size_t k = 0; k < n; ++k) {
    const Point d = polygon[(k + 1) % n] - polygon[k];
    if ((d.real() != 0.0) == (d.imag() != 0.0)) throw SetupError("polygon edges must be axis-parallel and non-empty");
  }
  for (const BoundaryArc& a : {u0, u1}) {
    if (a.edge_count == 0 || a.edge_count >= n || a.first_edge >= n) throw SetupError("invalid boundary arc");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (arc_touches_vertex(u0, v, n) && arc_touches_vertex(u1, v, n)) {
      throw SetupError("marked sides must not touch");
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    if (arc_contains_edge(u0, e, n) && arc_contains_edge(u1, e, n)) throw SetupError("marked sides overlap");
  }
  return {std::move(polygon), u0, u1};
}

QuadrilateralSpec pentomino_quadrilateral(double H) { return make_quadrilateral(pentomino_polygon(H), {0, 1}, {3, 1}); }

QuadrilateralSpec tetromino_quadrilateral(double H) { return make_quadrilateral(tetromino_polygon(H), {0, 1}, {3, 1}); }

QuadrilateralSpec rectangle_quadrilateral(double width, double height) {
  if (!(width > 0.0 && height > 0.0)) throw DomainError("rectangle sides must be positive");
  return make_quadrilateral({{0.0, 0.0}, {width, 0.0}, {width, height}, {0.0, height}}, {3, 1}, {1, 1});
}

GridResult grid_solve(const QuadrilateralSpec& q, int n, Execution exec) {
  if (n < 8) throw DomainError("grid resolution must be at least 8");
  const GridProblem g(q, n);
  const Kernels k(g, exec);
  const std::size_t size = g.size();

  // u = fixed + x with x supported on the free nodes: L x = -L fixed.
  std::vector<double> x(size, 0.0);
  std::vector<double> r(size);
  k.apply(g.fixed(), r);
  for (double& v : r) v = -v;
  std::vector<double> z(size);
  std::vector<double> p(size);
  std::vector<double> ap(size);
  const double bnorm = std::sqrt(k.dot(r, r));

  GridResult out;
  out.n = n;
  out.snap_displacement = g.snap();
  out.unknowns = g.unknowns();
  double rnorm = bnorm;
  if (bnorm > 0.0) {
    k.precondition(r, z);
    p = z;
    double rz = k.dot(r, z);
    const int cap = static_cast<int>(std::min<std::size_t>(20 * size + 100, 1000000));
    int it = 0;
    for (; it < cap; ++it) {
      k.apply(p, ap);
      const double alpha = rz / k.dot(p, ap);
      k.axpy(alpha, p, x);
      k.axpy(-alpha, ap, r);
      rnorm = std::sqrt(k.dot(r, r));
      if (rnorm <= kCgTol * bnorm) break;
      k.precondition(r, z);
      const double rz_next = k.dot(r, z);
      k.xpby(z, rz_next / rz, p);
      rz = rz_next;
    }
    if (it == cap) throw NumericalError("grid CG did not converge");
    out.iterations = it + 1;
  }
  out.relative_residual = bnorm > 0.0 ? rnorm / bnorm : 0.0;
  for (std::size_t id = 0; id < size; ++id) x[id] += g.fixed()[id];
  out.energy = k.energy(x);
  if (!(out.energy > 0.0)) throw SetupError("marked sides are not connected through the grid");
  out.module = 1.0 / out.energy;
  return out;
}

double grid_module(const QuadrilateralSpec& q, int n, Execution exec) { return grid_solve(q, n, exec).module; }

RichardsonResult richardson_from_values(const std::vector<int>& n_list, const std::vector<double>& modules) {
  if (n_list.size() < 2 || n_list.size() != modules.size()) throw DomainError("richardson needs at least two levels");
  for (std::size_t k = 1; k < n_list.size(); ++k) {
    if (n_list[k] <= n_list[k - 1]) throw DomainError("richardson needs increasing resolutions");
  }
  RichardsonResult res;
  res.n = n_list;
  res.modules = modules;
  const std::size_t m = modules.size();
  const double M2 = modules[m - 2];
  const double M3 = modules[m - 1];
  const double r = static_cast<double>(n_list[m - 1]) / n_list[m - 2];
  auto extrapolate = [&](double p) { return M3 + (M3 - M2) / (std::pow(r, p) - 1.0); };

  if (m == 2) {
    res.order = kAssumedOrder;
    res.value = extrapolate(kAssumedOrder);
    res.error = std::abs(res.value - M3);
    return res;
  }
  const double M1 = modules[m - 3];
  const double d1 = M1 - M2;
  const double d2 = M2 - M3;
  if (!(d1 * d2 > 0.0) || !(std::abs(d2) < std::abs(d1))) {
    res.warning = true;
    res.value = M3;
    res.order = 0.0;
    res.error = std::max(std::abs(d1), std::abs(d2));
    return res;
  }
  const double r1 = static_cast<double>(n_list[m - 2]) / n_list[m - 3];
  res.order = std::log(d1 / d2) / std::log(0.5 * (r + r1));
  res.value = extrapolate(res.order);
  // Order uncertainty: the same extrapolation at the nominal corner rate.
  res.error = std::abs(res.value - extrapolate(kAssumedOrder));
  return res;
}

RichardsonResult richardson(const QuadrilateralSpec& q, const std::vector<int>& n_list, Execution exec) {
  std::vector<double> values;
  double snap = 0.0;
  for (int n : n_list) {
    const GridResult g = grid_solve(q, n, exec);
    values.push_back(g.module);
    snap = std::max(snap, g.snap_displacement);
  }
  RichardsonResult res = richardson_from_values(n_list, values);
  // Snapping moves vertices by up to snap; a relative perturbation of that
  // size in the polygon's extent bounds the induced change in the module.
  double extent = 0.0;
  for (const Point& p : q.polygon) extent = std::max({extent, std::abs(p.real()), std::abs(p.imag())});
  res.error += res.value * snap / std::max(extent, 1.0);
  return res;
}

}  // namespace polymod
