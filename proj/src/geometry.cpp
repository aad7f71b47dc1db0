#include "polymod/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polymod/errors.hpp"

namespace polymod {

std::string_view shape_name(Shape s) { return s == Shape::pentomino ? "pentomino" : "tetromino"; }

std::vector<Point> pentomino_polygon(double H) {
  if (!(H > 0.0)) throw DomainError("H must be positive");
  return {{0.0, 1.0}, {0.0, 3.0}, {2.0 * H, 3.0}, {2.0 * H, 0.0}, {H, 0.0}, {H, 1.0}};
}

std::vector<Point> tetromino_polygon(double H) {
  if (!(H > 0.0)) throw DomainError("H must be positive");
  return {{0.0, 2.0}, {0.0, 3.0}, {2.0 * H, 3.0}, {2.0 * H, 0.0}, {H, 0.0}, {H, 2.0}};
}

std::vector<Point> polygon_for(Shape s, double H) {
  return s == Shape::pentomino ? pentomino_polygon(H) : tetromino_polygon(H);
}

double distance_to_segment(Point a, Point b, Point z) {
  const Point d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(z - a);
  const double t = std::clamp(((z - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(z - (a + t * d));
}

double distance_to_boundary(const std::vector<Point>& poly, Point z) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    best = std::min(best, distance_to_segment(poly[i], poly[(i + 1) % poly.size()], z));
  }
  return best;
}

bool point_in_polygon(const std::vector<Point>& poly, Point z) {
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point p = poly[i];
    const Point q = poly[j];
    if ((p.imag() > z.imag()) != (q.imag() > z.imag())) {
      const double x = p.real() + (z.imag() - p.imag()) * (q.real() - p.real()) / (q.imag() - p.imag());
      if (z.real() < x) inside = !inside;
    }
  }
  return inside;
}

double polygon_area(const std::vector<Point>& poly) {
  double twice = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point p = poly[i];
    const Point q = poly[(i + 1) % poly.size()];
    twice += p.real() * q.imag() - q.real() * p.imag();
  }
  return 0.5 * std::abs(twice);
}

}  // namespace polymod
