#pragma once

#include <complex>
#include <string_view>
#include <vector>

namespace polymod {

using Point = std::complex<double>;

enum class Shape { pentomino, tetromino };

std::string_view shape_name(Shape s);

// Vertex labels shared by both polygons, in boundary order.
inline constexpr char kVertexNames[6] = {'A', 'B', 'C', 'E', 'F', 'L'};

// P_H: i, 3i, 2H+3i, 2H, H, H+i (vertices A, B, C, E, F, L).
std::vector<Point> pentomino_polygon(double H);
// R_H: 2i, 3i, 2H+3i, 2H, H, H+2i (vertices A, B, C, E, F, L).
std::vector<Point> tetromino_polygon(double H);
std::vector<Point> polygon_for(Shape s, double H);

double distance_to_segment(Point a, Point b, Point z);
double distance_to_boundary(const std::vector<Point>& poly, Point z);

// Even-odd test. Points on the boundary may land on either side; callers
// that care combine this with distance_to_boundary.
bool point_in_polygon(const std::vector<Point>& poly, Point z);

double polygon_area(const std::vector<Point>& poly);

}  // namespace polymod
