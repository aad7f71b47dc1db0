#include <doctest.h>

#include "polymod/errors.hpp"
#include "polymod/geometry.hpp"

using namespace polymod;

TEST_CASE("polygon vertices in order A, B, C, E, F, L") {
  const auto p = pentomino_polygon(2.0);
  REQUIRE(p.size() == 6);
  CHECK(p[0] == Point(0, 1));
  CHECK(p[1] == Point(0, 3));
  CHECK(p[2] == Point(4, 3));
  CHECK(p[3] == Point(4, 0));
  CHECK(p[4] == Point(2, 0));
  CHECK(p[5] == Point(2, 1));
  const auto r = tetromino_polygon(1.0);
  CHECK(r[0] == Point(0, 2));
  CHECK(r[5] == Point(1, 2));
  CHECK(polygon_for(Shape::tetromino, 1.0) == r);
  CHECK_THROWS_AS(pentomino_polygon(0.0), DomainError);
}

TEST_CASE("areas: five and four stretched squares") {
  CHECK(polygon_area(pentomino_polygon(1.0)) == 5.0);
  CHECK(polygon_area(pentomino_polygon(3.0)) == 15.0);
  CHECK(polygon_area(tetromino_polygon(1.0)) == 4.0);
  CHECK(polygon_area(tetromino_polygon(2.5)) == 10.0);
}

TEST_CASE("point location and distances") {
  const auto p = pentomino_polygon(1.0);
  CHECK(point_in_polygon(p, {1.5, 2.0}));
  CHECK(point_in_polygon(p, {1.5, 0.5}));
  CHECK_FALSE(point_in_polygon(p, {0.5, 0.5}));  // the notch below L
  CHECK_FALSE(point_in_polygon(p, {3.0, 1.0}));
  CHECK(distance_to_boundary(p, {1.5, 2.0}) == doctest::Approx(0.5));
  CHECK(distance_to_boundary(p, {0.5, 0.5}) == doctest::Approx(0.5));
  CHECK(distance_to_boundary(p, {0.0, 2.0}) == 0.0);
  CHECK(distance_to_segment({0, 0}, {1, 0}, {2, 1}) == doctest::Approx(std::sqrt(2.0)));
  CHECK(distance_to_segment({0, 0}, {0, 0}, {3, 4}) == 5.0);
  CHECK(shape_name(Shape::pentomino) == "pentomino");
}
