#pragma once

#include <vector>

#include "polydig/spectrum.hpp"

namespace polydig {

// Convex polygon in the complex plane, vertices counter-clockwise starting
// from the lowest (then leftmost) point. One vertex is a point, two a segment.
struct HullPolygon {
  std::vector<Complex> vertices;

  std::size_t size() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }
};

// Default collinearity tolerance for a point set: 1e-8 * (1 + max |p|).
double default_hull_tolerance(const std::vector<Complex>& points);

// Monotone-chain hull. Points within tol of each other are collapsed first
// and points within tol of a hull edge are not emitted as vertices.
HullPolygon convex_hull(std::vector<Complex> points, double tol);
HullPolygon convex_hull(const std::vector<Complex>& points);

// Greedy merge: each point joins the first earlier representative within tol.
std::vector<Complex> merge_close(const std::vector<Complex>& points, double tol);

// Euclidean distance from z to the filled polygon (0 inside).
double distance_to_polygon(Complex z, const HullPolygon& p);

// max over vertices of Re(e^{i theta} v).
double support_value(const HullPolygon& p, double theta);

// Hausdorff distance between two filled convex polygons.
double hausdorff_distance(const HullPolygon& a, const HullPolygon& b);

double polygon_area(const HullPolygon& p);

}  // namespace polydig
