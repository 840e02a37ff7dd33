#include "polydig/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace polydig {

namespace {

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

double distance_to_segment(Complex z, Complex a, Complex b) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(z - a);
  double t = ((z - a) * std::conj(d)).real() / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(z - (a + t * d));
}

}  // namespace

double default_hull_tolerance(const std::vector<Complex>& points) {
  double m = 0.0;
  for (auto z : points) m = std::max(m, std::abs(z));
  return 1e-8 * (1.0 + m);
}

std::vector<Complex> merge_close(const std::vector<Complex>& points, double tol) {
  std::vector<Complex> reps;
  for (auto z : points) {
    bool found = false;
    for (auto r : reps)
      if (std::abs(r - z) <= tol) {
        found = true;
        break;
      }
    if (!found) reps.push_back(z);
  }
  return reps;
}

HullPolygon convex_hull(std::vector<Complex> points, double tol) {
  if (tol < 0) throw std::invalid_argument("convex_hull: negative tolerance");
  auto less = [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  };
  std::sort(points.begin(), points.end(), less);
  points = merge_close(points, tol);
  std::sort(points.begin(), points.end(), less);

  HullPolygon out;
  const std::size_t n = points.size();
  if (n <= 1) {
    out.vertices = points;
    return out;
  }

  // Exact monotone chain, then drop vertices within tol of the segment
  // joining their neighbours. Testing against the segment rather than the
  // line keeps extreme points whose x order is scrambled by rounding.
  std::vector<Complex> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], points[i]) <= 0) --k;
    h[k++] = points[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], points[i]) <= 0) --k;
    h[k++] = points[i];
  }
  h.resize(k - 1);
  for (bool changed = true; changed && h.size() > 2;) {
    changed = false;
    for (std::size_t i = 0; i < h.size() && h.size() > 2; ++i) {
      const Complex prev = h[(i + h.size() - 1) % h.size()], next = h[(i + 1) % h.size()];
      if (distance_to_segment(h[i], prev, next) <= tol) {
        h.erase(h.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }

  // Start from the lowest, then leftmost vertex.
  auto start = std::min_element(h.begin(), h.end(), [](Complex a, Complex b) {
    if (a.imag() != b.imag()) return a.imag() < b.imag();
    return a.real() < b.real();
  });
  std::rotate(h.begin(), start, h.end());
  out.vertices = std::move(h);
  return out;
}

HullPolygon convex_hull(const std::vector<Complex>& points) {
  return convex_hull(points, default_hull_tolerance(points));
}

double distance_to_polygon(Complex z, const HullPolygon& p) {
  const auto& v = p.vertices;
  if (v.empty()) throw std::invalid_argument("distance_to_polygon: empty polygon");
  if (v.size() == 1) return std::abs(z - v[0]);
  if (v.size() == 2) return distance_to_segment(z, v[0], v[1]);
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Complex a = v[i], b = v[(i + 1) % v.size()];
    if (cross(a, b, z) < 0) inside = false;
    best = std::min(best, distance_to_segment(z, a, b));
  }
  return inside ? 0.0 : best;
}

double support_value(const HullPolygon& p, double theta) {
  if (p.empty()) return -std::numeric_limits<double>::infinity();
  const Complex rot = std::polar(1.0, theta);
  double h = -std::numeric_limits<double>::infinity();
  for (auto v : p.vertices) h = std::max(h, (rot * v).real());
  return h;
}

double hausdorff_distance(const HullPolygon& a, const HullPolygon& b) {
  // For convex sets the farthest point of one from the other is a vertex.
  double d = 0.0;
  for (auto z : a.vertices) d = std::max(d, distance_to_polygon(z, b));
  for (auto z : b.vertices) d = std::max(d, distance_to_polygon(z, a));
  return d;
}

double polygon_area(const HullPolygon& p) {
  const auto& v = p.vertices;
  if (v.size() < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Complex a = v[i], b = v[(i + 1) % v.size()];
    s += a.real() * b.imag() - b.real() * a.imag();
  }
  return 0.5 * s;
}

}  // namespace polydig
