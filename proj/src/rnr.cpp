#include "polydig/rnr.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "polydig/eigen.hpp"
#include "polydig/error.hpp"
#include "polydig/exact.hpp"

namespace polydig {

namespace {

void require_order(const Digraph& g, int min, const char* who) {
  if (g.order() < min)
    throw std::invalid_argument(std::string(who) + ": order must be at least " + std::to_string(min));
}

// H(rot * B) for real B.
ComplexMatrix rotated_hermitian_part(const RealMatrix& b, Complex rot) {
  const std::size_t m = b.rows();
  ComplexMatrix h(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    h(i, i) = (rot * b(i, i)).real();
    for (std::size_t j = i + 1; j < m; ++j) {
      const Complex v = 0.5 * (rot * b(i, j) + std::conj(rot) * b(j, i));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

double theta_at(int k, int m) { return 2.0 * std::numbers::pi * k / m; }

}  // namespace

RealMatrix restricted_matrix(const Digraph& g, RestrictorKind kind) {
  require_order(g, 1, "restricted_matrix");
  const RealMatrix q = restrictor_matrix(g.order(), kind);
  return q.transpose() * laplacian(g) * q;
}

Spectrum laplacian_spectrum(const Digraph& g) { return eig_general_real(laplacian(g)); }

Spectrum restricted_spectrum(const Digraph& g) {
  require_order(g, 1, "restricted_spectrum");
  const RealMatrix l = laplacian(g);
  Spectrum s = eig_general_real(l);
  const Complex z = s.remove_nearest(0.0);
  if (std::abs(z) > 1e-7 * std::max(1.0, frobenius_norm(l)))
    throw NumericalError("restricted_spectrum: no computed Laplacian eigenvalue near zero");
  return s;
}

AlphaBeta alpha_beta(const Digraph& g, RestrictorKind kind) {
  require_order(g, 2, "alpha_beta");
  const auto e = eig_symmetric(symmetric_part(restricted_matrix(g, kind)), false);
  return {e.values.front(), e.values.back()};
}

std::vector<double> support_values(const Digraph& g, int m, RestrictorKind kind) {
  require_order(g, 2, "support_values");
  if (m < 1) throw std::invalid_argument("support_values: need at least one angle");
  const RealMatrix b = restricted_matrix(g, kind);
  std::vector<double> h(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k)
    h[static_cast<std::size_t>(k)] = max_eigenvalue_hermitian(rotated_hermitian_part(b, std::polar(1.0, theta_at(k, m))));
  return h;
}

RnrResult boundary_sample(const Digraph& g, int m, RestrictorKind kind) {
  require_order(g, 2, "boundary_sample");
  if (m < 3) throw std::invalid_argument("boundary_sample: need at least 3 samples");
  const RealMatrix b = restricted_matrix(g, kind);
  const std::size_t d = b.rows();

  RnrResult r;
  r.thetas.reserve(static_cast<std::size_t>(m));
  r.support_values.reserve(static_cast<std::size_t>(m));
  r.boundary_points.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const double theta = theta_at(k, m);
    const auto eig = eig_hermitian(rotated_hermitian_part(b, std::polar(1.0, theta)));
    std::vector<Complex> x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = eig.vectors(i, d - 1);
    Complex p{};
    for (std::size_t i = 0; i < d; ++i) {
      Complex bx{};
      for (std::size_t j = 0; j < d; ++j) bx += b(i, j) * x[j];
      p += std::conj(x[i]) * bx;
    }
    r.thetas.push_back(theta);
    r.support_values.push_back(eig.values.back());
    r.boundary_points.push_back(p);
  }
  r.restricted_spectrum = restricted_spectrum(g);
  r.hull = convex_hull(r.restricted_spectrum.values());
  const auto ab = alpha_beta(g, kind);
  r.alpha = ab.alpha;
  r.beta = ab.beta;
  return r;
}

double default_eps(int n) { return 1e-7 * std::max(1, n); }

bool is_polygonal_matrix(const RealMatrix& b, double eps) {
  if (!b.square()) throw std::invalid_argument("is_polygonal_matrix: matrix must be square");
  if (b.rows() == 0) return true;
  const Spectrum sigma = eig_general_real(b);
  const auto merged = merge_close(sigma.values(), 1e-7 * (1.0 + frobenius_norm(b)));
  const HullPolygon hull = convex_hull(merged);
  const auto& v = hull.vertices;

  if (v.size() == 1) {
    const auto e = eig_symmetric(symmetric_part(b), false);
    return e.values.back() <= e.values.front() + eps;
  }
  for (std::size_t j = 0; j < v.size(); ++j) {
    const Complex edge = v[(j + 1) % v.size()] - v[j];
    const Complex rot = Complex(0.0, 1.0) * std::conj(edge / std::abs(edge));
    if (max_eigenvalue_hermitian(rotated_hermitian_part(b, rot)) > (rot * v[j]).real() + eps) return false;
  }
  return true;
}

bool is_polygonal_numeric(const Digraph& g, double eps, RestrictorKind kind) {
  require_order(g, 2, "is_polygonal_numeric");
  return is_polygonal_matrix(restricted_matrix(g, kind), eps);
}

bool is_polygonal_numeric(const Digraph& g) { return is_polygonal_numeric(g, default_eps(g.order())); }

std::string_view to_string(ClassLabel c) {
  switch (c) {
    case ClassLabel::normal: return "normal";
    case ClassLabel::restricted_normal: return "restricted_normal";
    case ClassLabel::pseudo_normal: return "pseudo_normal";
    case ClassLabel::non_polygonal: return "non_polygonal";
  }
  return "unknown";
}

std::optional<ClassLabel> parse_class_label(std::string_view s) {
  for (auto c : {ClassLabel::normal, ClassLabel::restricted_normal, ClassLabel::pseudo_normal, ClassLabel::non_polygonal})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

ClassLabel classify(const Digraph& g, double eps) {
  require_order(g, 2, "classify");
  if (!(eps > 0)) throw std::invalid_argument("classify: eps must be positive");
  if (is_normal_exact(g)) return ClassLabel::normal;
  if (is_restricted_normal_exact(g)) return ClassLabel::restricted_normal;
  return is_polygonal_numeric(g, eps) ? ClassLabel::pseudo_normal : ClassLabel::non_polygonal;
}

ClassLabel classify(const Digraph& g) { return classify(g, default_eps(g.order())); }

bool alpha_matches_terminal_components(const Digraph& g) {
  const bool alpha_zero = std::abs(alpha_beta(g).alpha) <= 1e-7;
  return alpha_zero == (scc_decomposition(g).terminal_count() >= 2);
}

Digraph combine(const Digraph& g1, const Digraph& g2, CombineOp op) {
  switch (op) {
    case CombineOp::disjoint_union: return disjoint_union(g1, g2);
    case CombineOp::directed_join: return directed_join(g1, g2);
    case CombineOp::bidirectional_join: return bidirectional_join(g1, g2);
  }
  throw std::invalid_argument("combine: unknown operation");
}

double support_combination_discrepancy(const Digraph& g1, const Digraph& g2, CombineOp op, int m) {
  if (g1.order() < 1 || g2.order() < 1)
    throw std::invalid_argument("support_combination_discrepancy: operands must be non-null");
  if (!is_balanced(g1) || !is_balanced(g2))
    throw std::invalid_argument("support_combination_discrepancy: operands must be balanced");
  constexpr double kNone = -std::numeric_limits<double>::infinity();
  const auto ms = static_cast<std::size_t>(m);
  auto operand = [&](const Digraph& g) {
    return g.order() >= 2 ? support_values(g, m) : std::vector<double>(ms, kNone);
  };
  const auto h1 = operand(g1), h2 = operand(g2);
  const auto h = support_values(combine(g1, g2, op), m);
  const double n1 = g1.order(), n2 = g2.order();

  double worst = 0.0;
  for (std::size_t k = 0; k < ms; ++k) {
    const double c = std::cos(theta_at(static_cast<int>(k), m));
    double predicted = 0.0;
    switch (op) {
      case CombineOp::disjoint_union: predicted = std::max({h1[k], h2[k], 0.0}); break;
      case CombineOp::directed_join: predicted = std::max({h1[k] + n2 * c, h2[k], n2 * c}); break;
      case CombineOp::bidirectional_join:
        predicted = std::max({h1[k] + n2 * c, h2[k] + n1 * c, (n1 + n2) * c});
        break;
    }
    worst = std::max(worst, std::abs(h[k] - predicted));
  }
  return worst;
}

double projected_commutator_norm(const Digraph& g) {
  require_order(g, 1, "projected_commutator_norm");
  const RealMatrix pl = projector(g.order()) * laplacian(g);
  return frobenius_norm(pl * pl.transpose() - pl.transpose() * pl);
}

bool projected_normality_agrees(const Digraph& g) {
  const bool numeric = projected_commutator_norm(g) <= 1e-7;
  const bool exact = is_normal_exact(g) || is_restricted_normal_exact(g);
  return numeric == exact;
}

}  // namespace polydig
