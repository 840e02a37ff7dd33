#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "polydig/digraph.hpp"
#include "polydig/hull.hpp"
#include "polydig/restrictor.hpp"
#include "polydig/spectrum.hpp"

namespace polydig {

// B = Q^T L Q, (n-1) x (n-1).
RealMatrix restricted_matrix(const Digraph& g, RestrictorKind kind = RestrictorKind::householder);

Spectrum laplacian_spectrum(const Digraph& g);

// sigma(L) with the one value nearest 0 removed. Throws NumericalError when
// that value is farther than 1e-7 * max(1, |L|_F) from 0. n >= 1.
Spectrum restricted_spectrum(const Digraph& g);

struct AlphaBeta {
  double alpha;
  double beta;
};

// Extreme eigenvalues of the symmetric part of B. n >= 2.
AlphaBeta alpha_beta(const Digraph& g, RestrictorKind kind = RestrictorKind::householder);

struct RnrResult {
  std::vector<double> thetas;          // 2 pi k / m
  std::vector<double> support_values;  // lambda_max(H(e^{i theta} B))
  std::vector<Complex> boundary_points;
  Spectrum restricted_spectrum;
  HullPolygon hull;                    // of restricted_spectrum
  double alpha = 0.0;
  double beta = 0.0;
};

// Samples the boundary of W(B) at m equally spaced angles: the support value
// and x*Bx for a unit top eigenvector x of H(e^{i theta} B). n >= 2, m >= 3.
RnrResult boundary_sample(const Digraph& g, int m, RestrictorKind kind = RestrictorKind::householder);

// Support values alone; cheaper than boundary_sample.
std::vector<double> support_values(const Digraph& g, int m, RestrictorKind kind = RestrictorKind::householder);

// 1e-7 * max(1, n).
double default_eps(int n);

// Decides whether W(B) equals the hull of sigma(B) by testing every hull
// edge as a supporting line. Works on any real square B.
bool is_polygonal_matrix(const RealMatrix& b, double eps);

// n >= 2.
bool is_polygonal_numeric(const Digraph& g, double eps, RestrictorKind kind = RestrictorKind::householder);
bool is_polygonal_numeric(const Digraph& g);

enum class ClassLabel { normal, restricted_normal, pseudo_normal, non_polygonal };

std::string_view to_string(ClassLabel c);
std::optional<ClassLabel> parse_class_label(std::string_view s);

// Exact tests first; the numeric test only separates pseudo-normal from
// non-polygonal. n >= 2.
ClassLabel classify(const Digraph& g, double eps);
ClassLabel classify(const Digraph& g);

inline bool is_polygonal(ClassLabel c) { return c != ClassLabel::non_polygonal; }

// For a polygonal digraph: (alpha within 1e-7 of 0) iff (at least two
// terminal strong components).
bool alpha_matches_terminal_components(const Digraph& g);

enum class CombineOp { disjoint_union, directed_join, bidirectional_join };

Digraph combine(const Digraph& g1, const Digraph& g2, CombineOp op);

// For balanced g1, g2: the largest gap over m angles between the support
// function of the combined digraph and the one predicted from its operands
// (shifted copies of each operand's range plus one extra point). Operands of
// order 1 contribute an empty range.
double support_combination_discrepancy(const Digraph& g1, const Digraph& g2, CombineOp op, int m);

// |PL L^T P - L^T P P L|_F, with P = I - ee^T/n. Zero iff PL is normal.
double projected_commutator_norm(const Digraph& g);

// Floating check that PL is normal (to 1e-7) exactly when the digraph is
// restricted-normal or normal.
bool projected_normality_agrees(const Digraph& g);

}  // namespace polydig
