#pragma once

#include "polydig/digraph.hpp"

namespace polydig {

// L L^T - L^T L in exact integer arithmetic.
IntMatrix laplacian_commutator(const Digraph& g);

// Balanced, and for every i != j
//   (a_ij - a_ji)(d+(j) - d+(i)) = sum_{k != i,j} (a_ik a_jk - a_ki a_kj).
bool is_normal_exact(const Digraph& g);

// Not balanced, and for all i, j != k
//   n <L(e_i - e_k), L(e_j - e_k)> - n <L^T(e_i - e_k), L^T(e_j - e_k)>
//     = (imb(i) - imb(k)) (imb(j) - imb(k)).
// The identity is independent of the pivot k; k defaults to vertex 0.
// Orders 0 and 1 are balanced and return false.
bool is_restricted_normal_exact(const Digraph& g, int k = 0);

}  // namespace polydig
