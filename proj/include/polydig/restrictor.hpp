#pragma once

#include "polydig/matrix.hpp"

namespace polydig {

enum class RestrictorKind {
  // First n-1 columns of the Householder reflector that maps e/sqrt(n) to
  // the last coordinate axis.
  householder,
  // Gram-Schmidt on e_i - e_{i+1}, i = 0..n-2.
  gram_schmidt,
};

// n x (n-1) matrix with orthonormal columns orthogonal to the all-ones
// vector. n = 1 gives a 1 x 0 matrix. Throws std::invalid_argument if n < 1.
RealMatrix restrictor_matrix(int n, RestrictorKind kind = RestrictorKind::householder);

// I - ee^T/n, the orthogonal projector onto e-perp.
RealMatrix projector(int n);

}  // namespace polydig
