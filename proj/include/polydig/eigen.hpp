#pragma once

#include <vector>

#include "polydig/matrix.hpp"
#include "polydig/spectrum.hpp"

namespace polydig {

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  RealMatrix vectors;          // column k pairs with values[k]; empty if not requested
};

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]; empty if not requested
};

// Cyclic Jacobi for a real symmetric matrix. Only the upper triangle is
// read. Throws NumericalError if the sweep cap is reached.
SymmetricEigen eig_symmetric(const RealMatrix& a, bool want_vectors = true);

// Hermitian eigenproblem solved through the real symmetric embedding
// [[X, -Y], [Y, X]] of H = X + iY. Every eigenvalue of the embedding appears
// twice; the doubled copies are folded back and the complex eigenvectors are
// reassembled from the paired real ones.
HermitianEigen eig_hermitian(const ComplexMatrix& h, bool want_vectors = true);

// Largest eigenvalue of a Hermitian matrix (values only).
double max_eigenvalue_hermitian(const ComplexMatrix& h);

// (B + B*) / 2, stored exactly Hermitian.
ComplexMatrix hermitian_part(const ComplexMatrix& b);
// (B + B^T) / 2.
RealMatrix symmetric_part(const RealMatrix& b);

// Eigenvalues of a general real matrix: Householder reduction to Hessenberg
// form, then Francis double-shift QR. Clusters whose spread is consistent
// with a perturbed defective eigenvalue are replaced by their centroid,
// which is far better conditioned than the individual members.
// Throws NumericalError on non-convergence.
Spectrum eig_general_real(const RealMatrix& m);

// The raw QR eigenvalues with no cluster refinement.
Spectrum eig_general_real_unrefined(const RealMatrix& m);

}  // namespace polydig
