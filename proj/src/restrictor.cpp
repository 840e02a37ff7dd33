#include "polydig/restrictor.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace polydig {

namespace {

RealMatrix householder_restrictor(std::size_t n) {
  // w = e/sqrt(n) - e_last; H = I - 2ww^T/(w^T w).
  std::vector<double> w(n, 1.0 / std::sqrt(static_cast<double>(n)));
  w[n - 1] -= 1.0;
  double ww = 0.0;
  for (double x : w) ww += x * x;
  RealMatrix q(n, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) q(i, j) = (i == j ? 1.0 : 0.0) - 2.0 * w[i] * w[j] / ww;
  return q;
}

RealMatrix gram_schmidt_restrictor(std::size_t n) {
  RealMatrix q(n, n - 1);
  std::vector<double> v(n);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    std::fill(v.begin(), v.end(), 0.0);
    v[j] = 1.0;
    v[j + 1] = -1.0;
    // Modified Gram-Schmidt, two passes.
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t c = 0; c < j; ++c) {
        double d = 0.0;
        for (std::size_t i = 0; i < n; ++i) d += q(i, c) * v[i];
        for (std::size_t i = 0; i < n; ++i) v[i] -= d * q(i, c);
      }
    double nrm = 0.0;
    for (double x : v) nrm += x * x;
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) = v[i] / nrm;
  }
  return q;
}

}  // namespace

RealMatrix restrictor_matrix(int n, RestrictorKind kind) {
  if (n < 1) throw std::invalid_argument("restrictor_matrix: n must be >= 1");
  const auto un = static_cast<std::size_t>(n);
  if (un == 1) return RealMatrix(1, 0);
  return kind == RestrictorKind::householder ? householder_restrictor(un) : gram_schmidt_restrictor(un);
}

RealMatrix projector(int n) {
  if (n < 1) throw std::invalid_argument("projector: n must be >= 1");
  const auto un = static_cast<std::size_t>(n);
  RealMatrix p(un, un, -1.0 / n);
  for (std::size_t i = 0; i < un; ++i) p(i, i) += 1.0;
  return p;
}

}  // namespace polydig
