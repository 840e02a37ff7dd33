// Independent reference computations used only by the tests.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "polydig/digraph.hpp"
#include "polydig/matrix.hpp"

namespace oracle {

using polydig::ComplexMatrix;
using polydig::Digraph;
using Complex = std::complex<double>;

inline Digraph random_digraph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && edge(rng)) g.add_edge(i, j);
  return g;
}

// Edge-disjoint union of random directed cycles (2-cycles allowed), which
// reaches every balanced digraph.
inline Digraph random_balanced(std::mt19937_64& rng, int n) {
  Digraph g(n);
  if (n < 2) return g;
  std::uniform_int_distribution<int> len(2, n);
  std::uniform_int_distribution<int> tries(0, 2 * n);
  std::vector<int> verts(static_cast<std::size_t>(n));
  std::iota(verts.begin(), verts.end(), 0);
  for (int t = tries(rng); t > 0; --t) {
    std::shuffle(verts.begin(), verts.end(), rng);
    const int k = len(rng);
    bool free = true;
    for (int a = 0; a < k; ++a)
      if (g.has_edge(verts[a], verts[(a + 1) % k])) free = false;
    if (!free) continue;
    for (int a = 0; a < k; ++a) g.add_edge(verts[a], verts[(a + 1) % k]);
  }
  return g;
}

inline Digraph random_bidirectional(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) {
        g.add_edge(i, j);
        g.add_edge(j, i);
      }
  return g;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t m) {
  std::normal_distribution<double> z;
  ComplexMatrix h(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    h(i, i) = z(rng);
    for (std::size_t j = i + 1; j < m; ++j) {
      h(i, j) = {z(rng), z(rng)};
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

// Random unitary from Gram-Schmidt on a complex Gaussian matrix.
inline ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t m) {
  std::normal_distribution<double> z;
  ComplexMatrix u(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Complex> v(m);
    for (auto& x : v) x = {z(rng), z(rng)};
    for (std::size_t c = 0; c < j; ++c) {
      Complex d{};
      for (std::size_t i = 0; i < m; ++i) d += std::conj(u(i, c)) * v[i];
      for (std::size_t i = 0; i < m; ++i) v[i] -= d * u(i, c);
    }
    double nrm = 0;
    for (auto x : v) nrm += std::norm(x);
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < m; ++i) u(i, j) = v[i] / nrm;
  }
  return u;
}

// U diag(values) U*.
inline ComplexMatrix hermitian_with_spectrum(std::mt19937_64& rng, const std::vector<double>& values) {
  const std::size_t m = values.size();
  const ComplexMatrix u = random_unitary(rng, m);
  ComplexMatrix d(m, m);
  for (std::size_t i = 0; i < m; ++i) d(i, i) = values[i];
  return u * d * u.adjoint();
}

// Direct complex Jacobi: each step first rotates the phase of h_pq away,
// then applies a real plane rotation. Returns ascending eigenvalues.
inline std::vector<double> complex_jacobi_eigenvalues(ComplexMatrix h) {
  const std::size_t m = h.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0, total = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        total += std::norm(h(i, j));
        if (i != j) off += std::norm(h(i, j));
      }
    if (off <= 1e-30 * std::max(total, 1.0)) break;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) {
        const double r = std::abs(h(p, q));
        if (r == 0) continue;
        const Complex phase = std::conj(h(p, q)) / r;  // e^{-i arg h_pq}
        const double app = h(p, p).real(), aqq = h(q, q).real();
        const double theta = (aqq - app) / (2 * r);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        ComplexMatrix u = ComplexMatrix::identity(m);
        // u = diag(..., phase at q, ...) * rotation
        u(p, p) = c;
        u(p, q) = s;
        u(q, p) = -s * phase;
        u(q, q) = c * phase;
        h = u.adjoint() * h * u;
      }
  }
  std::vector<double> ev(m);
  for (std::size_t i = 0; i < m; ++i) ev[i] = h(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Row-major adjacency string of g relabeled by perm.
inline std::string adjacency_string(const Digraph& g, const std::vector<int>& perm) {
  const int n = g.order();
  std::string s(static_cast<std::size_t>(n * n), '0');
  for (auto [u, v] : g.edges()) s[static_cast<std::size_t>(perm[u] * n + perm[v])] = '1';
  return s;
}

// Number of isomorphism classes of order-n digraphs by exhaustive labeled
// enumeration with string-based canonical forms.
inline std::size_t brute_force_class_count(int n) {
  const int pairs = n * (n - 1);
  std::set<std::string> classes;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
    Digraph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && ((mask >> bit++) & 1U)) g.add_edge(i, j);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
      auto s = adjacency_string(g, perm);
      if (best.empty() || s > best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes.size();
}

// Width of W(B) in the direction theta: h(theta) + h(theta + pi), with the
// support function evaluated by the caller-supplied function.
template <typename Support>
double sampled_diameter(Support&& h, int m) {
  double d = 0;
  for (int k = 0; k < m; ++k) {
    const double th = 2 * M_PI * k / m;
    d = std::max(d, h(th) + h(th + M_PI));
  }
  return d;
}

}  // namespace oracle
