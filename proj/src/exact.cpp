#include "polydig/exact.hpp"

#include <bit>
#include <stdexcept>

namespace polydig {

namespace {

std::vector<std::uint64_t> in_masks(const Digraph& g) {
  std::vector<std::uint64_t> in(static_cast<std::size_t>(g.order()), 0);
  for (int u = 0; u < g.order(); ++u)
    for (std::uint64_t m = g.out_mask(u); m; m &= m - 1) in[static_cast<std::size_t>(std::countr_zero(m))] |= 1ULL << u;
  return in;
}

}  // namespace

IntMatrix laplacian_commutator(const Digraph& g) {
  const IntMatrix l = laplacian_int(g);
  return l * l.transpose() - l.transpose() * l;
}

bool is_normal_exact(const Digraph& g) {
  if (!is_balanced(g)) return false;
  const int n = g.order();
  const auto in = in_masks(g);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int lhs = (int(g.has_edge(i, j)) - int(g.has_edge(j, i))) * (g.out_degree(j) - g.out_degree(i));
      // a_ii = 0, so the k = i and k = j terms vanish on their own.
      const int rhs = std::popcount(g.out_mask(i) & g.out_mask(j)) -
                      std::popcount(in[static_cast<std::size_t>(i)] & in[static_cast<std::size_t>(j)]);
      if (lhs != rhs) return false;
    }
  return true;
}

bool is_restricted_normal_exact(const Digraph& g, int k) {
  const int n = g.order();
  if (n < 2) return false;
  if (k < 0 || k >= n) throw std::invalid_argument("is_restricted_normal_exact: pivot out of range");
  if (is_balanced(g)) return false;
  const IntMatrix l = laplacian_int(g);
  const IntMatrix cols = l.transpose() * l;  // <C_i, C_j>
  const IntMatrix rows = l * l.transpose();  // <R_i, R_j>
  const auto imb = degree_profile(g).imbalance;
  auto centred = [&](const IntMatrix& gram, int i, int j) {
    return gram(i, j) - gram(i, k) - gram(k, j) + gram(k, k);
  };
  for (int i = 0; i < n; ++i) {
    if (i == k) continue;
    for (int j = i; j < n; ++j) {
      if (j == k) continue;
      const std::int64_t rhs = centred(cols, i, j) - centred(rows, i, j);
      const std::int64_t lhs = std::int64_t(imb[i] - imb[k]) * (imb[j] - imb[k]);
      if (std::int64_t(n) * rhs != lhs) return false;
    }
  }
  return true;
}

}  // namespace polydig
