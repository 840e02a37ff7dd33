#include "polydig/search.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "polydig/exact.hpp"

namespace polydig {

namespace {

constexpr std::uint64_t kStallLimit = 4000;

std::int64_t violation(const Digraph& g) {
  const int n = g.order();
  const IntMatrix l = laplacian_int(g);
  const IntMatrix cols = l.transpose() * l;
  const IntMatrix rows = l * l.transpose();
  const auto imb = degree_profile(g).imbalance;
  auto centred = [](const IntMatrix& m, int i, int j) { return m(i, j) - m(i, 0) - m(0, j) + m(0, 0); };

  std::int64_t score = 0;
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const std::int64_t rhs = centred(cols, i, j) - centred(rows, i, j);
      const std::int64_t lhs = std::int64_t(imb[i] - imb[0]) * (imb[j] - imb[0]);
      score += std::llabs(std::int64_t(n) * rhs - lhs);
    }

  bool balanced = true, join_pattern = true;
  for (int i = 0; i < n; ++i) {
    if (imb[i] != 0) balanced = false;
    if ((imb[i] - imb[0]) % n != 0) join_pattern = false;
  }
  if (balanced) score += std::int64_t(n) * n * n;
  else if (join_pattern) score += std::int64_t(n) * n;
  return score;
}

}  // namespace

bool is_restricted_normal_nonjoin(const Digraph& g) {
  return is_restricted_normal_exact(g) && !decompose_directed_join(g).has_value();
}

SearchOutcome search_restricted_normal_nonjoin(int n, std::uint64_t budget, std::uint64_t seed) {
  if (n < 2 || n > Digraph::kMaxOrder) throw std::invalid_argument("search: order out of range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> vertex(0, n - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  SearchOutcome out;
  auto restart = [&] {
    const double density = 0.2 + 0.6 * unit(rng);
    Digraph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && unit(rng) < density) g.add_edge(i, j);
    return g;
  };

  Digraph g = restart();
  std::int64_t score = violation(g), best = score;
  std::uint64_t stall = 0;
  const double temperature = 0.5 * n;

  for (out.iterations = 0; out.iterations < budget; ++out.iterations) {
    if (score == 0 && is_restricted_normal_nonjoin(g)) {
      out.witness = g;
      return out;
    }
    int u = vertex(rng), v = vertex(rng);
    if (u == v) continue;
    g.set_edge(u, v, !g.has_edge(u, v));
    const std::int64_t s = violation(g);
    if (s <= score || unit(rng) < std::exp(double(score - s) / temperature)) {
      score = s;
    } else {
      g.set_edge(u, v, !g.has_edge(u, v));
    }
    if (score < best) {
      best = score;
      stall = 0;
    } else if (++stall > kStallLimit) {
      g = restart();
      score = best = violation(g);
      stall = 0;
      ++out.restarts;
    }
  }
  if (score == 0 && is_restricted_normal_nonjoin(g)) out.witness = g;
  return out;
}

}  // namespace polydig
