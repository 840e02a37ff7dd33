#include "polydig/digraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace polydig {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

Digraph::Digraph(int order) : order_(order) {
  if (order < 0 || order > kMaxOrder)
    throw std::invalid_argument("digraph order must be in [0, " + std::to_string(kMaxOrder) + "]");
  rows_.assign(static_cast<std::size_t>(order), 0);
}

Digraph Digraph::from_edges(int order, std::span<const std::pair<int, int>> edges) {
  Digraph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= order_) throw std::out_of_range("vertex index out of range");
}

void Digraph::add_edge(int u, int v) { set_edge(u, v, true); }
void Digraph::remove_edge(int u, int v) { set_edge(u, v, false); }

void Digraph::set_edge(int u, int v, bool present) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    if (present) throw std::invalid_argument("loops are not allowed in a simple digraph");
    return;
  }
  const std::uint64_t bit = std::uint64_t{1} << v;
  if (present)
    rows_[u] |= bit;
  else
    rows_[u] &= ~bit;
}

int Digraph::out_degree(int u) const { return std::popcount(rows_[u]); }

int Digraph::in_degree(int v) const {
  int d = 0;
  for (int u = 0; u < order_; ++u) d += static_cast<int>((rows_[u] >> v) & 1U);
  return d;
}

int Digraph::edge_count() const {
  int m = 0;
  for (auto r : rows_) m += std::popcount(r);
  return m;
}

std::vector<std::pair<int, int>> Digraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order_; ++u)
    for (int v = 0; v < order_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

int SccDecomposition::terminal_count() const {
  return static_cast<int>(std::count(terminal.begin(), terminal.end(), true));
}

IntMatrix laplacian_int(const Digraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  IntMatrix L(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    L(i, i) = g.out_degree(static_cast<int>(i));
    for (std::size_t j = 0; j < n; ++j)
      if (g.has_edge(static_cast<int>(i), static_cast<int>(j))) L(i, j) = -1;
  }
  return L;
}

RealMatrix laplacian(const Digraph& g) { return to_real(laplacian_int(g)); }

DegreeProfile degree_profile(const Digraph& g) {
  const int n = g.order();
  DegreeProfile p;
  p.out_deg.resize(n);
  p.in_deg.assign(n, 0);
  p.imbalance.resize(n);
  for (int u = 0; u < n; ++u) {
    p.out_deg[u] = g.out_degree(u);
    for (int v = 0; v < n; ++v)
      if (g.has_edge(u, v)) ++p.in_deg[v];
  }
  for (int u = 0; u < n; ++u) p.imbalance[u] = p.out_deg[u] - p.in_deg[u];
  return p;
}

bool is_balanced(const Digraph& g) {
  const auto p = degree_profile(g);
  return std::all_of(p.imbalance.begin(), p.imbalance.end(), [](int x) { return x == 0; });
}

Digraph complement(const Digraph& g) {
  const int n = g.order();
  Digraph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

// Iterative Tarjan; components come out in reverse topological order and are
// then sorted by their smallest vertex so the result is labelling-stable.
SccDecomposition scc_decomposition(const Digraph& g) {
  const int n = g.order();
  std::vector<int> index(n, -1), low(n, 0), comp_of(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;

  struct Frame {
    int v;
    int next;
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const int v = f.v;
      if (f.next < n) {
        const int w = f.next++;
        if (!g.has_edge(v, w)) continue;
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
      call.pop_back();
      if (!call.empty()) {
        const int parent = call.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }

  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  SccDecomposition d;
  d.components = std::move(comps);
  for (std::size_t c = 0; c < d.components.size(); ++c)
    for (int v : d.components[c]) comp_of[v] = static_cast<int>(c);
  d.terminal.assign(d.components.size(), true);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.has_edge(u, v) && comp_of[u] != comp_of[v]) d.terminal[comp_of[u]] = false;
  return d;
}

namespace {

enum class Link { none, forward, both };

Digraph combine(const Digraph& g1, const Digraph& g2, Link link) {
  const int n1 = g1.order(), n2 = g2.order();
  Digraph r(n1 + n2);
  for (auto [u, v] : g1.edges()) r.add_edge(u, v);
  for (auto [u, v] : g2.edges()) r.add_edge(n1 + u, n1 + v);
  if (link != Link::none) {
    for (int u = 0; u < n1; ++u)
      for (int v = 0; v < n2; ++v) {
        r.add_edge(u, n1 + v);
        if (link == Link::both) r.add_edge(n1 + v, u);
      }
  }
  return r;
}

}  // namespace

Digraph directed_join(const Digraph& g1, const Digraph& g2) { return combine(g1, g2, Link::forward); }
Digraph bidirectional_join(const Digraph& g1, const Digraph& g2) { return combine(g1, g2, Link::both); }
Digraph disjoint_union(const Digraph& g1, const Digraph& g2) { return combine(g1, g2, Link::none); }

Digraph permute(const Digraph& g, std::span<const int> perm) {
  const int n = g.order();
  require(static_cast<int>(perm.size()) == n, "permutation size must equal the digraph order");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    require(p >= 0 && p < n && !seen[p], "not a permutation");
    seen[p] = true;
  }
  Digraph r(n);
  for (auto [u, v] : g.edges()) r.add_edge(perm[u], perm[v]);
  return r;
}

Digraph induced_subgraph(const Digraph& g, std::span<const int> vertices) {
  const int m = static_cast<int>(vertices.size());
  Digraph r(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b && g.has_edge(vertices[a], vertices[b])) r.add_edge(a, b);
  return r;
}

Digraph empty_digraph(int n) { return Digraph(n); }

Digraph complete_digraph(int n) { return complement(Digraph(n)); }

Digraph dicycle(int n) {
  require(n >= 3, "dicycle requires n >= 3");
  Digraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Digraph imploding_star(int n, int k) {
  require(k >= 0 && k <= n, "imploding star requires 0 <= k <= n");
  return directed_join(empty_digraph(n - k), complete_digraph(k));
}

Digraph regular_tournament(int n) {
  require(n >= 3 && n % 2 == 1, "regular tournament requires odd n >= 3");
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int s = 1; s <= (n - 1) / 2; ++s) g.add_edge(i, (i + s) % n);
  return g;
}

Digraph twin_split(const Digraph& g, std::span<const int> vertices) {
  const int n = g.order();
  const int m = static_cast<int>(vertices.size());
  Digraph r(n + m);
  for (auto [u, v] : g.edges()) r.add_edge(u, v);
  for (int t = 0; t < m; ++t) {
    const int v = vertices[t];
    require(v >= 0 && v < n, "twin split vertex out of range");
    const int copy = n + t;
    for (int u = 0; u < n + t; ++u) {
      if (r.has_edge(u, v)) r.add_edge(u, copy);
      if (r.has_edge(v, u)) r.add_edge(copy, u);
    }
  }
  return r;
}

SplitCycleFamily split_cycle_family(int n) {
  require(n >= 4 && n % 2 == 0, "split cycle family requires even n >= 4");
  std::vector<int> split;
  for (int v = 0; v < n; v += 2) split.push_back(v);
  SplitCycleFamily f;
  f.balanced_split = twin_split(dicycle(n), split);

  const int order = f.balanced_split.order();
  Digraph restored(order + 1);
  for (auto [u, v] : f.balanced_split.edges()) restored.add_edge(u, v);
  const int apex = order;
  std::vector<int> twins = split;
  for (int t = 0; t < static_cast<int>(split.size()); ++t) twins.push_back(n + t);
  for (int v : twins) {
    restored.add_edge(apex, v);
    restored.add_edge(v, apex);
  }
  f.normal_restored = std::move(restored);
  return f;
}

Digraph square_order_nonjoin(int n) {
  require(n >= 3, "square order construction requires n >= 3");
  require(n * n <= Digraph::kMaxOrder, "square order construction exceeds the maximum order");
  Digraph g(n * n);
  for (int c = 1; c < n; ++c)
    for (int r = 0; r < n; ++r) g.add_edge(r, c * n + r);
  for (int b = 1; b < n; ++b)
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s)
        if (r != s) g.add_edge(b * n + r, s);
  return g;
}

Digraph kronecker_inflate(const Digraph& g, int k) {
  require(k >= 1, "inflation factor must be >= 1");
  const int n = g.order();
  require(n * k <= Digraph::kMaxOrder, "inflated digraph exceeds the maximum order");
  Digraph r(n * k);
  for (auto [u, v] : g.edges())
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) r.add_edge(u * k + a, v * k + b);
  return r;
}

std::optional<JoinDecomposition> decompose_directed_join(const Digraph& g) {
  const int n = g.order();
  const auto p = degree_profile(g);
  if (std::all_of(p.imbalance.begin(), p.imbalance.end(), [](int x) { return x == 0; }))
    return std::nullopt;
  for (int i = 1; i < n; ++i)
    if ((p.imbalance[i] - p.imbalance[0]) % n != 0) return std::nullopt;

  JoinDecomposition d;
  for (int v = 0; v < n; ++v) (p.imbalance[v] > 0 ? d.head_vertices : d.tail_vertices).push_back(v);
  const int head_size = static_cast<int>(d.head_vertices.size());
  const int tail_size = static_cast<int>(d.tail_vertices.size());
  for (int v : d.head_vertices)
    if (p.imbalance[v] != tail_size) return std::nullopt;
  for (int v : d.tail_vertices)
    if (p.imbalance[v] != -head_size) return std::nullopt;
  for (int u : d.head_vertices)
    for (int v : d.tail_vertices)
      if (!g.has_edge(u, v) || g.has_edge(v, u)) return std::nullopt;

  d.head = induced_subgraph(g, d.head_vertices);
  d.tail = induced_subgraph(g, d.tail_vertices);
  if (!is_balanced(d.head) || !is_balanced(d.tail)) return std::nullopt;
  return d;
}

}  // namespace polydig
