#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polydig/matrix.hpp"

namespace polydig {

// A finite simple unweighted digraph on vertices 0..order-1.
//
// The adjacency relation is stored packed, one 64-bit word per row, so the
// order is capped at kMaxOrder (the largest order digraph6 encodes in a
// single byte). Loops are never stored.
class Digraph {
 public:
  static constexpr int kMaxOrder = 62;

  Digraph() = default;
  explicit Digraph(int order);

  static Digraph from_edges(int order, std::span<const std::pair<int, int>> edges);

  int order() const { return order_; }
  bool empty() const { return order_ == 0; }

  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void set_edge(int u, int v, bool present);

  // Bit v of out_mask(u) is set iff u -> v.
  std::uint64_t out_mask(int u) const { return rows_[u]; }

  int out_degree(int u) const;
  int in_degree(int v) const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_vertex(int v) const;

  int order_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct DegreeProfile {
  std::vector<int> out_deg;
  std::vector<int> in_deg;
  // out-degree minus in-degree
  std::vector<int> imbalance;
};

struct SccDecomposition {
  // Vertices of each strong component, ascending within a component.
  std::vector<std::vector<int>> components;
  // terminal[c] is true iff no edge leaves components[c].
  std::vector<bool> terminal;

  int terminal_count() const;
};

// head ->∨ tail reproduces the source digraph once head_vertices and
// tail_vertices are mapped back to their original indices.
struct JoinDecomposition {
  Digraph head;
  Digraph tail;
  std::vector<int> head_vertices;
  std::vector<int> tail_vertices;
};

// Diagonal = out-degrees, off-diagonal (i,j) = -a_ij.
IntMatrix laplacian_int(const Digraph& g);
RealMatrix laplacian(const Digraph& g);

DegreeProfile degree_profile(const Digraph& g);
bool is_balanced(const Digraph& g);

Digraph complement(const Digraph& g);
SccDecomposition scc_decomposition(const Digraph& g);

// Vertex order of every binary constructor: the first operand's vertices,
// then the second's.
Digraph directed_join(const Digraph& g1, const Digraph& g2);
Digraph bidirectional_join(const Digraph& g1, const Digraph& g2);
Digraph disjoint_union(const Digraph& g1, const Digraph& g2);

// Relabel: vertex v of g becomes vertex perm[v] of the result.
Digraph permute(const Digraph& g, std::span<const int> perm);
Digraph induced_subgraph(const Digraph& g, std::span<const int> vertices);

Digraph empty_digraph(int n);
Digraph complete_digraph(int n);
// 0 -> 1 -> ... -> n-1 -> 0; n >= 3.
Digraph dicycle(int n);
// E_{n-k} ->∨ K_k, empty part first.
Digraph imploding_star(int n, int k);
// Rotational tournament i -> i+1, ..., i+(n-1)/2 (mod n); n odd, n >= 3.
Digraph regular_tournament(int n);

// Splits the listed vertices in order. The copy of vertices[t] gets index
// order + t and the same in- and out-neighbourhood as its original at the
// time of splitting; twins are not adjacent to each other.
Digraph twin_split(const Digraph& g, std::span<const int> vertices);

struct SplitCycleFamily {
  // dicycle(n) with every even-indexed vertex twin-split; order 3n/2.
  Digraph balanced_split;
  // balanced_split plus an apex (last index) bidirectionally joined to
  // every vertex that has a twin; order 3n/2 + 1.
  Digraph normal_restored;
};

// n even, n >= 4.
SplitCycleFamily split_cycle_family(int n);

// Order n*n digraph whose adjacency has n-1 identity blocks across the first
// block row and J_n - I_n down the rest of the first block column. Vertex
// (block b, offset r) has index b*n + r. n >= 3.
Digraph square_order_nonjoin(int n);

// Digraph of A ⊗ J_k: copy j of vertex i has index i*k + j. k >= 1.
Digraph kronecker_inflate(const Digraph& g, int k);

// Splits a non-balanced digraph into balanced head and tail parts when the
// imbalances allow it. Balanced inputs, and inputs with some pair violating
// n | (imbalance(i) - imbalance(j)), return nullopt.
std::optional<JoinDecomposition> decompose_directed_join(const Digraph& g);

}  // namespace polydig
