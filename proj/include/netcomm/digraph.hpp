#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace netcomm {

/// Directed edge (ordered pair of 0-based node ids).
struct Edge {
  int src = 0;
  int dst = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Simple directed graph: no self-loops, no duplicate edges, 0-based ids.
///
/// Immutable after construction; modifications return new values.
/// Adjacency is kept in both orientations (sorted neighbor lists), so
/// out- and in-neighbor queries and transposed products are both O(deg).
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int node_count);
  Digraph(int node_count, std::span<const Edge> edges);

  int node_count() const { return n_; }
  std::size_t edge_count() const { return m_; }

  bool has_edge(int src, int dst) const;
  const std::vector<int>& out_neighbors(int node) const { return out_[node]; }
  const std::vector<int>& in_neighbors(int node) const { return in_[node]; }

  /// All edges in lexicographic (src, dst) order.
  std::vector<Edge> edge_list() const;

  template <class Fn>
  void for_each_edge(Fn&& fn) const {
    for (int i = 0; i < n_; ++i)
      for (int j : out_[i]) fn(Edge{i, j});
  }

  /// Order-insensitive 64-bit digest of (n, edge set); used to tag score
  /// tables with the graph snapshot they were computed on.
  std::uint64_t fingerprint() const;

  bool operator==(const Digraph& other) const;

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;

  friend Digraph apply_modification(const Digraph&, Edge, bool add);
};

struct DegreeVectors {
  std::vector<int> out_degree;
  std::vector<int> in_degree;
};

DegreeVectors degrees(const Digraph& g);

enum class ModificationKind { update, downdate };

/// Returns a copy of `g` with edge `e` added (update) or removed (downdate).
/// Throws InvalidModificationError if the precondition fails (update needs a
/// non-loop virtual edge, downdate an existing edge).
Digraph apply_modification(const Digraph& g, Edge e, ModificationKind kind);

/// Relabels nodes: edge (i,j) maps to (p[i],p[j]). `p` must be a bijection.
Digraph permute(const Digraph& g, std::span<const int> p);

Digraph transpose(const Digraph& g);

/// True when the underlying undirected skeleton has one component
/// (vacuously true for n <= 1).
bool is_weakly_connected(const Digraph& g);

/// Symmetric 2n-node bipartite double cover: broadcaster copies 0..n-1,
/// receiver copies n..2n-1, one undirected edge {i, j+n} per digraph edge.
struct BipartiteLift {
  int half = 0;                       // n of the source digraph
  std::vector<std::vector<int>> adj;  // sorted, symmetric, 2n lists

  int node_count() const { return 2 * half; }
  /// Number of undirected edges (= m of the source digraph).
  std::size_t undirected_edge_count() const;
};

BipartiteLift bipartite_lift(const Digraph& g);

}  // namespace netcomm
