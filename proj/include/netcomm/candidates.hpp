#pragma once

#include <cstddef>
#include <vector>

#include "netcomm/digraph.hpp"
#include "netcomm/spectral.hpp"

namespace netcomm {

/// Ordered set of edges a modification run selects from. Update candidates
/// are virtual edges; downdate candidates are existing edges.
struct CandidateSet {
  ModificationKind kind = ModificationKind::update;
  std::vector<Edge> pairs;

  std::size_t size() const { return pairs.size(); }
};

/// Number of virtual edges: n(n-1) - m.
std::size_t virtual_edge_count(const Digraph& g);

/// Full candidate set: all virtual edges (update) or all edges (downdate),
/// lexicographically ordered. Throws CapacityError when the set would exceed
/// materialize_cap pairs; callers that can stream should use
/// for_each_virtual_edge instead.
CandidateSet enumerate_candidates(const Digraph& g, ModificationKind kind,
                                  std::size_t materialize_cap = 20'000'000);

/// Visits all virtual edges in lexicographic order without materializing.
template <class Fn>
void for_each_virtual_edge(const Digraph& g, Fn&& fn) {
  const int n = g.node_count();
  for (int i = 0; i < n; ++i) {
    const auto& out = g.out_neighbors(i);
    std::size_t cursor = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (cursor < out.size() && out[cursor] == j) {
        ++cursor;
        continue;
      }
      fn(Edge{i, j});
    }
  }
}

/// Per-node merged hub/authority ranking of the bipartite lift: each node's
/// value is the better (larger) of its broadcaster and receiver Perron
/// centralities; ties keep the hub copy.
struct MergedLiftRanking {
  std::vector<double> value;       // per original node
  std::vector<bool> kept_hub_copy; // true when the broadcaster copy won (or tied)
};

MergedLiftRanking merged_lift_ranking(const Digraph& g, const SpectralOptions& opts = {});

/// Candidate restriction used for large graphs: rank lift nodes by
/// eigenvector centrality, merge each node with its copy (keeping the better
/// rank), take the induced subgraph on the top ceil(fraction * n) nodes, and
/// return its virtual edges (update) or its edges (downdate).
CandidateSet restrict_candidates(const Digraph& g, ModificationKind kind,
                                 double fraction = 0.10,
                                 const SpectralOptions& opts = {});

}  // namespace netcomm
