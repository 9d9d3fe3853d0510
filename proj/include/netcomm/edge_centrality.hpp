#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "netcomm/candidates.hpp"
#include "netcomm/digraph.hpp"
#include "netcomm/spectral.hpp"

namespace netcomm {

/// A (virtual-)edge scoring rule plus its run flags. The ".no" variants
/// score once and never recompute; rank2 selects symmetric pairs.
struct CentralityMethod {
  enum class Family { hits, gtc, eig, tc, b_eig, b_tc, b_deg, random };

  Family family = Family::gtc;
  bool recompute = true;  // false = ".no" variant
  bool rank2 = false;

  bool deterministic() const { return family != Family::random; }
  std::string label() const;

  /// Parses "gtc", "hits.no", "b:eig", "b:tc.no", "b:deg", "random",
  /// "b:random" (an alias: both random baselines share one sampler).
  static CentralityMethod parse(std::string_view token);
};

struct EdgeScoreTable {
  CentralityMethod method;
  std::vector<std::pair<Edge, double>> entries;
  std::uint64_t graph_fingerprint = 0;
};

/// Node-quantity snapshot for one method on one graph. Every method's edge
/// score is a product (or sum, for b:deg) of a broadcaster quantity of the
/// source and a receiver quantity of the target, so scoring a candidate set
/// is one cheap pass once the snapshot exists.
class EdgeScorer {
 public:
  EdgeScorer(const Digraph& g, CentralityMethod::Family family,
             const SpectralOptions& opts = {});

  double score(Edge e) const {
    return additive_ ? source_q_[e.src] + target_q_[e.dst]
                     : source_q_[e.src] * target_q_[e.dst];
  }
  /// Symmetric rank-two score of the unordered pair {e.src, e.dst}.
  double rank2_score(Edge e) const { return score(e) + score({e.dst, e.src}); }

  CentralityMethod::Family family() const { return family_; }

 private:
  CentralityMethod::Family family_;
  bool additive_ = false;
  Vector source_q_;  // broadcaster quantity per node
  Vector target_q_;  // receiver quantity per node
};

EdgeScoreTable score_hits(const Digraph& g, const CandidateSet& candidates,
                          const SpectralOptions& opts = {});
EdgeScoreTable score_gtc(const Digraph& g, const CandidateSet& candidates,
                         const SpectralOptions& opts = {});
/// Throws MethodInapplicableError for acyclic graphs or when the dominant
/// eigenvalue is (numerically) non-simple.
EdgeScoreTable score_eig(const Digraph& g, const CandidateSet& candidates,
                         const SpectralOptions& opts = {});
EdgeScoreTable score_tc(const Digraph& g, const CandidateSet& candidates,
                        const SpectralOptions& opts = {});
EdgeScoreTable score_bipartite_eig(const Digraph& g, const CandidateSet& candidates,
                                   const SpectralOptions& opts = {});
EdgeScoreTable score_bipartite_tc(const Digraph& g, const CandidateSet& candidates,
                                  const SpectralOptions& opts = {});
EdgeScoreTable score_bipartite_deg(const Digraph& g, const CandidateSet& candidates,
                                   const SpectralOptions& opts = {});

EdgeScoreTable score_edges(const Digraph& g, CentralityMethod::Family family,
                           const CandidateSet& candidates,
                           const SpectralOptions& opts = {});

/// Folds directed scores into unordered-pair scores:
/// score{i,j} = fwd(i,j) + rev(j,i), over pairs where both directions are
/// present. Pairs with only one admissible direction are dropped and counted.
struct Rank2Table {
  EdgeScoreTable table;          // entries keyed by Edge{min,max}
  std::size_t filtered_out = 0;  // pairs missing one direction
};

Rank2Table symmetrize_rank2(const EdgeScoreTable& fwd, const EdgeScoreTable& rev);

/// Difference  eTC(i,j') - egTC(i,j)  between the lift-based and
/// digraph-based total-communicability scores of one candidate (dense path).
/// Positive for every pair; large values explain why the two heuristics can
/// pick different edges.
double lift_digraph_score_gap(const Digraph& g, Edge e, int dense_cap = 500);

CandidateSet rank2_candidates(const Digraph& g, ModificationKind kind);

}  // namespace netcomm
