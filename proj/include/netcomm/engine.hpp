#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netcomm/candidates.hpp"
#include "netcomm/digraph.hpp"
#include "netcomm/edge_centrality.hpp"
#include "netcomm/spectral.hpp"

namespace netcomm {

struct ModificationPlan {
  ModificationKind kind = ModificationKind::update;
  int steps = 1;  // budget K
  CentralityMethod method;
  /// Candidate restriction (top-fraction induced subgraph). Applies to
  /// updates when set; to downdates only when restrict_downdates is true.
  std::optional<double> fraction;
  bool restrict_downdates = false;
  std::uint64_t seed = 0;  // random baseline
  SpectralOptions spectral;
  bool record_tc = true;
  std::size_t materialize_cap = 20'000'000;
};

struct TrajectoryStep {
  int step = 0;               // 0 is the unmodified baseline
  std::vector<Edge> edges;    // applied this step (two for rank-2)
  double thc = 0.0;
  double tac = 0.0;
  double tc = std::numeric_limits<double>::quiet_NaN();
  std::size_t edge_count = 0;  // m after this step
  bool weakly_connected = false;
  double elapsed_seconds = 0.0;  // cumulative selection+application time
};

struct ModificationTrajectory {
  CentralityMethod method;
  std::string label;  // method label, or "opt_sum"/"opt_prod" for brute force
  ModificationKind kind = ModificationKind::update;
  std::vector<TrajectoryStep> steps;  // K+1 rows unless truncated
  int scoring_passes = 0;
  bool truncated = false;
  std::string note;
  double selection_seconds = 0.0;  // total selection+application wall time
  Digraph final_graph;
};

/// K-step greedy run. recompute=true rescans and rescores the current
/// graph's candidates each step; recompute=false (.no) scores once on the
/// initial graph and applies the top-K in rank order. Metric recording is
/// not counted in the selection timings.
ModificationTrajectory run_greedy(const Digraph& g, const ModificationPlan& plan);

/// Symmetric rank-two variant: each step applies both directions of the
/// best unordered pair under the symmetrized score.
ModificationTrajectory run_rank2(const Digraph& g, const ModificationPlan& plan);

enum class BruteForceObjective { sum, prod };

/// Exhaustive baseline: each step tentatively applies every candidate,
/// evaluates both indices, and keeps the best objective value. Guarded to
/// n <= guard_n (default 100).
ModificationTrajectory run_brute_force(const Digraph& g, ModificationKind kind, int steps,
                                       BruteForceObjective objective,
                                       const SpectralOptions& opts = {},
                                       bool record_tc = false, int guard_n = 100);

struct MethodRun {
  CentralityMethod method;
  std::optional<ModificationTrajectory> trajectory;
  std::string error;  // non-empty when the method was skipped
};

struct ComparisonTable {
  ModificationKind kind = ModificationKind::update;
  int steps = 0;
  std::vector<MethodRun> runs;
};

/// Runs every method on a fresh copy of g; per-method failures are recorded
/// and the comparison continues.
ComparisonTable compare_methods(const Digraph& g, const ModificationPlan& base,
                                std::span<const CentralityMethod> methods);

}  // namespace netcomm
