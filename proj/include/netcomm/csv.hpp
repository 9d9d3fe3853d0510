#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "netcomm/edge_centrality.hpp"
#include "netcomm/engine.hpp"

namespace netcomm {

/// Trajectory CSV columns:
/// step,edge_src,edge_dst,thc,tac,tc,thc_per_edge,tac_per_edge,elapsed_s
/// Step 0 is the baseline row with src = dst = -1; an unrecorded tc is an
/// empty field. Rank-2 steps report the canonical pair (i,j), i < j; the
/// reverse edge is applied together with it. Doubles are printed with 17
/// significant digits so the file re-parses to the exact values.
void write_trajectory_csv(std::ostream& out, const ModificationTrajectory& traj);

struct TrajectoryCsvRow {
  int step = 0;
  int edge_src = -1;
  int edge_dst = -1;
  double thc = 0.0;
  double tac = 0.0;
  double tc = std::numeric_limits<double>::quiet_NaN();
  double thc_per_edge = 0.0;
  double tac_per_edge = 0.0;
  double elapsed_s = 0.0;
};

std::vector<TrajectoryCsvRow> read_trajectory_csv(std::istream& in);

/// method,step,... concatenation of trajectories, one block per method.
void write_comparison_csv(std::ostream& out, const ComparisonTable& table);

struct ComparisonCsvRow {
  std::string method;
  TrajectoryCsvRow row;
};

std::vector<ComparisonCsvRow> read_comparison_csv(std::istream& in);

/// method,kind,steps,scoring_passes,select_apply_s,status
void write_timings_csv(std::ostream& out, const ComparisonTable& table);

struct TimingCsvRow {
  std::string method;
  std::string kind;
  int steps = 0;
  int scoring_passes = 0;
  double select_apply_s = std::numeric_limits<double>::quiet_NaN();
  std::string status;
};

std::vector<TimingCsvRow> read_timings_csv(std::istream& in);

/// edge_src,edge_dst,method,score
void write_scores_csv(std::ostream& out, const EdgeScoreTable& table);

struct ScoreCsvRow {
  Edge edge;
  std::string method;
  double score = 0.0;
};

std::vector<ScoreCsvRow> read_scores_csv(std::istream& in);

}  // namespace netcomm
