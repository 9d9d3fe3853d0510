#include "netcomm/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "netcomm/communicability.hpp"
#include "netcomm/errors.hpp"

namespace netcomm {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Selection order: updates pick the highest score, downdates the lowest;
/// exact score ties go to the lexicographically smallest edge.
struct SelectionOrder {
  bool maximize;
  bool better(double score_a, Edge a, double score_b, Edge b) const {
    if (score_a != score_b) return maximize ? score_a > score_b : score_a < score_b;
    return a < b;
  }
};

struct ScoredEdge {
  Edge edge;
  double score;
};

void record_step(ModificationTrajectory& traj, const Digraph& g,
                 const ModificationPlan& plan, int step, std::vector<Edge> edges,
                 double elapsed) {
  TrajectoryStep row;
  row.step = step;
  row.edges = std::move(edges);
  GlobalIndices idx = hub_authority_indices(g, plan.spectral, plan.record_tc);
  row.thc = idx.thc;
  row.tac = idx.tac;
  if (plan.record_tc) row.tc = idx.tc;
  row.edge_count = g.edge_count();
  row.weakly_connected = is_weakly_connected(g);
  row.elapsed_seconds = elapsed;
  traj.steps.push_back(std::move(row));
}

/// Initial candidate pairs for a plan, or nullopt when the full virtual-edge
/// set is over the materialization cap and must be streamed.
std::optional<std::vector<Edge>> initial_candidates(const Digraph& g,
                                                    const ModificationPlan& plan) {
  const bool restricted =
      plan.fraction &&
      (plan.kind == ModificationKind::update || plan.restrict_downdates);
  if (restricted)
    return restrict_candidates(g, plan.kind, *plan.fraction, plan.spectral).pairs;
  if (plan.kind == ModificationKind::downdate) return g.edge_list();
  if (virtual_edge_count(g) > plan.materialize_cap) return std::nullopt;
  return enumerate_candidates(g, plan.kind, plan.materialize_cap).pairs;
}

/// Applies fn to every currently admissible candidate.
template <class Fn>
void for_each_candidate(const Digraph& current,
                        const std::optional<std::vector<Edge>>& base,
                        ModificationKind kind, Fn&& fn) {
  if (!base) {
    for_each_virtual_edge(current, fn);
    return;
  }
  const bool want_edge = kind == ModificationKind::downdate;
  for (Edge e : *base)
    if (current.has_edge(e.src, e.dst) == want_edge) fn(e);
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Edge pick_random_candidate(const Digraph& current,
                           const std::optional<std::vector<Edge>>& base,
                           ModificationKind kind, std::mt19937_64& rng) {
  std::size_t count = 0;
  for_each_candidate(current, base, kind, [&](Edge) { ++count; });
  if (count == 0) throw CapacityError("no candidates left");
  std::uint64_t target = draw_below(rng, count);
  Edge chosen{-1, -1};
  std::size_t seen = 0;
  for_each_candidate(current, base, kind, [&](Edge e) {
    if (seen++ == target) chosen = e;
  });
  return chosen;
}

/// Highest- (or lowest-) ranked K candidates in selection order.
std::vector<ScoredEdge> select_top_k(const Digraph& g,
                                     const std::optional<std::vector<Edge>>& base,
                                     const ModificationPlan& plan, const EdgeScorer& scorer,
                                     std::size_t k, const SelectionOrder& order) {
  // Heap keeps the k best seen so far with the worst of them on top.
  auto worse = [&](const ScoredEdge& a, const ScoredEdge& b) {
    return order.better(a.score, a.edge, b.score, b.edge);
  };
  std::vector<ScoredEdge> heap;
  heap.reserve(k + 1);
  for_each_candidate(g, base, plan.kind, [&](Edge e) {
    ScoredEdge cand{e, scorer.score(e)};
    if (heap.size() < k) {
      heap.push_back(cand);
      std::push_heap(heap.begin(), heap.end(), worse);
    } else if (order.better(cand.score, cand.edge, heap.front().score, heap.front().edge)) {
      std::pop_heap(heap.begin(), heap.end(), worse);
      heap.back() = cand;
      std::push_heap(heap.begin(), heap.end(), worse);
    }
  });
  std::sort_heap(heap.begin(), heap.end(), worse);  // best first
  return heap;
}

}  // namespace

ModificationTrajectory run_greedy(const Digraph& g, const ModificationPlan& plan) {
  if (plan.steps < 1) throw ParameterError("step budget must be at least 1");
  if (plan.method.rank2) return run_rank2(g, plan);

  ModificationTrajectory traj;
  traj.method = plan.method;
  traj.label = plan.method.label();
  traj.kind = plan.kind;

  // The first scorer is built before the first mutation, so a
  // method-inapplicable failure propagates with the input graph untouched.
  const std::optional<std::vector<Edge>> base = initial_candidates(g, plan);
  const SelectionOrder order{plan.kind == ModificationKind::update};
  std::mt19937_64 rng(plan.seed);

  Digraph current = g;
  record_step(traj, current, plan, 0, {}, 0.0);
  double elapsed = 0.0;

  if (!plan.method.deterministic()) {
    for (int step = 1; step <= plan.steps; ++step) {
      auto t0 = Clock::now();
      Edge chosen;
      try {
        chosen = pick_random_candidate(current, base, plan.kind, rng);
      } catch (const CapacityError&) {
        traj.truncated = true;
        traj.note = "candidates exhausted after " + std::to_string(step - 1) + " steps";
        break;
      }
      current = apply_modification(current, chosen, plan.kind);
      elapsed += seconds_since(t0);
      record_step(traj, current, plan, step, {chosen}, elapsed);
    }
  } else if (plan.method.recompute) {
    for (int step = 1; step <= plan.steps; ++step) {
      auto t0 = Clock::now();
      const EdgeScorer scorer(current, plan.method.family, plan.spectral);
      ++traj.scoring_passes;
      bool found = false;
      Edge best_edge{-1, -1};
      double best_score = 0.0;
      for_each_candidate(current, base, plan.kind, [&](Edge e) {
        double s = scorer.score(e);
        if (!found || order.better(s, e, best_score, best_edge)) {
          found = true;
          best_edge = e;
          best_score = s;
        }
      });
      if (!found) {
        traj.truncated = true;
        traj.note = "candidates exhausted after " + std::to_string(step - 1) + " steps";
        break;
      }
      current = apply_modification(current, best_edge, plan.kind);
      elapsed += seconds_since(t0);
      record_step(traj, current, plan, step, {best_edge}, elapsed);
    }
  } else {
    // .no: one scoring pass on the initial graph, then apply in rank order.
    auto t0 = Clock::now();
    const EdgeScorer scorer(g, plan.method.family, plan.spectral);
    traj.scoring_passes = 1;
    std::vector<ScoredEdge> picks =
        select_top_k(g, base, plan, scorer, static_cast<std::size_t>(plan.steps), order);
    elapsed += seconds_since(t0);
    if (picks.size() < static_cast<std::size_t>(plan.steps)) {
      traj.truncated = true;
      traj.note = "only " + std::to_string(picks.size()) + " candidates available";
    }
    int step = 1;
    for (const ScoredEdge& pick : picks) {
      auto ta = Clock::now();
      current = apply_modification(current, pick.edge, plan.kind);
      elapsed += seconds_since(ta);
      record_step(traj, current, plan, step++, {pick.edge}, elapsed);
    }
  }

  traj.selection_seconds = elapsed;
  traj.final_graph = std::move(current);
  return traj;
}

ModificationTrajectory run_rank2(const Digraph& g, const ModificationPlan& plan) {
  if (plan.steps < 1) throw ParameterError("step budget must be at least 1");
  if (!plan.method.rank2) throw ParameterError("run_rank2 requires a rank2 method");

  ModificationTrajectory traj;
  traj.method = plan.method;
  traj.label = plan.method.label();
  traj.kind = plan.kind;

  const SelectionOrder order{plan.kind == ModificationKind::update};
  std::mt19937_64 rng(plan.seed);
  Digraph current = g;
  record_step(traj, current, plan, 0, {}, 0.0);
  double elapsed = 0.0;

  auto apply_pair = [&](Edge pair) {
    current = apply_modification(current, pair, plan.kind);
    current = apply_modification(current, {pair.dst, pair.src}, plan.kind);
  };

  std::vector<ScoredEdge> frozen_picks;
  std::size_t frozen_cursor = 0;
  if (!plan.method.recompute && plan.method.deterministic()) {
    auto t0 = Clock::now();
    const EdgeScorer scorer(g, plan.method.family, plan.spectral);
    traj.scoring_passes = 1;
    CandidateSet pairs = rank2_candidates(g, plan.kind);
    for (Edge e : pairs.pairs) frozen_picks.push_back({e, scorer.rank2_score(e)});
    std::sort(frozen_picks.begin(), frozen_picks.end(), [&](const auto& a, const auto& b) {
      return order.better(a.score, a.edge, b.score, b.edge);
    });
    if (frozen_picks.size() > static_cast<std::size_t>(plan.steps))
      frozen_picks.resize(static_cast<std::size_t>(plan.steps));
    elapsed += seconds_since(t0);
  }

  for (int step = 1; step <= plan.steps; ++step) {
    auto t0 = Clock::now();
    Edge chosen{-1, -1};
    bool found = false;
    if (!plan.method.deterministic()) {
      CandidateSet pairs = rank2_candidates(current, plan.kind);
      if (!pairs.pairs.empty()) {
        chosen = pairs.pairs[draw_below(rng, pairs.pairs.size())];
        found = true;
      }
    } else if (plan.method.recompute) {
      const EdgeScorer scorer(current, plan.method.family, plan.spectral);
      ++traj.scoring_passes;
      CandidateSet pairs = rank2_candidates(current, plan.kind);
      double best_score = 0.0;
      for (Edge e : pairs.pairs) {
        double s = scorer.rank2_score(e);
        if (!found || order.better(s, e, best_score, chosen)) {
          found = true;
          chosen = e;
          best_score = s;
        }
      }
    } else if (frozen_cursor < frozen_picks.size()) {
      chosen = frozen_picks[frozen_cursor++].edge;
      found = true;
    }
    if (!found) {
      traj.truncated = true;
      traj.note = "rank-2 candidate pairs exhausted after " + std::to_string(step - 1) +
                  " steps";
      break;
    }
    apply_pair(chosen);
    elapsed += seconds_since(t0);
    record_step(traj, current, plan, step, {chosen, {chosen.dst, chosen.src}}, elapsed);
  }

  traj.selection_seconds = elapsed;
  traj.final_graph = std::move(current);
  return traj;
}

ModificationTrajectory run_brute_force(const Digraph& g, ModificationKind kind, int steps,
                                       BruteForceObjective objective,
                                       const SpectralOptions& opts, bool record_tc,
                                       int guard_n) {
  if (g.node_count() > guard_n)
    throw CapacityError("brute force is guarded to n <= " + std::to_string(guard_n) +
                        ", got n = " + std::to_string(g.node_count()));
  if (steps < 1) throw ParameterError("step budget must be at least 1");

  ModificationPlan plan;  // metric recording settings only
  plan.kind = kind;
  plan.spectral = opts;
  plan.record_tc = record_tc;

  ModificationTrajectory traj;
  traj.label = objective == BruteForceObjective::sum ? "opt_sum" : "opt_prod";
  traj.kind = kind;
  auto value_of = [&](const Digraph& h) {
    GlobalIndices idx = hub_authority_indices(h, opts, false);
    return objective == BruteForceObjective::sum ? idx.thc + idx.tac : idx.thc * idx.tac;
  };

  Digraph current = g;
  record_step(traj, current, plan, 0, {}, 0.0);
  double elapsed = 0.0;
  for (int step = 1; step <= steps; ++step) {
    auto t0 = Clock::now();
    bool found = false;
    Edge best_edge{-1, -1};
    double best_value = 0.0;
    auto consider = [&](Edge e) {
      Digraph tentative = apply_modification(current, e, kind);
      double value = value_of(tentative);
      // Both objectives are maximized: updates gain as much as possible,
      // downdates lose as little as possible.
      if (!found || value > best_value || (value == best_value && e < best_edge)) {
        found = true;
        best_edge = e;
        best_value = value;
      }
    };
    if (kind == ModificationKind::update)
      for_each_virtual_edge(current, consider);
    else
      current.for_each_edge(consider);
    ++traj.scoring_passes;
    if (!found) {
      traj.truncated = true;
      traj.note = "candidates exhausted after " + std::to_string(step - 1) + " steps";
      break;
    }
    current = apply_modification(current, best_edge, kind);
    elapsed += seconds_since(t0);
    record_step(traj, current, plan, step, {best_edge}, elapsed);
  }
  traj.selection_seconds = elapsed;
  traj.final_graph = std::move(current);
  return traj;
}

ComparisonTable compare_methods(const Digraph& g, const ModificationPlan& base,
                                std::span<const CentralityMethod> methods) {
  ComparisonTable table;
  table.kind = base.kind;
  table.steps = base.steps;
  for (const CentralityMethod& method : methods) {
    MethodRun run;
    run.method = method;
    try {
      ModificationPlan plan = base;
      plan.method = method;
      run.trajectory = run_greedy(g, plan);
    } catch (const MethodInapplicableError& err) {
      run.error = err.what();
    } catch (const NumericalFailure& err) {
      run.error = err.what();
    }
    table.runs.push_back(std::move(run));
  }
  return table;
}

}  // namespace netcomm
