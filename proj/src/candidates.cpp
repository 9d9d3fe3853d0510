#include "netcomm/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "netcomm/errors.hpp"

namespace netcomm {

std::size_t virtual_edge_count(const Digraph& g) {
  const std::size_t n = static_cast<std::size_t>(g.node_count());
  return n * (n - 1) - g.edge_count();
}

CandidateSet enumerate_candidates(const Digraph& g, ModificationKind kind,
                                  std::size_t materialize_cap) {
  CandidateSet set;
  set.kind = kind;
  if (kind == ModificationKind::downdate) {
    set.pairs = g.edge_list();
    return set;
  }
  const std::size_t tau = virtual_edge_count(g);
  if (tau > materialize_cap)
    throw CapacityError("enumerate_candidates: " + std::to_string(tau) +
                        " virtual edges exceed the materialization cap of " +
                        std::to_string(materialize_cap) + "; use the streaming interface");
  set.pairs.reserve(tau);
  for_each_virtual_edge(g, [&](Edge e) { set.pairs.push_back(e); });
  return set;
}

MergedLiftRanking merged_lift_ranking(const Digraph& g, const SpectralOptions& opts) {
  const int n = g.node_count();
  Vector q = lift_perron_vector(g, opts.power_tol, opts.power_max_iter);
  MergedLiftRanking ranking;
  ranking.value.resize(n);
  ranking.kept_hub_copy.resize(n);
  for (int i = 0; i < n; ++i) {
    const double hub = q[i], authority = q[i + n];
    ranking.kept_hub_copy[i] = hub >= authority;  // tie keeps the hub copy
    ranking.value[i] = std::max(hub, authority);
  }
  return ranking;
}

CandidateSet restrict_candidates(const Digraph& g, ModificationKind kind, double fraction,
                                 const SpectralOptions& opts) {
  if (!(fraction > 0.0) || fraction > 1.0)
    throw ParameterError("restrict_candidates: fraction must be in (0,1]");
  const int n = g.node_count();
  MergedLiftRanking ranking = merged_lift_ranking(g, opts);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (ranking.value[a] != ranking.value[b]) return ranking.value[a] > ranking.value[b];
    return a < b;
  });
  const int keep = static_cast<int>(std::ceil(fraction * n));
  std::vector<bool> in_top(n, false);
  for (int i = 0; i < keep; ++i) in_top[order[static_cast<std::size_t>(i)]] = true;

  CandidateSet set;
  set.kind = kind;
  if (kind == ModificationKind::update) {
    for_each_virtual_edge(g, [&](Edge e) {
      if (in_top[e.src] && in_top[e.dst]) set.pairs.push_back(e);
    });
  } else {
    g.for_each_edge([&](Edge e) {
      if (in_top[e.src] && in_top[e.dst]) set.pairs.push_back(e);
    });
  }
  return set;
}

}  // namespace netcomm
