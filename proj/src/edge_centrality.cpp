#include "netcomm/edge_centrality.hpp"

#include <algorithm>
#include <map>

#include "netcomm/communicability.hpp"
#include "netcomm/errors.hpp"

namespace netcomm {

std::string CentralityMethod::label() const {
  std::string base;
  switch (family) {
    case Family::hits: base = "hits"; break;
    case Family::gtc: base = "gtc"; break;
    case Family::eig: base = "eig"; break;
    case Family::tc: base = "tc"; break;
    case Family::b_eig: base = "b:eig"; break;
    case Family::b_tc: base = "b:tc"; break;
    case Family::b_deg: base = "b:deg"; break;
    case Family::random: base = "random"; break;
  }
  if (!recompute) base += ".no";
  if (rank2) base += "+rank2";
  return base;
}

CentralityMethod CentralityMethod::parse(std::string_view token) {
  CentralityMethod m;
  std::string name(token);
  if (name.size() > 3 && name.substr(name.size() - 3) == ".no") {
    m.recompute = false;
    name = name.substr(0, name.size() - 3);
  }
  if (name == "hits") m.family = Family::hits;
  else if (name == "gtc") m.family = Family::gtc;
  else if (name == "eig") m.family = Family::eig;
  else if (name == "tc") m.family = Family::tc;
  else if (name == "b:eig") m.family = Family::b_eig;
  else if (name == "b:tc") m.family = Family::b_tc;
  else if (name == "b:deg") m.family = Family::b_deg;
  else if (name == "random" || name == "b:random") m.family = Family::random;
  else throw ParameterError("unknown method '" + std::string(token) + "'");
  return m;
}

EdgeScorer::EdgeScorer(const Digraph& g, CentralityMethod::Family family,
                       const SpectralOptions& opts)
    : family_(family) {
  const int n = g.node_count();
  switch (family) {
    case CentralityMethod::Family::hits: {
      HubAuthorityPair pair = dominant_triplet(g, opts.power_tol, opts.power_max_iter);
      source_q_ = std::move(pair.u1);
      target_q_ = std::move(pair.v1);
      break;
    }
    case CentralityMethod::Family::gtc: {
      NodeCommunicabilities node = node_communicabilities(g, opts);
      source_q_ = std::move(node.c_h);
      target_q_ = std::move(node.c_a);
      break;
    }
    case CentralityMethod::Family::eig: {
      EigenPairLR pair = dominant_eigpair_lr(g, opts.power_tol, opts.power_max_iter);
      if (!pair.simple_flag)
        throw MethodInapplicableError(
            "eig scoring needs a simple real dominant eigenvalue; the power iteration "
            "stagnated (residual " + std::to_string(pair.residual) + ")");
      source_q_ = std::move(pair.x1);
      target_q_ = std::move(pair.y1);
      break;
    }
    case CentralityMethod::Family::tc: {
      if (opts.use_dense(n)) {
        Matrix e = expm_dense(dense_adjacency(g), std::max(opts.dense_cap, n));
        source_q_ = e.rowwise().sum();
        target_q_ = e.colwise().sum().transpose();
      } else {
        source_q_ = exp_action_nonsymmetric(g, false, Vector::Ones(n), opts.krylov_dim,
                                            opts.krylov_tol);
        target_q_ = exp_action_nonsymmetric(g, true, Vector::Ones(n), opts.krylov_dim,
                                            opts.krylov_tol);
      }
      break;
    }
    case CentralityMethod::Family::b_eig: {
      Vector q = lift_perron_vector(g, opts.power_tol, opts.power_max_iter);
      source_q_ = q.head(n);
      target_q_ = q.tail(n);
      break;
    }
    case CentralityMethod::Family::b_tc: {
      BipartiteLift lift = bipartite_lift(g);
      Vector w;
      if (opts.use_dense(2 * n))
        w = expm_dense(dense_lift(g), std::max(opts.dense_cap, 2 * n)).rowwise().sum();
      else
        w = exp_action_lift(lift, Vector::Ones(2 * n), opts.krylov_dim, opts.krylov_tol);
      source_q_ = w.head(n);
      target_q_ = w.tail(n);
      break;
    }
    case CentralityMethod::Family::b_deg: {
      DegreeVectors d = degrees(g);
      source_q_.resize(n);
      target_q_.resize(n);
      for (int i = 0; i < n; ++i) {
        source_q_[i] = d.out_degree[i];  // lift degree of the broadcaster copy
        target_q_[i] = d.in_degree[i];   // lift degree of the receiver copy
      }
      additive_ = true;
      break;
    }
    case CentralityMethod::Family::random:
      throw ParameterError("the random baseline has no scorer");
  }
}

namespace {

EdgeScoreTable make_table(const Digraph& g, CentralityMethod::Family family,
                          const CandidateSet& candidates, const SpectralOptions& opts) {
  EdgeScorer scorer(g, family, opts);
  EdgeScoreTable table;
  table.method.family = family;
  table.graph_fingerprint = g.fingerprint();
  table.entries.reserve(candidates.pairs.size());
  for (Edge e : candidates.pairs) table.entries.emplace_back(e, scorer.score(e));
  return table;
}

}  // namespace

EdgeScoreTable score_hits(const Digraph& g, const CandidateSet& c, const SpectralOptions& o) {
  return make_table(g, CentralityMethod::Family::hits, c, o);
}
EdgeScoreTable score_gtc(const Digraph& g, const CandidateSet& c, const SpectralOptions& o) {
  return make_table(g, CentralityMethod::Family::gtc, c, o);
}
EdgeScoreTable score_eig(const Digraph& g, const CandidateSet& c, const SpectralOptions& o) {
  return make_table(g, CentralityMethod::Family::eig, c, o);
}
EdgeScoreTable score_tc(const Digraph& g, const CandidateSet& c, const SpectralOptions& o) {
  return make_table(g, CentralityMethod::Family::tc, c, o);
}
EdgeScoreTable score_bipartite_eig(const Digraph& g, const CandidateSet& c,
                                   const SpectralOptions& o) {
  return make_table(g, CentralityMethod::Family::b_eig, c, o);
}
EdgeScoreTable score_bipartite_tc(const Digraph& g, const CandidateSet& c,
                                  const SpectralOptions& o) {
  return make_table(g, CentralityMethod::Family::b_tc, c, o);
}
EdgeScoreTable score_bipartite_deg(const Digraph& g, const CandidateSet& c,
                                   const SpectralOptions& o) {
  return make_table(g, CentralityMethod::Family::b_deg, c, o);
}

EdgeScoreTable score_edges(const Digraph& g, CentralityMethod::Family family,
                           const CandidateSet& c, const SpectralOptions& o) {
  return make_table(g, family, c, o);
}

Rank2Table symmetrize_rank2(const EdgeScoreTable& fwd, const EdgeScoreTable& rev) {
  std::map<Edge, double> reverse_scores;
  for (const auto& [edge, score] : rev.entries) reverse_scores[edge] = score;

  Rank2Table out;
  out.table.method = fwd.method;
  out.table.method.rank2 = true;
  out.table.graph_fingerprint = fwd.graph_fingerprint;
  for (const auto& [edge, score] : fwd.entries) {
    if (edge.src >= edge.dst) continue;  // one canonical orientation per pair
    auto it = reverse_scores.find({edge.dst, edge.src});
    if (it == reverse_scores.end()) {
      ++out.filtered_out;
      continue;
    }
    out.table.entries.emplace_back(edge, score + it->second);
  }
  return out;
}

double lift_digraph_score_gap(const Digraph& g, Edge e, int dense_cap) {
  BipartiteExpBlocks blocks = bipartite_exp_blocks(g, dense_cap);
  const double hub_row = blocks.hub_block.row(e.src).sum();
  const double cross_row = blocks.cross_block.row(e.src).sum();      // C_h(i)
  const double cross_col = blocks.cross_block.col(e.dst).sum();      // C_a(j)
  const double authority_row = blocks.authority_block.row(e.dst).sum();
  const double lift_score = (hub_row + cross_row) * (cross_col + authority_row);
  const double digraph_score = cross_row * cross_col;
  return lift_score - digraph_score;
}

CandidateSet rank2_candidates(const Digraph& g, ModificationKind kind) {
  CandidateSet set;
  set.kind = kind;
  const int n = g.node_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool fwd = g.has_edge(i, j), rev = g.has_edge(j, i);
      if (kind == ModificationKind::update ? (!fwd && !rev) : (fwd && rev))
        set.pairs.push_back({i, j});
    }
  return set;
}

}  // namespace netcomm
