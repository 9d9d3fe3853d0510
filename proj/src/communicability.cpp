#include "netcomm/communicability.hpp"

#include <cmath>
#include <string>

#include "netcomm/errors.hpp"

namespace netcomm {

double normalize_index(double raw, const Digraph& g, Normalization norm) {
  switch (norm) {
    case Normalization::raw:
      return raw;
    case Normalization::per_node:
      return g.node_count() > 0 ? raw / g.node_count() : raw;
    case Normalization::per_edge:
      return g.edge_count() > 0 ? raw / double(g.edge_count()) : raw;
  }
  return raw;
}

double total_communicability(const Digraph& g, const SpectralOptions& opts) {
  const int n = g.node_count();
  if (g.edge_count() == 0) return double(n);
  if (opts.use_dense(n))
    return expm_dense(dense_adjacency(g), std::max(opts.dense_cap, n)).sum();
  return exp_action_nonsymmetric(g, false, Vector::Ones(n), opts.krylov_dim,
                                 opts.krylov_tol)
      .sum();
}

double total_hub_communicability(const Digraph& g, const SpectralOptions& opts) {
  return quad_form(g, GramSide::hub, MatrixFunctionSpec::cosh_sqrt(), opts);
}

double total_authority_communicability(const Digraph& g, const SpectralOptions& opts) {
  return quad_form(g, GramSide::authority, MatrixFunctionSpec::cosh_sqrt(), opts);
}

double generic_total_f_communicability(const Digraph& g, GramSide side,
                                       const MatrixFunctionSpec& f,
                                       const SpectralOptions& opts) {
  return quad_form(g, side, f, opts);
}

GlobalIndices hub_authority_indices(const Digraph& g, const SpectralOptions& opts,
                                    bool with_tc) {
  GlobalIndices out;
  const int n = g.node_count();
  if (opts.use_dense(n) && g.edge_count() > 0) {
    // T_hC = n + sum_k (cosh(sigma_k) - 1)(1^T u_k)^2; the null space
    // contributes cosh(0) = 1 per node, so the compact SVD is enough.
    CompactSvd svd = compact_svd(g, opts.rank_tol, std::max(opts.dense_cap, n));
    out.thc = double(n);
    out.tac = double(n);
    for (int k = 0; k < svd.rank(); ++k) {
      const double weight = std::cosh(svd.sigma[k]) - 1.0;
      const double su = svd.U.col(k).sum();
      const double sv = svd.V.col(k).sum();
      out.thc += weight * su * su;
      out.tac += weight * sv * sv;
    }
  } else {
    out.thc = total_hub_communicability(g, opts);
    out.tac = total_authority_communicability(g, opts);
  }
  if (with_tc) out.tc = total_communicability(g, opts);
  return out;
}

NodeCommunicabilities node_communicabilities(const Digraph& g, const SpectralOptions& opts) {
  NodeCommunicabilities out;
  if (g.edge_count() == 0) {
    out.c_h = Vector::Zero(g.node_count());
    out.c_a = Vector::Zero(g.node_count());
    return out;
  }
  out.c_h = gmf_sinh_action(g, SumSide::row_sums, opts);
  out.c_a = gmf_sinh_action(g, SumSide::col_sums, opts);
  return out;
}

Matrix BipartiteExpBlocks::assemble() const {
  const auto n = hub_block.rows();
  Matrix full(2 * n, 2 * n);
  full.topLeftCorner(n, n) = hub_block;
  full.topRightCorner(n, n) = cross_block;
  full.bottomLeftCorner(n, n) = cross_block.transpose();
  full.bottomRightCorner(n, n) = authority_block;
  return full;
}

BipartiteExpBlocks bipartite_exp_blocks(const Digraph& g, int dense_cap) {
  const int n = g.node_count();
  if (n > dense_cap)
    throw CapacityError("bipartite_exp_blocks: n=" + std::to_string(n) +
                        " exceeds dense cap " + std::to_string(dense_cap));
  CompactSvd svd = compact_svd(g, 1e-12, dense_cap);
  BipartiteExpBlocks blocks;
  blocks.hub_block = Matrix::Identity(n, n);
  blocks.authority_block = Matrix::Identity(n, n);
  blocks.cross_block = Matrix::Zero(n, n);
  for (int k = 0; k < svd.rank(); ++k) {
    const double sigma = svd.sigma[k];
    blocks.hub_block += (std::cosh(sigma) - 1.0) * svd.U.col(k) * svd.U.col(k).transpose();
    blocks.authority_block +=
        (std::cosh(sigma) - 1.0) * svd.V.col(k) * svd.V.col(k).transpose();
    blocks.cross_block += std::sinh(sigma) * svd.U.col(k) * svd.V.col(k).transpose();
  }
  return blocks;
}

}  // namespace netcomm
