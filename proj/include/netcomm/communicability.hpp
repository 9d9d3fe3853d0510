#pragma once

#include "netcomm/digraph.hpp"
#include "netcomm/matrix_function.hpp"
#include "netcomm/spectral.hpp"

namespace netcomm {

/// Global communicability indices of one graph snapshot (raw values;
/// normalizations are derived at output time).
struct GlobalIndices {
  double tc = 0.0;   // 1^T e^A 1
  double thc = 0.0;  // 1^T cosh(sqrt(A A^T)) 1
  double tac = 0.0;  // 1^T cosh(sqrt(A^T A)) 1
};

enum class Normalization { raw, per_node, per_edge };

double normalize_index(double raw, const Digraph& g, Normalization norm);

/// Sum of all entries of e^A, computed on the nonsymmetric adjacency:
/// dense exponential below the cap, Arnoldi action above it.
double total_communicability(const Digraph& g, const SpectralOptions& opts = {});

/// 1^T cosh(sqrt(A A^T)) 1: alternating-walk counts with both endpoints
/// acting as broadcasters.
double total_hub_communicability(const Digraph& g, const SpectralOptions& opts = {});

/// 1^T cosh(sqrt(A^T A)) 1: the receiving-side counterpart.
double total_authority_communicability(const Digraph& g, const SpectralOptions& opts = {});

/// 1^T f(Gram) 1 for any admissible f (nonnegative series coefficients).
double generic_total_f_communicability(const Digraph& g, GramSide side,
                                       const MatrixFunctionSpec& f,
                                       const SpectralOptions& opts = {});

/// Both cosh-sqrt indices at once; the dense path shares one compact SVD.
GlobalIndices hub_authority_indices(const Digraph& g, const SpectralOptions& opts = {},
                                    bool with_tc = false);

/// Node-level generalized-sinh communicabilities.
struct NodeCommunicabilities {
  Vector c_h;  // sinh_gmf(A) 1
  Vector c_a;  // sinh_gmf(A)^T 1
};

NodeCommunicabilities node_communicabilities(const Digraph& g,
                                             const SpectralOptions& opts = {});

/// The four blocks of e^{lift} assembled from the compact SVD:
/// [cosh(sqrt(AA^T)), sinh_gmf(A); sinh_gmf(A)^T, cosh(sqrt(A^TA))].
/// Dense-path only (CapacityError above the cap).
struct BipartiteExpBlocks {
  Matrix hub_block;        // cosh(sqrt(A A^T))
  Matrix cross_block;      // sinh_gmf(A)
  Matrix authority_block;  // cosh(sqrt(A^T A))

  Matrix assemble() const;  // the full 2n x 2n matrix
};

BipartiteExpBlocks bipartite_exp_blocks(const Digraph& g, int dense_cap = 500);

}  // namespace netcomm
