#pragma once

#include <Eigen/Dense>
#include <functional>
#include <limits>

#include "netcomm/digraph.hpp"
#include "netcomm/matrix_function.hpp"

namespace netcomm {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class Backend { automatic, dense, iterative };

/// Which Gram matrix of the adjacency a computation acts on.
enum class GramSide { hub, authority };  // hub: A A^T, authority: A^T A

enum class SumSide { row_sums, col_sums };

struct SpectralOptions {
  double power_tol = 1e-12;
  int power_max_iter = 200000;
  double krylov_tol = 1e-10;
  int krylov_dim = 300;
  double rank_tol = 1e-12;
  int dense_cap = 500;
  Backend backend = Backend::automatic;

  bool use_dense(int n) const {
    if (backend == Backend::dense) return true;
    if (backend == Backend::iterative) return false;
    return n <= dense_cap;
  }
};

// ---- matrix-free products -------------------------------------------------

Vector adjacency_times(const Digraph& g, const Vector& x);            // A x
Vector adjacency_transpose_times(const Digraph& g, const Vector& x);  // A^T x
Vector gram_times(const Digraph& g, GramSide side, const Vector& x);
Vector lift_times(const BipartiteLift& lift, const Vector& x);

Matrix dense_adjacency(const Digraph& g);
Matrix dense_lift(const Digraph& g);

// ---- factorizations and dominant pairs ------------------------------------

/// Rank-r singular triplets with sigma strictly positive and descending.
struct CompactSvd {
  Vector sigma;
  Matrix U;  // n x r
  Matrix V;  // n x r
  int rank() const { return static_cast<int>(sigma.size()); }
};

/// Dense compact SVD; singular values below rank_tol * sigma_1 are truncated.
/// Throws CapacityError when n exceeds dense_cap.
CompactSvd compact_svd(const Digraph& g, double rank_tol = 1e-12, int dense_cap = 500);

/// Dominant hub/authority scores in HITS normalization.
///
/// The alternating power iteration runs on the squared-score (mass) vectors
/// h <- A a, a <- A^T h, each rescaled to total mass 1, starting from the
/// uniform authority mass (i.e. the constant authority vector of unit
/// 2-norm). u1 and v1 are the entrywise square roots of the mass limits, so
/// they are nonnegative with unit 2-norm and u1(i)^2 is node i's hub score.
/// The mass limit follows the Perron direction of the Gram matrix, hence
/// rankings (and all score products used for edge selection) order exactly
/// like the dominant singular vectors; when the Gram matrices are reducible
/// the constant start still makes the result deterministic. Callers that
/// need a consistent singular triplet should use compact_svd instead.
struct HubAuthorityPair {
  double sigma1 = 0.0;
  Vector u1, v1;
  double gap = std::numeric_limits<double>::quiet_NaN();  // sigma1 - sigma2 when known
  int iterations = 0;
};

HubAuthorityPair dominant_triplet(const Digraph& g, double tol = 1e-12,
                                  int max_iter = 200000);

/// Dominant eigenpair of the (nonsymmetric) adjacency: right vector x1 from
/// power iteration on A, left vector y1 from A^T, both from the constant
/// start. simple_flag is false when the iteration stagnates (non-simple or
/// complex dominant eigenvalue). Throws MethodInapplicableError when the
/// spectral radius is numerically zero (acyclic graph).
struct EigenPairLR {
  double lambda1 = 0.0;
  Vector x1, y1;
  bool simple_flag = false;
  double residual = 0.0;
};

EigenPairLR dominant_eigpair_lr(const Digraph& g, double tol = 1e-12,
                                int max_iter = 100000);

// ---- matrix functions ------------------------------------------------------

/// Dense matrix exponential by scaling and squaring of a truncated Taylor
/// series. Throws CapacityError above dense_cap.
Matrix expm_dense(const Matrix& M, int dense_cap = 2048);

struct LinearOperator {
  int dim = 0;
  std::function<Vector(const Vector&)> apply;
};

/// f(S) b for symmetric S given as a product, via Lanczos with full
/// reorthogonalization. Converged when successive iterates differ by at most
/// tol * ||result||. Throws NumericalFailure when krylov_dim is exhausted.
Vector f_action_symmetric(const LinearOperator& S, const Vector& b,
                          const MatrixFunctionSpec& f, int krylov_dim = 300,
                          double tol = 1e-10);

/// Row sums sinh_gmf(A) 1 (the C_h vector) or column sums sinh_gmf(A)^T 1
/// (the C_a vector). Dense path evaluates the compact-SVD formula
/// sum_k sinh(sigma_k) (v_k^T 1) u_k; the iterative path runs Golub-Kahan
/// bidiagonalization started from A 1 (resp. A^T 1). Zero singular values
/// contribute nothing (pseudoinverse semantics).
Vector gmf_sinh_action(const Digraph& g, SumSide side, const SpectralOptions& opts = {});

/// 1^T f(A A^T) 1 (hub) or 1^T f(A^T A) 1 (authority).
double quad_form(const Digraph& g, GramSide side, const MatrixFunctionSpec& f,
                 const SpectralOptions& opts = {});

/// e^A b (or e^{A^T} b) via Arnoldi with full orthogonalization.
Vector exp_action_nonsymmetric(const Digraph& g, bool transposed, const Vector& b,
                               int krylov_dim = 300, double tol = 1e-10);

/// e^{lift} b via Lanczos on the symmetric lift matrix.
Vector exp_action_lift(const BipartiteLift& lift, const Vector& b,
                       int krylov_dim = 300, double tol = 1e-10);

/// Largest k singular values, descending. Dense SVD below the cap, Lanczos
/// Ritz values of A^T A above it.
Vector top_singular_values(const Digraph& g, int k, const SpectralOptions& opts = {});

/// Full-SVD generalized exponential U exp(Sigma) V^T, including the
/// zero-singular-value block. That block's U/V pairing is whatever the dense
/// SVD kernel returns, so entries are basis-dependent; this is exactly the
/// non-uniqueness that disqualifies exp as a generalized matrix function for
/// centrality purposes, and the function exists to demonstrate it.
Matrix generalized_exp_full(const Digraph& g, int dense_cap = 500);

/// Perron vector of the bipartite lift (unit 2-norm, nonnegative), computed
/// by power iteration on lift + I from the constant vector. Deterministic
/// also when the top eigenvalue of the lift is degenerate.
Vector lift_perron_vector(const Digraph& g, double tol = 1e-12, int max_iter = 200000);

}  // namespace netcomm
