#include "netcomm/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "netcomm/errors.hpp"

namespace netcomm {

namespace {

constexpr double kTiny = 1e-300;

double inv_or_one(double denom) { return denom > 0.0 ? 1.0 / denom : 1.0; }

}  // namespace

// ---- products ---------------------------------------------------------------

Vector adjacency_times(const Digraph& g, const Vector& x) {
  Vector y = Vector::Zero(g.node_count());
  for (int i = 0; i < g.node_count(); ++i) {
    double acc = 0.0;
    for (int j : g.out_neighbors(i)) acc += x[j];
    y[i] = acc;
  }
  return y;
}

Vector adjacency_transpose_times(const Digraph& g, const Vector& x) {
  Vector y = Vector::Zero(g.node_count());
  for (int j = 0; j < g.node_count(); ++j) {
    double acc = 0.0;
    for (int i : g.in_neighbors(j)) acc += x[i];
    y[j] = acc;
  }
  return y;
}

Vector gram_times(const Digraph& g, GramSide side, const Vector& x) {
  if (side == GramSide::hub) return adjacency_times(g, adjacency_transpose_times(g, x));
  return adjacency_transpose_times(g, adjacency_times(g, x));
}

Vector lift_times(const BipartiteLift& lift, const Vector& x) {
  Vector y = Vector::Zero(lift.node_count());
  for (int i = 0; i < lift.node_count(); ++i) {
    double acc = 0.0;
    for (int j : lift.adj[i]) acc += x[j];
    y[i] = acc;
  }
  return y;
}

Matrix dense_adjacency(const Digraph& g) {
  Matrix a = Matrix::Zero(g.node_count(), g.node_count());
  g.for_each_edge([&](Edge e) { a(e.src, e.dst) = 1.0; });
  return a;
}

Matrix dense_lift(const Digraph& g) {
  const int n = g.node_count();
  Matrix a = Matrix::Zero(2 * n, 2 * n);
  g.for_each_edge([&](Edge e) {
    a(e.src, e.dst + n) = 1.0;
    a(e.dst + n, e.src) = 1.0;
  });
  return a;
}

// ---- compact SVD ------------------------------------------------------------

CompactSvd compact_svd(const Digraph& g, double rank_tol, int dense_cap) {
  const int n = g.node_count();
  if (n > dense_cap)
    throw CapacityError("compact_svd: n=" + std::to_string(n) + " exceeds dense cap " +
                        std::to_string(dense_cap));
  CompactSvd out;
  if (g.edge_count() == 0) {
    out.sigma = Vector(0);
    out.U = Matrix::Zero(n, 0);
    out.V = Matrix::Zero(n, 0);
    return out;
  }
  Eigen::JacobiSVD<Matrix> svd(dense_adjacency(g),
                               Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& s = svd.singularValues();
  const double cutoff = rank_tol * s[0];
  int r = 0;
  while (r < s.size() && s[r] > cutoff) ++r;
  out.sigma = s.head(r);
  out.U = svd.matrixU().leftCols(r);
  out.V = svd.matrixV().leftCols(r);
  return out;
}

// ---- HITS-style dominant triplet ---------------------------------------------

HubAuthorityPair dominant_triplet(const Digraph& g, double tol, int max_iter) {
  const int n = g.node_count();
  if (g.edge_count() == 0) throw ParameterError("dominant_triplet requires at least one edge");

  // Score masses: a holds authority mass (sums to 1), h hub mass.
  Vector a = Vector::Constant(n, 1.0 / n);
  Vector h = Vector::Zero(n);
  double s_hub = 0.0, s_auth = 0.0;
  double delta = std::numeric_limits<double>::infinity();
  int iter = 0;
  for (; iter < max_iter; ++iter) {
    Vector h_next = adjacency_times(g, a);
    s_hub = h_next.sum();
    h_next *= inv_or_one(s_hub);
    Vector a_next = adjacency_transpose_times(g, h_next);
    s_auth = a_next.sum();
    a_next *= inv_or_one(s_auth);
    delta = (a_next - a).cwiseAbs().sum() + (iter > 0 ? (h_next - h).cwiseAbs().sum() : 1.0);
    a = std::move(a_next);
    h = std::move(h_next);
    if (delta <= tol) break;
  }
  if (delta > tol)
    throw NumericalFailure("dominant_triplet: power iteration did not converge in " +
                               std::to_string(max_iter) + " iterations",
                           delta);
  HubAuthorityPair pair;
  pair.sigma1 = std::sqrt(std::max(s_hub * s_auth, 0.0));
  pair.u1 = h.cwiseMax(0.0).cwiseSqrt();
  pair.v1 = a.cwiseMax(0.0).cwiseSqrt();
  pair.iterations = iter + 1;
  return pair;
}

// ---- left/right dominant eigenpair -------------------------------------------

namespace {

struct PowerResult {
  double lambda = 0.0;
  Vector x;
  double residual = 0.0;
  bool converged = false;
  bool nilpotent = false;
};

PowerResult power_iteration(const Digraph& g, bool transposed, double tol, int max_iter) {
  const int n = g.node_count();
  PowerResult out;
  Vector x = Vector::Constant(n, 1.0 / std::sqrt(double(n)));
  for (int iter = 0; iter < max_iter; ++iter) {
    Vector y = transposed ? adjacency_transpose_times(g, x) : adjacency_times(g, x);
    double norm = y.norm();
    if (norm == 0.0) {
      out.nilpotent = true;
      return out;
    }
    Vector x_next = y / norm;
    double lambda = x_next.dot(transposed ? adjacency_transpose_times(g, x_next)
                                          : adjacency_times(g, x_next));
    double residual = ((transposed ? adjacency_transpose_times(g, x_next)
                                   : adjacency_times(g, x_next)) -
                       lambda * x_next)
                          .norm();
    x = std::move(x_next);
    if (residual <= tol * std::max(lambda, kTiny)) {
      out.lambda = lambda;
      out.x = x;
      out.residual = residual;
      out.converged = true;
      return out;
    }
    out.lambda = lambda;
    out.residual = residual;
  }
  out.x = x;
  return out;
}

}  // namespace

EigenPairLR dominant_eigpair_lr(const Digraph& g, double tol, int max_iter) {
  PowerResult right = power_iteration(g, false, tol, max_iter);
  PowerResult left = right.nilpotent ? right : power_iteration(g, true, tol, max_iter);
  // A simple digraph with any cycle has spectral radius >= 1, so a vanishing
  // estimate can only mean a nilpotent (acyclic) adjacency.
  if (right.nilpotent || left.nilpotent || right.lambda < 0.5)
    throw MethodInapplicableError(
        "dominant eigenpair undefined: spectral radius is numerically zero (acyclic graph)");

  EigenPairLR pair;
  pair.lambda1 = right.lambda;
  pair.residual = std::max(right.residual, left.residual);
  // Nonnegative Perron representative: flip if needed, clamp roundoff.
  auto fix_sign = [](Vector& v) {
    if (v.sum() < 0.0) v = -v;
    v = v.cwiseMax(0.0);
    double norm = v.norm();
    if (norm > 0.0) v /= norm;
  };
  pair.x1 = right.x;
  pair.y1 = left.x;
  fix_sign(pair.x1);
  fix_sign(pair.y1);
  pair.simple_flag = right.converged && left.converged &&
                     std::abs(right.lambda - left.lambda) <=
                         1e-6 * std::max(right.lambda, kTiny);
  return pair;
}

// ---- dense exponential --------------------------------------------------------

Matrix expm_dense(const Matrix& M, int dense_cap) {
  if (M.rows() != M.cols()) throw ParameterError("expm_dense: matrix must be square");
  if (M.rows() > dense_cap)
    throw CapacityError("expm_dense: dimension " + std::to_string(M.rows()) +
                        " exceeds dense cap " + std::to_string(dense_cap));
  const auto n = M.rows();
  if (n == 0) return Matrix(0, 0);

  const double norm = M.cwiseAbs().rowwise().sum().maxCoeff();  // infinity norm
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const double scale = std::ldexp(1.0, -squarings);
  Matrix B = M * scale;

  Matrix result = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = (term * B) / double(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() <= 1e-18 * result.cwiseAbs().maxCoeff()) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

// ---- Lanczos ------------------------------------------------------------------

namespace {

/// One step of modified Gram-Schmidt against the first `cols` columns of V,
/// applied twice for robustness.
void reorthogonalize(const Matrix& V, int cols, Vector& w) {
  for (int pass = 0; pass < 2; ++pass)
    for (int j = 0; j < cols; ++j) w -= V.col(j).dot(w) * V.col(j);
}

Matrix tridiagonal(const std::vector<double>& alpha, const std::vector<double>& beta, int k) {
  Matrix T = Matrix::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    T(i, i) = alpha[static_cast<std::size_t>(i)];
    if (i + 1 < k) {
      T(i, i + 1) = beta[static_cast<std::size_t>(i)];
      T(i + 1, i) = beta[static_cast<std::size_t>(i)];
    }
  }
  return T;
}

}  // namespace

Vector f_action_symmetric(const LinearOperator& S, const Vector& b,
                          const MatrixFunctionSpec& f, int krylov_dim, double tol) {
  const int n = S.dim;
  const double beta0 = b.norm();
  if (beta0 == 0.0) return Vector::Zero(n);

  const int max_k = std::min(krylov_dim, n);
  Matrix V(n, max_k);
  std::vector<double> alpha, beta;
  V.col(0) = b / beta0;

  Vector y_prev = Vector::Zero(n);
  double last_gap = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= max_k; ++k) {
    Vector w = S.apply(V.col(k - 1));
    double a_k = V.col(k - 1).dot(w);
    alpha.push_back(a_k);
    reorthogonalize(V, k, w);
    double b_k = w.norm();

    // Value after k steps: beta0 * V_k f(T_k) e1.
    Eigen::SelfAdjointEigenSolver<Matrix> eig(tridiagonal(alpha, beta, k));
    Vector fe1 = Vector::Zero(k);
    for (int i = 0; i < k; ++i) {
      double weight = eig.eigenvectors()(0, i);
      fe1 += f(eig.eigenvalues()[i]) * weight * eig.eigenvectors().col(i);
    }
    Vector y = beta0 * (V.leftCols(k) * fe1);

    last_gap = (y - y_prev).norm();
    const bool converged = k > 1 && last_gap <= tol * std::max(y.norm(), kTiny);
    const bool breakdown = b_k <= 1e-14 * std::max(a_k, 1.0);
    if (converged || breakdown || k == max_k) {
      if (converged || breakdown || k == n) return y;
      throw NumericalFailure("f_action_symmetric: Krylov dimension " +
                                 std::to_string(max_k) + " exhausted",
                             last_gap);
    }
    beta.push_back(b_k);
    V.col(k) = w / b_k;
    y_prev = std::move(y);
  }
  return Vector::Zero(n);  // unreachable
}

// ---- Golub-Kahan generalized sinh action ---------------------------------------

namespace {

/// sinh_gmf row/column sums by Golub-Kahan bidiagonalization with full
/// reorthogonalization, started from b (= A1 or A^T 1). `forward` selects
/// whether "A v" means adjacency_times or its transpose.
Vector golub_kahan_sinh_sum(const Digraph& g, bool forward, int krylov_dim, double tol) {
  auto apply = [&](const Vector& x) {
    return forward ? adjacency_times(g, x) : adjacency_transpose_times(g, x);
  };
  auto apply_t = [&](const Vector& x) {
    return forward ? adjacency_transpose_times(g, x) : adjacency_times(g, x);
  };

  const int n = g.node_count();
  Vector b = apply(Vector::Ones(n));
  const double beta1 = b.norm();
  if (beta1 == 0.0) return Vector::Zero(n);

  const int max_k = std::min(krylov_dim, n);
  Matrix U(n, max_k), V(n, max_k);
  std::vector<double> alphas, betas;  // B_k diag / subdiag
  U.col(0) = b / beta1;

  Vector v = apply_t(U.col(0));
  double a1 = v.norm();
  if (a1 == 0.0) return b;  // b spans a null direction; g(0) = 1
  V.col(0) = v / a1;
  alphas.push_back(a1);

  const MatrixFunctionSpec gfun = MatrixFunctionSpec::sinh_over_sqrt();
  Vector y_prev = Vector::Zero(n);
  double last_gap = std::numeric_limits<double>::infinity();
  // When the V-side recurrence breaks down (alpha -> 0) a zero diagonal
  // entry is appended; the projected Gram matrix B_k B_k^T is then exact and
  // the value at this k is final.
  bool exact_now = false;
  for (int k = 1; k <= max_k; ++k) {
    // Value after k steps: beta1 * U_k P g(Sigma^2) P^T e1, B_k = P Sigma Q^T,
    // g(sigma^2) = sinh(sigma)/sigma.
    Matrix B = Matrix::Zero(k, k);
    for (int i = 0; i < k; ++i) {
      B(i, i) = alphas[static_cast<std::size_t>(i)];
      if (i > 0) B(i, i - 1) = betas[static_cast<std::size_t>(i - 1)];
    }
    Eigen::JacobiSVD<Matrix> svd(B, Eigen::ComputeFullU);
    Vector ge1 = Vector::Zero(k);
    for (int i = 0; i < k; ++i) {
      double s = svd.singularValues()[i];
      double weight = svd.matrixU()(0, i);
      ge1 += gfun(s * s) * weight * svd.matrixU().col(i);
    }
    Vector y = beta1 * (U.leftCols(k) * ge1);

    last_gap = (y - y_prev).norm();
    if (exact_now || (k > 1 && last_gap <= tol * std::max(y.norm(), kTiny))) return y;
    if (k == max_k) {
      if (k == n) return y;
      throw NumericalFailure("golub_kahan_sinh_sum: Krylov dimension " +
                                 std::to_string(max_k) + " exhausted",
                             last_gap);
    }
    y_prev = std::move(y);

    Vector u_next = apply(V.col(k - 1)) - alphas.back() * U.col(k - 1);
    reorthogonalize(U, k, u_next);
    double beta_next = u_next.norm();
    if (beta_next <= 1e-14) return y_prev;  // U-side invariant subspace: value is exact
    U.col(k) = u_next / beta_next;
    betas.push_back(beta_next);

    Vector v_next = apply_t(U.col(k)) - beta_next * V.col(k - 1);
    reorthogonalize(V, k, v_next);
    double alpha_next = v_next.norm();
    if (alpha_next <= 1e-14) {
      alphas.push_back(0.0);
      exact_now = true;
    } else {
      V.col(k) = v_next / alpha_next;
      alphas.push_back(alpha_next);
    }
  }
  return Vector::Zero(n);  // unreachable
}

}  // namespace

Vector gmf_sinh_action(const Digraph& g, SumSide side, const SpectralOptions& opts) {
  const int n = g.node_count();
  if (opts.use_dense(n)) {
    CompactSvd svd = compact_svd(g, opts.rank_tol, std::max(opts.dense_cap, n));
    const Matrix& out_factor = side == SumSide::row_sums ? svd.U : svd.V;
    const Matrix& sum_factor = side == SumSide::row_sums ? svd.V : svd.U;
    Vector y = Vector::Zero(n);
    for (int k = 0; k < svd.rank(); ++k)
      y += std::sinh(svd.sigma[k]) * sum_factor.col(k).sum() * out_factor.col(k);
    return y;
  }
  return golub_kahan_sinh_sum(g, side == SumSide::row_sums, opts.krylov_dim, opts.krylov_tol);
}

// ---- quadratic forms ------------------------------------------------------------

double quad_form(const Digraph& g, GramSide side, const MatrixFunctionSpec& f,
                 const SpectralOptions& opts) {
  const int n = g.node_count();
  if (opts.use_dense(n)) {
    Matrix a = dense_adjacency(g);
    Matrix gram = side == GramSide::hub ? Matrix(a * a.transpose()) : Matrix(a.transpose() * a);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(gram);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      double weight = eig.eigenvectors().col(i).sum();
      acc += f(eig.eigenvalues()[i]) * weight * weight;
    }
    return acc;
  }
  LinearOperator S{n, [&g, side](const Vector& x) { return gram_times(g, side, x); }};
  Vector y = f_action_symmetric(S, Vector::Ones(n), f, opts.krylov_dim, opts.krylov_tol);
  return y.sum();
}

// ---- Arnoldi exponential action ---------------------------------------------------

Vector exp_action_nonsymmetric(const Digraph& g, bool transposed, const Vector& b,
                               int krylov_dim, double tol) {
  const int n = g.node_count();
  const double beta0 = b.norm();
  if (beta0 == 0.0) return Vector::Zero(n);
  auto apply = [&](const Vector& x) {
    return transposed ? adjacency_transpose_times(g, x) : adjacency_times(g, x);
  };

  const int max_k = std::min(krylov_dim, n);
  Matrix V(n, max_k);
  Matrix H = Matrix::Zero(max_k + 1, max_k);
  V.col(0) = b / beta0;

  Vector y_prev = Vector::Zero(n);
  double last_gap = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= max_k; ++k) {
    Vector w = apply(V.col(k - 1));
    for (int pass = 0; pass < 2; ++pass) {
      for (int j = 0; j < k; ++j) {
        double proj = V.col(j).dot(w);
        if (pass == 0)
          H(j, k - 1) = proj;
        else
          H(j, k - 1) += proj;
        w -= proj * V.col(j);
      }
    }
    double h_next = w.norm();
    H(k, k - 1) = h_next;

    Matrix expH = expm_dense(H.topLeftCorner(k, k), max_k);
    Vector y = beta0 * (V.leftCols(k) * expH.col(0));

    last_gap = (y - y_prev).norm();
    const bool converged = k > 1 && last_gap <= tol * std::max(y.norm(), kTiny);
    const bool breakdown = h_next <= 1e-14;
    if (converged || breakdown || k == max_k) {
      if (converged || breakdown || k == n) return y;
      throw NumericalFailure("exp_action_nonsymmetric: Krylov dimension " +
                                 std::to_string(max_k) + " exhausted",
                             last_gap);
    }
    V.col(k) = w / h_next;
    y_prev = std::move(y);
  }
  return Vector::Zero(n);  // unreachable
}

Vector exp_action_lift(const BipartiteLift& lift, const Vector& b, int krylov_dim,
                       double tol) {
  LinearOperator S{lift.node_count(),
                   [&lift](const Vector& x) { return lift_times(lift, x); }};
  return f_action_symmetric(S, b, MatrixFunctionSpec::exponential(), krylov_dim, tol);
}

// ---- singular value estimates -------------------------------------------------------

Vector top_singular_values(const Digraph& g, int k, const SpectralOptions& opts) {
  const int n = g.node_count();
  if (k <= 0) throw ParameterError("top_singular_values: k must be positive");
  k = std::min(k, n);
  if (opts.use_dense(n)) {
    Eigen::JacobiSVD<Matrix> svd(dense_adjacency(g));
    return svd.singularValues().head(k);
  }

  // Lanczos Ritz values of A^T A. The deterministic perturbation keeps the
  // start vector out of exact invariant subspaces that 1 might span.
  Vector b(n);
  for (int i = 0; i < n; ++i) b[i] = 1.0 + 1e-8 * std::sin(double(i + 1));
  LinearOperator S{n, [&g](const Vector& x) { return gram_times(g, GramSide::authority, x); }};

  const int max_k = std::min(opts.krylov_dim, n);
  Matrix V(n, max_k);
  std::vector<double> alpha, beta;
  V.col(0) = b / b.norm();
  Vector ritz_prev = Vector::Zero(k);
  for (int step = 1; step <= max_k; ++step) {
    Vector w = S.apply(V.col(step - 1));
    alpha.push_back(V.col(step - 1).dot(w));
    reorthogonalize(V, step, w);
    double b_k = w.norm();

    Eigen::SelfAdjointEigenSolver<Matrix> eig(tridiagonal(alpha, beta, step),
                                              Eigen::EigenvaluesOnly);
    Vector ritz = Vector::Zero(k);
    for (int i = 0; i < std::min(k, step); ++i)
      ritz[i] = eig.eigenvalues()[step - 1 - i];  // descending

    bool stable = step > k && (ritz - ritz_prev).cwiseAbs().maxCoeff() <=
                                  opts.krylov_tol * std::max(ritz[0], kTiny);
    bool breakdown = b_k <= 1e-14 * std::max(std::abs(alpha.back()), 1.0);
    if (stable || breakdown || step == max_k || step == n) {
      if (stable || breakdown || step == n)
        return ritz.cwiseMax(0.0).cwiseSqrt();
      throw NumericalFailure("top_singular_values: Krylov dimension exhausted",
                             (ritz - ritz_prev).cwiseAbs().maxCoeff());
    }
    beta.push_back(b_k);
    V.col(step) = w / b_k;
    ritz_prev = std::move(ritz);
  }
  return Vector::Zero(k);  // unreachable
}

// ---- full-SVD generalized exponential --------------------------------------------

Matrix generalized_exp_full(const Digraph& g, int dense_cap) {
  const int n = g.node_count();
  if (n > dense_cap)
    throw CapacityError("generalized_exp_full: n exceeds dense cap");
  Eigen::JacobiSVD<Matrix> svd(dense_adjacency(g),
                               Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.singularValues().array().exp().matrix().asDiagonal() *
         svd.matrixV().transpose();
}

// ---- lift Perron vector ------------------------------------------------------------

Vector lift_perron_vector(const Digraph& g, double tol, int max_iter) {
  BipartiteLift lift = bipartite_lift(g);
  const int N = lift.node_count();
  Vector x = Vector::Constant(N, 1.0 / std::sqrt(double(N)));
  double delta = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < max_iter; ++iter) {
    // Shift by I: the lift spectrum is symmetric, the shift breaks the
    // +/-sigma1 tie so the iteration converges in direction.
    Vector y = lift_times(lift, x) + x;
    y /= y.norm();
    delta = (y - x).norm();
    x = std::move(y);
    if (delta <= tol) break;
  }
  if (delta > tol)
    throw NumericalFailure("lift_perron_vector: power iteration did not converge", delta);
  if (x.sum() < 0.0) x = -x;
  x = x.cwiseMax(0.0);
  x /= x.norm();
  return x;
}

}  // namespace netcomm
