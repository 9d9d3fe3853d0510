#include "netcomm/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include "netcomm/candidates.hpp"
#include "netcomm/communicability.hpp"
#include "netcomm/synthetic.hpp"

namespace netcomm {

bool SelfCheckReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const SelfCheckResult& c) { return c.pass; });
}

Matrix taylor_expm_reference(const Matrix& M) {
  const auto n = M.rows();
  Matrix sum = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k <= 200; ++k) {
    term = (term * M) / double(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() <= 1e-20 * sum.cwiseAbs().maxCoeff()) break;
  }
  return sum;
}

Digraph hub_example_digraph() {
  const std::vector<Edge> edges{{0, 2}, {1, 0}, {1, 3}, {2, 1}, {3, 1}};
  return Digraph(4, edges);
}

namespace {

SelfCheckResult check_reference_scores() {
  SelfCheckResult r{"reference hub/authority scores", false, 0.0, {}};
  const Digraph g = hub_example_digraph();
  const double tol = 5e-5;

  const std::vector<double> u_sq{0.0, 0.5, 0.25, 0.25};
  const std::vector<double> v_sq{1.0 / 3.0, 1.0 / 3.0, 0.0, 1.0 / 3.0};
  const std::vector<double> ch{1.1752, 2.7366, 1.3683, 1.3683};
  const std::vector<double> ca{1.3683, 2.7366, 1.1752, 1.3683};

  HubAuthorityPair pair = dominant_triplet(g);
  NodeCommunicabilities node = node_communicabilities(g);
  double worst = std::abs(pair.sigma1 - std::sqrt(2.0));
  for (int i = 0; i < 4; ++i) {
    worst = std::max(worst, std::abs(pair.u1[i] * pair.u1[i] - u_sq[std::size_t(i)]));
    worst = std::max(worst, std::abs(pair.v1[i] * pair.v1[i] - v_sq[std::size_t(i)]));
    worst = std::max(worst, std::abs(node.c_h[i] - ch[std::size_t(i)]));
    worst = std::max(worst, std::abs(node.c_a[i] - ca[std::size_t(i)]));
  }
  r.residual = worst;
  r.pass = worst <= tol;
  return r;
}

SelfCheckResult check_generalized_exp_negative() {
  SelfCheckResult r{"generalized exponential sign defect", false, 0.0, {}};
  Matrix gexp = generalized_exp_full(hub_example_digraph());
  const double e31 = gexp(2, 0);
  const double e44 = gexp(3, 3);
  r.residual = std::max(e31, e44);
  r.pass = e31 < -1e-6 && e44 < -1e-6;
  r.detail = "entries (3,1) and (4,4) must be strictly negative";
  return r;
}

SelfCheckResult check_block_identity(bool perturb) {
  SelfCheckResult r{"lift exponential block identity", false, 0.0, {}};
  double worst = 0.0;
  std::vector<Digraph> graphs{hub_example_digraph()};
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    graphs.push_back(random_digraph(8 + int(seed) * 6, 0.15, seed));
  bool first = true;
  for (const Digraph& g : graphs) {
    Matrix lift = dense_lift(g);
    Matrix direct = expm_dense(lift);
    worst = std::max(worst,
                     (direct - taylor_expm_reference(lift)).cwiseAbs().maxCoeff());
    Matrix assembled = bipartite_exp_blocks(g).assemble();
    if (perturb && first) assembled(0, 0) += 1e-3;
    first = false;
    worst = std::max(worst, (direct - assembled).cwiseAbs().maxCoeff());
  }
  r.residual = worst;
  r.pass = worst <= 1e-10;
  return r;
}

SelfCheckResult check_sinh_factorization() {
  SelfCheckResult r{"generalized sinh factorization routes", false, 0.0, {}};
  double worst = 0.0;
  std::vector<Digraph> graphs{hub_example_digraph()};
  for (std::uint64_t seed = 11; seed <= 15; ++seed)
    graphs.push_back(random_digraph(10 + int(seed - 11) * 5, 0.15, seed));
  for (const Digraph& g : graphs) {
    CompactSvd svd = compact_svd(g);
    const int n = g.node_count();
    Matrix direct = Matrix::Zero(n, n);
    Matrix hub_route = Matrix::Zero(n, n);
    Matrix authority_route = Matrix::Zero(n, n);
    Matrix a = dense_adjacency(g);
    for (int k = 0; k < svd.rank(); ++k) {
      const double sigma = svd.sigma[k];
      direct += std::sinh(sigma) * svd.U.col(k) * svd.V.col(k).transpose();
      hub_route += std::sinh(sigma) / sigma * svd.U.col(k) * svd.U.col(k).transpose();
      authority_route += std::sinh(sigma) / sigma * svd.V.col(k) * svd.V.col(k).transpose();
    }
    Matrix via_hub = hub_route * a;
    Matrix via_authority = a * authority_route;
    worst = std::max(worst, (direct - via_hub).cwiseAbs().maxCoeff());
    worst = std::max(worst, (direct - via_authority).cwiseAbs().maxCoeff());
  }
  r.residual = worst;
  r.pass = worst <= 1e-10;
  return r;
}

SelfCheckResult check_modification_bounds() {
  SelfCheckResult r{"singular value modification bounds", false, 0.0, {}};
  double worst = -1e300;  // largest bound violation; negative means slack
  for (std::uint64_t seed = 21; seed <= 23; ++seed) {
    Digraph g = random_digraph(16, 0.12, seed);
    if (g.edge_count() == 0) continue;
    CompactSvd svd = compact_svd(g);
    const double s1 = svd.sigma[0];
    auto u = svd.U.col(0);
    auto v = svd.V.col(0);
    for_each_virtual_edge(g, [&](Edge e) {
      Digraph mod = apply_modification(g, e, ModificationKind::update);
      double s1_new = compact_svd(mod).sigma[0];
      double bound = s1 * s1 + 2 * s1 * u[e.src] * v[e.dst] +
                     std::max(u[e.src] * u[e.src], v[e.dst] * v[e.dst]);
      worst = std::max(worst, bound - s1_new * s1_new);
    });
    g.for_each_edge([&](Edge e) {
      Digraph mod = apply_modification(g, e, ModificationKind::downdate);
      CompactSvd modsvd = compact_svd(mod);
      double s1_new = modsvd.rank() > 0 ? modsvd.sigma[0] : 0.0;
      double bound = s1 * s1 - 2 * s1 * u[e.src] * v[e.dst] +
                     std::max(u[e.src] * u[e.src], v[e.dst] * v[e.dst]);
      worst = std::max(worst, bound - s1_new * s1_new);
      worst = std::max(worst, s1_new - s1);  // removal cannot raise sigma1
    });
  }
  r.residual = worst;
  r.pass = worst <= 1e-10;
  r.detail = "residual is the largest bound violation (negative = slack)";
  return r;
}

}  // namespace

SelfCheckReport run_selfcheck(bool perturb) {
  SelfCheckReport report;
  report.checks.push_back(check_reference_scores());
  report.checks.push_back(check_generalized_exp_negative());
  report.checks.push_back(check_block_identity(perturb));
  report.checks.push_back(check_sinh_factorization());
  report.checks.push_back(check_modification_bounds());
  return report;
}

void print_selfcheck(std::ostream& out, const SelfCheckReport& report) {
  for (const SelfCheckResult& c : report.checks) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (max residual "
        << c.residual << ")";
    if (!c.detail.empty()) out << "  [" << c.detail << "]";
    out << '\n';
  }
  out << (report.all_pass() ? "self-check passed" : "SELF-CHECK FAILED") << '\n';
}

}  // namespace netcomm
