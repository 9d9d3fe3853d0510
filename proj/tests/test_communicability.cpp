#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "netcomm/candidates.hpp"
#include "netcomm/communicability.hpp"
#include "netcomm/errors.hpp"
#include "netcomm/synthetic.hpp"
#include "oracles.hpp"

using namespace netcomm;

namespace {
Digraph two_cycle() {
  std::vector<Edge> e{{0, 1}, {1, 0}};
  return Digraph(2, e);
}
Digraph single_edge() {
  std::vector<Edge> e{{0, 1}};
  return Digraph(2, e);
}
}  // namespace

TEST_CASE("total_communicability") {
  CHECK(total_communicability(Digraph(3)) == doctest::Approx(3.0));
  CHECK(total_communicability(two_cycle()) ==
        doctest::Approx(2 * std::exp(1.0)).epsilon(1e-12));
  Digraph g = oracles::hub_example();
  CHECK(total_communicability(g) == doctest::Approx(oracles::tc(g)).epsilon(1e-10));
  SpectralOptions it;
  it.backend = Backend::iterative;
  CHECK(total_communicability(g, it) == doctest::Approx(oracles::tc(g)).epsilon(1e-10));
}

TEST_CASE("total hub and authority communicability") {
  CHECK(total_hub_communicability(Digraph(4)) == doctest::Approx(4.0));
  CHECK(total_authority_communicability(Digraph(4)) == doctest::Approx(4.0));
  CHECK(total_hub_communicability(single_edge()) ==
        doctest::Approx(std::cosh(1.0) + 1).epsilon(1e-12));
  CHECK(total_authority_communicability(single_edge()) ==
        doctest::Approx(std::cosh(1.0) + 1).epsilon(1e-12));

  Digraph g = oracles::hub_example();
  Eigen::MatrixXd e = oracles::taylor_exp(oracles::lift_of(g));
  CHECK(total_hub_communicability(g) ==
        doctest::Approx(e.topLeftCorner(4, 4).sum()).epsilon(1e-10));
  CHECK(total_authority_communicability(g) ==
        doctest::Approx(e.bottomRightCorner(4, 4).sum()).epsilon(1e-10));
}

TEST_CASE("authority of g equals hub of the transpose") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Digraph g = random_digraph(12, 0.2, seed);
    CHECK(total_authority_communicability(g) ==
          doctest::Approx(total_hub_communicability(transpose(g))).epsilon(1e-12));
  }
}

TEST_CASE("generic f-communicability") {
  Digraph g = oracles::hub_example();
  SUBCASE("constant function counts nodes") {
    auto f = MatrixFunctionSpec::polynomial({1.0});
    CHECK(generic_total_f_communicability(g, GramSide::hub, f) == doctest::Approx(4.0));
  }
  SUBCASE("linear term gives squared degree norms") {
    auto f = MatrixFunctionSpec::polynomial({0.0, 1.0});
    // hub side sums the in-degrees squared, authority side the out-degrees
    CHECK(generic_total_f_communicability(g, GramSide::hub, f) ==
          doctest::Approx(7.0).epsilon(1e-12));
    CHECK(generic_total_f_communicability(g, GramSide::authority, f) ==
          doctest::Approx(7.0).epsilon(1e-12));
  }
  SUBCASE("admissibility") {
    CHECK_THROWS_AS(MatrixFunctionSpec::polynomial({1.0, -0.5}), ParameterError);
  }
  SUBCASE("series expansion against a direct oracle") {
    Digraph r = random_digraph(10, 0.25, 3);
    auto f = MatrixFunctionSpec::polynomial({0.3, 1.2, 0.5, 0.01});
    Eigen::MatrixXd a = oracles::dense_of(r);
    Eigen::VectorXd d_in = a.colwise().sum().transpose();
    Eigen::MatrixXd gram = a.transpose() * a;  // authority matrix
    double expected = 0.3 * r.node_count() + 1.2 * d_in.squaredNorm() +
                      0.5 * d_in.dot(gram * d_in) +
                      0.01 * d_in.dot(gram * (gram * d_in));
    CHECK(generic_total_f_communicability(r, GramSide::hub, f) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("node_communicabilities") {
  SUBCASE("reference values") {
    NodeCommunicabilities node = node_communicabilities(oracles::hub_example());
    const std::vector<double> ch{1.1752, 2.7366, 1.3683, 1.3683};
    const std::vector<double> ca{1.3683, 2.7366, 1.1752, 1.3683};
    for (int i = 0; i < 4; ++i) {
      CHECK(node.c_h[i] == doctest::Approx(ch[std::size_t(i)]).epsilon(5e-5));
      CHECK(node.c_a[i] == doctest::Approx(ca[std::size_t(i)]).epsilon(5e-5));
    }
  }
  SUBCASE("empty graph") {
    NodeCommunicabilities node = node_communicabilities(Digraph(3));
    CHECK(node.c_h.norm() == 0.0);
    CHECK(node.c_a.norm() == 0.0);
  }
  SUBCASE("single edge") {
    NodeCommunicabilities node = node_communicabilities(single_edge());
    CHECK(node.c_h[0] == doctest::Approx(std::sinh(1.0)).epsilon(1e-12));
    CHECK(node.c_h[1] == doctest::Approx(0.0));
    CHECK(node.c_a[0] == doctest::Approx(0.0));
    CHECK(node.c_a[1] == doctest::Approx(std::sinh(1.0)).epsilon(1e-12));
  }
  SUBCASE("degree-weighted forms agree with the definition") {
    // Both alternative expressions: sum_k sinh(s)/s * e_i^T u_k u_k^T d_out
    // and sum_k sinh(s)/s (v_k^T 1) * (row i of A) v_k.
    for (std::uint64_t seed = 4; seed <= 6; ++seed) {
      Digraph g = random_digraph(12, 0.25, seed);
      NodeCommunicabilities node = node_communicabilities(g);
      CompactSvd svd = compact_svd(g);
      Eigen::MatrixXd a = oracles::dense_of(g);
      Eigen::VectorXd d_out = a.rowwise().sum();
      Vector form_a = Vector::Zero(g.node_count());
      Vector form_b = Vector::Zero(g.node_count());
      for (int k = 0; k < svd.rank(); ++k) {
        const double w = std::sinh(svd.sigma[k]) / svd.sigma[k];
        form_a += w * svd.U.col(k) * (svd.U.col(k).dot(d_out));
        form_b += w * svd.V.col(k).sum() * (a * svd.V.col(k));
      }
      CHECK((node.c_h - form_a).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK((node.c_h - form_b).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("bipartite_exp_blocks") {
  SUBCASE("empty graph gives identity blocks") {
    BipartiteExpBlocks blocks = bipartite_exp_blocks(Digraph(3));
    CHECK((blocks.hub_block - Matrix::Identity(3, 3)).norm() == 0.0);
    CHECK(blocks.cross_block.norm() == 0.0);
  }
  SUBCASE("assembly equals the exponential of the lift") {
    Digraph g = oracles::hub_example();
    Matrix direct = oracles::taylor_exp(oracles::lift_of(g));
    CHECK((bipartite_exp_blocks(g).assemble() - direct).cwiseAbs().maxCoeff() <= 1e-10);
  }
  SUBCASE("cross-block row sums are the hub communicabilities") {
    Digraph g = oracles::hub_example();
    BipartiteExpBlocks blocks = bipartite_exp_blocks(g);
    NodeCommunicabilities node = node_communicabilities(g);
    CHECK((blocks.cross_block.rowwise().sum() - node.c_h).cwiseAbs().maxCoeff() <= 1e-12);
  }
  SUBCASE("capacity guard") {
    CHECK_THROWS_AS(bipartite_exp_blocks(Digraph(20), 10), CapacityError);
  }
}

TEST_CASE("isomorphism invariance") {
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 7; seed <= 9; ++seed) {
    Digraph g = random_digraph(14, 0.2, seed);
    const double thc = total_hub_communicability(g);
    const double tac = total_authority_communicability(g);
    const double tc = total_communicability(g);
    std::vector<int> p(14);
    std::iota(p.begin(), p.end(), 0);
    for (int rep = 0; rep < 3; ++rep) {
      std::shuffle(p.begin(), p.end(), rng);
      Digraph h = permute(g, p);
      CHECK(total_hub_communicability(h) == doctest::Approx(thc).epsilon(1e-10));
      CHECK(total_authority_communicability(h) == doctest::Approx(tac).epsilon(1e-10));
      CHECK(total_communicability(h) == doctest::Approx(tc).epsilon(1e-10));
    }
  }
}

TEST_CASE("adding any virtual edge cannot decrease the indices") {
  Digraph g = random_digraph(10, 0.2, 13);
  const double thc = total_hub_communicability(g);
  const double tac = total_authority_communicability(g);
  for_each_virtual_edge(g, [&](Edge e) {
    Digraph h = apply_modification(g, e, ModificationKind::update);
    CHECK(total_hub_communicability(h) >= thc - 1e-10);
    CHECK(total_authority_communicability(h) >= tac - 1e-10);
  });
}

TEST_CASE("normalizations") {
  Digraph g = oracles::hub_example();
  GlobalIndices idx = hub_authority_indices(g, {}, true);
  CHECK(normalize_index(idx.thc, g, Normalization::per_edge) ==
        doctest::Approx(idx.thc / 5.0));
  CHECK(normalize_index(idx.thc, g, Normalization::per_node) ==
        doctest::Approx(idx.thc / 4.0));
  CHECK(normalize_index(idx.thc, g, Normalization::raw) == idx.thc);
  CHECK(idx.tc >= g.node_count());  // diagonal of e^A dominates the identity
  CHECK(idx.thc >= 0.0);
  CHECK(idx.tac >= 0.0);
}

TEST_CASE("hub_authority_indices matches the one-at-a-time routes") {
  for (std::uint64_t seed = 14; seed <= 16; ++seed) {
    Digraph g = random_digraph(16, 0.2, seed);
    GlobalIndices idx = hub_authority_indices(g);
    CHECK(idx.thc == doctest::Approx(total_hub_communicability(g)).epsilon(1e-11));
    CHECK(idx.tac == doctest::Approx(total_authority_communicability(g)).epsilon(1e-11));
    CHECK(idx.thc == doctest::Approx(oracles::thc(g)).epsilon(1e-11));
    CHECK(idx.tac == doctest::Approx(oracles::tac(g)).epsilon(1e-11));
  }
}
