#include <doctest.h>

#include <cmath>

#include "slepnet/error.hpp"
#include "slepnet/graph.hpp"
#include "support/graphs.hpp"

using namespace slepnet;
using testing_support::Rng;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected slepnet::Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("build_graph computes degrees") {
  const Graph p3 = testing_support::path3();
  CHECK(p3.num_nodes() == 3);
  CHECK(p3.num_edges() == 2);
  const Eigen::VectorXd d = p3.degrees();
  CHECK(d[0] == 1.0);
  CHECK(d[1] == 2.0);
  CHECK(d[2] == 1.0);

  const Eigen::VectorXd dk = testing_support::triangle().degrees();
  CHECK(dk == Eigen::Vector3d(2, 2, 2));
}

TEST_CASE("build_graph stores edges once and exposes them symmetrically") {
  const Graph g = build_graph(std::vector<Edge>{{2, 0, 1.5}, {1, 0, 0.5}}, 3);
  REQUIRE(g.edges().size() == 2);
  CHECK(g.edges()[0] == Edge{0, 1, 0.5});
  CHECK(g.edges()[1] == Edge{0, 2, 1.5});
  CHECK(g.weight(2, 0) == 1.5);
  CHECK(g.weight(0, 2) == 1.5);
  CHECK(g.weight(1, 2) == 0.0);
  CHECK(g.neighbors(0).size() == 2);
  CHECK(g.neighbors(1).front().node == 0);
  CHECK(g.node_label(1) == "1");
}

TEST_CASE("build_graph rejects invalid input") {
  CHECK(kind_of([] { build_graph(std::vector<Edge>{{0, 0, 1.0}}, 1); }) == ErrorKind::SelfLoop);
  CHECK(kind_of([] { build_graph(std::vector<Edge>{{0, 3, 1.0}}, 3); }) ==
        ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { build_graph(std::vector<Edge>{{0, 1, 0.0}}, 2); }) ==
        ErrorKind::NonPositiveWeight);
  CHECK(kind_of([] { build_graph(std::vector<Edge>{{0, 1, -2.0}}, 2); }) ==
        ErrorKind::NonPositiveWeight);
  CHECK(kind_of([] { build_graph(std::vector<Edge>{{0, 1, NAN}}, 2); }) ==
        ErrorKind::NonPositiveWeight);
  CHECK(kind_of([] { build_graph(std::vector<Edge>{{0, 1, 1.0}, {1, 0, 2.0}}, 2); }) ==
        ErrorKind::DuplicateEdge);
  CHECK(kind_of([] { build_graph(std::vector<Edge>{{0, 1, 1.0}}, 2, {"a", "a"}); }) ==
        ErrorKind::DuplicateId);
  CHECK(kind_of([] { build_graph(std::vector<Edge>{{0, 1, 1.0}}, 2, {"a"}); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([] { build_graph(std::vector<Edge>{}, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("combinatorial Laplacian is D - A") {
  Eigen::Matrix3d expected;
  expected << 1, -1, 0, -1, 2, -1, 0, -1, 1;
  CHECK(combinatorial_laplacian(testing_support::path3()).dense() == expected);

  Eigen::Matrix3d k3 = 2.0 * Eigen::Matrix3d::Identity() -
                       (Eigen::Matrix3d::Ones() - Eigen::Matrix3d::Identity());
  CHECK(combinatorial_laplacian(testing_support::triangle()).dense() == k3);

  const Graph edge = build_graph(std::vector<Edge>{{0, 1, 2.5}}, 2);
  Eigen::Matrix2d e;
  e << 2.5, -2.5, -2.5, 2.5;
  CHECK(combinatorial_laplacian(edge).dense() == e);
}

TEST_CASE("normalized Laplacian of P3 and K3") {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix3d expected;
  expected << 1, -r, 0, -r, 1, -r, 0, -r, 1;
  const Eigen::MatrixXd p3 = normalized_laplacian(testing_support::path3()).dense();
  CHECK((p3 - expected).cwiseAbs().maxCoeff() < 1e-15);

  const Eigen::MatrixXd k3 = normalized_laplacian(testing_support::triangle()).dense();
  const Eigen::Matrix3d a = Eigen::Matrix3d::Ones() - Eigen::Matrix3d::Identity();
  CHECK((k3 - (Eigen::Matrix3d::Identity() - a / 2.0)).cwiseAbs().maxCoeff() < 1e-15);

  // Characteristic polynomial det(tI - L) = t^3 - c2 t^2 + c1 t - c0 must equal
  // t (t - 3/2)^2 = t^3 - 3 t^2 + 9/4 t.
  const double c2 = k3.trace();
  const double c1 = k3(0, 0) * k3(1, 1) - k3(0, 1) * k3(1, 0) + k3(0, 0) * k3(2, 2) -
                    k3(0, 2) * k3(2, 0) + k3(1, 1) * k3(2, 2) - k3(1, 2) * k3(2, 1);
  const double c0 = k3.determinant();
  CHECK(c2 == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(c1 == doctest::Approx(2.25).epsilon(1e-14));
  CHECK(std::abs(c0) < 1e-14);
}

TEST_CASE("normalized Laplacian refuses isolated nodes") {
  const Graph g = build_graph(std::vector<Edge>{{0, 1, 1.0}}, 3);
  CHECK(kind_of([&] { normalized_laplacian(g); }) == ErrorKind::ZeroDegreeNode);
}

TEST_CASE("connected components") {
  CHECK(connected_components(testing_support::path3()) ==
        std::vector<std::vector<Index>>{{0, 1, 2}});
  const Graph two = build_graph(std::vector<Edge>{{0, 2, 1.0}, {1, 3, 1.0}}, 4);
  CHECK(connected_components(two) == std::vector<std::vector<Index>>{{0, 2}, {1, 3}});
  CHECK(connected_components(combinatorial_laplacian(two)) == connected_components(two));
  const Graph single = build_graph(std::vector<Edge>{}, 1);
  CHECK(connected_components(single) == std::vector<std::vector<Index>>{{0}});

  const Graph named = build_graph(std::vector<Edge>{{0, 1, 1.0}, {2, 3, 1.0}}, 4,
                                  {"a", "b", "c", "d"});
  try {
    require_connected(named);
    FAIL("expected DisconnectedGraph");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DisconnectedGraph);
    CHECK(std::string(e.what()).find("{a,b}; {c,d}") != std::string::npos);
  }
}

TEST_CASE("Laplacian properties on random graphs") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 2 + rng.below(49);
    const Graph g = testing_support::random_connected_graph(rng, n, rng.uniform(0.02, 0.4));
    const Eigen::MatrixXd lc = combinatorial_laplacian(g).dense();
    const Eigen::MatrixXd ln = normalized_laplacian(g).dense();
    CHECK(lc == lc.transpose());
    CHECK(ln == ln.transpose());
    CHECK(lc.rowwise().sum().cwiseAbs().maxCoeff() < 1e-12);

    // g^T L' g against the direct double sum over ordered pairs.
    Eigen::VectorXd x(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = rng.uniform(-1.0, 1.0);
    double direct = 0.0;
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        const double diff = x[static_cast<Eigen::Index>(i)] - x[static_cast<Eigen::Index>(j)];
        direct += g.weight(i, j) * diff * diff;
      }
    const double quad = x.dot(lc * x);
    CHECK(std::abs(quad - 0.5 * direct) <= 1e-10 * std::abs(quad));

    // D^{1/2} 1 spans the kernel of the normalized Laplacian.
    Eigen::VectorXd k = g.degrees().cwiseSqrt();
    k.normalize();
    CHECK((ln * k).norm() <= 1e-10);
    CHECK((normalized_laplacian(g).apply(x) - ln * x).norm() <= 1e-12 * x.norm());
  }
}
