#include <doctest.h>

#include <cmath>

#include "slepnet/error.hpp"
#include "slepnet/linalg.hpp"
#include "slepnet/summarize.hpp"
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

double column_distance_up_to_sign(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return std::min((a - b).cwiseAbs().maxCoeff(), (a + b).cwiseAbs().maxCoeff());
}

}  // namespace

TEST_CASE("Laplacian embedding") {
  const auto b = spectral_basis(testing_support::path3(), 3);
  const auto e1 = laplacian_embedding(b, 1);
  CHECK(e1.dims() == 1);
  CHECK(column_distance_up_to_sign(e1.coords.col(0), Eigen::Vector3d(1, 0, -1) / std::sqrt(2.0)) < 1e-12);
  CHECK(e1.axis_weights[0] == doctest::Approx(1.0));

  const auto e2 = laplacian_embedding(b, 2);
  CHECK(e2.axis_labels == std::vector<std::string>{"u2", "u3"});
  CHECK(e2.axis_weights[1] == doctest::Approx(2.0));

  CHECK(kind_of([&] { laplacian_embedding(b, 3); }) == ErrorKind::InsufficientBandwidth);
  CHECK(kind_of([&] { laplacian_embedding(b.truncated(2), 2); }) == ErrorKind::InsufficientBandwidth);
}

TEST_CASE("Laplacian embedding follows the oracle Fiedler vector") {
  Rng rng(17);
  for (int t = 0; t < 10; ++t) {
    const auto g = testing_support::random_connected_graph(rng, 4 + rng.below(30));
    const auto oracle = oracle::jacobi(oracle::normalized_laplacian(testing_support::dense_adjacency(g)));
    const auto e = laplacian_embedding(spectral_basis(g, 2), 1);
    const Eigen::VectorXd fiedler = Eigen::Map<const Eigen::VectorXd>(
        oracle.vectors[1].data(), static_cast<Eigen::Index>(oracle.vectors[1].size()));
    CHECK(column_distance_up_to_sign(e.coords.col(0), fiedler) <= 1e-8);
  }
}

TEST_CASE("restricted Gram matrix") {
  const auto b = spectral_basis(testing_support::path3(), 2);
  const Selection node0(3, {0});

  const auto whole = slepian_design(b, Selection::all(3), Design::embedded_distance);
  CHECK((restricted_gram(whole, Selection::all(3)) - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-12);

  const auto conc = slepian_design(b, node0, Design::concentration);
  CHECK((restricted_gram(conc, node0) - Eigen::MatrixXd(conc.values.asDiagonal())).cwiseAbs().maxCoeff() <= 1e-8);

  const auto emb = slepian_design(b, node0, Design::embedded_distance);
  const double c = 1.0 / (2.0 * std::sqrt(2.0));
  Eigen::Matrix2d expected;
  expected << 0.25, c, c, 0.5;
  CHECK((restricted_gram(emb, node0) - expected).cwiseAbs().maxCoeff() < 1e-12);

  CHECK(kind_of([&] { restricted_gram(emb, Selection::all(4)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("Slepian summary on P3") {
  const auto b = spectral_basis(testing_support::path3(), 2);
  const Selection node0(3, {0});
  const auto emb = slepian_design(b, node0, Design::embedded_distance);
  const auto s = slepian_summary(emb, node0, 2);
  CHECK(s.axis_labels == std::vector<std::string>{"summary-1", "summary-2"});
  CHECK(s.axis_weights[0] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(std::abs(s.axis_weights[1]) < 1e-12);
  // Top eigenvector of K is (1, sqrt2)/sqrt3, so G v1 = (sqrt3/2, 1/sqrt6, -1/(2 sqrt3)).
  const Eigen::Vector3d axis(std::sqrt(3.0) / 2, 1 / std::sqrt(6.0), -1 / (2 * std::sqrt(3.0)));
  CHECK((s.coords.col(0) - axis).norm() < 1e-12);

  CHECK(kind_of([&] { slepian_summary(emb, node0, 3); }) == ErrorKind::DimensionTooLarge);
  CHECK(kind_of([&] { slepian_summary(emb, node0, 0); }) == ErrorKind::DimensionTooLarge);
}

TEST_CASE("Slepian summary with identity or diagonal Gram") {
  Rng rng(43);
  const auto g = testing_support::random_connected_graph(rng, 25);
  const auto b = spectral_basis(g, 6);
  const auto all = Selection::all(25);

  for (const auto design : {Design::embedded_distance, Design::concentration}) {
    const auto slep = slepian_design(b, all, design);
    const auto s = slepian_summary(slep, all, 3);
    CHECK((s.coords - slep.vectors.leftCols(3)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((s.axis_weights - Eigen::Vector3d::Ones()).cwiseAbs().maxCoeff() < 1e-12);
  }

  const Selection sel(25, testing_support::random_subset(rng, 25));
  const auto conc = slepian_design(b, sel, Design::concentration);
  const auto s = slepian_summary(conc, sel, 2);
  CHECK(column_distance_up_to_sign(s.coords.col(0), conc.vectors.col(0)) <= 1e-8);
  CHECK(column_distance_up_to_sign(s.coords.col(1), conc.vectors.col(1)) <= 1e-8);
  CHECK((s.axis_weights - conc.values.head(2)).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("summary properties on random inputs") {
  Rng rng(808);
  for (int t = 0; t < 40; ++t) {
    const Index n = 5 + rng.below(50);
    const auto g = testing_support::random_connected_graph(rng, n, rng.uniform(0.03, 0.3));
    const Index nw = 1 + rng.below(n);
    const auto b = spectral_basis(g, nw);
    const Selection sel(n, testing_support::random_subset(rng, n));
    const auto design = t % 2 ? Design::concentration : Design::embedded_distance;
    const auto slep = slepian_design(b, sel, design);

    const Eigen::MatrixXd k = restricted_gram(slep, sel);
    CHECK(symmetric_eigen(k, EigenOrder::ascending).values.minCoeff() >= -1e-10);

    const Index d = 1 + rng.below(std::min<Index>(nw, 3));
    const auto s = slepian_summary(slep, sel, d);
    for (Eigen::Index i = 1; i < s.axis_weights.size(); ++i) {
      CHECK(s.axis_weights[i] <= s.axis_weights[i - 1]);
    }
    const Eigen::MatrixXd inside = sel.restrict_rows(s.coords);
    const Eigen::MatrixXd cov = inside.transpose() * inside;
    CHECK((cov - Eigen::MatrixXd(s.axis_weights.asDiagonal())).cwiseAbs().maxCoeff() <= 1e-8);

    for (int probe = 0; probe < 20; ++probe) {
      Eigen::VectorXd w(static_cast<Eigen::Index>(nw));
      for (Eigen::Index i = 0; i < w.size(); ++i) w[i] = rng.uniform(-1, 1);
      w.normalize();
      CHECK(sel.restrict_rows(slep.vectors * w).squaredNorm() <= s.axis_weights[0] + 1e-10);
    }
  }
}
