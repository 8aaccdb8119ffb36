#include "slepnet/summarize.hpp"

#include <algorithm>

#include "slepnet/error.hpp"
#include "slepnet/linalg.hpp"

namespace slepnet {

namespace {

// Relative gap under which eigenvalues of K are treated as one cluster.
constexpr double kClusterTolerance = 1e-9;

}  // namespace

EmbeddingCoords laplacian_embedding(const SpectralBasis& basis, Index d) {
  if (d < 1 || basis.bandwidth() < d + 1) {
    throw Error(ErrorKind::InsufficientBandwidth,
                std::to_string(d) + "-dimensional embedding needs " + std::to_string(d + 1) +
                    " eigenvectors, basis holds " + std::to_string(basis.bandwidth()));
  }
  const auto dd = static_cast<Eigen::Index>(d);
  EmbeddingCoords out;
  out.coords = basis.vectors.middleCols(1, dd);
  out.axis_weights = basis.values.segment(1, dd);
  for (Index k = 0; k < d; ++k) out.axis_labels.push_back("u" + std::to_string(k + 2));
  return out;
}

Eigen::MatrixXd restricted_gram(const SlepianBasis& b, const Selection& sel) {
  if (b.num_nodes() != sel.num_nodes()) {
    throw Error(ErrorKind::DimensionMismatch,
                "Slepian basis over " + std::to_string(b.num_nodes()) +
                    " nodes, selection over " + std::to_string(sel.num_nodes()));
  }
  const Eigen::MatrixXd rows = sel.restrict_rows(b.vectors);
  const auto k = rows.cols();
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(k, k);
  gram.selfadjointView<Eigen::Lower>().rankUpdate(rows.transpose());
  gram.triangularView<Eigen::StrictlyUpper>() = gram.transpose();
  return gram;
}

EmbeddingCoords slepian_summary(const SlepianBasis& b, const Selection& sel, Index d) {
  if (d < 1 || d > b.bandwidth()) {
    throw Error(ErrorKind::DimensionTooLarge, std::to_string(d) +
                                                  " summary axes from " +
                                                  std::to_string(b.bandwidth()) + " Slepians");
  }
  const Eigen::MatrixXd gram = restricted_gram(b, sel);
  auto eig = symmetric_eigen(gram, EigenOrder::descending);
  const double scale = std::max(1.0, eig.values.cwiseAbs().maxCoeff());
  canonicalize_degenerate_subspaces(eig.values, eig.vectors, kClusterTolerance * scale);

  const auto dd = static_cast<Eigen::Index>(d);
  EmbeddingCoords out;
  out.coords = b.vectors * eig.vectors.leftCols(dd);
  out.axis_weights = eig.values.head(dd);
  for (Index k = 0; k < d; ++k) out.axis_labels.push_back("summary-" + std::to_string(k + 1));
  return out;
}

}  // namespace slepnet
