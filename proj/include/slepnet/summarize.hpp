#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "slepnet/slepian.hpp"
#include "slepnet/spectral.hpp"

namespace slepnet {

struct EmbeddingCoords {
  Eigen::MatrixXd coords;  // N x d
  std::vector<std::string> axis_labels;
  Eigen::VectorXd axis_weights;

  Index num_nodes() const noexcept { return static_cast<Index>(coords.rows()); }
  Index dims() const noexcept { return static_cast<Index>(coords.cols()); }
};

// Coordinates (u_2, ..., u_{d+1}); the constant direction u_1 is skipped.
// Throws InsufficientBandwidth unless the basis holds d + 1 eigenpairs.
EmbeddingCoords laplacian_embedding(const SpectralBasis& basis, Index d = 2);

// K = G^T S G.
Eigen::MatrixXd restricted_gram(const SlepianBasis& b, const Selection& sel);

// Projects G onto the d leading eigenvectors of the restricted Gram matrix,
// so the axes carry the most energy inside the selection and are mutually
// uncorrelated there. Throws DimensionTooLarge when d exceeds N_W.
EmbeddingCoords slepian_summary(const SlepianBasis& b, const Selection& sel, Index d = 2);

}  // namespace slepnet
