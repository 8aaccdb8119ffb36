#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "slepnet/graph.hpp"

namespace slepnet {

struct SpectralOptions {
  double orthonormality_tolerance = 1e-10;
  double residual_tolerance = 1e-8;
  // Eigenvalue gap at the truncation boundary below which a warning is issued.
  double degeneracy_tolerance = 1e-9;
  // Operators up to this size use the dense solver; larger ones the block
  // Krylov (Lanczos-type) path.
  Index dense_limit = 2000;
  Index block_size = 8;
  // Upper bound on the Krylov subspace dimension; 0 picks a size-based default.
  Index max_krylov_dimension = 0;
};

// Reads SLEPNET_TOLERANCE, when set, into the residual tolerance.
SpectralOptions options_from_environment(SpectralOptions base = {});

using GraphSignal = Eigen::VectorXd;

// The k smallest eigenpairs of a symmetric operator, ascending, with
// orthonormal sign-canonical columns.
struct SpectralBasis {
  Eigen::MatrixXd vectors;  // N x N_W
  Eigen::VectorXd values;   // N_W, ascending
  std::vector<std::string> warnings;

  Index num_nodes() const noexcept { return static_cast<Index>(vectors.rows()); }
  Index bandwidth() const noexcept { return static_cast<Index>(vectors.cols()); }

  // First `k` eigenpairs. Throws InsufficientBandwidth if k > bandwidth().
  SpectralBasis truncated(Index k) const;
};

// Throws DisconnectedGraph when the operator couples the nodes into more than
// one component, ConvergenceFailure when the solver cannot meet the residual
// and orthonormality tolerances.
SpectralBasis eigendecompose(const SymmetricOperator& op, Index k,
                             const SpectralOptions& options = {});

// Normalized-Laplacian basis of a connected graph; the disconnection
// diagnostic names nodes by their external ids.
SpectralBasis spectral_basis(const Graph& g, Index k, const SpectralOptions& options = {});

// s_hat = U^T s. Requires a full basis (bandwidth == N).
Eigen::VectorXd gft_forward(const SpectralBasis& basis, const GraphSignal& signal);

// g = U_W g_hat.
GraphSignal gft_inverse(const SpectralBasis& basis, const Eigen::VectorXd& coefficients);

}  // namespace slepnet
