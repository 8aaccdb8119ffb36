#include "slepnet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <random>
#include <sstream>

#include "slepnet/error.hpp"
#include "slepnet/linalg.hpp"

namespace slepnet {

SpectralOptions options_from_environment(SpectralOptions base) {
  if (const char* env = std::getenv("SLEPNET_TOLERANCE"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(value > 0.0) || !std::isfinite(value)) {
      throw Error(ErrorKind::InvalidArgument,
                  std::string("SLEPNET_TOLERANCE must be a positive number, got '") + env + "'");
    }
    base.residual_tolerance = value;
  }
  return base;
}

SpectralBasis SpectralBasis::truncated(Index k) const {
  if (k > bandwidth()) {
    throw Error(ErrorKind::InsufficientBandwidth, "requested " + std::to_string(k) +
                                                      " eigenpairs from a basis of " +
                                                      std::to_string(bandwidth()));
  }
  SpectralBasis out;
  out.vectors = vectors.leftCols(static_cast<Eigen::Index>(k));
  out.values = values.head(static_cast<Eigen::Index>(k));
  out.warnings = warnings;
  return out;
}

namespace {

struct Eigenpairs {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

Eigenpairs dense_path(const SymmetricOperator& op, Index count) {
  auto eig = symmetric_eigen(op.dense(), EigenOrder::ascending);
  const auto c = static_cast<Eigen::Index>(count);
  return {eig.values.head(c), eig.vectors.leftCols(c)};
}

// Fixed-seed start block; raw engine output is mapped to [-1, 1) by hand so
// the numbers do not depend on the standard library's distributions.
Eigen::MatrixXd start_block(Eigen::Index rows, Eigen::Index cols, std::uint64_t salt) {
  std::mt19937_64 engine(0x5EED5EEDULL + salt);
  Eigen::MatrixXd x(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      x(i, j) = 2.0 * static_cast<double>(engine() >> 11) * 0x1.0p-53 - 1.0;
    }
  }
  return x;
}

// Orthogonalizes `block` against `basis` (twice) and then internally,
// dropping columns that vanish. Returns the orthonormal survivors.
Eigen::MatrixXd orthonormalize_against(const Eigen::MatrixXd& basis, Eigen::MatrixXd block) {
  for (int pass = 0; pass < 2; ++pass) {
    if (basis.cols() > 0) block -= basis * (basis.transpose() * block);
  }
  Eigen::MatrixXd out(block.rows(), 0);
  for (Eigen::Index j = 0; j < block.cols(); ++j) {
    Eigen::VectorXd v = block.col(j);
    const double initial = v.norm();
    if (initial == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass) {
      if (basis.cols() > 0) v -= basis * (basis.transpose() * v);
      if (out.cols() > 0) v -= out * (out.transpose() * v);
    }
    const double norm = v.norm();
    if (norm <= 1e-10 * initial) continue;
    out.conservativeResize(Eigen::NoChange, out.cols() + 1);
    out.col(out.cols() - 1) = v / norm;
  }
  return out;
}

// Block Krylov subspace with full reorthogonalization and Rayleigh-Ritz
// extraction of the smallest eigenpairs.
Eigenpairs krylov_path(const SymmetricOperator& op, Index count, const SpectralOptions& options) {
  const auto n = static_cast<Eigen::Index>(op.size());
  const auto want = static_cast<Eigen::Index>(count);
  Eigen::Index limit = options.max_krylov_dimension > 0
                           ? static_cast<Eigen::Index>(options.max_krylov_dimension)
                           : std::max<Eigen::Index>(20 * want, 600);
  limit = std::min(limit, n);
  const Eigen::Index block = std::clamp<Eigen::Index>(
      static_cast<Eigen::Index>(options.block_size), 1, std::max<Eigen::Index>(1, want));

  Eigen::MatrixXd basis(n, 0);
  Eigen::MatrixXd image(n, 0);  // op applied to basis
  Eigen::MatrixXd next = start_block(n, block, 0);
  std::uint64_t restarts = 0;
  Eigen::Index last_check = 0;
  double worst = std::numeric_limits<double>::infinity();

  while (basis.cols() < limit) {
    Eigen::MatrixXd q = orthonormalize_against(basis, next);
    if (q.cols() == 0) {
      // Invariant subspace reached; continue from a fresh direction.
      q = orthonormalize_against(basis, start_block(n, block, ++restarts));
      if (q.cols() == 0) break;
    }
    if (basis.cols() + q.cols() > limit) q.conservativeResize(Eigen::NoChange, limit - basis.cols());
    const Eigen::MatrixXd aq = op.apply(q);
    const Eigen::Index m = basis.cols();
    basis.conservativeResize(Eigen::NoChange, m + q.cols());
    image.conservativeResize(Eigen::NoChange, m + q.cols());
    basis.rightCols(q.cols()) = q;
    image.rightCols(q.cols()) = aq;
    next = aq;

    const Eigen::Index dim = basis.cols();
    const bool full = dim == limit;
    if (dim < want + block && !full) continue;
    if (!full && dim - last_check < std::max<Eigen::Index>(block, dim / 10)) continue;
    last_check = dim;

    Eigen::MatrixXd projected = basis.transpose() * image;
    projected = 0.5 * (projected + projected.transpose()).eval();
    const auto ritz = symmetric_eigen(projected, EigenOrder::ascending);
    const Eigen::MatrixXd coeffs = ritz.vectors.leftCols(want);
    const Eigen::VectorXd theta = ritz.values.head(want);
    const Eigen::MatrixXd vectors = basis * coeffs;
    const Eigen::MatrixXd residual = image * coeffs - vectors * theta.asDiagonal();
    worst = residual.colwise().norm().maxCoeff();
    // Converge well below the acceptance tolerance so the final check passes.
    if (worst <= 0.1 * options.residual_tolerance || dim == n) return {theta, vectors};
    if (full) break;
  }
  std::ostringstream msg;
  msg << "Krylov subspace reached dimension " << basis.cols() << " (limit " << limit
      << ") with worst residual " << worst;
  throw Error(ErrorKind::ConvergenceFailure, msg.str());
}

void verify(const SymmetricOperator& op, const Eigenpairs& pairs, const SpectralOptions& options) {
  const auto k = pairs.vectors.cols();
  const Eigen::MatrixXd gram =
      pairs.vectors.transpose() * pairs.vectors - Eigen::MatrixXd::Identity(k, k);
  const double ortho = k > 0 ? gram.cwiseAbs().maxCoeff() : 0.0;
  if (ortho > options.orthonormality_tolerance) {
    std::ostringstream msg;
    msg << "eigenvectors deviate from orthonormality by " << ortho << " (tolerance "
        << options.orthonormality_tolerance << ")";
    throw Error(ErrorKind::ConvergenceFailure, msg.str());
  }
  const Eigen::MatrixXd residual =
      op.apply(pairs.vectors) - pairs.vectors * pairs.values.asDiagonal();
  for (Eigen::Index c = 0; c < k; ++c) {
    const double r = residual.col(c).norm();
    if (r > options.residual_tolerance) {
      std::ostringstream msg;
      msg << "eigenpair " << c + 1 << " has residual " << r << " (tolerance "
          << options.residual_tolerance << ")";
      throw Error(ErrorKind::ConvergenceFailure, msg.str());
    }
  }
}

}  // namespace

SpectralBasis eigendecompose(const SymmetricOperator& op, Index k, const SpectralOptions& options) {
  const Index n = op.size();
  if (k < 1 || k > n) {
    throw Error(ErrorKind::InvalidArgument, "bandwidth " + std::to_string(k) +
                                                " outside [1, " + std::to_string(n) + "]");
  }
  if (const auto comps = connected_components(op); comps.size() != 1) {
    throw Error(ErrorKind::DisconnectedGraph, "operator has " + describe_components(comps));
  }

  // One extra pair, when available, to detect a degenerate truncation boundary.
  const Index count = std::min(n, k + 1);
  Eigenpairs pairs = n <= options.dense_limit ? dense_path(op, count)
                                              : krylov_path(op, count, options);

  SpectralBasis out;
  const auto kk = static_cast<Eigen::Index>(k);
  if (count > k) {
    const double gap = pairs.values[kk] - pairs.values[kk - 1];
    if (gap <= options.degeneracy_tolerance) {
      std::ostringstream msg;
      msg << "eigenvalue " << pairs.values[kk - 1] << " at the band limit " << k
          << " is degenerate with the next one (gap " << gap
          << "); keeping the first " << k << " vectors in solver order";
      out.warnings.push_back(msg.str());
    }
  }
  out.values = pairs.values.head(kk);
  out.vectors = pairs.vectors.leftCols(kk);
  canonicalize_signs(out.vectors);
  verify(op, {out.values, out.vectors}, options);
  return out;
}

SpectralBasis spectral_basis(const Graph& g, Index k, const SpectralOptions& options) {
  require_connected(g);
  return eigendecompose(normalized_laplacian(g), k, options);
}

Eigen::VectorXd gft_forward(const SpectralBasis& basis, const GraphSignal& signal) {
  if (basis.bandwidth() != basis.num_nodes()) {
    throw Error(ErrorKind::DimensionMismatch,
                "forward transform needs the full basis, have bandwidth " +
                    std::to_string(basis.bandwidth()) + " of " + std::to_string(basis.num_nodes()));
  }
  if (static_cast<Index>(signal.size()) != basis.num_nodes()) {
    throw Error(ErrorKind::DimensionMismatch, "signal length " + std::to_string(signal.size()) +
                                                  " for " + std::to_string(basis.num_nodes()) +
                                                  " nodes");
  }
  return basis.vectors.transpose() * signal;
}

GraphSignal gft_inverse(const SpectralBasis& basis, const Eigen::VectorXd& coefficients) {
  if (static_cast<Index>(coefficients.size()) != basis.bandwidth()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(coefficients.size()) + " coefficients for bandwidth " +
                    std::to_string(basis.bandwidth()));
  }
  return basis.vectors * coefficients;
}

}  // namespace slepnet
