#include "slepnet/linalg.hpp"

#include <cmath>

#include "slepnet/error.hpp"

namespace slepnet {

namespace {

constexpr double kTieTolerance = 1e-9;

Eigen::Index first_near_max(const Eigen::VectorXd& magnitudes) {
  const double peak = magnitudes.maxCoeff();
  for (Eigen::Index i = 0; i < magnitudes.size(); ++i) {
    if (magnitudes[i] >= peak * (1.0 - kTieTolerance)) return i;
  }
  return 0;
}

}  // namespace

void canonicalize_signs(Eigen::MatrixXd& columns) {
  if (columns.rows() == 0) return;
  for (Eigen::Index c = 0; c < columns.cols(); ++c) {
    const Eigen::VectorXd mag = columns.col(c).cwiseAbs();
    if (columns(first_near_max(mag), c) < 0.0) columns.col(c) *= -1.0;
  }
}

SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& matrix, EigenOrder order) {
  if (matrix.rows() != matrix.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "eigendecomposition of a non-square matrix");
  }
  SymmetricEigen out;
  if (matrix.rows() == 0) return out;

  // Descending order is obtained from the ascending decomposition of -A so
  // that ties keep the solver's natural (index) order in both cases.
  const double sign = order == EigenOrder::ascending ? 1.0 : -1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sign * matrix, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "dense symmetric eigensolver did not converge");
  }
  out.values = sign * solver.eigenvalues();
  out.vectors = solver.eigenvectors();
  canonicalize_signs(out.vectors);
  return out;
}

void canonicalize_degenerate_subspaces(const Eigen::VectorXd& values, Eigen::MatrixXd& vectors,
                                       double tolerance) {
  const Eigen::Index count = values.size();
  Eigen::Index begin = 0;
  while (begin < count) {
    Eigen::Index end = begin + 1;
    while (end < count && std::abs(values[end] - values[end - 1]) <= tolerance) ++end;
    const Eigen::Index width = end - begin;
    if (width > 1) {
      const Eigen::MatrixXd block = vectors.middleCols(begin, width);
      // Columns of the orthogonal projector onto the cluster subspace.
      Eigen::MatrixXd residual = block * block.transpose();
      for (Eigen::Index k = 0; k < width; ++k) {
        const Eigen::VectorXd norms = residual.colwise().norm().transpose();
        const Eigen::Index pick = first_near_max(norms);
        const Eigen::VectorXd q = residual.col(pick) / norms[pick];
        vectors.col(begin + k) = q;
        residual -= q * (q.transpose() * residual);
      }
    }
    begin = end;
  }
  canonicalize_signs(vectors);
}

}  // namespace slepnet
