#pragma once

#include <Eigen/Dense>

namespace slepnet {

enum class EigenOrder { ascending, descending };

struct SymmetricEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // columns, same order as values
};

// Flips each column so that its entry of largest magnitude is positive.
// Entries within a relative 1e-9 of the maximum count as tied; the lowest
// index among them decides.
void canonicalize_signs(Eigen::MatrixXd& columns);

// Dense symmetric eigendecomposition (Householder tridiagonalization followed
// by implicit symmetric QR), ordered as requested, sign-canonical. Equal eigenvalues
// keep the solver's order. Only the lower triangle of `matrix` is read.
SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& matrix, EigenOrder order);

// Replaces the basis of every cluster of consecutive eigenvalues closer than
// `tolerance` by a canonical one: pivoted Gram-Schmidt of the cluster's
// projector columns, lowest coordinate index first. The result depends only
// on the invariant subspace, not on how the solver rotated it.
void canonicalize_degenerate_subspaces(const Eigen::VectorXd& values, Eigen::MatrixXd& vectors,
                                       double tolerance);

}  // namespace slepnet
