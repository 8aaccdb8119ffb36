#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "slepnet/graph.hpp"
#include "slepnet/spectral.hpp"

namespace slepnet {

// Node subset S in which energy concentration is measured. Members are kept
// sorted; the N x N diagonal selection matrix is never formed.
class Selection {
 public:
  // Throws EmptySelection, IndexOutOfRange, or InvalidArgument on duplicates.
  Selection(Index num_nodes, std::vector<Index> members);

  static Selection all(Index num_nodes);

  Index num_nodes() const noexcept { return num_nodes_; }
  Index size() const noexcept { return members_.size(); }
  const std::vector<Index>& members() const noexcept { return members_; }
  bool contains(Index node) const { return mask_.at(node); }
  double fraction() const noexcept {
    return static_cast<double>(members_.size()) / static_cast<double>(num_nodes_);
  }

  // Rows of `m` that belong to the selection.
  Eigen::MatrixXd restrict_rows(const Eigen::MatrixXd& m) const;

 private:
  Index num_nodes_;
  std::vector<Index> members_;
  std::vector<bool> mask_;
};

enum class Design { concentration, embedded_distance };

// C = U_W^T S U_W and, once embedded_matrix() has been applied,
// C_emb = Lambda_W^{1/2} C Lambda_W^{1/2}.
struct ConcentrationMatrix {
  Eigen::MatrixXd concentration;
  std::optional<Eigen::MatrixXd> embedded;

  Index bandwidth() const noexcept { return static_cast<Index>(concentration.rows()); }
};

struct SlepianBasis {
  Design design = Design::concentration;
  Eigen::MatrixXd vectors;       // G, N x N_W
  Eigen::MatrixXd coefficients;  // G_hat, N_W x N_W
  // mu (descending) for the concentration design, xi (ascending) for the
  // embedded-distance design.
  Eigen::VectorXd values;

  Index num_nodes() const noexcept { return static_cast<Index>(vectors.rows()); }
  Index bandwidth() const noexcept { return static_cast<Index>(vectors.cols()); }
};

ConcentrationMatrix concentration_matrix(const SpectralBasis& basis, const Selection& sel);

// Lambda values with magnitude up to 1e-12 are treated as zero; anything more negative
// throws NegativeEigenvalueInput.
ConcentrationMatrix embedded_matrix(const ConcentrationMatrix& c, const Eigen::VectorXd& lambda);

SlepianBasis slepian_design(const SpectralBasis& basis, const Selection& sel, Design design);

enum class Quantity { concentration, embedded_distance };

// g_hat_k^T C g_hat_k (mu) or g_hat_k^T C_emb g_hat_k (xi) for every vector.
Eigen::VectorXd cross_eigenvalue(const SlepianBasis& b, const ConcentrationMatrix& c,
                                 Quantity which);

// Graph-bandwidth product N_W * N_S / N.
double shannon_number(Index bandwidth, Index selected, Index num_nodes);

// Sum of recovered concentrations over the basis.
double concentration_sum(const SlepianBasis& b, const ConcentrationMatrix& c);

// Largest off-diagonal magnitude of G^T S G. Zero up to rounding for the
// concentration design; reported, not enforced, for the embedded design.
double selection_offdiagonal(const SlepianBasis& b, const Selection& sel);

struct SweepRow {
  Index bandwidth;
  double shannon;
  double sum_mu_concentration;
  double sum_mu_embedded;
};

// One row per bandwidth, each computed from the leading columns of `full`.
// Bandwidths must be nonempty, strictly ascending and within full's bandwidth.
std::vector<SweepRow> shannon_sweep(const SpectralBasis& full, const Selection& sel,
                                    std::span<const Index> bandwidths);

}  // namespace slepnet
