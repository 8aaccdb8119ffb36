#include "slepnet/slepian.hpp"

#include <algorithm>
#include <cmath>

#include "slepnet/error.hpp"
#include "slepnet/linalg.hpp"

namespace slepnet {

namespace {

constexpr double kZeroClamp = 1e-12;
constexpr double kClusterTolerance = 1e-9;

void require_nodes(Index expected, Index actual, const char* what) {
  if (expected != actual) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": " + std::to_string(actual) +
                                                  " nodes, expected " + std::to_string(expected));
  }
}

}  // namespace

Selection::Selection(Index num_nodes, std::vector<Index> members)
    : num_nodes_(num_nodes), members_(std::move(members)), mask_(num_nodes, false) {
  if (members_.empty()) throw Error(ErrorKind::EmptySelection, "selection has no nodes");
  std::sort(members_.begin(), members_.end());
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (members_[k] >= num_nodes_) {
      throw Error(ErrorKind::IndexOutOfRange, "selected node " + std::to_string(members_[k]) +
                                                  " with num_nodes = " + std::to_string(num_nodes_));
    }
    if (k > 0 && members_[k] == members_[k - 1]) {
      throw Error(ErrorKind::InvalidArgument,
                  "node " + std::to_string(members_[k]) + " selected twice");
    }
    mask_[members_[k]] = true;
  }
}

Selection Selection::all(Index num_nodes) {
  std::vector<Index> m(num_nodes);
  for (Index i = 0; i < num_nodes; ++i) m[i] = i;
  return Selection(num_nodes, std::move(m));
}

Eigen::MatrixXd Selection::restrict_rows(const Eigen::MatrixXd& m) const {
  require_nodes(num_nodes_, static_cast<Index>(m.rows()), "selection");
  Eigen::MatrixXd out(static_cast<Eigen::Index>(members_.size()), m.cols());
  for (std::size_t k = 0; k < members_.size(); ++k) {
    out.row(static_cast<Eigen::Index>(k)) = m.row(static_cast<Eigen::Index>(members_[k]));
  }
  return out;
}

namespace {

// R^T R with both triangles taken from the same computed value.
Eigen::MatrixXd gram(const Eigen::MatrixXd& rows) {
  const auto k = rows.cols();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(k, k);
  out.selfadjointView<Eigen::Lower>().rankUpdate(rows.transpose());
  out.triangularView<Eigen::StrictlyUpper>() = out.transpose();
  return out;
}

}  // namespace

ConcentrationMatrix concentration_matrix(const SpectralBasis& basis, const Selection& sel) {
  require_nodes(basis.num_nodes(), sel.num_nodes(), "concentration matrix");
  return {gram(sel.restrict_rows(basis.vectors)), std::nullopt};
}

ConcentrationMatrix embedded_matrix(const ConcentrationMatrix& c, const Eigen::VectorXd& lambda) {
  const auto k = c.concentration.rows();
  if (lambda.size() != k) {
    throw Error(ErrorKind::DimensionMismatch, std::to_string(lambda.size()) +
                                                  " eigenvalues for bandwidth " + std::to_string(k));
  }
  Eigen::VectorXd root(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    if (lambda[i] < -kZeroClamp || std::isnan(lambda[i])) {
      throw Error(ErrorKind::NegativeEigenvalueInput,
                  "lambda[" + std::to_string(i) + "] = " + std::to_string(lambda[i]));
    }
    // sqrt would turn O(1e-16) noise on the zero eigenvalue into O(1e-8).
    root[i] = std::abs(lambda[i]) <= kZeroClamp ? 0.0 : std::sqrt(lambda[i]);
  }
  Eigen::MatrixXd emb(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    for (Eigen::Index i = 0; i < k; ++i) {
      emb(i, j) = c.concentration(i, j) * (root[i] * root[j]);
    }
  }
  ConcentrationMatrix out = c;
  out.embedded = std::move(emb);
  return out;
}

SlepianBasis slepian_design(const SpectralBasis& basis, const Selection& sel, Design design) {
  const ConcentrationMatrix c = concentration_matrix(basis, sel);
  const bool embedded = design == Design::embedded_distance;
  auto eig = embedded
      ? symmetric_eigen(*embedded_matrix(c, basis.values).embedded, EigenOrder::ascending)
      : symmetric_eigen(c.concentration, EigenOrder::descending);
  // Rounding noise otherwise picks an arbitrary basis inside each cluster.
  if (eig.values.size() > 0) {
    const double scale = std::max(1.0, eig.values.cwiseAbs().maxCoeff());
    canonicalize_degenerate_subspaces(eig.values, eig.vectors, kClusterTolerance * scale);
  }

  SlepianBasis out;
  out.design = design;
  out.coefficients = eig.vectors;
  out.values = eig.values;
  out.vectors = basis.vectors * out.coefficients;
  return out;
}

Eigen::VectorXd cross_eigenvalue(const SlepianBasis& b, const ConcentrationMatrix& c,
                                 Quantity which) {
  if (b.bandwidth() != c.bandwidth()) {
    throw Error(ErrorKind::DimensionMismatch, "Slepian basis of bandwidth " +
                                                  std::to_string(b.bandwidth()) +
                                                  " against a matrix of size " +
                                                  std::to_string(c.bandwidth()));
  }
  const Eigen::MatrixXd* m = &c.concentration;
  if (which == Quantity::embedded_distance) {
    if (!c.embedded) {
      throw Error(ErrorKind::InvalidArgument, "embedded matrix has not been formed");
    }
    m = &*c.embedded;
  }
  const Eigen::MatrixXd mg = *m * b.coefficients;
  return (b.coefficients.array() * mg.array()).colwise().sum().transpose();
}

double shannon_number(Index bandwidth, Index selected, Index num_nodes) {
  if (num_nodes < 1 || selected < 1 || selected > num_nodes || bandwidth < 1 ||
      bandwidth > num_nodes) {
    throw Error(ErrorKind::InvalidArgument,
                "shannon number needs 1 <= N_W, N_S <= N; got N_W=" + std::to_string(bandwidth) +
                    " N_S=" + std::to_string(selected) + " N=" + std::to_string(num_nodes));
  }
  return static_cast<double>(bandwidth) * static_cast<double>(selected) /
         static_cast<double>(num_nodes);
}

double concentration_sum(const SlepianBasis& b, const ConcentrationMatrix& c) {
  return cross_eigenvalue(b, c, Quantity::concentration).sum();
}

double selection_offdiagonal(const SlepianBasis& b, const Selection& sel) {
  require_nodes(b.num_nodes(), sel.num_nodes(), "selection");
  Eigen::MatrixXd k = gram(sel.restrict_rows(b.vectors));
  k.diagonal().setZero();
  return k.size() ? k.cwiseAbs().maxCoeff() : 0.0;
}

std::vector<SweepRow> shannon_sweep(const SpectralBasis& full, const Selection& sel,
                                    std::span<const Index> bandwidths) {
  if (bandwidths.empty()) throw Error(ErrorKind::InvalidArgument, "empty bandwidth list");
  for (std::size_t i = 0; i < bandwidths.size(); ++i) {
    if (bandwidths[i] < 1 || (i > 0 && bandwidths[i] <= bandwidths[i - 1])) {
      throw Error(ErrorKind::InvalidArgument,
                  "bandwidths must be positive and strictly ascending");
    }
  }
  if (bandwidths.back() > full.bandwidth()) {
    throw Error(ErrorKind::InsufficientBandwidth,
                "sweep up to " + std::to_string(bandwidths.back()) + " but the basis holds " +
                    std::to_string(full.bandwidth()) + " eigenpairs");
  }
  require_nodes(full.num_nodes(), sel.num_nodes(), "sweep");

  std::vector<SweepRow> rows;
  rows.reserve(bandwidths.size());
  for (const Index nw : bandwidths) {
    const SpectralBasis basis = full.truncated(nw);
    const ConcentrationMatrix c = concentration_matrix(basis, sel);
    const auto conc = slepian_design(basis, sel, Design::concentration);
    const auto emb = slepian_design(basis, sel, Design::embedded_distance);
    rows.push_back({nw, shannon_number(nw, sel.size(), sel.num_nodes()),
                    concentration_sum(conc, c), concentration_sum(emb, c)});
  }
  return rows;
}

}  // namespace slepnet
