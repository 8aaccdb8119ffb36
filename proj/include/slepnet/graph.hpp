#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace slepnet {

using Index = std::size_t;

struct Edge {
  Index source = 0;
  Index target = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected graph with strictly positive edge weights and no self-loops.
// Edges are stored once with source < target, sorted lexicographically;
// neighbor access is symmetric.
class Graph {
 public:
  Graph() = default;

  Index num_nodes() const noexcept { return num_nodes_; }
  Index num_edges() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  // External identifiers; empty when the graph was built without them.
  const std::vector<std::string>& node_ids() const noexcept { return node_ids_; }
  bool has_node_ids() const noexcept { return !node_ids_.empty(); }
  // Identifier for display: the external id, or the decimal index.
  std::string node_label(Index node) const;

  struct Neighbor {
    Index node;
    double weight;
  };
  std::span<const Neighbor> neighbors(Index node) const;

  // Weight of edge {i, j}, zero when absent.
  double weight(Index i, Index j) const;

  // d_i = sum_j A_ij.
  Eigen::VectorXd degrees() const;

  Eigen::SparseMatrix<double> adjacency() const;

 private:
  friend Graph build_graph(std::span<const Edge>, Index, std::vector<std::string>);

  Index num_nodes_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> node_ids_;
  // CSR neighbor lists, both directions.
  std::vector<Index> offsets_;
  std::vector<Neighbor> adjacent_;
};

// Validates and canonicalizes an edge list. Throws Error with kind
// IndexOutOfRange, NonPositiveWeight, SelfLoop, DuplicateEdge, or
// DuplicateId / InvalidArgument for bad identifiers.
Graph build_graph(std::span<const Edge> edges, Index num_nodes,
                  std::vector<std::string> node_ids = {});

// Real symmetric N x N matrix. Only the values are stored; symmetry is exact
// because assembly writes (i, j) and (j, i) from the same number.
class SymmetricOperator {
 public:
  SymmetricOperator() = default;
  explicit SymmetricOperator(Eigen::SparseMatrix<double> matrix);

  Index size() const noexcept { return static_cast<Index>(matrix_.rows()); }
  const Eigen::SparseMatrix<double>& sparse() const noexcept { return matrix_; }
  Eigen::MatrixXd dense() const;

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd apply(const Eigen::MatrixXd& x) const;

 private:
  Eigen::SparseMatrix<double> matrix_;
};

// L' = D - A.
SymmetricOperator combinatorial_laplacian(const Graph& g);

// L = I - D^{-1/2} A D^{-1/2}. Throws ZeroDegreeNode for isolated nodes.
SymmetricOperator normalized_laplacian(const Graph& g);

// Reachability classes, each sorted ascending, ordered by smallest member.
std::vector<std::vector<Index>> connected_components(const Graph& g);

// Same partition computed from the off-diagonal sparsity of an operator.
std::vector<std::vector<Index>> connected_components(const SymmetricOperator& op);

// Throws DisconnectedGraph listing the components when there is more than one.
void require_connected(const Graph& g);

std::string describe_components(const std::vector<std::vector<Index>>& components,
                                const Graph* labels = nullptr);

}  // namespace slepnet
