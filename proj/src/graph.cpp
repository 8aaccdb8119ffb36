#include "slepnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "slepnet/error.hpp"

namespace slepnet {

Graph build_graph(std::span<const Edge> edges, Index num_nodes,
                  std::vector<std::string> node_ids) {
  if (num_nodes == 0) {
    throw Error(ErrorKind::InvalidArgument, "graph must have at least one node");
  }
  if (!node_ids.empty()) {
    if (node_ids.size() != num_nodes) {
      throw Error(ErrorKind::InvalidArgument,
                  "expected " + std::to_string(num_nodes) + " node ids, got " +
                      std::to_string(node_ids.size()));
    }
    std::unordered_set<std::string> seen;
    for (const auto& id : node_ids) {
      if (!seen.insert(id).second) throw Error(ErrorKind::DuplicateId, "node id '" + id + "'");
    }
  }

  Graph g;
  g.num_nodes_ = num_nodes;
  g.node_ids_ = std::move(node_ids);
  g.edges_.reserve(edges.size());
  for (const auto& e : edges) {
    const std::string where = "edge (" + std::to_string(e.source) + ", " +
                              std::to_string(e.target) + ")";
    if (e.source >= num_nodes || e.target >= num_nodes) {
      throw Error(ErrorKind::IndexOutOfRange,
                  where + " with num_nodes = " + std::to_string(num_nodes));
    }
    if (e.source == e.target) throw Error(ErrorKind::SelfLoop, where);
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw Error(ErrorKind::NonPositiveWeight, where + " has weight " + std::to_string(e.weight));
    }
    g.edges_.push_back({std::min(e.source, e.target), std::max(e.source, e.target), e.weight});
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });
  for (std::size_t k = 1; k < g.edges_.size(); ++k) {
    const auto& prev = g.edges_[k - 1];
    const auto& cur = g.edges_[k];
    if (prev.source == cur.source && prev.target == cur.target) {
      throw Error(ErrorKind::DuplicateEdge, "edge {" + std::to_string(cur.source) + ", " +
                                                std::to_string(cur.target) + "}");
    }
  }

  std::vector<Index> counts(num_nodes + 1, 0);
  for (const auto& e : g.edges_) {
    ++counts[e.source + 1];
    ++counts[e.target + 1];
  }
  for (Index i = 0; i < num_nodes; ++i) counts[i + 1] += counts[i];
  g.offsets_ = counts;
  g.adjacent_.resize(2 * g.edges_.size());
  std::vector<Index> cursor(counts.begin(), counts.end() - 1);
  for (const auto& e : g.edges_) {
    g.adjacent_[cursor[e.source]++] = {e.target, e.weight};
    g.adjacent_[cursor[e.target]++] = {e.source, e.weight};
  }
  for (Index i = 0; i < num_nodes; ++i) {
    std::sort(g.adjacent_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
              g.adjacent_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]),
              [](const Graph::Neighbor& a, const Graph::Neighbor& b) { return a.node < b.node; });
  }
  return g;
}

std::string Graph::node_label(Index node) const {
  return node_ids_.empty() ? std::to_string(node) : node_ids_.at(node);
}

std::span<const Graph::Neighbor> Graph::neighbors(Index node) const {
  if (node >= num_nodes_) {
    throw Error(ErrorKind::IndexOutOfRange, "node " + std::to_string(node));
  }
  return {adjacent_.data() + offsets_[node], offsets_[node + 1] - offsets_[node]};
}

double Graph::weight(Index i, Index j) const {
  const auto nbrs = neighbors(i);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), j,
                                   [](const Neighbor& n, Index v) { return n.node < v; });
  return (it != nbrs.end() && it->node == j) ? it->weight : 0.0;
}

Eigen::VectorXd Graph::degrees() const {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(num_nodes_));
  for (Index i = 0; i < num_nodes_; ++i) {
    double sum = 0.0;
    for (const auto& n : neighbors(i)) sum += n.weight;
    d[static_cast<Eigen::Index>(i)] = sum;
  }
  return d;
}

Eigen::SparseMatrix<double> Graph::adjacency() const {
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * edges_.size());
  for (const auto& e : edges_) {
    const auto i = static_cast<Eigen::Index>(e.source);
    const auto j = static_cast<Eigen::Index>(e.target);
    triplets.emplace_back(i, j, e.weight);
    triplets.emplace_back(j, i, e.weight);
  }
  const auto n = static_cast<Eigen::Index>(num_nodes_);
  Eigen::SparseMatrix<double> a(n, n);
  a.setFromTriplets(triplets.begin(), triplets.end());
  return a;
}

SymmetricOperator::SymmetricOperator(Eigen::SparseMatrix<double> matrix)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "operator must be square");
  }
  matrix_.makeCompressed();
}

Eigen::MatrixXd SymmetricOperator::dense() const { return Eigen::MatrixXd(matrix_); }

Eigen::VectorXd SymmetricOperator::apply(const Eigen::VectorXd& x) const {
  if (x.size() != matrix_.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "operator apply: vector length " +
                                                  std::to_string(x.size()));
  }
  return matrix_ * x;
}

Eigen::MatrixXd SymmetricOperator::apply(const Eigen::MatrixXd& x) const {
  if (x.rows() != matrix_.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "operator apply: block rows " +
                                                  std::to_string(x.rows()));
  }
  return matrix_ * x;
}

namespace {

// Assembles diag(diagonal) - scale_i * A_ij * scale_j; each off-diagonal value
// is computed once and written to both triangles.
SymmetricOperator assemble(const Graph& g, const Eigen::VectorXd& diagonal,
                           const Eigen::VectorXd& scale) {
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * g.num_edges() + g.num_nodes());
  for (Index i = 0; i < g.num_nodes(); ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    triplets.emplace_back(ii, ii, diagonal[ii]);
  }
  for (const auto& e : g.edges()) {
    const auto i = static_cast<Eigen::Index>(e.source);
    const auto j = static_cast<Eigen::Index>(e.target);
    const double v = -(scale[i] * e.weight * scale[j]);
    triplets.emplace_back(i, j, v);
    triplets.emplace_back(j, i, v);
  }
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  Eigen::SparseMatrix<double> m(n, n);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return SymmetricOperator(std::move(m));
}

}  // namespace

SymmetricOperator combinatorial_laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  return assemble(g, g.degrees(), Eigen::VectorXd::Ones(n));
}

SymmetricOperator normalized_laplacian(const Graph& g) {
  const Eigen::VectorXd d = g.degrees();
  Eigen::VectorXd inv_sqrt(d.size());
  Eigen::VectorXd diagonal(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (!(d[i] > 0.0)) {
      throw Error(ErrorKind::ZeroDegreeNode,
                  "node " + g.node_label(static_cast<Index>(i)) + " has no edges");
    }
    inv_sqrt[i] = 1.0 / std::sqrt(d[i]);
    diagonal[i] = 1.0;
  }
  return assemble(g, diagonal, inv_sqrt);
}

namespace {

template <typename ForEachNeighbor>
std::vector<std::vector<Index>> components_by_bfs(Index n, ForEachNeighbor&& for_each_neighbor) {
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Index>> out;
  std::vector<Index> queue;
  for (Index start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for_each_neighbor(queue[head], [&](Index v) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      });
    }
    std::sort(queue.begin(), queue.end());
    out.push_back(queue);
  }
  return out;
}

}  // namespace

std::vector<std::vector<Index>> connected_components(const Graph& g) {
  return components_by_bfs(g.num_nodes(), [&](Index u, auto&& visit) {
    for (const auto& nb : g.neighbors(u)) visit(nb.node);
  });
}

std::vector<std::vector<Index>> connected_components(const SymmetricOperator& op) {
  const auto& m = op.sparse();
  return components_by_bfs(op.size(), [&](Index u, auto&& visit) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(m, static_cast<Eigen::Index>(u)); it; ++it) {
      const auto v = static_cast<Index>(it.row());
      if (v != u && it.value() != 0.0) visit(v);
    }
  });
}

std::string describe_components(const std::vector<std::vector<Index>>& components,
                                const Graph* labels) {
  std::string out = std::to_string(components.size()) + " components:";
  constexpr std::size_t kMaxListed = 20;
  for (std::size_t c = 0; c < components.size(); ++c) {
    out += c == 0 ? " {" : "; {";
    const auto& comp = components[c];
    for (std::size_t k = 0; k < comp.size() && k < kMaxListed; ++k) {
      if (k) out += ",";
      out += labels ? labels->node_label(comp[k]) : std::to_string(comp[k]);
    }
    if (comp.size() > kMaxListed) out += ",... (" + std::to_string(comp.size()) + " nodes)";
    out += "}";
  }
  return out;
}

void require_connected(const Graph& g) {
  const auto comps = connected_components(g);
  if (comps.size() != 1) {
    throw Error(ErrorKind::DisconnectedGraph, "graph has " + describe_components(comps, &g));
  }
}

}  // namespace slepnet
