#pragma once

// Graph generators and small named graphs shared by the test suites.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "jacobi_oracle.hpp"
#include "slepnet/graph.hpp"

namespace testing_support {

using slepnet::Edge;
using slepnet::Graph;
using slepnet::Index;

// Uniform draws straight from the engine so values are platform-independent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  Index below(Index n) { return static_cast<Index>(uniform() * static_cast<double>(n)); }

 private:
  std::mt19937_64 engine_;
};

// Random spanning tree plus extra edges with probability `density`; weights
// uniform in [0.2, 2].
inline Graph random_connected_graph(Rng& rng, Index n, double density = 0.15) {
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
  for (Index v = 1; v < n; ++v) {
    const Index u = rng.below(v);
    edges.push_back({u, v, rng.uniform(0.2, 2.0)});
    has[u][v] = has[v][u] = true;
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (!has[i][j] && rng.uniform() < density) edges.push_back({i, j, rng.uniform(0.2, 2.0)});
    }
  }
  return slepnet::build_graph(edges, n);
}

// Random nonempty subset of [0, n).
inline std::vector<Index> random_subset(Rng& rng, Index n) {
  std::vector<Index> out;
  const double p = rng.uniform(0.1, 0.9);
  for (Index i = 0; i < n; ++i) {
    if (rng.uniform() < p) out.push_back(i);
  }
  if (out.empty()) out.push_back(rng.below(n));
  return out;
}

inline Graph path3() { return slepnet::build_graph(std::vector<Edge>{{0, 1, 1.0}, {1, 2, 1.0}}, 3); }

inline Graph triangle() {
  return slepnet::build_graph(std::vector<Edge>{{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}, 3);
}

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Every fixture graph with N <= 8.
inline std::vector<NamedGraph> small_graphs() {
  using slepnet::build_graph;
  std::vector<NamedGraph> out;
  out.push_back({"P3", path3()});
  out.push_back({"K3", triangle()});
  out.push_back({"P4", build_graph(std::vector<Edge>{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}, 4)});
  out.push_back({"star5", build_graph(std::vector<Edge>{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}}, 5)});
  {
    std::vector<Edge> c6;
    for (Index i = 0; i < 6; ++i) c6.push_back({i, (i + 1) % 6, 1.0});
    out.push_back({"C6", build_graph(c6, 6)});
  }
  out.push_back({"house5", build_graph(std::vector<Edge>{{0, 1, 2.0}, {1, 2, 0.5}, {2, 3, 1.5},
                                                          {3, 0, 1.0}, {0, 4, 3.0}, {1, 4, 0.7}},
                                       5)});
  {
    std::vector<Edge> cube;
    for (Index i = 0; i < 8; ++i)
      for (Index b = 1; b < 8; b <<= 1)
        if ((i ^ b) > i) cube.push_back({i, i ^ b, 1.0});
    out.push_back({"Q3", build_graph(cube, 8)});
  }
  Rng rng(77);
  out.push_back({"random7", random_connected_graph(rng, 7, 0.3)});
  out.push_back({"random8", random_connected_graph(rng, 8, 0.3)});
  return out;
}

inline oracle::Matrix dense_adjacency(const Graph& g) {
  oracle::Matrix a(g.num_nodes(), std::vector<double>(g.num_nodes(), 0.0));
  for (const auto& e : g.edges()) a[e.source][e.target] = a[e.target][e.source] = e.weight;
  return a;
}

}  // namespace testing_support
