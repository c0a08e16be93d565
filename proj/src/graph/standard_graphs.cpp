#include "isospec/standard_graphs.hpp"

#include <string>
#include <vector>

#include "isospec/error.hpp"

namespace isospec {

SimpleGraph complete_graph(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidRange, "K_n needs n >= 2, got " + std::to_string(n));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return SimpleGraph::build(n, edges);
}

SimpleGraph complete_bipartite_graph(int p, int q) {
  if (p < 1 || q < 1) {
    throw Error(ErrorKind::InvalidRange, "K_{p,q} needs p,q >= 1, got " + std::to_string(p) + "," + std::to_string(q));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p) * q);
  for (Vertex u = 0; u < p; ++u) {
    for (Vertex v = 0; v < q; ++v) edges.push_back({u, p + v});
  }
  return SimpleGraph::build(p + q, edges);
}

SimpleGraph with_pendants(const SimpleGraph& g, std::span<const Vertex> anchors) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  Vertex next = g.order();
  for (Vertex a : anchors) edges.push_back(Edge::of(a, next++));
  return SimpleGraph::build(next, edges);
}

}  // namespace isospec
