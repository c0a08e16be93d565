#include "isospec/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "isospec/error.hpp"

namespace isospec {

namespace {

std::string edge_text(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace

SimpleGraph SimpleGraph::build(int order, std::span<const Edge> edges) {
  if (order < 1) {
    throw Error(ErrorKind::InvalidRange, "graph order must be positive, got " + std::to_string(order));
  }
  SimpleGraph g;
  g.order_ = order;
  g.edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.u < 0 || raw.v < 0 || raw.u >= order || raw.v >= order) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge " + edge_text(raw) + " outside 0.." + std::to_string(order - 1));
    }
    if (raw.u == raw.v) throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(raw.u));
    g.edges_.push_back(Edge::of(raw.u, raw.v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end()) {
    throw Error(ErrorKind::DuplicateEdge, "edge " + edge_text(*dup) + " listed twice");
  }
  g.adjacency_.assign(order, {});
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (Vertex v = 0; v < order; ++v) {
    auto& nb = g.adjacency_[v];
    if (nb.empty()) throw Error(ErrorKind::IsolatedVertex, "vertex " + std::to_string(v) + " has degree 0");
    std::sort(nb.begin(), nb.end());
  }
  return g;
}

bool SimpleGraph::adjacent(Vertex a, Vertex b) const {
  const auto& nb = adjacency_.at(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

DegreeList degree_list(const SimpleGraph& g) {
  DegreeList out;
  out.degrees.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out.degrees.push_back(g.degree(v));
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

bool is_connected(const SimpleGraph& g) {
  std::vector<char> seen(g.order(), 0);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex u : g.neighbours(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        frontier.push(u);
      }
    }
  }
  return reached == g.order();
}

bool is_bipartite(const SimpleGraph& g) {
  std::vector<int> colour(g.order(), -1);
  for (Vertex start = 0; start < g.order(); ++start) {
    if (colour[start] >= 0) continue;
    colour[start] = 0;
    std::queue<Vertex> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      Vertex v = frontier.front();
      frontier.pop();
      for (Vertex u : g.neighbours(v)) {
        if (colour[u] < 0) {
          colour[u] = 1 - colour[v];
          frontier.push(u);
        } else if (colour[u] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

SimpleGraph permute_vertices(const SimpleGraph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw Error(ErrorKind::LengthMismatch, "permutation length differs from graph order");
  }
  std::vector<char> hit(g.order(), 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= g.order() || hit[p]) throw Error(ErrorKind::InvalidRange, "not a permutation");
    hit[p] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back(Edge::of(perm[e.u], perm[e.v]));
  return SimpleGraph::build(g.order(), edges);
}

VertexMerge VertexMerge::from_blocks(int order, std::vector<std::vector<Vertex>> blocks) {
  VertexMerge m;
  m.order_ = order;
  m.block_of_.assign(order, -1);
  for (auto& block : blocks) {
    if (block.empty()) throw Error(ErrorKind::InvalidMerge, "empty block");
    std::sort(block.begin(), block.end());
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (Vertex v : blocks[i]) {
      if (v < 0 || v >= order) {
        throw Error(ErrorKind::InvalidMerge, "vertex " + std::to_string(v) + " outside the graph");
      }
      if (m.block_of_[v] >= 0) {
        throw Error(ErrorKind::InvalidMerge, "vertex " + std::to_string(v) + " in two blocks");
      }
      m.block_of_[v] = static_cast<int>(i);
    }
  }
  if (auto missing = std::find(m.block_of_.begin(), m.block_of_.end(), -1); missing != m.block_of_.end()) {
    throw Error(ErrorKind::InvalidMerge,
                "vertex " + std::to_string(missing - m.block_of_.begin()) + " not covered by any block");
  }
  m.blocks_ = std::move(blocks);
  return m;
}

VertexMerge VertexMerge::from_groups(int order, std::vector<std::vector<Vertex>> groups) {
  std::vector<char> listed(std::max(order, 0), 0);
  for (const auto& group : groups) {
    for (Vertex v : group) {
      if (v >= 0 && v < order) listed[v] = 1;
    }
  }
  for (Vertex v = 0; v < order; ++v) {
    if (!listed[v]) groups.push_back({v});
  }
  return from_blocks(order, std::move(groups));
}

VertexMerge VertexMerge::identity(int order) { return from_groups(order, {}); }

int shrinking_number(const VertexMerge& m) noexcept { return m.order() - m.block_count(); }

SimpleGraph contract(const SimpleGraph& g, const VertexMerge& m) {
  if (m.order() != g.order()) {
    throw Error(ErrorKind::InvalidMerge, "merge is over " + std::to_string(m.order()) +
                                             " vertices, graph has " + std::to_string(g.order()));
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    int a = m.block_of(e.u);
    int b = m.block_of(e.v);
    if (a == b) {
      throw Error(ErrorKind::AdjacentMerge,
                  "adjacent vertices " + std::to_string(e.u) + " and " + std::to_string(e.v) + " in one block");
    }
    edges.push_back(Edge::of(a, b));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return SimpleGraph::build(m.block_count(), edges);
}

bool keeps_every_edge(const SimpleGraph& g, const VertexMerge& m) {
  return contract(g, m).edge_count() == g.edge_count();
}

SimpleGraph subdivide_all(const SimpleGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(2 * g.edge_count());
  Vertex next = g.order();
  for (const Edge& e : g.edges()) {
    edges.push_back(Edge::of(e.u, next));
    edges.push_back(Edge::of(next, e.v));
    ++next;
  }
  return SimpleGraph::build(next, edges);
}

}  // namespace isospec
