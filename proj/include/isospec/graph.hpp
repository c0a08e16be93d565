#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace isospec {

using Vertex = int;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Ascending vertex degrees; equal graphs up to isomorphism share it.
struct DegreeList {
  std::vector<int> degrees;

  friend bool operator==(const DegreeList&, const DegreeList&) = default;
};

/// Finite simple unoriented graph on the dense vertex set 0..order-1.
///
/// Instances are validated on construction: no loops, no repeated edges and
/// every vertex has degree at least one (the standard Laplacian divides by
/// the degree). Immutable afterwards.
class SimpleGraph {
 public:
  /// Throws Error with kind VertexOutOfRange, LoopEdge, DuplicateEdge or
  /// IsolatedVertex.
  static SimpleGraph build(int order, std::span<const Edge> edges);

  int order() const noexcept { return order_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Edges in ascending lexicographic order.
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool adjacent(Vertex a, Vertex b) const;

  /// Labelled equality (same order, same edge set).
  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  SimpleGraph() = default;

  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

inline SimpleGraph build(int order, std::span<const Edge> edges) {
  return SimpleGraph::build(order, edges);
}

DegreeList degree_list(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);

/// Relabels vertex v as perm[v]; perm must be a permutation of 0..order-1.
SimpleGraph permute_vertices(const SimpleGraph& g, std::span<const Vertex> perm);

/// Equivalence relation on 0..order-1 given by its classes.
///
/// Blocks are normalised: each block ascending, blocks ordered by their
/// smallest member. The index of a block in blocks() is the vertex it
/// becomes in the quotient graph.
class VertexMerge {
 public:
  /// Blocks must cover every vertex exactly once (InvalidMerge otherwise).
  static VertexMerge from_blocks(int order, std::vector<std::vector<Vertex>> blocks);
  /// Only the non-trivial groups are listed; unlisted vertices stay single.
  static VertexMerge from_groups(int order, std::vector<std::vector<Vertex>> groups);
  static VertexMerge identity(int order);

  int order() const noexcept { return order_; }
  std::span<const std::vector<Vertex>> blocks() const noexcept { return blocks_; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  int block_of(Vertex v) const { return block_of_.at(v); }

 private:
  VertexMerge() = default;

  int order_ = 0;
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<int> block_of_;
};

/// Number of vertices removed by the merge: order - block count.
int shrinking_number(const VertexMerge& m) noexcept;

/// Quotient graph G/~. Throws AdjacentMerge when a block contains an edge
/// and InvalidMerge when the merge is over a different vertex count.
SimpleGraph contract(const SimpleGraph& g, const VertexMerge& m);

/// True when G/~ has as many edges as G, i.e. no two edges become parallel
/// and get collapsed. Only such merges carry the bracketing G <= G/~ <=[t] G.
bool keeps_every_edge(const SimpleGraph& g, const VertexMerge& m);

/// Replaces every edge {u,v} by a path u-w-v. New vertices get indices
/// order, order+1, ... following the ascending edge order.
SimpleGraph subdivide_all(const SimpleGraph& g);

inline constexpr int kDefaultIsomorphismCap = 12;

/// Exhaustive isomorphism test with degree pruning. Throws TooLarge when
/// either graph has more than cap vertices.
bool are_isomorphic_small(const SimpleGraph& a, const SimpleGraph& b,
                          int cap = kDefaultIsomorphismCap);

}  // namespace isospec
