#pragma once

#include <span>

#include "isospec/graph.hpp"

namespace isospec {

/// K_n, n >= 2.
SimpleGraph complete_graph(int n);
/// K_{p,q}: side one is 0..p-1, side two is p..p+q-1.
SimpleGraph complete_bipartite_graph(int p, int q);
/// Attaches one pendant edge to each listed vertex; the new leaves get
/// indices order, order+1, ... in the listed order.
SimpleGraph with_pendants(const SimpleGraph& g, std::span<const Vertex> anchors);

}  // namespace isospec
