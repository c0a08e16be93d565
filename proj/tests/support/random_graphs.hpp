#pragma once

#include <optional>
#include <random>

#include "isospec/graph.hpp"

namespace testgen {

/// G(n, p) conditioned on being connected (resampled until it is).
isospec::SimpleGraph random_connected_graph(std::mt19937_64& rng, int n, double p);

/// A merge with at least one block of size two or more whose quotient keeps
/// every edge of g. Empty when no two vertices can be merged that way.
std::optional<isospec::VertexMerge> random_valid_merge(std::mt19937_64& rng, const isospec::SimpleGraph& g);

}  // namespace testgen
