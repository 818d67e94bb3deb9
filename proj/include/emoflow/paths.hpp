#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "emoflow/graph.hpp"

namespace emoflow {

/// Average shortest-path length among `nodes` within their induced subgraph.
///
/// Each connected component of the induced subgraph with at least two nodes
/// contributes the mean distance over its unordered pairs; the result is the
/// unweighted mean over those components. Duplicate ids are ignored. Throws
/// UndefinedError when fewer than two distinct nodes are given or every
/// component is a singleton.
double virality(const UndirectedView& g, std::span<const NodeId> nodes);

/// Largest finite shortest-path distance within the induced subgraph of
/// `nodes` (0 for a single node or an edgeless set).
std::size_t induced_diameter(const UndirectedView& g, std::span<const NodeId> nodes);

/// Hop distances from `source` over the whole view; unreachable nodes get -1.
std::vector<int> bfs_distances(const UndirectedView& g, NodeId source);

}  // namespace emoflow
