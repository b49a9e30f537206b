#pragma once

#include "msd/level_graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace msd {

/// Bookkeeping of an undegeneration source -> target.
struct Undegeneration {
    /// delta[k] is the target level of source level -k.
    std::vector<std::int64_t> delta;
    std::vector<std::size_t> smoothed_horizontal;
    std::vector<std::size_t> contracted_edges;
    /// Source vertex -> target vertex.
    std::vector<std::size_t> vertex_merge;
    /// Source edge -> target edge, empty for contracted edges.
    std::vector<std::optional<std::size_t>> edge_map;
};

struct UndegenerationResult {
    EnhancedLevelGraph graph;
    Undegeneration map;
};

/// Merges levels along an order-preserving surjection delta of L^*(graph)
/// onto {0..-M}; contracts the vertical edges whose ends land on one level.
UndegenerationResult undegenerate_vertical(const EnhancedLevelGraph& graph,
                                           std::span<const std::int64_t> delta);

UndegenerationResult undegenerate_horizontal(const EnhancedLevelGraph& graph,
                                             std::span<const std::size_t> smoothed);

/// Keeps the level passages in `kept` (a subset of {-1..-N}); vertical edges
/// survive iff [level_bottom, level_top) meets `kept`.
UndegenerationResult undegenerate_by_level_subset(const EnhancedLevelGraph& graph,
                                                  std::span<const std::int64_t> kept);

/// The delta of undegenerate_by_level_subset.
std::vector<std::int64_t> level_subset_delta(const EnhancedLevelGraph& graph,
                                             std::span<const std::int64_t> kept);

struct EnumeratedUndegeneration {
    std::vector<std::int64_t> kept_levels;
    std::vector<std::size_t> smoothed_horizontal;
    EnhancedLevelGraph graph;
};

/// All 2^N * 2^H undegenerations, ordered by (level subset, horizontal subset)
/// as bitmasks.
std::vector<EnumeratedUndegeneration> enumerate_undegenerations(const EnhancedLevelGraph& graph);

}  // namespace msd
