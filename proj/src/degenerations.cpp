#include "msd/degenerations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace msd {

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Contract `contract` (edge flags); vertex v goes to level new_level[v].
// Merged genus is sum of genera plus the first Betti number of the
// contracted fiber.
UndegenerationResult contract(const EnhancedLevelGraph& graph, const std::vector<bool>& contract,
                              const std::vector<std::int64_t>& new_level, Undegeneration map)
{
    const auto n = graph.num_vertices();
    DisjointSets sets(n);
    for (std::size_t e = 0; e < graph.num_edges(); ++e) {
        if (contract[e]) {
            sets.unite(graph.edges()[e].a, graph.edges()[e].b);
        }
    }

    std::map<std::size_t, std::size_t> root_index;
    map.vertex_merge.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        const auto root = sets.find(v);
        auto [it, inserted] = root_index.try_emplace(root, root_index.size());
        map.vertex_merge[v] = it->second;
    }

    const auto m = root_index.size();
    std::vector<Vertex> vertices(m);
    std::vector<std::int64_t> fiber_vertices(m, 0);
    std::vector<std::int64_t> fiber_edges(m, 0);
    for (std::size_t v = 0; v < n; ++v) {
        auto& target = vertices[map.vertex_merge[v]];
        target.genus += graph.vertices()[v].genus;
        target.level = new_level[v];
        ++fiber_vertices[map.vertex_merge[v]];
    }
    std::vector<Edge> edges;
    map.edge_map.assign(graph.num_edges(), std::nullopt);
    map.contracted_edges.clear();
    for (std::size_t e = 0; e < graph.num_edges(); ++e) {
        const auto& edge = graph.edges()[e];
        if (contract[e]) {
            ++fiber_edges[map.vertex_merge[edge.a]];
            map.contracted_edges.push_back(e);
            continue;
        }
        map.edge_map[e] = edges.size();
        edges.push_back({map.vertex_merge[edge.a], map.vertex_merge[edge.b], edge.kappa});
    }
    for (std::size_t t = 0; t < m; ++t) {
        vertices[t].genus += fiber_edges[t] - fiber_vertices[t] + 1;
    }

    std::vector<std::size_t> legs(graph.leg_vertex().size());
    for (std::size_t j = 0; j < legs.size(); ++j) {
        legs[j] = map.vertex_merge[graph.leg_vertex()[j]];
    }
    EnhancedLevelGraph result(graph.mu(), std::move(vertices), std::move(legs), std::move(edges));
    return {std::move(result), std::move(map)};
}

}  // namespace

UndegenerationResult undegenerate_vertical(const EnhancedLevelGraph& graph,
                                           std::span<const std::int64_t> delta)
{
    const auto levels = graph.depth() + 1;
    if (static_cast<std::int64_t>(delta.size()) != levels) {
        throw std::invalid_argument("delta must have one entry per level");
    }
    if (delta[0] != 0) {
        throw std::invalid_argument("delta must send the top level to 0");
    }
    for (std::size_t k = 1; k < delta.size(); ++k) {
        const auto step = delta[k - 1] - delta[k];
        if (step < 0) {
            throw std::invalid_argument("delta is order-decreasing");
        }
        if (step > 1) {
            throw std::invalid_argument("delta is not surjective onto consecutive levels");
        }
    }

    std::vector<bool> flags(graph.num_edges(), false);
    for (std::size_t e = 0; e < graph.num_edges(); ++e) {
        if (graph.is_vertical(e) &&
            delta[static_cast<std::size_t>(-graph.level_top(e))] ==
                delta[static_cast<std::size_t>(-graph.level_bottom(e))]) {
            flags[e] = true;
        }
    }
    std::vector<std::int64_t> new_level(graph.num_vertices());
    for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
        new_level[v] = delta[static_cast<std::size_t>(-graph.level(v))];
    }
    Undegeneration map;
    map.delta.assign(delta.begin(), delta.end());
    return contract(graph, flags, new_level, std::move(map));
}

UndegenerationResult undegenerate_horizontal(const EnhancedLevelGraph& graph,
                                             std::span<const std::size_t> smoothed)
{
    std::vector<bool> flags(graph.num_edges(), false);
    for (auto e : smoothed) {
        if (e >= graph.num_edges()) {
            throw std::invalid_argument("edge " + std::to_string(e) + " does not exist");
        }
        if (!graph.is_horizontal(e)) {
            throw std::invalid_argument("edge " + std::to_string(e) + " is vertical");
        }
        flags[e] = true;
    }
    std::vector<std::int64_t> new_level(graph.num_vertices());
    for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
        new_level[v] = graph.level(v);
    }
    Undegeneration map;
    for (std::int64_t k = 0; k <= graph.depth(); ++k) {
        map.delta.push_back(-k);
    }
    map.smoothed_horizontal.assign(smoothed.begin(), smoothed.end());
    std::sort(map.smoothed_horizontal.begin(), map.smoothed_horizontal.end());
    map.smoothed_horizontal.erase(
        std::unique(map.smoothed_horizontal.begin(), map.smoothed_horizontal.end()),
        map.smoothed_horizontal.end());
    return contract(graph, flags, new_level, std::move(map));
}

std::vector<std::int64_t> level_subset_delta(const EnhancedLevelGraph& graph,
                                             std::span<const std::int64_t> kept)
{
    std::set<std::int64_t> breaks;
    for (auto j : kept) {
        if (j >= 0 || j < -graph.depth()) {
            throw std::invalid_argument("level " + std::to_string(j) +
                                        " is not a level below zero");
        }
        breaks.insert(j);
    }
    std::vector<std::int64_t> delta;
    for (std::int64_t i = 0; i >= -graph.depth(); --i) {
        std::int64_t count = 0;
        for (auto j : breaks) {
            if (j >= i) {
                ++count;
            }
        }
        delta.push_back(-count);
    }
    return delta;
}

UndegenerationResult undegenerate_by_level_subset(const EnhancedLevelGraph& graph,
                                                  std::span<const std::int64_t> kept)
{
    const auto delta = level_subset_delta(graph, kept);
    return undegenerate_vertical(graph, delta);
}

std::vector<EnumeratedUndegeneration> enumerate_undegenerations(const EnhancedLevelGraph& graph)
{
    const auto depth = static_cast<std::size_t>(graph.depth());
    const auto horizontal = graph.horizontal_edges();
    if (depth + horizontal.size() >= 63) {
        throw std::length_error("too many undegenerations to enumerate");
    }
    std::vector<EnumeratedUndegeneration> out;
    for (std::uint64_t jmask = 0; jmask < (std::uint64_t{1} << depth); ++jmask) {
        std::vector<std::int64_t> kept;
        for (std::size_t k = 0; k < depth; ++k) {
            if (jmask & (std::uint64_t{1} << k)) {
                kept.push_back(-static_cast<std::int64_t>(k) - 1);
            }
        }
        auto vertical = undegenerate_by_level_subset(graph, kept);
        for (std::uint64_t dmask = 0; dmask < (std::uint64_t{1} << horizontal.size()); ++dmask) {
            std::vector<std::size_t> smoothed;
            std::vector<std::size_t> image;
            for (std::size_t k = 0; k < horizontal.size(); ++k) {
                if (dmask & (std::uint64_t{1} << k)) {
                    smoothed.push_back(horizontal[k]);
                    image.push_back(*vertical.map.edge_map[horizontal[k]]);
                }
            }
            auto result = undegenerate_horizontal(vertical.graph, image);
            out.push_back({kept, std::move(smoothed), std::move(result.graph)});
        }
    }
    return out;
}

}  // namespace msd
