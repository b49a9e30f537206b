#include "msd/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace msd {

namespace {

constexpr std::uint64_t kMaxCanonicalPermutations = 1'000'000;

using EdgeCode = std::tuple<std::size_t, std::size_t, std::int64_t>;

struct VertexLabel {
    std::int64_t depth;
    std::int64_t genus;
    std::vector<std::size_t> legs;
    std::string neighbourhood;

    auto base() const { return std::tie(depth, genus, legs); }
    bool operator<(const VertexLabel& o) const
    {
        return std::tie(depth, genus, legs, neighbourhood) <
               std::tie(o.depth, o.genus, o.legs, o.neighbourhood);
    }
    bool operator==(const VertexLabel& o) const
    {
        return std::tie(depth, genus, legs, neighbourhood) ==
               std::tie(o.depth, o.genus, o.legs, o.neighbourhood);
    }
};

std::int64_t edge_weight(const EnhancedLevelGraph& graph, std::size_t e)
{
    return graph.edges()[e].kappa.value_or(0);
}

std::vector<VertexLabel> vertex_labels(const EnhancedLevelGraph& graph)
{
    const auto n = graph.num_vertices();
    std::vector<VertexLabel> labels(n);
    for (std::size_t v = 0; v < n; ++v) {
        labels[v] = {-graph.level(v), graph.vertices()[v].genus, graph.legs_at(v), {}};
    }
    // One refinement round: what each vertex sees across its edges.
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::string> seen;
        for (std::size_t e = 0; e < graph.num_edges(); ++e) {
            const auto& edge = graph.edges()[e];
            if (edge.a != v && edge.b != v) {
                continue;
            }
            const auto other = edge.a == v ? edge.b : edge.a;
            std::ostringstream os;
            os << (edge.is_loop() ? "L" : "E") << edge_weight(graph, e) << "/"
               << labels[other].depth << "/" << labels[other].genus << "/";
            for (auto leg : labels[other].legs) {
                os << leg << ",";
            }
            seen.push_back(os.str());
        }
        std::sort(seen.begin(), seen.end());
        for (const auto& s : seen) {
            labels[v].neighbourhood += s + ";";
        }
    }
    return labels;
}

}  // namespace

CanonicalForm canonical_form(const EnhancedLevelGraph& graph)
{
    const auto n = graph.num_vertices();
    const auto labels = vertex_labels(graph);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return labels[a] < labels[b]; });

    // Runs of indistinguishable vertices; only these get permuted.
    std::vector<std::pair<std::size_t, std::size_t>> classes;
    std::uint64_t total = 1;
    for (std::size_t start = 0; start < n;) {
        std::size_t end = start + 1;
        while (end < n && labels[order[end]] == labels[order[start]]) {
            ++end;
        }
        if (end - start > 1) {
            classes.emplace_back(start, end);
            for (std::size_t k = 2; k <= end - start; ++k) {
                total *= k;
                if (total > kMaxCanonicalPermutations) {
                    throw std::length_error("too many symmetric vertices to canonicalize");
                }
            }
        }
        start = end;
    }

    std::vector<EdgeCode> best;
    std::vector<std::size_t> best_order;
    std::vector<std::size_t> position(n);
    auto evaluate = [&]() {
        for (std::size_t k = 0; k < n; ++k) {
            position[order[k]] = k;
        }
        std::vector<EdgeCode> codes;
        for (std::size_t e = 0; e < graph.num_edges(); ++e) {
            const auto& edge = graph.edges()[e];
            auto a = position[edge.a];
            auto b = position[edge.b];
            if (a > b) {
                std::swap(a, b);
            }
            codes.emplace_back(a, b, edge_weight(graph, e));
        }
        std::sort(codes.begin(), codes.end());
        if (best_order.empty() || codes < best) {
            best = std::move(codes);
            best_order = order;
        }
    };

    std::function<void(std::size_t)> permute = [&](std::size_t c) {
        if (c == classes.size()) {
            evaluate();
            return;
        }
        auto first = order.begin() + static_cast<std::ptrdiff_t>(classes[c].first);
        auto last = order.begin() + static_cast<std::ptrdiff_t>(classes[c].second);
        std::sort(first, last);
        do {
            permute(c + 1);
        } while (std::next_permutation(first, last));
    };
    permute(0);

    std::vector<std::size_t> new_index(n);
    std::vector<Vertex> vertices;
    for (std::size_t k = 0; k < n; ++k) {
        new_index[best_order[k]] = k;
        vertices.push_back(graph.vertices()[best_order[k]]);
    }
    std::vector<Edge> edges;
    for (const auto& [a, b, w] : best) {
        edges.push_back({a, b, w > 0 ? std::optional<std::int64_t>(w) : std::nullopt});
    }
    std::vector<std::size_t> legs;
    for (auto v : graph.leg_vertex()) {
        legs.push_back(new_index[v]);
    }
    EnhancedLevelGraph canonical(graph.mu(), std::move(vertices), std::move(legs), std::move(edges));

    std::ostringstream key;
    key << "g" << graph.genus() << "|mu";
    for (auto m : graph.mu().m) {
        key << ":" << m;
    }
    key << "|v";
    for (std::size_t k = 0; k < n; ++k) {
        key << ":" << canonical.level(k) << "/" << canonical.vertices()[k].genus;
        for (auto leg : canonical.legs_at(k)) {
            key << "/" << leg + 1;
        }
    }
    key << "|e";
    for (const auto& [a, b, w] : best) {
        key << ":" << a << "-" << b << "/" << w;
    }
    return {std::move(canonical), key.str()};
}

std::int64_t kappa_bound(const SignatureMu& mu)
{
    std::int64_t smallest = 0;
    std::int64_t positive = 0;
    for (auto m : mu.m) {
        smallest = std::min(smallest, m);
        if (m > 0) {
            positive += m;
        }
    }
    return 2 - 2 * smallest + positive + 2 * mu.genus;
}

std::vector<EnhancedLevelGraph> enumerate_enhancements(const LevelSkeleton& skeleton)
{
    const auto n = skeleton.num_vertices();
    const auto vertical = skeleton.vertical_edges();
    const auto bound = kappa_bound(skeleton.mu());

    // sum_{e from above} kappa_e - sum_{e from below} kappa_e must hit target[v]
    // (edges arriving from above end at v, edges leaving downwards start at v).
    std::vector<std::int64_t> target(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::int64_t value = 2 * skeleton.vertices()[v].genus - 2;
        for (auto leg : skeleton.legs_at(v)) {
            value -= skeleton.mu().m[leg];
        }
        target[v] = value + static_cast<std::int64_t>(skeleton.valence(v));
    }
    // Remaining edge counts per vertex, split by role.
    std::vector<std::int64_t> up_left(n, 0), down_left(n, 0);
    for (auto e : vertical) {
        ++up_left[skeleton.top(e)];
        ++down_left[skeleton.bottom(e)];
    }

    std::vector<std::int64_t> current(n, 0);
    std::vector<std::int64_t> kappa(vertical.size(), 0);
    std::vector<EnhancedLevelGraph> out;

    auto feasible = [&](std::size_t v) {
        const auto need = target[v] - current[v];
        const auto lo = up_left[v] * 1 - down_left[v] * bound;
        const auto hi = up_left[v] * bound - down_left[v] * 1;
        return lo <= need && need <= hi;
    };

    std::function<void(std::size_t)> search = [&](std::size_t k) {
        if (k == vertical.size()) {
            for (std::size_t v = 0; v < n; ++v) {
                if (current[v] != target[v]) {
                    return;
                }
            }
            auto edges = skeleton.edges();
            for (std::size_t r = 0; r < vertical.size(); ++r) {
                edges[vertical[r]].kappa = kappa[r];
            }
            out.emplace_back(skeleton.mu(), skeleton.vertices(), skeleton.leg_vertex(),
                             std::move(edges));
            return;
        }
        const auto e = vertical[k];
        const auto t = skeleton.top(e);
        const auto b = skeleton.bottom(e);
        --up_left[t];
        --down_left[b];
        for (std::int64_t value = 1; value <= bound; ++value) {
            current[t] += value;
            current[b] -= value;
            if (feasible(t) && feasible(b)) {
                kappa[k] = value;
                search(k + 1);
            }
            current[t] -= value;
            current[b] += value;
        }
        ++up_left[t];
        ++down_left[b];
    };

    // Horizontal edges are fixed; all vertices must already be satisfiable.
    for (std::size_t v = 0; v < n; ++v) {
        if (!feasible(v)) {
            return out;
        }
    }
    search(0);
    return out;
}

namespace {

struct SearchState {
    const SignatureMu& mu;
    const EnumerationOptions& options;
    std::map<std::string, CanonicalForm> found;
};

// Vertex types (depth, genus) as a sorted list; every depth 0..N occurs.
void for_each_vertex_types(std::size_t count, std::int64_t depth, std::int64_t genus_budget,
                           const std::function<void(const std::vector<std::pair<std::int64_t, std::int64_t>>&)>& visit)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> types;
    std::function<void(std::int64_t, std::int64_t, std::int64_t)> rec =
        [&](std::int64_t min_depth, std::int64_t min_genus, std::int64_t budget) {
            if (types.size() == count) {
                std::vector<bool> hit(static_cast<std::size_t>(depth + 1), false);
                for (const auto& t : types) {
                    hit[static_cast<std::size_t>(t.first)] = true;
                }
                if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
                    visit(types);
                }
                return;
            }
            for (std::int64_t d = min_depth; d <= depth; ++d) {
                for (std::int64_t g = d == min_depth ? min_genus : 0; g <= budget; ++g) {
                    types.emplace_back(d, g);
                    rec(d, g, budget - g);
                    types.pop_back();
                }
            }
        };
    rec(0, 0, genus_budget);
}

void enumerate_with_types(SearchState& state,
                          const std::vector<std::pair<std::int64_t, std::int64_t>>& types,
                          std::int64_t depth)
{
    const auto& mu = state.mu;
    const auto v_count = types.size();
    std::int64_t genus_sum = 0;
    std::vector<std::int64_t> genera;
    for (const auto& t : types) {
        genus_sum += t.second;
        genera.push_back(t.second);
    }
    if (state.options.vertex_genera) {
        auto wanted = *state.options.vertex_genera;
        std::sort(wanted.begin(), wanted.end());
        std::sort(genera.begin(), genera.end());
        if (wanted != genera) {
            return;
        }
    }
    const std::int64_t edge_count = mu.genus - genus_sum + static_cast<std::int64_t>(v_count) - 1;
    if (edge_count < static_cast<std::int64_t>(v_count) - 1) {
        return;
    }

    std::vector<Vertex> vertices;
    for (const auto& t : types) {
        vertices.push_back({t.second, -t.first});
    }

    // Leg maps; within a run of equal types, vertices are first used in order.
    const auto legs = mu.size();
    std::vector<std::size_t> leg_vertex(legs, 0);
    std::vector<std::size_t> pairs_a, pairs_b;
    for (std::size_t a = 0; a < v_count; ++a) {
        for (std::size_t b = a; b < v_count; ++b) {
            pairs_a.push_back(a);
            pairs_b.push_back(b);
        }
    }

    auto process_legs = [&]() {
        std::vector<std::size_t> edge_pick;
        std::vector<std::int64_t> valence(v_count, 0);
        std::vector<std::int64_t> leg_count(v_count, 0);
        for (auto v : leg_vertex) {
            ++leg_count[v];
        }
        std::function<void(std::size_t, std::int64_t)> pick = [&](std::size_t from,
                                                                  std::int64_t horizontal) {
            if (static_cast<std::int64_t>(edge_pick.size()) == edge_count) {
                for (std::size_t v = 0; v < v_count; ++v) {
                    if (vertices[v].genus == 0 && valence[v] + leg_count[v] < 3) {
                        return;
                    }
                }
                std::vector<Edge> edges;
                for (auto p : edge_pick) {
                    edges.push_back({pairs_a[p], pairs_b[p], std::nullopt});
                }
                EnhancedLevelGraph skeleton(mu, vertices, leg_vertex, std::move(edges));
                if (!skeleton.is_connected()) {
                    return;
                }
                for (auto& graph : enumerate_enhancements(skeleton)) {
                    if (!validate(graph).valid) {
                        continue;
                    }
                    auto form = canonical_form(graph);
                    state.found.try_emplace(form.key, std::move(form));
                }
                return;
            }
            for (std::size_t p = from; p < pairs_a.size(); ++p) {
                const bool is_horizontal = vertices[pairs_a[p]].level == vertices[pairs_b[p]].level;
                const auto h = horizontal + (is_horizontal ? 1 : 0);
                if (depth + h > state.options.max_codim) {
                    continue;
                }
                edge_pick.push_back(p);
                ++valence[pairs_a[p]];
                ++valence[pairs_b[p]];
                pick(p, h);
                --valence[pairs_a[p]];
                --valence[pairs_b[p]];
                edge_pick.pop_back();
            }
        };
        pick(0, 0);
    };

    std::function<void(std::size_t)> assign = [&](std::size_t j) {
        if (j == legs) {
            process_legs();
            return;
        }
        for (std::size_t v = 0; v < v_count; ++v) {
            // Symmetry breaking: v may be used only if its twin predecessor is.
            if (v > 0 && types[v] == types[v - 1]) {
                const bool prev_used =
                    std::find(leg_vertex.begin(), leg_vertex.begin() + static_cast<std::ptrdiff_t>(j),
                              v - 1) != leg_vertex.begin() + static_cast<std::ptrdiff_t>(j);
                if (!prev_used) {
                    continue;
                }
            }
            leg_vertex[j] = v;
            assign(j + 1);
        }
    };
    assign(0);
}

}  // namespace

std::vector<CanonicalForm> enumerate_enhanced_level_graphs(const SignatureMu& mu,
                                                           const EnumerationOptions& options)
{
    const auto sum = std::accumulate(mu.m.begin(), mu.m.end(), std::int64_t{0});
    if (mu.genus < 0 || sum != 2 * mu.genus - 2) {
        throw std::invalid_argument("orders must sum to 2g - 2");
    }
    if (mu.m.empty()) {
        throw std::invalid_argument("signature needs at least one marked point");
    }
    const auto n = static_cast<std::int64_t>(mu.size());
    if (2 * mu.genus - 2 + n <= 0) {
        throw std::invalid_argument("signature is unstable");
    }
    if (options.max_codim < 0) {
        throw std::invalid_argument("maximal codimension must be nonnegative");
    }

    std::size_t max_vertices = static_cast<std::size_t>(std::max<std::int64_t>(1, 2 * mu.genus - 2 + n));
    if (options.max_vertices) {
        max_vertices = std::min(max_vertices, *options.max_vertices);
    }
    std::size_t min_vertices = 1;
    std::int64_t max_edges = mu.genus + static_cast<std::int64_t>(max_vertices) - 1;
    if (options.vertex_genera) {
        const auto& wanted = *options.vertex_genera;
        min_vertices = max_vertices = wanted.size();
        max_edges = mu.genus - std::accumulate(wanted.begin(), wanted.end(), std::int64_t{0}) +
                    static_cast<std::int64_t>(wanted.size()) - 1;
    }
    max_edges = std::min(max_edges, 3 * mu.genus - 3 + n);
    if (max_vertices > kMaxEnumerationVertices || max_edges > kMaxEnumerationEdges) {
        throw EnumerationBoundsExceeded(
            "enumeration beyond desk scale: up to " + std::to_string(max_vertices) +
            " vertices and " + std::to_string(max_edges) + " edges (limits " +
            std::to_string(kMaxEnumerationVertices) + ", " +
            std::to_string(kMaxEnumerationEdges) + ")");
    }

    SearchState state{mu, options, {}};
    for (std::size_t v_count = min_vertices; v_count <= max_vertices; ++v_count) {
        const auto max_depth =
            std::min<std::int64_t>(static_cast<std::int64_t>(v_count) - 1, options.max_codim);
        for (std::int64_t depth = 0; depth <= max_depth; ++depth) {
            for_each_vertex_types(v_count, depth, mu.genus, [&](const auto& types) {
                enumerate_with_types(state, types, depth);
            });
        }
    }

    std::vector<CanonicalForm> out;
    for (auto& [key, form] : state.found) {
        out.push_back(std::move(form));
    }
    return out;
}

std::vector<CanonicalForm> enumerate_enhanced_level_graphs(const SignatureMu& mu,
                                                           std::int64_t max_codim)
{
    return enumerate_enhanced_level_graphs(mu, EnumerationOptions{max_codim, {}, {}});
}

}  // namespace msd
