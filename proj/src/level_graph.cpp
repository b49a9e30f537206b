#include "msd/level_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace msd {

namespace {

// Orders, genera and enhancements above this magnitude are refused so that
// every degree and genus sum below stays exact in 64 bits.
constexpr std::int64_t kMaxMagnitude = std::int64_t{1} << 40;

void check_magnitude(std::int64_t value, const char* what)
{
    if (value > kMaxMagnitude || value < -kMaxMagnitude) {
        throw StructuralError(std::string(what) + " out of supported range");
    }
}

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

}  // namespace

bool SignatureMu::has_poles() const
{
    return std::any_of(m.begin(), m.end(), [](auto x) { return x < 0; });
}

std::optional<std::int64_t> genus_from_orders(const std::vector<std::int64_t>& m)
{
    const std::int64_t total = std::accumulate(m.begin(), m.end(), std::int64_t{0});
    if ((total + 2) % 2 != 0 || total + 2 < 0) {
        return std::nullopt;
    }
    return (total + 2) / 2;
}

EnhancedLevelGraph::EnhancedLevelGraph(SignatureMu mu, std::vector<Vertex> vertices,
                                       std::vector<std::size_t> leg_vertex, std::vector<Edge> edges)
    : mu_(std::move(mu)), vertices_(std::move(vertices)), leg_vertex_(std::move(leg_vertex)),
      edges_(std::move(edges))
{
    if (vertices_.empty()) {
        throw StructuralError("graph has no vertices");
    }
    if (leg_vertex_.size() != mu_.m.size()) {
        throw StructuralError("leg assignment has " + std::to_string(leg_vertex_.size()) +
                              " entries for " + std::to_string(mu_.m.size()) + " orders");
    }
    check_magnitude(mu_.genus, "genus");
    for (auto x : mu_.m) {
        check_magnitude(x, "order");
    }
    for (std::size_t j = 0; j < leg_vertex_.size(); ++j) {
        if (leg_vertex_[j] >= vertices_.size()) {
            throw StructuralError("leg " + std::to_string(j + 1) + " points to missing vertex " +
                                  std::to_string(leg_vertex_[j]));
        }
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (edges_[e].a >= vertices_.size() || edges_[e].b >= vertices_.size()) {
            throw StructuralError("edge " + std::to_string(e) + " has a dangling endpoint");
        }
        if (edges_[e].kappa) {
            check_magnitude(*edges_[e].kappa, "enhancement");
        }
    }
    for (const auto& v : vertices_) {
        check_magnitude(v.genus, "vertex genus");
    }

    std::set<std::int64_t, std::greater<>> distinct;
    for (const auto& v : vertices_) {
        distinct.insert(v.level);
    }
    std::map<std::int64_t, std::int64_t> normalized;
    std::int64_t next = 0;
    for (auto l : distinct) {
        normalized[l] = next--;
    }
    for (auto& v : vertices_) {
        v.level = normalized[v.level];
    }
    depth_ = static_cast<std::int64_t>(distinct.size()) - 1;
}

bool EnhancedLevelGraph::is_horizontal(std::size_t e) const
{
    const auto& edge = edges_.at(e);
    return vertices_[edge.a].level == vertices_[edge.b].level;
}

std::vector<std::size_t> EnhancedLevelGraph::vertical_edges() const
{
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (!is_horizontal(e)) {
            out.push_back(e);
        }
    }
    return out;
}

std::vector<std::size_t> EnhancedLevelGraph::horizontal_edges() const
{
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (is_horizontal(e)) {
            out.push_back(e);
        }
    }
    return out;
}

std::size_t EnhancedLevelGraph::top(std::size_t e) const
{
    const auto& edge = edges_.at(e);
    if (is_horizontal(e)) {
        throw std::logic_error("top() of horizontal edge " + std::to_string(e));
    }
    return vertices_[edge.a].level > vertices_[edge.b].level ? edge.a : edge.b;
}

std::size_t EnhancedLevelGraph::bottom(std::size_t e) const
{
    const auto& edge = edges_.at(e);
    if (is_horizontal(e)) {
        throw std::logic_error("bottom() of horizontal edge " + std::to_string(e));
    }
    return vertices_[edge.a].level > vertices_[edge.b].level ? edge.b : edge.a;
}

std::int64_t EnhancedLevelGraph::kappa(std::size_t e) const
{
    const auto& edge = edges_.at(e);
    if (!edge.kappa) {
        throw std::logic_error("edge " + std::to_string(e) + " carries no enhancement");
    }
    return *edge.kappa;
}

std::vector<std::size_t> EnhancedLevelGraph::legs_at(std::size_t v) const
{
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < leg_vertex_.size(); ++j) {
        if (leg_vertex_[j] == v) {
            out.push_back(j);
        }
    }
    return out;
}

std::size_t EnhancedLevelGraph::valence(std::size_t v) const
{
    std::size_t count = 0;
    for (const auto& edge : edges_) {
        count += static_cast<std::size_t>(edge.a == v) + static_cast<std::size_t>(edge.b == v);
    }
    return count;
}

bool EnhancedLevelGraph::has_pole_leg(std::size_t v) const
{
    for (std::size_t j = 0; j < leg_vertex_.size(); ++j) {
        if (leg_vertex_[j] == v && mu_.m[j] < 0) {
            return true;
        }
    }
    return false;
}

bool EnhancedLevelGraph::is_connected() const
{
    DisjointSets sets(vertices_.size());
    for (const auto& edge : edges_) {
        sets.unite(edge.a, edge.b);
    }
    const auto root = sets.find(0);
    for (std::size_t v = 1; v < vertices_.size(); ++v) {
        if (sets.find(v) != root) {
            return false;
        }
    }
    return true;
}

bool ValidationReport::has(const std::string& rule) const
{
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.rule == rule; });
}

std::int64_t vertex_degree(const EnhancedLevelGraph& graph, std::size_t v)
{
    std::int64_t deg = 0;
    for (auto j : graph.legs_at(v)) {
        deg += graph.mu().m[j];
    }
    for (std::size_t e = 0; e < graph.num_edges(); ++e) {
        const auto& edge = graph.edges()[e];
        if (edge.a != v && edge.b != v) {
            continue;
        }
        if (graph.is_horizontal(e)) {
            deg -= (edge.a == v ? 1 : 0) + (edge.b == v ? 1 : 0);
            continue;
        }
        const std::int64_t kappa = edge.kappa.value_or(1);
        if (graph.top(e) == v) {
            deg += kappa - 1;
        } else {
            deg -= kappa + 1;
        }
    }
    return deg;
}

ValidationReport validate(const EnhancedLevelGraph& graph)
{
    ValidationReport report;
    auto add = [&](const char* rule, std::string locus, std::string detail) {
        report.violations.push_back({rule, std::move(locus), std::move(detail)});
    };

    const auto& mu = graph.mu();
    const std::int64_t msum = std::accumulate(mu.m.begin(), mu.m.end(), std::int64_t{0});
    if (mu.genus < 0 || msum != 2 * mu.genus - 2) {
        std::ostringstream os;
        os << "sum of orders is " << msum << ", expected 2g-2 = " << 2 * mu.genus - 2;
        add(rules::signature_sum, "mu", os.str());
    }

    if (!graph.is_connected()) {
        add(rules::connectivity, "graph", "underlying graph is disconnected");
    }

    std::int64_t genus_sum = 0;
    for (const auto& v : graph.vertices()) {
        genus_sum += v.genus;
    }
    const std::int64_t arith_genus = genus_sum + static_cast<std::int64_t>(graph.num_edges()) -
                                     static_cast<std::int64_t>(graph.num_vertices()) + 1;
    if (arith_genus != mu.genus) {
        std::ostringstream os;
        os << "sum g_v + |E| - |V| + 1 = " << arith_genus << ", expected " << mu.genus;
        add(rules::genus_identity, "graph", os.str());
    }

    bool enhancements_ok = true;
    for (std::size_t e = 0; e < graph.num_edges(); ++e) {
        const auto& edge = graph.edges()[e];
        const std::string locus = "edge " + std::to_string(e);
        if (edge.is_loop()) {
            if (edge.kappa) {
                add(rules::vertical_loop, locus, "loop carries an enhancement");
                enhancements_ok = false;
            }
            continue;
        }
        if (graph.is_horizontal(e)) {
            if (edge.kappa) {
                add(rules::kappa_on_horizontal, locus, "horizontal edge carries an enhancement");
                enhancements_ok = false;
            }
            continue;
        }
        if (!edge.kappa) {
            add(rules::kappa_missing, locus, "vertical edge without enhancement");
            enhancements_ok = false;
        } else if (*edge.kappa <= 0) {
            add(rules::kappa_nonpositive, locus,
                "enhancement " + std::to_string(*edge.kappa) + " is not positive");
            enhancements_ok = false;
        }
    }

    for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
        const std::string locus = "vertex " + std::to_string(v);
        const auto gv = graph.vertices()[v].genus;
        if (gv < 0) {
            add(rules::genus_identity, locus, "negative vertex genus");
        }
        if (enhancements_ok) {
            const auto deg = vertex_degree(graph, v);
            if (deg % 2 != 0 || deg < -2) {
                add(rules::degree_parity_bound, locus,
                    "degree " + std::to_string(deg) + " is odd or below -2");
            }
            if (deg != 2 * gv - 2) {
                std::ostringstream os;
                os << "degree " << deg << " differs from 2g_v - 2 = " << 2 * gv - 2;
                add(rules::degree_identity, locus, os.str());
            }
        }
        if (gv == 0 && graph.valence(v) + graph.legs_at(v).size() < 3) {
            add(rules::stability, locus, "genus-0 vertex with fewer than three special points");
        }
    }

    report.valid = report.violations.empty();
    return report;
}

std::int64_t codim(const EnhancedLevelGraph& graph)
{
    return graph.depth() + static_cast<std::int64_t>(graph.num_horizontal());
}

std::vector<Component> level_subgraph(const EnhancedLevelGraph& graph, std::int64_t level,
                                      LevelMode mode)
{
    if (level > 0 || level < -graph.depth()) {
        throw std::out_of_range("level " + std::to_string(level) + " outside 0..-" +
                                std::to_string(graph.depth()));
    }
    auto included = [&](std::size_t v) {
        const auto l = graph.level(v);
        switch (mode) {
        case LevelMode::at: return l == level;
        case LevelMode::above: return l > level;
        case LevelMode::above_or_at: return l >= level;
        }
        return false;
    };

    const auto n = graph.num_vertices();
    DisjointSets sets(n);
    for (const auto& edge : graph.edges()) {
        if (included(edge.a) && included(edge.b)) {
            sets.unite(edge.a, edge.b);
        }
    }
    std::map<std::size_t, Component> by_root;
    std::vector<std::size_t> order;
    for (std::size_t v = 0; v < n; ++v) {
        if (!included(v)) {
            continue;
        }
        const auto root = sets.find(v);
        if (!by_root.count(root)) {
            order.push_back(root);
        }
        by_root[root].vertices.push_back(v);
    }
    for (std::size_t e = 0; e < graph.num_edges(); ++e) {
        const auto& edge = graph.edges()[e];
        if (included(edge.a) && included(edge.b)) {
            by_root[sets.find(edge.a)].edges.push_back(e);
        }
    }
    std::vector<Component> out;
    for (auto root : order) {
        out.push_back(std::move(by_root[root]));
    }
    return out;
}

std::pair<std::int64_t, std::int64_t> node_orders(const EnhancedLevelGraph& graph, std::size_t edge)
{
    if (graph.is_horizontal(edge)) {
        return {-1, -1};
    }
    const auto kappa = graph.kappa(edge);
    return {kappa - 1, -kappa - 1};
}

}  // namespace msd
