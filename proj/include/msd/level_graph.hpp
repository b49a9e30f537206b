#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace msd {

/// Malformed input: dangling indices, duplicate or missing leg assignments.
/// Distinct from mathematical invalidity, which validate() reports.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Orders m_1, ..., m_n of the marked zeros and poles together with the genus.
struct SignatureMu {
    std::vector<std::int64_t> m;
    std::int64_t genus = 0;

    std::size_t size() const { return m.size(); }
    bool has_poles() const;
    bool operator==(const SignatureMu&) const = default;
};

/// Genus determined by sum(m) = 2g - 2, if any.
std::optional<std::int64_t> genus_from_orders(const std::vector<std::int64_t>& m);

struct Vertex {
    std::int64_t genus = 0;
    std::int64_t level = 0;
    bool operator==(const Vertex&) const = default;
};

/// Undirected edge; `kappa` is the enhancement of a vertical edge.
struct Edge {
    std::size_t a = 0;
    std::size_t b = 0;
    std::optional<std::int64_t> kappa;

    bool is_loop() const { return a == b; }
    bool operator==(const Edge&) const = default;
};

enum class LevelMode { at, above, above_or_at };

/// A connected piece of a level subgraph.
struct Component {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> edges;
    bool operator==(const Component&) const = default;
};

/// Enhanced level graph of type mu. Legs are labeled and never permuted;
/// leg j (0-based) carries order mu.m[j]. Levels are normalized onto
/// {0, -1, ..., -N} at construction, so any order-inducing level function
/// is accepted.
class EnhancedLevelGraph {
public:
    EnhancedLevelGraph(SignatureMu mu,
                       std::vector<Vertex> vertices,
                       std::vector<std::size_t> leg_vertex,
                       std::vector<Edge> edges);

    const SignatureMu& mu() const { return mu_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::size_t>& leg_vertex() const { return leg_vertex_; }

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    std::int64_t genus() const { return mu_.genus; }

    std::int64_t level(std::size_t v) const { return vertices_.at(v).level; }
    /// N: number of levels strictly below zero.
    std::int64_t depth() const { return depth_; }

    bool is_horizontal(std::size_t e) const;
    bool is_vertical(std::size_t e) const { return !is_horizontal(e); }
    std::vector<std::size_t> vertical_edges() const;
    std::vector<std::size_t> horizontal_edges() const;
    std::size_t num_horizontal() const { return horizontal_edges().size(); }

    /// Upper and lower endpoint of a vertical edge.
    std::size_t top(std::size_t e) const;
    std::size_t bottom(std::size_t e) const;
    std::int64_t level_top(std::size_t e) const { return level(top(e)); }
    std::int64_t level_bottom(std::size_t e) const { return level(bottom(e)); }
    std::int64_t kappa(std::size_t e) const;

    /// 0-based leg indices sitting on v.
    std::vector<std::size_t> legs_at(std::size_t v) const;
    /// Half-edges at v: loops count twice.
    std::size_t valence(std::size_t v) const;
    bool has_pole_leg(std::size_t v) const;
    bool is_connected() const;

    bool operator==(const EnhancedLevelGraph&) const = default;

private:
    SignatureMu mu_;
    std::vector<Vertex> vertices_;
    std::vector<std::size_t> leg_vertex_;
    std::vector<Edge> edges_;
    std::int64_t depth_ = 0;
};

struct Violation {
    std::string rule;
    std::string locus;
    std::string detail;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;

    bool has(const std::string& rule) const;
};

namespace rules {
inline constexpr const char* signature_sum = "signature_sum";
inline constexpr const char* connectivity = "connectivity";
inline constexpr const char* genus_identity = "genus_identity";
inline constexpr const char* kappa_missing = "kappa_missing";
inline constexpr const char* kappa_on_horizontal = "kappa_on_horizontal";
inline constexpr const char* kappa_nonpositive = "kappa_nonpositive";
inline constexpr const char* vertical_loop = "vertical_loop";
inline constexpr const char* degree_identity = "degree_identity";
inline constexpr const char* degree_parity_bound = "degree_parity_bound";
inline constexpr const char* stability = "stability";
}  // namespace rules

ValidationReport validate(const EnhancedLevelGraph& graph);

/// Number of levels below zero plus number of horizontal edges.
std::int64_t codim(const EnhancedLevelGraph& graph);

std::vector<Component> level_subgraph(const EnhancedLevelGraph& graph, std::int64_t level,
                                      LevelMode mode);

/// Orders of the differential at the upper and lower branch of a node.
std::pair<std::int64_t, std::int64_t> node_orders(const EnhancedLevelGraph& graph,
                                                  std::size_t edge);

/// deg(v) with each horizontal half-edge contributing -1.
std::int64_t vertex_degree(const EnhancedLevelGraph& graph, std::size_t v);

}  // namespace msd
