#include "msd/residue_grc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace msd {

std::string GaussianRational::to_string() const
{
    std::ostringstream os;
    os << re;
    if (im != 0) {
        os << (im < 0 ? " - " : " + ") << abs_value(im) << "i";
    }
    return os.str();
}

std::vector<GrcCondition> grc_conditions(const EnhancedLevelGraph& graph)
{
    std::vector<GrcCondition> out;
    for (std::int64_t i = -1; i >= -graph.depth(); --i) {
        for (const auto& comp : level_subgraph(graph, i, LevelMode::above)) {
            const bool has_pole = std::any_of(comp.vertices.begin(), comp.vertices.end(),
                                              [&](auto v) { return graph.has_pole_leg(v); });
            if (has_pole) {
                continue;
            }
            GrcCondition cond{i, comp.vertices, {}};
            for (auto e : graph.vertical_edges()) {
                if (graph.level_bottom(e) == i &&
                    std::binary_search(comp.vertices.begin(), comp.vertices.end(), graph.top(e))) {
                    cond.edges.push_back(e);
                }
            }
            if (!cond.edges.empty()) {
                out.push_back(std::move(cond));
            }
        }
    }
    return out;
}

namespace {

void require_complete(const EnhancedLevelGraph& graph, const ResidueAssignment& rho, bool horizontal)
{
    for (const auto& [e, value] : rho.vertical) {
        if (e >= graph.num_edges() || !graph.is_vertical(e)) {
            throw std::invalid_argument("vertical residue given for edge " + std::to_string(e) +
                                        ", which is not a vertical edge");
        }
    }
    for (const auto& [e, value] : rho.horizontal) {
        if (e >= graph.num_edges() || !graph.is_horizontal(e)) {
            throw std::invalid_argument("horizontal residue given for edge " + std::to_string(e) +
                                        ", which is not a horizontal edge");
        }
    }
    for (auto e : graph.vertical_edges()) {
        if (!rho.vertical.count(e)) {
            throw std::invalid_argument("missing residue for vertical edge " + std::to_string(e));
        }
    }
    if (horizontal) {
        for (auto e : graph.horizontal_edges()) {
            if (!rho.horizontal.count(e)) {
                throw std::invalid_argument("missing residue for horizontal edge " +
                                            std::to_string(e));
            }
        }
    }
    if (rho.marked_poles) {
        for (const auto& [leg, value] : *rho.marked_poles) {
            if (leg >= graph.mu().size() || graph.mu().m[leg] >= 0) {
                throw std::invalid_argument("marked residue given for leg " +
                                            std::to_string(leg + 1) + ", which is not a pole");
            }
        }
        for (std::size_t leg = 0; leg < graph.mu().size(); ++leg) {
            if (graph.mu().m[leg] < 0 && !rho.marked_poles->count(leg)) {
                throw std::invalid_argument("missing residue for pole leg " +
                                            std::to_string(leg + 1));
            }
        }
    }
}

}  // namespace

std::optional<GaussianRational> vertex_residue_sum(const EnhancedLevelGraph& graph,
                                                   const ResidueAssignment& rho, std::size_t v)
{
    GaussianRational sum;
    for (auto leg : graph.legs_at(v)) {
        if (graph.mu().m[leg] >= 0) {
            continue;
        }
        if (!rho.marked_poles || !rho.marked_poles->count(leg)) {
            return std::nullopt;
        }
        sum += rho.marked_poles->at(leg);
    }
    for (std::size_t e = 0; e < graph.num_edges(); ++e) {
        const auto& edge = graph.edges()[e];
        if ((edge.a != v && edge.b != v) || edge.is_loop()) {
            continue;
        }
        if (graph.is_vertical(e)) {
            if (graph.bottom(e) != v) {
                continue;
            }
            auto it = rho.vertical.find(e);
            if (it == rho.vertical.end()) {
                return std::nullopt;
            }
            sum += it->second;
        } else {
            auto it = rho.horizontal.find(e);
            if (it == rho.horizontal.end()) {
                return std::nullopt;
            }
            sum += std::min(edge.a, edge.b) == v ? it->second : -it->second;
        }
    }
    return sum;
}

GrcReport check_grc(const EnhancedLevelGraph& graph, const ResidueAssignment& rho)
{
    require_complete(graph, rho, true);
    GrcReport report;
    for (const auto& cond : grc_conditions(graph)) {
        GaussianRational sum;
        for (auto e : cond.edges) {
            sum += rho.vertical.at(e);
        }
        if (!sum.is_zero()) {
            report.violated.push_back(cond);
        }
    }
    if (rho.marked_poles) {
        for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
            if (!vertex_residue_sum(graph, rho, v)->is_zero()) {
                report.residue_theorem_failures.push_back(v);
            }
        }
    }
    report.passed = report.violated.empty() && report.residue_theorem_failures.empty();
    return report;
}

GrcReport check_grc_homological(const EnhancedLevelGraph& graph, const ResidueAssignment& rho)
{
    require_complete(graph, rho, false);
    std::vector<std::size_t> poleless;
    for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
        if (!graph.has_pole_leg(v)) {
            poleless.push_back(v);
        }
    }
    const auto rows = static_cast<Index>(poleless.size());
    const auto cols = static_cast<Index>(graph.num_edges());

    // Boundary of each pole-free vertex in edge coordinates.
    RatMatrix boundary = RatMatrix::Zero(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        const auto v = poleless[static_cast<std::size_t>(r)];
        for (std::size_t e = 0; e < graph.num_edges(); ++e) {
            const auto& edge = graph.edges()[e];
            if (edge.is_loop()) {
                continue;
            }
            const auto c = static_cast<Index>(e);
            if (graph.is_vertical(e)) {
                if (graph.top(e) == v) {
                    boundary(r, c) = 1;
                } else if (graph.bottom(e) == v) {
                    boundary(r, c) = -1;
                }
            } else if (edge.a == v || edge.b == v) {
                boundary(r, c) = std::min(edge.a, edge.b) == v ? 1 : -1;
            }
        }
    }

    GrcReport report;
    for (std::int64_t i = -1; i >= -graph.depth(); --i) {
        std::vector<Index> constrained;
        for (std::size_t e = 0; e < graph.num_edges(); ++e) {
            if (graph.is_horizontal(e) || graph.level_bottom(e) > i) {
                constrained.push_back(static_cast<Index>(e));
            }
        }
        RatMatrix system(static_cast<Index>(constrained.size()), rows);
        for (std::size_t k = 0; k < constrained.size(); ++k) {
            system.row(static_cast<Index>(k)) = boundary.col(constrained[k]).transpose();
        }
        const RatMatrix relations = kernel_basis(system);
        for (Index k = 0; k < relations.rows(); ++k) {
            const RatMatrix alpha = relations.row(k) * boundary;
            GaussianRational sum;
            for (auto e : graph.vertical_edges()) {
                if (graph.level_bottom(e) == i) {
                    sum += alpha(0, static_cast<Index>(e)) * rho.vertical.at(e);
                }
            }
            if (!sum.is_zero()) {
                report.failed_levels.push_back(i);
                break;
            }
        }
    }
    report.passed = report.failed_levels.empty();
    return report;
}

std::int64_t relative_cohomology_dim(std::int64_t genus, std::int64_t punctures,
                                     std::int64_t relative_points)
{
    if (punctures > 0 && relative_points > 0) {
        return 2 * genus + punctures + relative_points - 2;
    }
    if (punctures > 0) {
        return 2 * genus + punctures - 1;
    }
    if (relative_points > 0) {
        return 2 * genus + relative_points - 1;
    }
    return 2 * genus;
}

std::int64_t stratum_dim(const SignatureMu& mu)
{
    const auto poles = std::count_if(mu.m.begin(), mu.m.end(), [](auto m) { return m < 0; });
    const auto zeros = static_cast<std::int64_t>(mu.m.size()) - poles;
    return relative_cohomology_dim(mu.genus, poles, zeros);
}

std::int64_t grc_space_dim(const EnhancedLevelGraph& graph, std::int64_t level)
{
    if (level > 0 || level < -graph.depth()) {
        throw std::out_of_range("level " + std::to_string(level) + " outside the graph");
    }

    // One residue coordinate per puncture of a level-i vertex.
    struct Puncture {
        std::size_t vertex;
    };
    std::vector<Puncture> punctures;
    std::map<std::size_t, Index> lower_branch;
    std::map<std::size_t, std::pair<Index, Index>> horizontal_branches;
    std::int64_t ambient = 0;

    for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
        if (graph.level(v) != level) {
            continue;
        }
        std::int64_t zeros = 0;
        const auto before = punctures.size();
        for (auto leg : graph.legs_at(v)) {
            if (graph.mu().m[leg] < 0) {
                punctures.push_back({v});
            } else {
                ++zeros;
            }
        }
        for (std::size_t e = 0; e < graph.num_edges(); ++e) {
            const auto& edge = graph.edges()[e];
            if (edge.a != v && edge.b != v) {
                continue;
            }
            if (graph.is_vertical(e)) {
                if (graph.top(e) == v) {
                    ++zeros;
                } else {
                    lower_branch[e] = static_cast<Index>(punctures.size());
                    punctures.push_back({v});
                }
                continue;
            }
            // Horizontal: the "+" branch is recorded first.
            auto& [plus, minus] = horizontal_branches[e];
            if (edge.is_loop()) {
                plus = static_cast<Index>(punctures.size());
                punctures.push_back({v});
                minus = static_cast<Index>(punctures.size());
                punctures.push_back({v});
            } else if (std::min(edge.a, edge.b) == v) {
                plus = static_cast<Index>(punctures.size());
                punctures.push_back({v});
            } else {
                minus = static_cast<Index>(punctures.size());
                punctures.push_back({v});
            }
        }
        ambient += relative_cohomology_dim(graph.vertices()[v].genus,
                                           static_cast<std::int64_t>(punctures.size() - before),
                                           zeros);
    }

    const auto cols = static_cast<Index>(punctures.size());
    std::vector<std::vector<Index>> condition_rows;
    for (const auto& [e, branches] : horizontal_branches) {
        condition_rows.push_back({branches.first, branches.second});
    }
    for (const auto& cond : grc_conditions(graph)) {
        if (cond.level != level) {
            continue;
        }
        std::vector<Index> row;
        for (auto e : cond.edges) {
            row.push_back(lower_branch.at(e));
        }
        condition_rows.push_back(std::move(row));
    }
    std::map<std::size_t, std::vector<Index>> per_vertex;
    for (Index c = 0; c < cols; ++c) {
        per_vertex[punctures[static_cast<std::size_t>(c)].vertex].push_back(c);
    }

    const auto n_cond = static_cast<Index>(condition_rows.size());
    const auto n_sum = static_cast<Index>(per_vertex.size());
    RatMatrix sums = RatMatrix::Zero(n_sum, cols);
    RatMatrix stacked = RatMatrix::Zero(n_cond + n_sum, cols);
    for (Index r = 0; r < n_cond; ++r) {
        for (auto c : condition_rows[static_cast<std::size_t>(r)]) {
            stacked(r, c) += 1;
        }
    }
    Index r = 0;
    for (const auto& [v, columns] : per_vertex) {
        for (auto c : columns) {
            sums(r, c) = 1;
            stacked(n_cond + r, c) = 1;
        }
        ++r;
    }
    return ambient - (rank(stacked) - rank(sums));
}

DimIdentity dim_identity_check(const EnhancedLevelGraph& graph)
{
    DimIdentity out;
    for (std::int64_t i = 0; i >= -graph.depth(); --i) {
        out.per_level.push_back(grc_space_dim(graph, i));
        out.lhs += out.per_level.back();
    }
    out.rhs = stratum_dim(graph.mu()) - static_cast<std::int64_t>(graph.num_horizontal());
    out.equal = out.lhs == out.rhs;
    return out;
}

}  // namespace msd
