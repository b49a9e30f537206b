#pragma once

#include "msd/level_graph.hpp"
#include "msd/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace msd {

struct GaussianRational {
    Rational re;
    Rational im;

    bool is_zero() const { return re == 0 && im == 0; }
    std::string to_string() const;

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a += -b; }
    /// Scaling by a rational.
    friend GaussianRational operator*(const Rational& s, const GaussianRational& z)
    {
        return {s * z.re, s * z.im};
    }
    bool operator==(const GaussianRational&) const = default;
};

/// Residues of a twisted differential along the nodes of a graph.
/// A vertical residue is the residue at the lower branch. A horizontal
/// residue is taken at the "+" branch, the end with the smaller vertex
/// index; the other branch carries its negative.
struct ResidueAssignment {
    std::map<std::size_t, GaussianRational> vertical;
    std::map<std::size_t, GaussianRational> horizontal;
    /// Keyed by 0-based leg index; only pole legs are read.
    std::optional<std::map<std::size_t, GaussianRational>> marked_poles;
};

/// Residues at the level-i ends of `edges` sum to zero.
struct GrcCondition {
    std::int64_t level = 0;
    std::vector<std::size_t> component_vertices;
    std::vector<std::size_t> edges;
    bool operator==(const GrcCondition&) const = default;
};

/// One condition per pole-free component of each graph above a level that
/// reaches that level by at least one edge. Ordered by level from the top,
/// then by smallest vertex.
std::vector<GrcCondition> grc_conditions(const EnhancedLevelGraph& graph);

struct GrcReport {
    bool passed = true;
    std::vector<GrcCondition> violated;
    /// Vertices at which the residue theorem fails (checked only when marked
    /// pole residues are supplied).
    std::vector<std::size_t> residue_theorem_failures;
    /// Levels whose relation test fails (homological checker only).
    std::vector<std::int64_t> failed_levels;
};

/// Throws std::invalid_argument when a residue value is missing.
GrcReport check_grc(const EnhancedLevelGraph& graph, const ResidueAssignment& rho);

/// Relation form: every rational relation among pole-free vertex boundaries
/// that involves no horizontal edge and no edge ending above level i must
/// annihilate the level-i residues.
GrcReport check_grc_homological(const EnhancedLevelGraph& graph, const ResidueAssignment& rho);

/// Sum of residues at the poles of v; nullopt when some value is unknown.
std::optional<GaussianRational> vertex_residue_sum(const EnhancedLevelGraph& graph,
                                                   const ResidueAssignment& rho, std::size_t v);

/// Dimension of H^1(X \ P, Z) for a genus-g surface with p punctures and
/// z relative points.
std::int64_t relative_cohomology_dim(std::int64_t genus, std::int64_t punctures,
                                     std::int64_t relative_points);

std::int64_t stratum_dim(const SignatureMu& mu);

std::int64_t grc_space_dim(const EnhancedLevelGraph& graph, std::int64_t level);

struct DimIdentity {
    std::vector<std::int64_t> per_level;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool equal = false;
};

DimIdentity dim_identity_check(const EnhancedLevelGraph& graph);

}  // namespace msd
