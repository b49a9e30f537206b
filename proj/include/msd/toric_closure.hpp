#pragma once

#include "msd/level_graph.hpp"
#include "msd/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace msd {

/// prod_{i in levels} r_i = rho_edge^exponent.
struct MonomialEquation {
    std::vector<std::int64_t> levels;
    std::size_t edge = 0;
    std::int64_t exponent = 1;
    std::string to_string() const;
};

std::vector<MonomialEquation> torus_equations(const EnhancedLevelGraph& graph);

/// Exponent vectors in Z^N (coordinate k is level -(k+1)) of the coordinate
/// functions r_{-1}, ..., r_{-N} followed by rho_e for each vertical edge.
struct CharacterMonoid {
    std::int64_t ambient_rank = 0;
    std::vector<IntVector> generators;
    std::vector<std::string> labels;
};

CharacterMonoid character_monoid(const EnhancedLevelGraph& graph);

enum class Normality { normal, non_normal, inconclusive };

std::string to_string(Normality verdict);

struct NormalityResult {
    Normality verdict = Normality::inconclusive;
    /// A point of the saturation outside the monoid.
    std::optional<std::vector<std::int64_t>> witness;
    std::int64_t search_bound = 0;
    std::size_t points_examined = 0;
};

/// Saturation test. Since every r_i contributes a_i e_i, the cone is the
/// positive orthant and the monoid is normal iff each group element in the
/// box prod [0, a_i) is a monoid element. Box points are searched by
/// increasing coordinate sum up to `search_bound` (default: twice the
/// largest generator coordinate). The verdict is `normal` only when the
/// bound covers the whole box.
NormalityResult closure_normality(const EnhancedLevelGraph& graph,
                                  std::optional<std::int64_t> search_bound = std::nullopt);

}  // namespace msd
