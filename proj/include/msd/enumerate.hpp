#pragma once

#include "msd/level_graph.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace msd {

/// An EnhancedLevelGraph whose vertical edges carry no enhancement yet.
using LevelSkeleton = EnhancedLevelGraph;

struct CanonicalForm {
    EnhancedLevelGraph graph;
    std::string key;
};

/// Minimal serialization over vertex relabelings that fix levels, genera
/// and legs. Equal keys iff isomorphic with legs fixed pointwise.
CanonicalForm canonical_form(const EnhancedLevelGraph& graph);

/// Upper bound on any enhancement of a graph of type mu.
std::int64_t kappa_bound(const SignatureMu& mu);

/// All positive enhancements of the vertical edges solving the degree
/// identity at every vertex, in lexicographic order of the kappa tuple
/// (vertical edges in edge order). Existing enhancements are ignored.
std::vector<EnhancedLevelGraph> enumerate_enhancements(const LevelSkeleton& skeleton);

class EnumerationBoundsExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

struct EnumerationOptions {
    std::int64_t max_codim = 0;
    /// Restrict to graphs with at most this many vertices.
    std::optional<std::size_t> max_vertices;
    /// Restrict to graphs whose multiset of vertex genera is this one.
    std::optional<std::vector<std::int64_t>> vertex_genera;
};

inline constexpr std::size_t kMaxEnumerationVertices = 6;
inline constexpr std::int64_t kMaxEnumerationEdges = 8;

/// Every valid enhanced level graph of type mu with codim <= max_codim, one
/// canonical representative per isomorphism class, sorted by key.
/// Throws std::invalid_argument for an inadmissible signature and
/// EnumerationBoundsExceeded beyond desk scale.
std::vector<CanonicalForm> enumerate_enhanced_level_graphs(const SignatureMu& mu,
                                                           const EnumerationOptions& options);

std::vector<CanonicalForm> enumerate_enhanced_level_graphs(const SignatureMu& mu,
                                                           std::int64_t max_codim);

}  // namespace msd
