#pragma once

#include "msd/level_graph.hpp"
#include "msd/linalg.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace msd {

/// Finitely generated abelian group Z^free_rank + Z/d_1 + ... + Z/d_k with
/// d_i >= 2 and d_i | d_{i+1}.
struct FinAbGroup {
    std::vector<Integer> invariant_factors;
    std::size_t free_rank = 0;

    bool is_finite() const { return free_rank == 0; }
    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    /// Throws std::domain_error for infinite groups.
    Integer order() const;
    std::string to_string() const;

    /// Cokernel of the map Z^cols -> Z^rows given by `relations`.
    static FinAbGroup cokernel(const IntMatrix& relations);
    /// Z/c_1 + ... + Z/c_k normalized to invariant factors.
    static FinAbGroup cyclic_sum(const std::vector<Integer>& orders);

    bool operator==(const FinAbGroup&) const = default;
};

/// Level rotation group -> prong rotation group. One row per vertical edge,
/// one column per level (column k is level -k, or -(k+1) when the top level
/// is dropped); +1 at the upper level, -1 at the lower one.
struct PhiMap {
    IntMatrix matrix;
    std::vector<Integer> moduli;
    bool extended = true;
    std::vector<std::size_t> edges;
};

FinAbGroup prong_rotation_group(const EnhancedLevelGraph& graph);

PhiMap phi_map(const EnhancedLevelGraph& graph, bool extended);

/// Hermite basis (rows) of the twist lattice inside Z^{L}, coordinates
/// ordered (n_{-1}, ..., n_{-N}). Always N rows.
IntMatrix twist_group_basis(const EnhancedLevelGraph& graph);

struct SimpleTwistData {
    /// a[k] belongs to level -(k+1).
    std::vector<Integer> a;
    /// Row k is a_k times the indicator of the levels <= -(k+1).
    IntMatrix generators;
};

SimpleTwistData simple_twist_data(const EnhancedLevelGraph& graph);

/// Coordinates in the lower-triangular basis b_i = 1_{levels <= i} to
/// standard coordinates on Z^{L}.
IntVector triangular_to_standard(const IntVector& coefficients);

/// Twist lattice modulo the simple twist lattice.
FinAbGroup k_group(const EnhancedLevelGraph& graph);

/// Number of prong-matching classes under the level rotation group.
Integer pm_class_count(const EnhancedLevelGraph& graph);

class BoundExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

using ProngMatching = std::vector<std::int64_t>;
using Orbit = std::vector<ProngMatching>;

inline constexpr std::uint64_t kDefaultOrbitBound = 1'000'000;

/// Orbits of the level rotation action on prong-matchings, by breadth-first
/// closure. Tuples are indexed by vertical edges in edge order. Refuses with
/// BoundExceeded when the product of enhancements exceeds `bound`.
std::vector<Orbit> pm_orbits_bruteforce(const EnhancedLevelGraph& graph,
                                        std::uint64_t bound = kDefaultOrbitBound);

struct CoveringGroups {
    /// |H_i| = a_i.
    std::vector<Integer> h_orders;
    FinAbGroup h;
    FinAbGroup g;
    FinAbGroup k;
    /// |K| * |G| == |H|.
    bool sequence_check = false;
};

CoveringGroups covering_groups(const EnhancedLevelGraph& graph);

}  // namespace msd
