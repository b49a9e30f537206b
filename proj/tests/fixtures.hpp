#pragma once

// Worked example graphs shared by the test binaries. Vertex and edge
// indices are 0-based, leg indices 0-based (leg j carries mu.m[j]).

#include "msd/level_graph.hpp"

#include <optional>
#include <vector>

namespace fixtures {

using msd::EnhancedLevelGraph;

inline std::optional<std::int64_t> k(std::int64_t value) { return value; }

/// Three levels, genera 3/1/0, mu = (4,4,2,-2), enhancements (k01, k12, k02).
inline EnhancedLevelGraph triangle_g5(std::int64_t k01, std::int64_t k12, std::int64_t k02)
{
    return EnhancedLevelGraph({{4, 4, 2, -2}, 5}, {{3, 0}, {1, -1}, {0, -2}}, {1, 2, 0, 1},
                              {{0, 1, k(k01)}, {1, 2, k(k12)}, {0, 2, k(k02)}});
}

inline EnhancedLevelGraph gamma1() { return triangle_g5(3, 3, 1); }
inline EnhancedLevelGraph gamma2() { return triangle_g5(1, 1, 3); }

inline EnhancedLevelGraph triangle_skeleton()
{
    return EnhancedLevelGraph({{4, 4, 2, -2}, 5}, {{3, 0}, {1, -1}, {0, -2}}, {1, 2, 0, 1},
                              {{0, 1, {}}, {1, 2, {}}, {0, 2, {}}});
}

/// mu = (2,1,0,0,-5): pole on top, bottom vertices carry legs {2,4} and {1,3}.
inline EnhancedLevelGraph cherry_23()
{
    return EnhancedLevelGraph({{2, 1, 0, 0, -5}, 0}, {{0, 0}, {0, -1}, {0, -1}}, {2, 1, 2, 1, 0},
                              {{0, 1, k(2)}, {0, 2, k(3)}});
}

/// mu = (1,1,0,0,-4): bottom vertices carry legs {1,3} and {2,4}.
inline EnhancedLevelGraph cherry_22()
{
    return EnhancedLevelGraph({{1, 1, 0, 0, -4}, 0}, {{0, 0}, {0, -1}, {0, -1}}, {1, 2, 1, 2, 0},
                              {{0, 1, k(2)}, {0, 2, k(2)}});
}

/// mu = (3,1,-4), g = 1: two genus-0 vertices joined by two edges of enhancement 2.
inline EnhancedLevelGraph two_level_22()
{
    return EnhancedLevelGraph({{3, 1, -4}, 1}, {{0, 0}, {0, -1}}, {1, 1, 0},
                              {{0, 1, k(2)}, {0, 1, k(2)}});
}

/// Degeneration of two_level_22 to three levels: a1 top (pole), a2 middle
/// (order 1), a3 bottom (order 3); edges a1-a3, a1-a2 with kappa 2, a2-a3 with 1.
inline EnhancedLevelGraph triangle_221()
{
    return EnhancedLevelGraph({{3, 1, -4}, 1}, {{0, 0}, {0, -1}, {0, -2}}, {2, 1, 0},
                              {{0, 2, k(2)}, {0, 1, k(2)}, {1, 2, k(1)}});
}

/// mu = (4,4), g = 5: two genus-2 tops over a middle and a bottom vertex.
inline EnhancedLevelGraph four_vertex_g5()
{
    return EnhancedLevelGraph({{4, 4}, 5}, {{2, 0}, {2, 0}, {0, -1}, {0, -2}}, {2, 3},
                              {{0, 2, k(2)}, {1, 2, k(2)}, {0, 3, k(2)}, {1, 3, k(2)}});
}

/// mu = (2,1,1), g = 3: two genus-1 vertices joined by two horizontal edges.
inline EnhancedLevelGraph two_horizontal()
{
    return EnhancedLevelGraph({{2, 1, 1}, 3}, {{1, 0}, {1, 0}}, {0, 1, 1},
                              {{0, 1, {}}, {0, 1, {}}});
}

/// mu = (5,-5), g = 1: pole on top, two edges with enhancements 2 and 3.
inline EnhancedLevelGraph cusp_g1()
{
    return EnhancedLevelGraph({{5, -5}, 1}, {{0, 0}, {0, -1}}, {1, 0},
                              {{0, 1, k(2)}, {0, 1, k(3)}});
}

inline EnhancedLevelGraph smooth_g2()
{
    return EnhancedLevelGraph({{1, 1}, 2}, {{2, 0}}, {0, 0}, {});
}

inline std::vector<EnhancedLevelGraph> worked_examples()
{
    return {gamma1(),         gamma2(),         cherry_23(),      cherry_22(),
            two_level_22(),   triangle_221(),   four_vertex_g5(), two_horizontal(),
            cusp_g1(),        smooth_g2()};
}

}  // namespace fixtures
