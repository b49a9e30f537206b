#include "msd/degenerations.hpp"
#include "msd/enumerate.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace msd;

namespace {

std::set<std::string> keys_of(const std::vector<CanonicalForm>& forms)
{
    std::set<std::string> out;
    for (const auto& f : forms) {
        out.insert(f.key);
    }
    return out;
}

// Relabel vertices by `perm` (new index of old vertex v is perm[v]), reverse
// the edge list and flip every edge.
EnhancedLevelGraph relabel(const EnhancedLevelGraph& g, const std::vector<std::size_t>& perm)
{
    std::vector<Vertex> vertices(g.num_vertices());
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        vertices[perm[v]] = g.vertices()[v];
    }
    std::vector<std::size_t> legs;
    for (auto v : g.leg_vertex()) {
        legs.push_back(perm[v]);
    }
    std::vector<Edge> edges;
    for (auto it = g.edges().rbegin(); it != g.edges().rend(); ++it) {
        edges.push_back({perm[it->b], perm[it->a], it->kappa});
    }
    return EnhancedLevelGraph(g.mu(), vertices, legs, edges);
}

}  // namespace

TEST(Canonical, Idempotent)
{
    for (const auto& g : fixtures::worked_examples()) {
        const auto form = canonical_form(g);
        const auto again = canonical_form(form.graph);
        EXPECT_EQ(again.key, form.key);
        EXPECT_EQ(again.graph, form.graph);
    }
}

TEST(Canonical, InvariantUnderRelabeling)
{
    std::mt19937_64 rng(8);
    for (const auto& g : fixtures::worked_examples()) {
        const auto key = canonical_form(g).key;
        std::vector<std::size_t> perm(g.num_vertices());
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 6; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            EXPECT_EQ(canonical_form(relabel(g, perm)).key, key);
        }
    }
}

TEST(Canonical, DistinguishesEnhancements)
{
    EXPECT_NE(canonical_form(fixtures::gamma1()).key, canonical_form(fixtures::gamma2()).key);
    EXPECT_NE(canonical_form(fixtures::cherry_23()).key, canonical_form(fixtures::cherry_22()).key);
    EXPECT_EQ(canonical_form(fixtures::gamma1()).key,
              "g5|mu:4:4:2:-2|v:0/3/3:-1/1/1/4:-2/0/2|e:0-1/3:0-2/1:1-2/3");
}

TEST(Enhancements, TriangleHasThree)
{
    const auto found = enumerate_enhancements(fixtures::triangle_skeleton());
    ASSERT_EQ(found.size(), 3u);
    const std::vector<std::array<std::int64_t, 3>> expected{{1, 1, 3}, {2, 2, 2}, {3, 3, 1}};
    for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t e = 0; e < 3; ++e) {
            EXPECT_EQ(found[k].kappa(e), expected[k][e]);
        }
        EXPECT_TRUE(validate(found[k]).valid);
    }
    EXPECT_EQ(found[2], fixtures::gamma1());
    EXPECT_EQ(found[0], fixtures::gamma2());
}

TEST(Enhancements, CherryIsForced)
{
    auto skeleton_edges = fixtures::cherry_23().edges();
    for (auto& e : skeleton_edges) {
        e.kappa.reset();
    }
    const auto g = fixtures::cherry_23();
    const EnhancedLevelGraph skeleton(g.mu(), g.vertices(), g.leg_vertex(), skeleton_edges);
    const auto found = enumerate_enhancements(skeleton);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(found[0], g);
}

TEST(Enhancements, InfeasibleSkeleton)
{
    // Holomorphic top with a downward edge can never reach degree -2.
    const EnhancedLevelGraph skeleton({{1, 1, -2}, 0}, {{0, 0}, {0, -1}}, {0, 0, 1},
                                      {{0, 1, std::nullopt}});
    EXPECT_TRUE(enumerate_enhancements(skeleton).empty());
}

TEST(Enumerate, SmoothOnlyAtCodimZero)
{
    const auto forms = enumerate_enhanced_level_graphs({{2, 1, 0, 0, -5}, 0}, 0);
    ASSERT_EQ(forms.size(), 1u);
    EXPECT_EQ(forms[0].graph.num_vertices(), 1u);
    EXPECT_EQ(codim(forms[0].graph), 0);
}

TEST(Enumerate, ContainsTheCherry)
{
    const auto keys = keys_of(enumerate_enhanced_level_graphs({{2, 1, 0, 0, -5}, 0}, 2));
    EXPECT_TRUE(keys.count(canonical_form(fixtures::cherry_23()).key));
    const auto keys22 = keys_of(enumerate_enhanced_level_graphs({{1, 1, 0, 0, -4}, 0}, 1));
    EXPECT_TRUE(keys22.count(canonical_form(fixtures::cherry_22()).key));
}

TEST(Enumerate, GenusFiveWithFixedVertexGenera)
{
    EnumerationOptions options;
    options.max_codim = 2;
    options.vertex_genera = std::vector<std::int64_t>{3, 1, 0};
    const auto keys = keys_of(enumerate_enhanced_level_graphs({{4, 4, 2, -2}, 5}, options));
    for (const auto& g : enumerate_enhancements(fixtures::triangle_skeleton())) {
        EXPECT_TRUE(keys.count(canonical_form(g).key));
    }
}

TEST(Enumerate, MatchesGenusZeroOracle)
{
    const std::vector<SignatureMu> signatures = {
        {{1, -1, -2}, 0},       {{0, 0, -2}, 0},       {{2, -1, -3}, 0},
        {{1, 1, -2, -2}, 0},    {{2, 0, -1, -3}, 0},   {{0, 0, 0, -2}, 0},
        {{2, 1, 0, 0, -5}, 0},  {{1, 1, 0, 0, -4}, 0}, {{1, 1, 1, -2, -3}, 0}};
    std::size_t total = 0;
    std::size_t three_level = 0;
    for (const auto& mu : signatures) {
        const auto forms = enumerate_enhanced_level_graphs(mu, 3);
        EXPECT_EQ(keys_of(forms), oracles::genus_zero_graphs(mu));
        total += forms.size();
        for (const auto& f : forms) {
            three_level += f.graph.depth() == 2 ? 1 : 0;
        }
    }
    EXPECT_GT(total, 40u);
    EXPECT_GT(three_level, 0u);
}

TEST(Enumerate, OutputIsValidSortedAndClosedUnderUndegeneration)
{
    const std::vector<SignatureMu> signatures = {
        {{2, 1, 0, 0, -5}, 0}, {{3, 1, -4}, 1}, {{2}, 2}, {{1, 1}, 2}, {{2, -2}, 1}};
    for (const auto& mu : signatures) {
        const auto forms = enumerate_enhanced_level_graphs(mu, 2);
        const auto keys = keys_of(forms);
        EXPECT_EQ(keys.size(), forms.size());
        for (std::size_t k = 1; k < forms.size(); ++k) {
            EXPECT_LT(forms[k - 1].key, forms[k].key);
        }
        for (const auto& form : forms) {
            EXPECT_TRUE(validate(form.graph).valid) << form.key;
            EXPECT_LE(codim(form.graph), 2);
            EXPECT_EQ(canonical_form(form.graph).key, form.key);
            for (const auto& u : enumerate_undegenerations(form.graph)) {
                EXPECT_TRUE(keys.count(canonical_form(u.graph).key)) << form.key;
            }
        }
    }
}

TEST(Enumerate, Refusals)
{
    EXPECT_THROW(enumerate_enhanced_level_graphs({{1, 1}, 1}, 1), std::invalid_argument);
    EXPECT_THROW(enumerate_enhanced_level_graphs({{}, 1}, 1), std::invalid_argument);
    EXPECT_THROW(enumerate_enhanced_level_graphs({{0, -2}, 0}, 1), std::invalid_argument);
    EXPECT_THROW(enumerate_enhanced_level_graphs({{2}, 2}, -1), std::invalid_argument);
    EXPECT_THROW(enumerate_enhanced_level_graphs({{4, 4, 2, -2}, 5}, 2), EnumerationBoundsExceeded);
    EnumerationOptions capped;
    capped.max_codim = 1;
    capped.max_vertices = 2;
    EXPECT_NO_THROW(enumerate_enhanced_level_graphs({{2, 1, 1}, 3}, capped));
}
