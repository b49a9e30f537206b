#include "msd/enumerate.hpp"
#include "msd/toric_closure.hpp"
#include "msd/twist_lattice.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace msd;

namespace {

IntVector vec(std::initializer_list<long> xs)
{
    IntVector v(static_cast<Index>(xs.size()));
    Index k = 0;
    for (auto x : xs) {
        v(k++) = x;
    }
    return v;
}

using Point = std::vector<std::int64_t>;

// Oracle: close the generators under addition inside the box prod [0, a_i),
// once modulo a (the group) and once without wrapping (the monoid). The
// monoid is normal iff the two closures agree.
bool box_oracle_normal(const CharacterMonoid& monoid)
{
    const auto n = static_cast<std::size_t>(monoid.ambient_rank);
    Point a(n);
    for (std::size_t k = 0; k < n; ++k) {
        a[k] = monoid.generators[k](static_cast<Index>(k)).convert_to<std::int64_t>();
    }
    std::vector<Point> gens;
    for (const auto& g : monoid.generators) {
        Point p(n);
        for (std::size_t k = 0; k < n; ++k) {
            p[k] = g(static_cast<Index>(k)).convert_to<std::int64_t>();
        }
        gens.push_back(p);
    }
    auto close = [&](bool wrap) {
        std::set<Point> seen{Point(n, 0)};
        std::vector<Point> frontier{Point(n, 0)};
        while (!frontier.empty()) {
            const auto x = frontier.back();
            frontier.pop_back();
            for (const auto& g : gens) {
                Point y(n);
                bool inside = true;
                for (std::size_t k = 0; k < n; ++k) {
                    y[k] = x[k] + g[k];
                    if (wrap) {
                        y[k] %= a[k];
                    } else if (y[k] >= a[k]) {
                        // Generators are nonnegative, so partial sums of a
                        // box point never leave the box.
                        inside = false;
                    }
                }
                if (inside && seen.insert(y).second) {
                    frontier.push_back(y);
                }
            }
        }
        return seen;
    };
    return close(true) == close(false);
}

std::vector<EnhancedLevelGraph> multi_level_corpus()
{
    std::vector<EnhancedLevelGraph> out;
    const std::vector<SignatureMu> signatures = {
        {{2, 1, 0, 0, -5}, 0}, {{1, 1, 0, 0, -4}, 0}, {{3, 1, -4}, 1},
        {{5, -5}, 1},          {{2, -2}, 1},          {{2, 2, -4}, 1},
        {{4}, 3}};
    for (const auto& mu : signatures) {
        for (auto& form : enumerate_enhanced_level_graphs(mu, 2)) {
            if (form.graph.depth() > 0) {
                out.push_back(std::move(form.graph));
            }
        }
    }
    for (auto& g : fixtures::worked_examples()) {
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

TEST(Equations, Gamma1)
{
    const auto eqs = torus_equations(fixtures::gamma1());
    ASSERT_EQ(eqs.size(), 3u);
    EXPECT_EQ(eqs[0].to_string(), "r-1 = rho0^3");
    EXPECT_EQ(eqs[1].to_string(), "r-2 = rho1^3");
    EXPECT_EQ(eqs[2].to_string(), "r-1*r-2 = rho2");
    EXPECT_TRUE(torus_equations(fixtures::two_horizontal()).empty());
}

TEST(Monoid, CherryIsGeneratedBySixThreeTwo)
{
    const auto m = character_monoid(fixtures::cherry_23());
    ASSERT_EQ(m.ambient_rank, 1);
    ASSERT_EQ(m.generators.size(), 3u);
    EXPECT_EQ(m.generators[0], vec({6}));
    EXPECT_EQ(m.generators[1], vec({3}));
    EXPECT_EQ(m.generators[2], vec({2}));
    EXPECT_EQ(m.labels, (std::vector<std::string>{"r-1", "rho0", "rho1"}));
}

TEST(Monoid, Gamma1)
{
    const auto m = character_monoid(fixtures::gamma1());
    ASSERT_EQ(m.generators.size(), 5u);
    EXPECT_EQ(m.generators[0], vec({3, 0}));
    EXPECT_EQ(m.generators[1], vec({0, 3}));
    EXPECT_EQ(m.generators[2], vec({1, 0}));
    EXPECT_EQ(m.generators[3], vec({0, 1}));
    EXPECT_EQ(m.generators[4], vec({3, 3}));
}

TEST(Monoid, EdgeCharactersRaiseToLevelProducts)
{
    for (const auto& g : fixtures::worked_examples()) {
        const auto m = character_monoid(g);
        const auto eqs = torus_equations(g);
        const auto n = static_cast<std::size_t>(m.ambient_rank);
        for (std::size_t k = 0; k < eqs.size(); ++k) {
            IntVector rhs = IntVector::Zero(m.ambient_rank);
            for (auto level : eqs[k].levels) {
                rhs += m.generators[static_cast<std::size_t>(-level - 1)];
            }
            EXPECT_EQ(IntVector(m.generators[n + k] * Integer(eqs[k].exponent)), rhs);
        }
    }
}

TEST(Normality, CherryIsNotNormal)
{
    const auto r = closure_normality(fixtures::cherry_23());
    EXPECT_EQ(r.verdict, Normality::non_normal);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(*r.witness, (Point{1}));
    EXPECT_EQ(closure_normality(fixtures::cusp_g1()).verdict, Normality::non_normal);
}

TEST(Normality, NormalExamples)
{
    EXPECT_EQ(closure_normality(fixtures::gamma1()).verdict, Normality::normal);
    EXPECT_EQ(closure_normality(fixtures::gamma2()).verdict, Normality::normal);
    EXPECT_EQ(closure_normality(fixtures::cherry_22()).verdict, Normality::normal);
    EXPECT_EQ(closure_normality(fixtures::two_level_22()).verdict, Normality::normal);
    EXPECT_EQ(closure_normality(fixtures::smooth_g2()).verdict, Normality::normal);
}

TEST(Normality, SmallBoundIsInconclusive)
{
    const auto r = closure_normality(fixtures::gamma2(), 1);
    EXPECT_EQ(r.verdict, Normality::inconclusive);
    EXPECT_EQ(r.search_bound, 1);
    EXPECT_FALSE(r.witness);
}

TEST(Normality, AgreesWithBoxClosureOracle)
{
    std::size_t non_normal = 0;
    std::size_t graphs = 0;
    for (const auto& g : multi_level_corpus()) {
        const auto m = character_monoid(g);
        std::int64_t box = 0;
        for (std::size_t k = 0; k < static_cast<std::size_t>(m.ambient_rank); ++k) {
            box += m.generators[k](static_cast<Index>(k)).convert_to<std::int64_t>() - 1;
        }
        const auto r = closure_normality(g, box);
        ASSERT_NE(r.verdict, Normality::inconclusive);
        const bool expected = box_oracle_normal(m);
        EXPECT_EQ(r.verdict == Normality::normal, expected) << canonical_form(g).key;
        non_normal += expected ? 0 : 1;
        ++graphs;
        if (r.witness) {
            // The witness lies in the group but not in the monoid.
            IntVector w(m.ambient_rank);
            for (Index k = 0; k < w.size(); ++k) {
                w(k) = (*r.witness)[static_cast<std::size_t>(k)];
            }
            IntMatrix stacked(static_cast<Index>(m.generators.size()), m.ambient_rank);
            for (std::size_t j = 0; j < m.generators.size(); ++j) {
                stacked.row(static_cast<Index>(j)) = m.generators[j].transpose();
            }
            EXPECT_TRUE(lattice_coordinates(hermite_normal_form(stacked), w));
        }
    }
    EXPECT_GT(graphs, 10u);
    EXPECT_GT(non_normal, 0u);
}
