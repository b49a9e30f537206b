#include "msd/enumerate.hpp"
#include "msd/residue_grc.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace msd;

namespace {

GaussianRational gq(long re, long im = 0) { return {Rational(re), Rational(im)}; }

ResidueAssignment gamma1_residues(long e0, long e1, long e2)
{
    ResidueAssignment rho;
    rho.vertical = {{0, gq(e0)}, {1, gq(e1)}, {2, gq(e2)}};
    return rho;
}

// Unknowns: one per edge (vertical or horizontal), then one per pole leg.
struct ResidueSystem {
    std::vector<std::size_t> pole_legs;
    RatMatrix theorem;  // one row per vertex
    RatMatrix grc;      // one row per GRC condition
};

ResidueSystem residue_system(const EnhancedLevelGraph& g)
{
    ResidueSystem sys;
    for (std::size_t j = 0; j < g.mu().size(); ++j) {
        if (g.mu().m[j] < 0) {
            sys.pole_legs.push_back(j);
        }
    }
    const auto cols = static_cast<Index>(g.num_edges() + sys.pole_legs.size());
    sys.theorem = RatMatrix::Zero(static_cast<Index>(g.num_vertices()), cols);
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        const auto& edge = g.edges()[e];
        if (edge.is_loop()) {
            continue;
        }
        if (g.is_vertical(e)) {
            sys.theorem(static_cast<Index>(g.bottom(e)), static_cast<Index>(e)) += 1;
        } else {
            sys.theorem(static_cast<Index>(std::min(edge.a, edge.b)), static_cast<Index>(e)) += 1;
            sys.theorem(static_cast<Index>(std::max(edge.a, edge.b)), static_cast<Index>(e)) -= 1;
        }
    }
    for (std::size_t k = 0; k < sys.pole_legs.size(); ++k) {
        sys.theorem(static_cast<Index>(g.leg_vertex()[sys.pole_legs[k]]),
                    static_cast<Index>(g.num_edges() + k)) += 1;
    }
    const auto conditions = grc_conditions(g);
    sys.grc = RatMatrix::Zero(static_cast<Index>(conditions.size()), cols);
    for (std::size_t c = 0; c < conditions.size(); ++c) {
        for (auto e : conditions[c].edges) {
            sys.grc(static_cast<Index>(c), static_cast<Index>(e)) = 1;
        }
    }
    return sys;
}

ResidueAssignment assignment_from(const EnhancedLevelGraph& g, const ResidueSystem& sys,
                                  const std::vector<Rational>& re, const std::vector<Rational>& im)
{
    ResidueAssignment rho;
    rho.marked_poles.emplace();
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
        GaussianRational z{re[e], im[e]};
        (g.is_vertical(e) ? rho.vertical : rho.horizontal)[e] = z;
    }
    for (std::size_t k = 0; k < sys.pole_legs.size(); ++k) {
        const auto idx = g.num_edges() + k;
        (*rho.marked_poles)[sys.pole_legs[k]] = {re[idx], im[idx]};
    }
    return rho;
}

// Random point of the kernel of `rows`.
std::vector<Rational> random_solution(const RatMatrix& rows, Index cols, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coeff(-4, 4);
    const auto K = kernel_basis(rows.rows() ? rows : RatMatrix(RatMatrix::Zero(1, cols)));
    std::vector<Rational> x(static_cast<std::size_t>(cols), Rational(0));
    for (Index r = 0; r < K.rows(); ++r) {
        const Rational c(coeff(rng), 1 + std::abs(coeff(rng)));
        for (Index j = 0; j < cols; ++j) {
            x[static_cast<std::size_t>(j)] += c * K(r, j);
        }
    }
    return x;
}

std::vector<EnhancedLevelGraph> small_corpus()
{
    std::vector<EnhancedLevelGraph> out;
    const std::vector<SignatureMu> signatures = {
        {{0}, 1},          {{2, -2}, 1},      {{1, -1}, 1},         {{2, -1, -1}, 1},
        {{2}, 2},          {{1, 1}, 2},       {{3, -1}, 2},         {{1, 0, -1}, 1},
        {{2, 1, 0, 0, -5}, 0}, {{1, 1, 0, 0, -4}, 0}, {{1, 1, -1, -1}, 1}};
    for (const auto& mu : signatures) {
        for (auto& form : enumerate_enhanced_level_graphs(mu, 2)) {
            out.push_back(std::move(form.graph));
        }
    }
    for (auto& g : fixtures::worked_examples()) {
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

TEST(Conditions, Gamma1HasExactlyOne)
{
    const auto conds = grc_conditions(fixtures::gamma1());
    ASSERT_EQ(conds.size(), 1u);
    EXPECT_EQ(conds[0], (GrcCondition{-1, {0}, {0}}));
}

TEST(Conditions, FourVertexGraph)
{
    const auto conds = grc_conditions(fixtures::four_vertex_g5());
    ASSERT_EQ(conds.size(), 3u);
    EXPECT_EQ(conds[0], (GrcCondition{-1, {0}, {0}}));
    EXPECT_EQ(conds[1], (GrcCondition{-1, {1}, {1}}));
    EXPECT_EQ(conds[2], (GrcCondition{-2, {0, 1, 2}, {2, 3}}));
}

TEST(Conditions, PolesEverywhereMeansNone)
{
    EXPECT_TRUE(grc_conditions(fixtures::cherry_23()).empty());
    EXPECT_TRUE(grc_conditions(fixtures::two_level_22()).empty());
    EXPECT_TRUE(grc_conditions(fixtures::smooth_g2()).empty());
}

TEST(CheckGrc, Gamma1)
{
    const auto g = fixtures::gamma1();
    auto ok = gamma1_residues(0, 5, -5);
    EXPECT_TRUE(check_grc(g, ok).passed);
    EXPECT_TRUE(check_grc_homological(g, ok).passed);
    ok.marked_poles = std::map<std::size_t, GaussianRational>{{3, gq(0)}};
    EXPECT_TRUE(check_grc(g, ok).passed);

    const auto bad = gamma1_residues(1, 5, -5);
    const auto direct = check_grc(g, bad);
    EXPECT_FALSE(direct.passed);
    ASSERT_EQ(direct.violated.size(), 1u);
    EXPECT_EQ(direct.violated[0], (GrcCondition{-1, {0}, {0}}));
    const auto homological = check_grc_homological(g, bad);
    EXPECT_FALSE(homological.passed);
    EXPECT_EQ(homological.failed_levels, (std::vector<std::int64_t>{-1}));
}

TEST(CheckGrc, ResidueTheoremWhenPolesGiven)
{
    const auto g = fixtures::gamma1();
    auto rho = gamma1_residues(0, 5, -4);
    rho.marked_poles = std::map<std::size_t, GaussianRational>{{3, gq(0)}};
    const auto report = check_grc(g, rho);
    EXPECT_FALSE(report.passed);
    EXPECT_TRUE(report.violated.empty());
    EXPECT_EQ(report.residue_theorem_failures, (std::vector<std::size_t>{2}));
}

TEST(CheckGrc, MissingValuesAreInputErrors)
{
    const auto g = fixtures::gamma1();
    ResidueAssignment rho;
    rho.vertical = {{0, gq(0)}, {1, gq(1)}};
    EXPECT_THROW(check_grc(g, rho), std::invalid_argument);
    EXPECT_THROW(check_grc_homological(g, rho), std::invalid_argument);
    auto with_poles = gamma1_residues(0, 1, -1);
    with_poles.marked_poles.emplace();
    EXPECT_THROW(check_grc(g, with_poles), std::invalid_argument);
    const auto h = fixtures::two_horizontal();
    EXPECT_THROW(check_grc(h, ResidueAssignment{}), std::invalid_argument);
}

TEST(CheckGrc, FourVertexGraph)
{
    const auto g = fixtures::four_vertex_g5();
    ResidueAssignment rho;
    rho.vertical = {{0, gq(0)}, {1, gq(0)}, {2, gq(2, 1)}, {3, gq(-2, -1)}};
    EXPECT_TRUE(check_grc(g, rho).passed);
    EXPECT_TRUE(check_grc_homological(g, rho).passed);
    rho.vertical[1] = gq(0, 1);
    EXPECT_FALSE(check_grc(g, rho).passed);
}

TEST(CheckGrc, ConditionFreeGraphs)
{
    ResidueAssignment rho;
    rho.vertical = {{0, gq(7)}, {1, gq(-3, 2)}};
    EXPECT_TRUE(check_grc(fixtures::cherry_23(), rho).passed);
    // The bottom vertices have no poles, so the residue theorem kills both values.
    EXPECT_FALSE(check_grc_homological(fixtures::cherry_23(), rho).passed);
    rho.vertical = {{0, gq(0)}, {1, gq(0)}};
    EXPECT_TRUE(check_grc_homological(fixtures::cherry_23(), rho).passed);
    EXPECT_TRUE(check_grc(fixtures::smooth_g2(), ResidueAssignment{}).passed);
}

TEST(Properties, CheckersAgreeUnderResidueTheorem)
{
    std::mt19937_64 rng(99);
    std::size_t graphs = 0;
    std::size_t failing = 0;
    for (const auto& g : small_corpus()) {
        ++graphs;
        const auto sys = residue_system(g);
        const auto cols = sys.theorem.cols();
        for (int trial = 0; trial < 12; ++trial) {
            // Impose a random subset of the conditions so both verdicts occur.
            std::vector<Index> chosen;
            for (Index c = 0; c < sys.grc.rows(); ++c) {
                if (rng() % 2) {
                    chosen.push_back(c);
                }
            }
            RatMatrix rows(sys.theorem.rows() + static_cast<Index>(chosen.size()), cols);
            rows.topRows(sys.theorem.rows()) = sys.theorem;
            for (std::size_t k = 0; k < chosen.size(); ++k) {
                rows.row(sys.theorem.rows() + static_cast<Index>(k)) = sys.grc.row(chosen[k]);
            }
            const auto re = random_solution(rows, cols, rng);
            const auto im = random_solution(rows, cols, rng);
            const auto rho = assignment_from(g, sys, re, im);
            const auto direct = check_grc(g, rho);
            const auto homological = check_grc_homological(g, rho);
            EXPECT_TRUE(direct.residue_theorem_failures.empty());
            EXPECT_EQ(direct.passed, homological.passed) << canonical_form(g).key;
            failing += direct.passed ? 0 : 1;
        }
    }
    EXPECT_GT(graphs, 20u);
    EXPECT_GT(failing, 0u);
}

TEST(Properties, PassSetIsLinear)
{
    std::mt19937_64 rng(5);
    for (const auto& g : small_corpus()) {
        const auto sys = residue_system(g);
        const auto cols = sys.theorem.cols();
        RatMatrix rows(sys.theorem.rows() + sys.grc.rows(), cols);
        rows.topRows(sys.theorem.rows()) = sys.theorem;
        rows.bottomRows(sys.grc.rows()) = sys.grc;
        const auto a_re = random_solution(rows, cols, rng);
        const auto b_re = random_solution(rows, cols, rng);
        const auto a_im = random_solution(rows, cols, rng);
        std::vector<Rational> sum_re(a_re.size()), scaled_im(a_im.size());
        for (std::size_t j = 0; j < a_re.size(); ++j) {
            sum_re[j] = a_re[j] + b_re[j];
            scaled_im[j] = Rational(-7, 3) * a_im[j];
        }
        EXPECT_TRUE(check_grc(g, assignment_from(g, sys, a_re, a_im)).passed);
        EXPECT_TRUE(check_grc(g, assignment_from(g, sys, sum_re, scaled_im)).passed);
    }
}

TEST(Dimensions, StratumDim)
{
    EXPECT_EQ(stratum_dim({{2, 1, 0, 0, -5}, 0}), 3);
    EXPECT_EQ(stratum_dim({{2, 1, 1}, 3}), 8);
    EXPECT_EQ(stratum_dim({{4, 4, 2, -2}, 5}), 12);
    EXPECT_EQ(stratum_dim({{1, 1}, 2}), 5);
}

TEST(Dimensions, RelativeCohomology)
{
    EXPECT_EQ(relative_cohomology_dim(1, 2, 2), 4);
    EXPECT_EQ(relative_cohomology_dim(0, 3, 0), 2);
    EXPECT_EQ(relative_cohomology_dim(2, 0, 3), 6);
    EXPECT_EQ(relative_cohomology_dim(2, 0, 0), 4);
}

TEST(Dimensions, GrcSpaces)
{
    const auto g1 = fixtures::gamma1();
    EXPECT_EQ(grc_space_dim(g1, 0), 8);
    EXPECT_EQ(grc_space_dim(g1, -1), 3);
    EXPECT_EQ(grc_space_dim(g1, -2), 1);
    EXPECT_EQ(grc_space_dim(fixtures::two_horizontal(), 0), 6);
    EXPECT_EQ(grc_space_dim(fixtures::smooth_g2(), 0), stratum_dim(fixtures::smooth_g2().mu()));
    EXPECT_THROW(grc_space_dim(g1, -3), std::out_of_range);
}

TEST(Dimensions, IdentityOnWorkedExamples)
{
    const auto d1 = dim_identity_check(fixtures::gamma1());
    EXPECT_EQ(d1.per_level, (std::vector<std::int64_t>{8, 3, 1}));
    EXPECT_EQ(d1.lhs, 12);
    EXPECT_EQ(d1.rhs, 12);
    const auto d2 = dim_identity_check(fixtures::two_horizontal());
    EXPECT_EQ(d2.lhs, 6);
    EXPECT_EQ(d2.rhs, 6);
    for (const auto& g : fixtures::worked_examples()) {
        EXPECT_TRUE(dim_identity_check(g).equal) << canonical_form(g).key;
    }
}

TEST(Dimensions, InvariantUnderRelabelingWithinLevel)
{
    // Swap the two top vertices of the four-vertex graph.
    const auto g = fixtures::four_vertex_g5();
    const EnhancedLevelGraph swapped(g.mu(), {{2, 0}, {2, 0}, {0, -1}, {0, -2}}, {2, 3},
                                     {{1, 2, 2}, {0, 2, 2}, {1, 3, 2}, {0, 3, 2}});
    for (std::int64_t i = 0; i >= -g.depth(); --i) {
        EXPECT_EQ(grc_space_dim(g, i), grc_space_dim(swapped, i));
    }
}
