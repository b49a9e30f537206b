#include "msd/toric_closure.hpp"

#include "msd/twist_lattice.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace msd {

namespace {

// Refuse to walk more box points than this; the verdict becomes inconclusive.
constexpr std::size_t kMaxBoxPoints = 4'000'000;

}  // namespace

std::string MonomialEquation::to_string() const
{
    std::ostringstream os;
    for (std::size_t k = 0; k < levels.size(); ++k) {
        os << (k ? "*" : "") << "r" << levels[k];
    }
    os << " = rho" << edge;
    if (exponent != 1) {
        os << "^" << exponent;
    }
    return os.str();
}

std::vector<MonomialEquation> torus_equations(const EnhancedLevelGraph& graph)
{
    std::vector<MonomialEquation> out;
    for (auto e : graph.vertical_edges()) {
        MonomialEquation eq;
        eq.edge = e;
        eq.exponent = graph.kappa(e);
        for (auto i = graph.level_top(e) - 1; i >= graph.level_bottom(e); --i) {
            eq.levels.push_back(i);
        }
        out.push_back(std::move(eq));
    }
    return out;
}

CharacterMonoid character_monoid(const EnhancedLevelGraph& graph)
{
    const auto simple = simple_twist_data(graph);
    CharacterMonoid monoid;
    monoid.ambient_rank = graph.depth();
    const auto n = static_cast<Index>(graph.depth());
    for (Index k = 0; k < n; ++k) {
        IntVector g = IntVector::Zero(n);
        g(k) = simple.a[static_cast<std::size_t>(k)];
        monoid.generators.push_back(std::move(g));
        monoid.labels.push_back("r" + std::to_string(-k - 1));
    }
    for (const auto& eq : torus_equations(graph)) {
        IntVector g = IntVector::Zero(n);
        for (auto level : eq.levels) {
            const auto k = static_cast<Index>(-level - 1);
            g(k) = simple.a[static_cast<std::size_t>(k)] / eq.exponent;
        }
        monoid.generators.push_back(std::move(g));
        monoid.labels.push_back("rho" + std::to_string(eq.edge));
    }
    return monoid;
}

std::string to_string(Normality verdict)
{
    switch (verdict) {
    case Normality::normal: return "normal";
    case Normality::non_normal: return "non_normal";
    case Normality::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

NormalityResult closure_normality(const EnhancedLevelGraph& graph,
                                  std::optional<std::int64_t> search_bound)
{
    const auto monoid = character_monoid(graph);
    const auto n = static_cast<std::size_t>(monoid.ambient_rank);
    NormalityResult result;
    if (n == 0) {
        result.verdict = Normality::normal;
        return result;
    }

    Integer largest = 0;
    for (const auto& g : monoid.generators) {
        for (Index k = 0; k < g.size(); ++k) {
            largest = std::max(largest, g(k));
        }
    }
    const Integer cap = std::numeric_limits<std::int64_t>::max() / 4;
    const Integer bound_big = search_bound ? Integer(*search_bound) : std::min(Integer(2) * largest, cap);
    result.search_bound = bound_big.convert_to<std::int64_t>();
    const auto bound = result.search_bound;

    // Box extents a_i - 1, clamped by the search bound.
    std::vector<std::int64_t> extent(n);
    Integer full_box_sum = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const Integer a = monoid.generators[k](static_cast<Index>(k));
        full_box_sum += a - 1;
        extent[k] = std::min(a - 1, Integer(bound)).convert_to<std::int64_t>();
    }
    const std::int64_t max_sum =
        std::min(full_box_sum, Integer(bound)).convert_to<std::int64_t>();

    IntMatrix stacked(static_cast<Index>(monoid.generators.size()), static_cast<Index>(n));
    for (std::size_t r = 0; r < monoid.generators.size(); ++r) {
        stacked.row(static_cast<Index>(r)) = monoid.generators[r].transpose();
    }
    const IntMatrix group_basis = hermite_normal_form(stacked);

    // Generators small enough to matter inside the searched region.
    std::vector<std::vector<std::int64_t>> steps;
    for (const auto& g : monoid.generators) {
        bool fits = true;
        std::vector<std::int64_t> step(n);
        for (std::size_t k = 0; k < n; ++k) {
            if (g(static_cast<Index>(k)) > extent[k]) {
                fits = false;
                break;
            }
            step[k] = g(static_cast<Index>(k)).convert_to<std::int64_t>();
        }
        if (fits) {
            steps.push_back(std::move(step));
        }
    }

    std::map<std::vector<std::int64_t>, bool> member;
    member[std::vector<std::int64_t>(n, 0)] = true;
    // Points are visited by increasing sum, so every x - g is already known.
    auto in_monoid = [&](const std::vector<std::int64_t>& x) {
        for (const auto& step : steps) {
            std::vector<std::int64_t> y(n);
            bool ok = true;
            for (std::size_t k = 0; k < n; ++k) {
                y[k] = x[k] - step[k];
                if (y[k] < 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                auto it = member.find(y);
                if (it != member.end() && it->second) {
                    return true;
                }
            }
        }
        return false;
    };

    bool exhausted_budget = false;
    std::vector<std::int64_t> x(n, 0);
    for (std::int64_t s = 1; s <= max_sum && !exhausted_budget; ++s) {
        // Enumerate x in the clamped box with sum s, lexicographically.
        std::function<bool(std::size_t, std::int64_t)> visit = [&](std::size_t k,
                                                                   std::int64_t left) -> bool {
            if (k + 1 == n) {
                if (left > extent[k]) {
                    return false;
                }
                x[k] = left;
                if (++result.points_examined > kMaxBoxPoints) {
                    exhausted_budget = true;
                    return true;
                }
                const bool inside = in_monoid(x);
                member[x] = inside;
                if (!inside) {
                    IntVector v(static_cast<Index>(n));
                    for (std::size_t t = 0; t < n; ++t) {
                        v(static_cast<Index>(t)) = x[t];
                    }
                    if (lattice_coordinates(group_basis, v)) {
                        result.verdict = Normality::non_normal;
                        result.witness = x;
                        return true;
                    }
                }
                return false;
            }
            for (std::int64_t c = 0; c <= std::min(left, extent[k]); ++c) {
                x[k] = c;
                if (visit(k + 1, left - c)) {
                    return true;
                }
            }
            return false;
        };
        if (visit(0, s) && !exhausted_budget) {
            return result;
        }
    }
    result.verdict = (!exhausted_budget && full_box_sum <= bound) ? Normality::normal
                                                                  : Normality::inconclusive;
    return result;
}

}  // namespace msd
