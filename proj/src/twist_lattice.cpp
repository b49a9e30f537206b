#include "msd/twist_lattice.hpp"

#include <deque>
#include <sstream>

namespace msd {

Integer FinAbGroup::order() const
{
    if (!is_finite()) {
        throw std::domain_error("order of an infinite group");
    }
    Integer result = 1;
    for (const auto& d : invariant_factors) {
        result *= d;
    }
    return result;
}

std::string FinAbGroup::to_string() const
{
    if (is_trivial()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& d : invariant_factors) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    if (free_rank > 0) {
        os << (first ? "" : " + ") << "Z^" << free_rank;
    }
    return os.str();
}

FinAbGroup FinAbGroup::cokernel(const IntMatrix& relations)
{
    FinAbGroup group;
    const auto snf = smith_normal_form(relations);
    Index rank = 0;
    for (const auto& d : snf.diagonal()) {
        if (d != 0) {
            ++rank;
            if (d > 1) {
                group.invariant_factors.push_back(d);
            }
        }
    }
    group.free_rank = static_cast<std::size_t>(relations.rows() - rank);
    return group;
}

FinAbGroup FinAbGroup::cyclic_sum(const std::vector<Integer>& orders)
{
    const auto n = static_cast<Index>(orders.size());
    IntMatrix diag = IntMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        diag(i, i) = orders[static_cast<std::size_t>(i)];
    }
    return cokernel(diag);
}

namespace {

std::vector<Integer> enhancements(const EnhancedLevelGraph& graph)
{
    std::vector<Integer> kappas;
    for (auto e : graph.vertical_edges()) {
        kappas.emplace_back(graph.kappa(e));
    }
    return kappas;
}

// [phi | diag(kappa)]: its integer kernel projects onto ker(phi mod kappa),
// its cokernel is the cokernel of phi into the prong rotation group.
IntMatrix augmented_phi(const PhiMap& phi)
{
    const auto rows = phi.matrix.rows();
    const auto cols = phi.matrix.cols();
    IntMatrix block = IntMatrix::Zero(rows, cols + rows);
    block.leftCols(cols) = phi.matrix;
    for (Index r = 0; r < rows; ++r) {
        block(r, cols + r) = phi.moduli[static_cast<std::size_t>(r)];
    }
    return block;
}

}  // namespace

FinAbGroup prong_rotation_group(const EnhancedLevelGraph& graph)
{
    return FinAbGroup::cyclic_sum(enhancements(graph));
}

PhiMap phi_map(const EnhancedLevelGraph& graph, bool extended)
{
    PhiMap phi;
    phi.extended = extended;
    phi.edges = graph.vertical_edges();
    phi.moduli = enhancements(graph);
    const Index offset = extended ? 0 : 1;
    const Index cols = graph.depth() + 1 - offset;
    phi.matrix = IntMatrix::Zero(static_cast<Index>(phi.edges.size()), cols);
    for (std::size_t r = 0; r < phi.edges.size(); ++r) {
        const auto e = phi.edges[r];
        const Index top_col = -graph.level_top(e) - offset;
        const Index bot_col = -graph.level_bottom(e) - offset;
        if (top_col >= 0) {
            phi.matrix(static_cast<Index>(r), top_col) = 1;
        }
        phi.matrix(static_cast<Index>(r), bot_col) = -1;
    }
    return phi;
}

IntMatrix twist_group_basis(const EnhancedLevelGraph& graph)
{
    const auto phi = phi_map(graph, false);
    const Index n = phi.matrix.cols();
    const IntMatrix kernel = integer_kernel(augmented_phi(phi));
    return hermite_normal_form(IntMatrix(kernel.leftCols(n)));
}

SimpleTwistData simple_twist_data(const EnhancedLevelGraph& graph)
{
    const auto depth = graph.depth();
    SimpleTwistData data;
    data.generators = IntMatrix::Zero(depth, depth);
    for (std::int64_t k = 0; k < depth; ++k) {
        const std::int64_t level = -k - 1;
        std::vector<Integer> crossing;
        for (auto e : graph.vertical_edges()) {
            if (graph.level_bottom(e) <= level && level < graph.level_top(e)) {
                crossing.emplace_back(graph.kappa(e));
            }
        }
        if (crossing.empty()) {
            throw std::logic_error("level " + std::to_string(level) +
                                   " is crossed by no edge; graph is disconnected");
        }
        data.a.push_back(lcm_of(crossing));
        for (std::int64_t c = k; c < depth; ++c) {
            data.generators(k, c) = data.a.back();
        }
    }
    return data;
}

IntVector triangular_to_standard(const IntVector& coefficients)
{
    IntVector out = IntVector::Zero(coefficients.size());
    Integer running = 0;
    for (Index k = 0; k < coefficients.size(); ++k) {
        running += coefficients(k);
        out(k) = running;
    }
    return out;
}

FinAbGroup k_group(const EnhancedLevelGraph& graph)
{
    const IntMatrix basis = twist_group_basis(graph);
    const auto simple = simple_twist_data(graph);
    const Index n = basis.rows();
    IntMatrix change(n, n);
    for (Index r = 0; r < n; ++r) {
        auto coords = lattice_coordinates(basis, IntVector(simple.generators.row(r).transpose()));
        if (!coords) {
            throw std::logic_error("simple twist outside the twist lattice");
        }
        change.row(r) = coords->transpose();
    }
    return FinAbGroup::cokernel(IntMatrix(change.transpose()));
}

Integer pm_class_count(const EnhancedLevelGraph& graph)
{
    return FinAbGroup::cokernel(augmented_phi(phi_map(graph, true))).order();
}

std::vector<Orbit> pm_orbits_bruteforce(const EnhancedLevelGraph& graph, std::uint64_t bound)
{
    const auto phi = phi_map(graph, true);
    const auto edges = phi.edges.size();
    std::vector<std::uint64_t> radix(edges);
    std::uint64_t states = 1;
    for (std::size_t r = 0; r < edges; ++r) {
        radix[r] = graph.kappa(phi.edges[r]);
        if (radix[r] > bound || states > bound / radix[r]) {
            throw BoundExceeded("prong-matching space exceeds the orbit oracle bound of " +
                                std::to_string(bound));
        }
        states *= radix[r];
    }

    std::vector<std::vector<std::uint64_t>> generators;
    for (Index c = 0; c < phi.matrix.cols(); ++c) {
        std::vector<std::uint64_t> step(edges);
        for (std::size_t r = 0; r < edges; ++r) {
            const auto entry = phi.matrix(static_cast<Index>(r), c).convert_to<std::int64_t>();
            const auto mod = static_cast<std::int64_t>(radix[r]);
            step[r] = static_cast<std::uint64_t>(((entry % mod) + mod) % mod);
        }
        generators.push_back(std::move(step));
    }

    // Last edge is the least significant digit, so index order is tuple order.
    auto decode = [&](std::uint64_t index) {
        ProngMatching tuple(edges);
        for (std::size_t r = edges; r-- > 0;) {
            tuple[r] = static_cast<std::int64_t>(index % radix[r]);
            index /= radix[r];
        }
        return tuple;
    };
    auto encode = [&](const ProngMatching& tuple) {
        std::uint64_t index = 0;
        for (std::size_t r = 0; r < edges; ++r) {
            index = index * radix[r] + static_cast<std::uint64_t>(tuple[r]);
        }
        return index;
    };

    std::vector<bool> seen(states, false);
    std::vector<Orbit> orbits;
    for (std::uint64_t start = 0; start < states; ++start) {
        if (seen[start]) {
            continue;
        }
        std::vector<std::uint64_t> members{start};
        std::deque<std::uint64_t> queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            const auto current = decode(queue.front());
            queue.pop_front();
            for (const auto& step : generators) {
                ProngMatching next(edges);
                for (std::size_t r = 0; r < edges; ++r) {
                    next[r] = static_cast<std::int64_t>(
                        (static_cast<std::uint64_t>(current[r]) + step[r]) % radix[r]);
                }
                const auto index = encode(next);
                if (!seen[index]) {
                    seen[index] = true;
                    members.push_back(index);
                    queue.push_back(index);
                }
            }
        }
        std::sort(members.begin(), members.end());
        Orbit orbit;
        for (auto index : members) {
            orbit.push_back(decode(index));
        }
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

CoveringGroups covering_groups(const EnhancedLevelGraph& graph)
{
    CoveringGroups groups;
    const auto simple = simple_twist_data(graph);
    groups.h_orders = simple.a;
    groups.h = FinAbGroup::cyclic_sum(simple.a);
    const IntMatrix basis = twist_group_basis(graph);
    groups.g = FinAbGroup::cokernel(IntMatrix(basis.transpose()));
    groups.k = k_group(graph);
    Integer h_order = 1;
    for (const auto& a : simple.a) {
        h_order *= a;
    }
    groups.sequence_check = groups.k.order() * groups.g.order() == h_order;
    return groups;
}

}  // namespace msd
