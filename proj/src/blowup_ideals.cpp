#include "msd/blowup_ideals.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace msd {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("monomial exponent overflow");
    }
    return out;
}

void require_same_arity(const Monomial& a, const Monomial& b)
{
    if (a.exponents.size() != b.exponents.size()) {
        throw std::invalid_argument("monomials over different variable sets");
    }
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens)
{
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            redundant = j != i && gens[j].divides(gens[i]);
        }
        if (!redundant) {
            out.push_back(gens[i]);
        }
    }
    return out;
}

}  // namespace

bool Monomial::is_unit() const
{
    return std::all_of(exponents.begin(), exponents.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const
{
    require_same_arity(*this, other);
    for (std::size_t k = 0; k < exponents.size(); ++k) {
        if (exponents[k] > other.exponents[k]) {
            return false;
        }
    }
    return true;
}

std::string Monomial::to_string(const std::vector<std::string>& variables) const
{
    std::ostringstream os;
    bool any = false;
    for (std::size_t k = 0; k < exponents.size(); ++k) {
        if (exponents[k] == 0) {
            continue;
        }
        os << (any ? "*" : "") << variables.at(k);
        if (exponents[k] != 1) {
            os << "^" << exponents[k];
        }
        any = true;
    }
    return any ? os.str() : "1";
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    require_same_arity(a, b);
    Monomial out{std::vector<std::int64_t>(a.exponents.size())};
    for (std::size_t k = 0; k < a.exponents.size(); ++k) {
        out.exponents[k] = checked_add(a.exponents[k], b.exponents[k]);
    }
    return out;
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    require_same_arity(a, b);
    Monomial out{std::vector<std::int64_t>(a.exponents.size())};
    for (std::size_t k = 0; k < a.exponents.size(); ++k) {
        out.exponents[k] = std::max(a.exponents[k], b.exponents[k]);
    }
    return out;
}

MonomialIdeal::MonomialIdeal(std::vector<std::string> variables, std::vector<Monomial> generators)
    : variables_(std::move(variables))
{
    if (generators.empty()) {
        throw std::invalid_argument("monomial ideal needs at least one generator");
    }
    for (const auto& g : generators) {
        if (g.exponents.size() != variables_.size()) {
            throw std::invalid_argument("generator does not match the variable list");
        }
        if (std::any_of(g.exponents.begin(), g.exponents.end(), [](auto e) { return e < 0; })) {
            throw std::invalid_argument("negative exponent in a monomial");
        }
    }
    generators_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(std::vector<std::string> variables)
{
    Monomial one{std::vector<std::int64_t>(variables.size(), 0)};
    return MonomialIdeal(std::move(variables), {one});
}

bool MonomialIdeal::contains(const Monomial& m) const
{
    return std::any_of(generators_.begin(), generators_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

std::string MonomialIdeal::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < generators_.size(); ++k) {
        os << (k ? ", " : "") << generators_[k].to_string(variables_);
    }
    os << ")";
    return os.str();
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b)
{
    if (a.variables() != b.variables()) {
        throw std::invalid_argument("ideals over different variable sets");
    }
    std::vector<Monomial> products;
    for (const auto& x : a.generators()) {
        for (const auto& y : b.generators()) {
            products.push_back(x * y);
        }
    }
    return MonomialIdeal(a.variables(), std::move(products));
}

std::optional<Monomial> is_principal(const MonomialIdeal& ideal)
{
    if (ideal.generators().size() == 1) {
        return ideal.generators().front();
    }
    return std::nullopt;
}

MonomialIdeal disorderly_ideal(const std::vector<std::string>& variables,
                               const std::vector<Monomial>& h, SubsetMode mode)
{
    if (h.empty()) {
        throw std::invalid_argument("disorderly ideal of an empty parameter list");
    }
    auto result = MonomialIdeal::unit(variables);
    if (mode == SubsetMode::incomparable_pairs) {
        for (std::size_t i = 0; i < h.size(); ++i) {
            for (std::size_t j = i + 1; j < h.size(); ++j) {
                if (!h[i].divides(h[j]) && !h[j].divides(h[i])) {
                    result = ideal_product(result, MonomialIdeal(variables, {h[i], h[j]}));
                }
            }
        }
        return result;
    }
    if (h.size() > 20) {
        throw std::length_error("too many parameters for the subset product");
    }
    const std::size_t min_size = mode == SubsetMode::at_least_two ? 2 : 1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << h.size()); ++mask) {
        std::vector<Monomial> subset;
        for (std::size_t k = 0; k < h.size(); ++k) {
            if (mask & (std::uint64_t{1} << k)) {
                subset.push_back(h[k]);
            }
        }
        if (subset.size() >= min_size) {
            result = ideal_product(result, MonomialIdeal(variables, std::move(subset)));
        }
    }
    return result;
}

bool is_orderly(const std::vector<Monomial>& h)
{
    for (std::size_t i = 0; i < h.size(); ++i) {
        for (std::size_t j = i + 1; j < h.size(); ++j) {
            if (!h[i].divides(h[j]) && !h[j].divides(h[i])) {
                return false;
            }
        }
    }
    return true;
}

AdjustingModel adjusting_parameters(const EnhancedLevelGraph& graph)
{
    AdjustingModel model;
    const auto vertical = graph.vertical_edges();
    std::vector<std::size_t> column(graph.num_edges(), 0);
    for (std::size_t k = 0; k < vertical.size(); ++k) {
        column[vertical[k]] = k;
        model.variables.push_back("x" + std::to_string(vertical[k]));
    }
    const Monomial one{std::vector<std::int64_t>(vertical.size(), 0)};
    std::vector<Monomial> h(graph.num_vertices(), one);
    for (std::int64_t level = -1; level >= -graph.depth(); --level) {
        for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
            if (graph.level(v) != level) {
                continue;
            }
            Monomial param = one;
            for (auto e : vertical) {
                if (graph.bottom(e) != v) {
                    continue;
                }
                Monomial step = one;
                step.exponents[column[e]] = graph.kappa(e);
                param = lcm(param, h[graph.top(e)] * step);
            }
            h[v] = param;
            model.vertices.push_back(v);
            model.parameters.push_back(param);
        }
    }
    return model;
}

}  // namespace msd
