#pragma once

#include "msd/level_graph.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace msd {

/// Exponent vector over a fixed list of variables. Exponent arithmetic is
/// overflow-checked (std::overflow_error).
struct Monomial {
    std::vector<std::int64_t> exponents;

    bool is_unit() const;
    bool divides(const Monomial& other) const;
    std::string to_string(const std::vector<std::string>& variables) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    auto operator<=>(const Monomial&) const = default;
};

/// Monomial ideal stored by its minimal generators, sorted.
class MonomialIdeal {
public:
    /// Reduces `generators` to an antichain. Throws on an empty list or on
    /// exponent vectors that do not match the variables.
    MonomialIdeal(std::vector<std::string> variables, std::vector<Monomial> generators);

    static MonomialIdeal unit(std::vector<std::string> variables);

    const std::vector<std::string>& variables() const { return variables_; }
    const std::vector<Monomial>& generators() const { return generators_; }
    bool contains(const Monomial& m) const;
    std::string to_string() const;

    bool operator==(const MonomialIdeal&) const = default;

private:
    std::vector<std::string> variables_;
    std::vector<Monomial> generators_;
};

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);

std::optional<Monomial> is_principal(const MonomialIdeal& ideal);

/// Which subsets S of the parameters contribute a factor (h_s : s in S).
enum class SubsetMode { all_nonempty, at_least_two, incomparable_pairs };

/// Product of the ideals generated by the selected subsets of h; the unit
/// ideal when nothing is selected.
MonomialIdeal disorderly_ideal(const std::vector<std::string>& variables,
                               const std::vector<Monomial>& h,
                               SubsetMode mode = SubsetMode::all_nonempty);

/// True iff divisibility is a total order on h.
bool is_orderly(const std::vector<Monomial>& h);

/// Monomial stand-ins for adjusting parameters: one variable x<e> per
/// vertical edge, h = 1 on the top level, and below it
/// h_v = lcm over edges e ending at v from above of h_top(e) * x_e^kappa_e.
struct AdjustingModel {
    std::vector<std::string> variables;
    std::vector<std::size_t> vertices;
    std::vector<Monomial> parameters;
};

/// Parameters of all vertices below level zero.
AdjustingModel adjusting_parameters(const EnhancedLevelGraph& graph);

}  // namespace msd
