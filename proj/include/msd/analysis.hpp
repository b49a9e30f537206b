#pragma once

#include "msd/blowup_ideals.hpp"
#include "msd/io.hpp"
#include "msd/residue_grc.hpp"
#include "msd/toric_closure.hpp"
#include "msd/twist_lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace msd {

struct OrderlyBlowup {
    AdjustingModel model;
    bool orderly = false;
    /// Absent when there are too many parameters for the subset product.
    std::optional<MonomialIdeal> disorderly;
    bool principal = false;
};

/// Every invariant of one graph. Only `validation` is filled for an
/// invalid graph.
struct AnalysisReport {
    ValidationReport validation;
    std::int64_t codim = 0;
    std::int64_t depth = 0;
    std::int64_t horizontal = 0;
    std::int64_t stratum_dim = 0;
    FinAbGroup prong_group;
    Integer pm_classes;
    IntMatrix twist_basis;
    SimpleTwistData simple;
    CoveringGroups covering;
    std::vector<GrcCondition> conditions;
    DimIdentity dims;
    std::vector<MonomialEquation> equations;
    CharacterMonoid monoid;
    NormalityResult normality;
    OrderlyBlowup blowup;
};

AnalysisReport analyze(const EnhancedLevelGraph& graph);

/// Stable JSON rendering: keys sorted, integers as numbers when they fit in
/// 64 bits and as decimal strings otherwise.
Json report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);

}  // namespace msd
