#include "msd/analysis.hpp"

#include <sstream>

namespace msd {

namespace {

constexpr std::size_t kMaxBlowupParameters = 12;

Json group_json(const FinAbGroup& group)
{
    Json out;
    out["invariant_factors"] = Json::array();
    for (const auto& d : group.invariant_factors) {
        out["invariant_factors"].push_back(integer_to_json(d));
    }
    out["free_rank"] = group.free_rank;
    out["order"] = group.is_finite() ? integer_to_json(group.order()) : Json(nullptr);
    out["text"] = group.to_string();
    return out;
}

Json matrix_json(const IntMatrix& m)
{
    Json rows = Json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Index c = 0; c < m.cols(); ++c) {
            row.push_back(integer_to_json(m(r, c)));
        }
        rows.push_back(row);
    }
    return rows;
}

template <typename T>
std::string join(const std::vector<T>& items, const char* sep = ",")
{
    std::ostringstream os;
    for (std::size_t k = 0; k < items.size(); ++k) {
        os << (k ? sep : "") << items[k];
    }
    return os.str();
}

std::string matrix_text(const IntMatrix& m)
{
    std::ostringstream os;
    for (Index r = 0; r < m.rows(); ++r) {
        os << (r ? " " : "") << "(";
        for (Index c = 0; c < m.cols(); ++c) {
            os << (c ? "," : "") << m(r, c);
        }
        os << ")";
    }
    return m.rows() ? os.str() : "-";
}

}  // namespace

AnalysisReport analyze(const EnhancedLevelGraph& graph)
{
    AnalysisReport report;
    report.validation = validate(graph);
    if (!report.validation.valid) {
        return report;
    }
    report.codim = codim(graph);
    report.depth = graph.depth();
    report.horizontal = static_cast<std::int64_t>(graph.num_horizontal());
    report.stratum_dim = stratum_dim(graph.mu());
    report.prong_group = prong_rotation_group(graph);
    report.pm_classes = pm_class_count(graph);
    report.twist_basis = twist_group_basis(graph);
    report.simple = simple_twist_data(graph);
    report.covering = covering_groups(graph);
    report.conditions = grc_conditions(graph);
    report.dims = dim_identity_check(graph);
    report.equations = torus_equations(graph);
    report.monoid = character_monoid(graph);
    report.normality = closure_normality(graph);

    auto& blowup = report.blowup;
    blowup.model = adjusting_parameters(graph);
    blowup.orderly = is_orderly(blowup.model.parameters);
    if (!blowup.model.parameters.empty() &&
        blowup.model.parameters.size() <= kMaxBlowupParameters) {
        blowup.disorderly = disorderly_ideal(blowup.model.variables, blowup.model.parameters);
        blowup.principal = is_principal(*blowup.disorderly).has_value();
    } else if (blowup.model.parameters.empty()) {
        blowup.principal = true;
    }
    return report;
}

Json report_to_json(const AnalysisReport& report)
{
    Json out;
    Json validation;
    validation["valid"] = report.validation.valid;
    validation["violations"] = Json::array();
    for (const auto& v : report.validation.violations) {
        validation["violations"].push_back(
            {{"rule", v.rule}, {"locus", v.locus}, {"detail", v.detail}});
    }
    out["validation"] = validation;
    if (!report.validation.valid) {
        return out;
    }

    out["codim"] = report.codim;
    out["levels_below_zero"] = report.depth;
    out["horizontal_edges"] = report.horizontal;
    out["stratum_dim"] = report.stratum_dim;
    out["prong_rotation_group"] = group_json(report.prong_group);
    out["pm_class_count"] = integer_to_json(report.pm_classes);
    out["twist_basis"] = matrix_json(report.twist_basis);
    Json a = Json::array();
    for (const auto& x : report.simple.a) {
        a.push_back(integer_to_json(x));
    }
    out["a"] = a;
    out["simple_twist_generators"] = matrix_json(report.simple.generators);
    out["k_group"] = group_json(report.covering.k);
    out["covering_groups"] = {{"h_orders", a},
                              {"h", group_json(report.covering.h)},
                              {"g", group_json(report.covering.g)},
                              {"k", group_json(report.covering.k)},
                              {"sequence_check", report.covering.sequence_check}};

    Json conditions = Json::array();
    for (const auto& c : report.conditions) {
        conditions.push_back({{"level", c.level}, {"vertices", c.component_vertices}, {"edges", c.edges}});
    }
    out["grc_conditions"] = conditions;
    Json dims = Json::array();
    for (std::size_t k = 0; k < report.dims.per_level.size(); ++k) {
        dims.push_back({{"level", -static_cast<std::int64_t>(k)}, {"dim", report.dims.per_level[k]}});
    }
    out["grc_space_dims"] = dims;
    out["dimension_identity"] = {
        {"lhs", report.dims.lhs}, {"rhs", report.dims.rhs}, {"equal", report.dims.equal}};

    Json equations = Json::array();
    for (const auto& eq : report.equations) {
        equations.push_back({{"levels", eq.levels},
                             {"edge", eq.edge},
                             {"exponent", eq.exponent},
                             {"text", eq.to_string()}});
    }
    out["torus_equations"] = equations;
    Json generators = Json::array();
    for (std::size_t k = 0; k < report.monoid.generators.size(); ++k) {
        Json vec = Json::array();
        for (Index c = 0; c < report.monoid.generators[k].size(); ++c) {
            vec.push_back(integer_to_json(report.monoid.generators[k](c)));
        }
        generators.push_back({{"label", report.monoid.labels[k]}, {"exponents", vec}});
    }
    out["character_monoid"] = generators;
    out["normality"] = {{"verdict", to_string(report.normality.verdict)},
                        {"witness", report.normality.witness ? Json(*report.normality.witness)
                                                             : Json(nullptr)},
                        {"search_bound", report.normality.search_bound}};

    const auto& blowup = report.blowup;
    Json params = Json::array();
    for (std::size_t k = 0; k < blowup.model.parameters.size(); ++k) {
        params.push_back({{"vertex", blowup.model.vertices[k]},
                          {"h", blowup.model.parameters[k].to_string(blowup.model.variables)}});
    }
    out["orderly_blowup"] = {
        {"parameters", params},
        {"orderly", blowup.orderly},
        {"disorderly_ideal", blowup.disorderly ? Json(blowup.disorderly->to_string()) : Json(nullptr)},
        {"principal", blowup.disorderly || blowup.model.parameters.empty() ? Json(blowup.principal)
                                                                          : Json(nullptr)}};
    return out;
}

std::string report_to_text(const AnalysisReport& report)
{
    std::ostringstream os;
    if (!report.validation.valid) {
        os << "invalid graph\n";
        for (const auto& v : report.validation.violations) {
            os << "  [" << v.rule << "] " << v.locus << ": " << v.detail << "\n";
        }
        return os.str();
    }
    os << "valid graph\n";
    os << "codim                  " << report.codim << " (levels below zero " << report.depth
       << ", horizontal edges " << report.horizontal << ")\n";
    os << "stratum dimension      " << report.stratum_dim << "\n";
    os << "prong rotation group   " << report.prong_group.to_string() << " (order "
       << report.prong_group.order() << ")\n";
    os << "prong-matching classes " << report.pm_classes << "\n";
    os << "twist lattice          " << matrix_text(report.twist_basis) << "\n";
    os << "a_i                    " << (report.simple.a.empty() ? "-" : join(report.simple.a)) << "\n";
    os << "simple twist lattice   " << matrix_text(report.simple.generators) << "\n";
    os << "K                      " << report.covering.k.to_string() << "\n";
    os << "G                      " << report.covering.g.to_string() << " (order "
       << report.covering.g.order() << ")\n";
    os << "|K|*|G| = prod a_i     " << (report.covering.sequence_check ? "yes" : "NO") << "\n";
    os << "GRC conditions         " << report.conditions.size() << "\n";
    for (const auto& c : report.conditions) {
        os << "  level " << c.level << ", component {" << join(c.component_vertices)
           << "}, edges {" << join(c.edges) << "}\n";
    }
    os << "GRC space dimensions   " << join(report.dims.per_level) << " (sum " << report.dims.lhs
       << ", expected " << report.dims.rhs << ", " << (report.dims.equal ? "equal" : "DIFFERENT")
       << ")\n";
    os << "torus equations\n";
    for (const auto& eq : report.equations) {
        os << "  " << eq.to_string() << "\n";
    }
    os << "torus closure          " << to_string(report.normality.verdict);
    if (report.normality.witness) {
        os << " (witness " << join(*report.normality.witness) << ")";
    }
    os << "\n";
    const auto& blowup = report.blowup;
    os << "adjusting parameters   ";
    for (std::size_t k = 0; k < blowup.model.parameters.size(); ++k) {
        os << (k ? ", " : "") << "v" << blowup.model.vertices[k] << ": "
           << blowup.model.parameters[k].to_string(blowup.model.variables);
    }
    os << (blowup.model.parameters.empty() ? "-" : "") << "\n";
    os << "orderly                " << (blowup.orderly ? "yes" : "no") << "\n";
    if (blowup.disorderly) {
        os << "disorderly ideal       " << blowup.disorderly->to_string() << " ("
           << (blowup.principal ? "principal" : "not principal") << ")\n";
    }
    return os.str();
}

}  // namespace msd
