#pragma once

#include "msd/level_graph.hpp"
#include "msd/residue_grc.hpp"

#include "json.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace msd {

using Json = nlohmann::json;

/// Unreadable or ill-typed input file.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Graph schema: {"mu": [...], "vertices": [{"genus", "level", "legs"}],
/// "edges": [{"ends": [a, b], "kappa"}]} with 1-based legs, 0-based vertex
/// indices and "kappa" present exactly on vertical edges. An optional
/// "genus" overrides the genus read off the graph.
EnhancedLevelGraph graph_from_json(const Json& doc);
Json graph_to_json(const EnhancedLevelGraph& graph);

EnhancedLevelGraph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const EnhancedLevelGraph& graph);

/// {"vertical": {"<edge>": [reNum, reDen, imNum, imDen]}, "horizontal": {...},
/// "marked_poles": {"<1-based leg>": [...]}}. Entries may be JSON integers
/// or decimal strings.
ResidueAssignment residues_from_json(const Json& doc);
ResidueAssignment load_residues(const std::filesystem::path& path);
Json residues_to_json(const ResidueAssignment& rho);

/// Integer as a JSON number when it fits in 64 bits, else a decimal string.
Json integer_to_json(const Integer& value);

std::string to_dot(const EnhancedLevelGraph& graph);

}  // namespace msd
