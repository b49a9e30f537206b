#include "msd/io.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace msd {

namespace {

Json parse_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

const Json& field(const Json& obj, const char* name, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(name)) {
        throw InputError(where + ": missing field \"" + name + "\"");
    }
    return obj.at(name);
}

std::int64_t as_int(const Json& value, const std::string& where)
{
    if (!value.is_number_integer()) {
        throw InputError(where + ": expected an integer");
    }
    return value.get<std::int64_t>();
}

std::size_t as_index(const Json& value, const std::string& where)
{
    const auto x = as_int(value, where);
    if (x < 0) {
        throw InputError(where + ": expected a nonnegative index");
    }
    return static_cast<std::size_t>(x);
}

Integer as_big(const Json& value, const std::string& where)
{
    if (value.is_number_integer()) {
        return Integer(value.get<std::int64_t>());
    }
    if (value.is_string()) {
        const auto text = value.get<std::string>();
        const bool digits = !text.empty() &&
                            text.find_first_not_of("0123456789", text[0] == '-' ? 1 : 0) ==
                                std::string::npos &&
                            text != "-";
        if (digits) {
            return Integer(text);
        }
    }
    throw InputError(where + ": expected an integer or a decimal string");
}

GaussianRational gaussian_from_json(const Json& value, const std::string& where)
{
    if (!value.is_array() || value.size() != 4) {
        throw InputError(where + ": expected [reNum, reDen, imNum, imDen]");
    }
    const auto re_den = as_big(value[1], where);
    const auto im_den = as_big(value[3], where);
    if (re_den <= 0 || im_den <= 0) {
        throw InputError(where + ": denominators must be positive");
    }
    return {Rational(as_big(value[0], where), re_den), Rational(as_big(value[2], where), im_den)};
}

std::map<std::size_t, GaussianRational> residue_map(const Json& obj, const std::string& where,
                                                    std::size_t offset)
{
    std::map<std::size_t, GaussianRational> out;
    if (!obj.is_object()) {
        throw InputError(where + ": expected an object");
    }
    for (const auto& [key, value] : obj.items()) {
        std::size_t index = 0;
        try {
            std::size_t used = 0;
            const auto parsed = std::stoll(key, &used);
            if (used != key.size() || parsed < static_cast<long long>(offset)) {
                throw std::invalid_argument(key);
            }
            index = static_cast<std::size_t>(parsed) - offset;
        } catch (const std::exception&) {
            throw InputError(where + ": bad index \"" + key + "\"");
        }
        out[index] = gaussian_from_json(value, where + "." + key);
    }
    return out;
}

Json gaussian_to_json(const GaussianRational& z)
{
    return Json::array({integer_to_json(mp::numerator(z.re)), integer_to_json(mp::denominator(z.re)),
                        integer_to_json(mp::numerator(z.im)), integer_to_json(mp::denominator(z.im))});
}

}  // namespace

Json integer_to_json(const Integer& value)
{
    if (value >= std::numeric_limits<std::int64_t>::min() &&
        value <= std::numeric_limits<std::int64_t>::max()) {
        return value.convert_to<std::int64_t>();
    }
    return value.str();
}

EnhancedLevelGraph graph_from_json(const Json& doc)
{
    SignatureMu mu;
    const auto& mu_json = field(doc, "mu", "graph");
    if (!mu_json.is_array()) {
        throw InputError("graph: \"mu\" must be a list");
    }
    for (const auto& m : mu_json) {
        mu.m.push_back(as_int(m, "mu"));
    }

    const auto& vertices_json = field(doc, "vertices", "graph");
    if (!vertices_json.is_array() || vertices_json.empty()) {
        throw InputError("graph: \"vertices\" must be a nonempty list");
    }
    std::vector<Vertex> vertices;
    std::vector<std::optional<std::size_t>> legs(mu.m.size());
    for (std::size_t v = 0; v < vertices_json.size(); ++v) {
        const auto where = "vertex " + std::to_string(v);
        const auto& vj = vertices_json[v];
        vertices.push_back({as_int(field(vj, "genus", where), where),
                            as_int(field(vj, "level", where), where)});
        if (vj.contains("legs")) {
            if (!vj.at("legs").is_array()) {
                throw InputError(where + ": \"legs\" must be a list");
            }
            for (const auto& leg : vj.at("legs")) {
                const auto j = as_int(leg, where);
                if (j < 1 || static_cast<std::size_t>(j) > mu.m.size()) {
                    throw StructuralError(where + ": leg " + std::to_string(j) + " is not in 1.." +
                                          std::to_string(mu.m.size()));
                }
                auto& slot = legs[static_cast<std::size_t>(j - 1)];
                if (slot) {
                    throw StructuralError("leg " + std::to_string(j) + " is assigned twice");
                }
                slot = v;
            }
        }
    }
    std::vector<std::size_t> leg_vertex;
    for (std::size_t j = 0; j < legs.size(); ++j) {
        if (!legs[j]) {
            throw StructuralError("leg " + std::to_string(j + 1) + " is not assigned");
        }
        leg_vertex.push_back(*legs[j]);
    }

    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        const auto& edges_json = doc.at("edges");
        if (!edges_json.is_array()) {
            throw InputError("graph: \"edges\" must be a list");
        }
        for (std::size_t e = 0; e < edges_json.size(); ++e) {
            const auto where = "edge " + std::to_string(e);
            const auto& ends = field(edges_json[e], "ends", where);
            if (!ends.is_array() || ends.size() != 2) {
                throw InputError(where + ": \"ends\" must be a pair");
            }
            Edge edge{as_index(ends[0], where), as_index(ends[1], where), std::nullopt};
            if (edges_json[e].contains("kappa")) {
                edge.kappa = as_int(edges_json[e].at("kappa"), where);
            }
            edges.push_back(edge);
        }
    }

    if (doc.contains("genus")) {
        mu.genus = as_int(doc.at("genus"), "genus");
    } else {
        std::int64_t g = static_cast<std::int64_t>(edges.size()) -
                         static_cast<std::int64_t>(vertices.size()) + 1;
        for (const auto& v : vertices) {
            g += v.genus;
        }
        mu.genus = g;
    }
    return EnhancedLevelGraph(std::move(mu), std::move(vertices), std::move(leg_vertex),
                              std::move(edges));
}

Json graph_to_json(const EnhancedLevelGraph& graph)
{
    Json doc;
    doc["genus"] = graph.genus();
    doc["mu"] = graph.mu().m;
    doc["vertices"] = Json::array();
    for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
        Json legs = Json::array();
        for (auto j : graph.legs_at(v)) {
            legs.push_back(j + 1);
        }
        doc["vertices"].push_back({{"genus", graph.vertices()[v].genus},
                                   {"level", graph.level(v)},
                                   {"legs", legs}});
    }
    doc["edges"] = Json::array();
    for (const auto& edge : graph.edges()) {
        Json e = {{"ends", {edge.a, edge.b}}};
        if (edge.kappa) {
            e["kappa"] = *edge.kappa;
        }
        doc["edges"].push_back(e);
    }
    return doc;
}

EnhancedLevelGraph load_graph(const std::filesystem::path& path)
{
    const auto doc = parse_file(path);
    return graph_from_json(doc);
}

void save_graph(const std::filesystem::path& path, const EnhancedLevelGraph& graph)
{
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write " + path.string());
    }
    out << graph_to_json(graph).dump(2) << "\n";
}

ResidueAssignment residues_from_json(const Json& doc)
{
    if (!doc.is_object()) {
        throw InputError("residues: expected an object");
    }
    ResidueAssignment rho;
    if (doc.contains("vertical")) {
        rho.vertical = residue_map(doc.at("vertical"), "vertical", 0);
    }
    if (doc.contains("horizontal")) {
        rho.horizontal = residue_map(doc.at("horizontal"), "horizontal", 0);
    }
    if (doc.contains("marked_poles")) {
        rho.marked_poles = residue_map(doc.at("marked_poles"), "marked_poles", 1);
    }
    return rho;
}

ResidueAssignment load_residues(const std::filesystem::path& path)
{
    return residues_from_json(parse_file(path));
}

Json residues_to_json(const ResidueAssignment& rho)
{
    Json doc;
    doc["vertical"] = Json::object();
    for (const auto& [e, z] : rho.vertical) {
        doc["vertical"][std::to_string(e)] = gaussian_to_json(z);
    }
    doc["horizontal"] = Json::object();
    for (const auto& [e, z] : rho.horizontal) {
        doc["horizontal"][std::to_string(e)] = gaussian_to_json(z);
    }
    if (rho.marked_poles) {
        doc["marked_poles"] = Json::object();
        for (const auto& [leg, z] : *rho.marked_poles) {
            doc["marked_poles"][std::to_string(leg + 1)] = gaussian_to_json(z);
        }
    }
    return doc;
}

std::string to_dot(const EnhancedLevelGraph& graph)
{
    std::ostringstream os;
    os << "graph level_graph {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=box];\n";
    for (std::int64_t level = 0; level >= -graph.depth(); --level) {
        os << "  { rank=same;";
        for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
            if (graph.level(v) == level) {
                os << " v" << v << ";";
            }
        }
        os << " }\n";
    }
    for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
        os << "  v" << v << " [label=\"g=" << graph.vertices()[v].genus << " |";
        bool first = true;
        for (auto j : graph.legs_at(v)) {
            os << (first ? " " : ",") << j + 1;
            first = false;
        }
        os << "\"];\n";
    }
    for (std::size_t e = 0; e < graph.num_edges(); ++e) {
        const auto& edge = graph.edges()[e];
        os << "  v" << edge.a << " -- v" << edge.b << " [label=\"";
        if (graph.is_horizontal(e)) {
            os << "hor";
        } else if (edge.kappa) {
            os << "κ=" << *edge.kappa;
        } else {
            os << "κ=?";
        }
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace msd
